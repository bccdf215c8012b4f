"""Prime field arithmetic: deterministic square roots and splitting primes.

All values are plain integers in [0, q); `PrimeField` carries the modulus
and the operations.  Square roots use Tonelli-Shanks and always return the
smaller of the two roots, so repeated runs agree bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, NoSplittingPrimeError, NotPrimeError, ZeroInverseError

# deterministic Miller-Rabin witness set for n < 3.3 * 10^24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    m = n + 1
    if m <= 2:
        return 2
    if m % 2 == 0:
        m += 1
    while not is_prime(m):
        m += 2
    return m


def legendre_symbol(a: int, q: int) -> int:
    """0, 1 or -1 according to whether a is zero, a square, or a non-square mod q."""
    a %= q
    if a == 0:
        return 0
    e = pow(a, (q - 1) // 2, q)
    return 1 if e == 1 else -1


def sqrt_mod(a: int, q: int) -> int | None:
    """Smaller square root of a mod prime q, or None if a is a non-residue.

    Tonelli-Shanks, with the usual shortcuts for q = 2 and q % 4 == 3.  The
    returned representative r satisfies r <= q - r, so the choice of root is
    deterministic.
    """
    a %= q
    if q == 2 or a == 0:
        return a
    if legendre_symbol(a, q) != 1:
        return None
    if q % 4 == 3:
        r = pow(a, (q + 1) // 4, q)
        return min(r, q - r)
    # write q - 1 = t * 2^s with t odd
    t, s = q - 1, 0
    while t % 2 == 0:
        t //= 2
        s += 1
    z = 2
    while legendre_symbol(z, q) != -1:
        z += 1
    c = pow(z, t, q)
    r = pow(a, (t + 1) // 2, q)
    u = pow(a, t, q)
    m = s
    while u != 1:
        # find least i with u^(2^i) == 1
        i = 0
        w = u
        while w != 1:
            w = w * w % q
            i += 1
        b = pow(c, 1 << (m - i - 1), q)
        r = r * b % q
        c = b * b % q
        u = u * c % q
        m = i
    return min(r, q - r)


class PrimeField:
    """Arithmetic in F_q for a prime q."""

    def __init__(self, q: int):
        if not isinstance(q, int) or not is_prime(q):
            raise NotPrimeError(f"field characteristic must be prime, got {q!r}")
        self.q = q

    def __repr__(self):
        return f"PrimeField({self.q})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def element(self, x: int) -> int:
        return int(x) % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return a * b % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroInverseError("0 has no inverse")
        return pow(a, -1, self.q)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        return pow(a % self.q, e, self.q)

    def is_square(self, a: int) -> bool:
        return legendre_symbol(a, self.q) >= 0

    def sqrt(self, a: int) -> int | None:
        return sqrt_mod(a, self.q)

    def from_fraction(self, frac: Fraction) -> int:
        num, den = frac.numerator, frac.denominator
        if den % self.q == 0:
            raise ZeroInverseError(f"denominator of {frac} vanishes mod {self.q}")
        return num % self.q * self.inv(den % self.q) % self.q


@dataclass(frozen=True)
class PrimeFieldElement:
    """Value in [0, q) tagged with its prime characteristic."""

    value: int
    characteristic: int

    def __post_init__(self):
        if not is_prime(self.characteristic):
            raise NotPrimeError(f"characteristic {self.characteristic!r} is not prime")
        object.__setattr__(self, "value", int(self.value) % self.characteristic)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.characteristic != self.characteristic:
                raise InputError("mixed characteristics")
            return other.value
        return int(other)

    def __add__(self, other):
        return PrimeFieldElement(self.value + self._coerce(other), self.characteristic)

    def __sub__(self, other):
        return PrimeFieldElement(self.value - self._coerce(other), self.characteristic)

    def __mul__(self, other):
        return PrimeFieldElement(self.value * self._coerce(other), self.characteristic)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.characteristic)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroInverseError("0 has no inverse")
        return PrimeFieldElement(pow(self.value, -1, self.characteristic), self.characteristic)

    def __truediv__(self, other):
        coerced = PrimeFieldElement(self._coerce(other), self.characteristic)
        return self * coerced.inverse()

    def sqrt(self) -> "PrimeFieldElement | None":
        r = sqrt_mod(self.value, self.characteristic)
        return None if r is None else PrimeFieldElement(r, self.characteristic)


@dataclass(frozen=True)
class RadicandRequest:
    """Nonzero rationals that must all become squares mod the prime found."""

    radicands: tuple[Fraction, ...]
    context: str = ""

    def __post_init__(self):
        rads = tuple(Fraction(x) for x in self.radicands)
        if not rads:
            raise InputError("at least one radicand is required")
        if any(r == 0 for r in rads):
            raise InputError("radicands must be nonzero")
        object.__setattr__(self, "radicands", rads)


def find_splitting_prime(
    request: RadicandRequest,
    lower: int,
    count: int = 1,
    search_limit: int = 1_000_000,
    extra_check=None,
) -> tuple[int, ...]:
    """First `count` primes q > lower such that every radicand is a nonzero
    square mod q.

    Primes dividing any radicand numerator or denominator are skipped (the
    reduction would be zero or undefined there).  `extra_check(q) -> bool`,
    when given, must also accept q; it is how callers chain in radicands that
    only exist after earlier square roots have been chosen.  Scanning is in
    increasing order, so the result is deterministic; exceeding
    `search_limit` raises instead of returning a short list.
    """
    if not isinstance(lower, int) or lower < 2:
        raise InputError(f"lower bound must be an integer >= 2, got {lower!r}")
    if not isinstance(count, int) or count < 1:
        raise InputError(f"count must be a positive integer, got {count!r}")
    found = []
    q = lower
    while len(found) < count:
        q = next_prime(q)
        if q > search_limit:
            raise NoSplittingPrimeError(
                f"no {count} splitting primes above {lower} within limit {search_limit}"
            )
        if q == 2:
            continue
        if any(r.numerator % q == 0 or r.denominator % q == 0 for r in request.radicands):
            continue
        field = PrimeField(q)
        values = [field.from_fraction(r) for r in request.radicands]
        if not all(field.is_square(v) and v != 0 for v in values):
            continue
        if extra_check is not None and not extra_check(q):
            continue
        found.append(q)
    return tuple(found)
