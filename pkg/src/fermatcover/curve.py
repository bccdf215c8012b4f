"""Quadric-intersection model of the elementary abelian 2-cover of the line.

The curve of genus parameter g lives in projective (2g+1)-space and is cut
out by 2g diagonal quadrics

    row j:   lam_{j-1} x_1^2 + x_2^2 + x_{j+2}^2 = 0,   j = 1..2g,  lam_0 = 1,

with lam_1, ..., lam_{2g-1} pairwise distinct and different from 0 and 1.
The sign-flip group acting on coordinates modulo the global scalar is
elementary abelian of rank 2g+1; this module enumerates rational points,
identifies which sign classes have fixed points, extracts the unique free
index-two subgroup, and analyses the two candidate order-two lifts of the
hyperelliptic-type involution downstairs (case A has a fixed point, case B
fails to square to the identity).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import zmod
from .errors import (
    BadLambdaError,
    CertificationError,
    ConstraintInfeasibleError,
    EnumerationBudgetError,
    FieldInsufficientError,
    GenusTooSmallError,
    InputError,
)
from .fields import PrimeField, RadicandRequest, find_splitting_prime

DEFAULT_POINT_BUDGET = 200


@dataclass(frozen=True)
class FermatCurve:
    g: int
    field: PrimeField
    lambdas: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 2:
            raise GenusTooSmallError(f"curve parameter g must be an integer >= 2, got {self.g!r}")
        lams = tuple(self.field.element(x) for x in self.lambdas)
        if len(lams) != 2 * self.g - 1:
            raise BadLambdaError(
                f"expected {2 * self.g - 1} coefficients for g={self.g}, got {len(lams)}"
            )
        if any(l in (0, 1) for l in lams):
            raise BadLambdaError("coefficients 0 and 1 are degenerate for this model")
        if len(set(lams)) != len(lams):
            raise BadLambdaError("coefficients must be pairwise distinct mod q")
        object.__setattr__(self, "lambdas", lams)

    @property
    def coords(self) -> int:
        """Number of projective coordinates, 2g+2."""
        return 2 * self.g + 2

    def row_coefficients(self) -> tuple[int, ...]:
        """lam_{j-1} for row j = 1..2g (lam_0 = 1)."""
        return (1,) + self.lambdas

    def contains(self, point) -> bool:
        point = tuple(point)
        if len(point) != self.coords:
            raise InputError(f"point must have {self.coords} coordinates")
        q = self.field.q
        if all(x % q == 0 for x in point):
            return False
        x1sq = point[0] * point[0] % q
        x2sq = point[1] * point[1] % q
        for j, lam in enumerate(self.row_coefficients(), start=1):
            if (lam * x1sq + x2sq + point[j + 1] * point[j + 1]) % q:
                return False
        return True

    def to_dict(self) -> dict:
        return {"g": self.g, "q": self.field.q, "lambdas": list(self.lambdas)}


def normalize_point(point, field: PrimeField) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1."""
    point = tuple(x % field.q for x in point)
    lead = next((x for x in point if x), None)
    if lead is None:
        raise InputError("the zero tuple is not a projective point")
    if lead == 1:
        return point
    inv = field.inv(lead)
    return tuple(x * inv % field.q for x in point)


def _chart_points(curve: FermatCurve, x1: int, x2: int):
    """Points with the given leading pair, as sign combinations of the row roots."""
    field = curve.field
    q = field.q
    x1sq, x2sq = x1 * x1 % q, x2 * x2 % q
    root_sets = []
    for lam in curve.row_coefficients():
        s = (-(lam * x1sq + x2sq)) % q
        if s == 0:
            root_sets.append((0,))
            continue
        r = field.sqrt(s)
        if r is None:
            return
        root_sets.append((r, q - r))
    for tail in itertools.product(*root_sets):
        yield (x1, x2) + tail


def enumerate_points(curve: FermatCurve, budget: int = DEFAULT_POINT_BUDGET) -> list[tuple[int, ...]]:
    """All rational points, lexicographically sorted (so runs are identical).

    Uses the chart structure: fixing (x_1, x_2) determines every other
    coordinate up to sign through its own quadric, which also forces the
    at-most-one-zero-coordinate property checked on every point.
    """
    q = curve.field.q
    if q > budget:
        raise EnumerationBudgetError(f"field size {q} exceeds point enumeration budget {budget}")
    points = []
    for x2 in range(q):
        points.extend(_chart_points(curve, 1, x2))
    points.extend(_chart_points(curve, 0, 1))
    for pt in points:
        if sum(1 for x in pt if x == 0) > 1:
            raise CertificationError(f"point {pt} has more than one zero coordinate")
    points.sort()
    return points


def sample_points(curve: FermatCurve, count: int = 10, seed: int = 0) -> list[tuple[int, ...]]:
    """Up to `count` points from the x_1 = 1 chart, canonical roots, with the
    chart abscissa order shuffled by `seed` (deterministic per seed)."""
    q = curve.field.q
    order = list(range(q))
    random.Random(seed).shuffle(order)
    points = []
    for x2 in order:
        chart = list(_chart_points(curve, 1, x2))
        if chart:
            points.append(chart[0])
            if len(points) >= count:
                break
    return points


@dataclass(frozen=True)
class DiagonalClass:
    """Sign-flip class on the coordinates, modulo the global scalar -1.

    The canonical representative never flips coordinate 1, so the classes
    form the group of subsets of {2, ..., coords} under symmetric difference,
    elementary abelian of rank coords-1.
    """

    flips: tuple[int, ...]
    coords: int

    @classmethod
    def from_indices(cls, indices, coords: int) -> "DiagonalClass":
        chosen = set()
        for i in indices:
            i = int(i)
            if not 1 <= i <= coords:
                raise InputError(f"coordinate index {i} out of range 1..{coords}")
            chosen.symmetric_difference_update({i})
        if 1 in chosen:
            chosen = set(range(1, coords + 1)) - chosen
        return cls(tuple(sorted(chosen)), coords)

    @classmethod
    def identity(cls, coords: int) -> "DiagonalClass":
        return cls((), coords)

    @classmethod
    def sign_flip(cls, j: int, coords: int) -> "DiagonalClass":
        """The class a_j flipping exactly coordinate j."""
        return cls.from_indices((j,), coords)

    @property
    def is_identity(self) -> bool:
        return not self.flips

    def compose(self, other: "DiagonalClass") -> "DiagonalClass":
        if self.coords != other.coords:
            raise InputError("classes act on different coordinate counts")
        return DiagonalClass.from_indices(set(self.flips) ^ set(other.flips), self.coords)

    def label(self) -> str:
        if not self.flips:
            return "1"
        complement = [j for j in range(1, self.coords + 1) if j not in self.flips]
        rep = complement if len(complement) < len(self.flips) else list(self.flips)
        return "*".join(f"a{j}" for j in rep)

    def apply(self, point, field: PrimeField) -> tuple[int, ...]:
        q = field.q
        flipped = tuple((-x) % q if (i + 1) in self.flips else x % q for i, x in enumerate(point))
        return normalize_point(flipped, field)

    def to_list(self) -> list[int]:
        return list(self.flips)


def all_diagonal_classes(coords: int) -> list[DiagonalClass]:
    """All 2^(coords-1) classes, identity first, in subset order."""
    out = []
    for size_mask in itertools.product((0, 1), repeat=coords - 1):
        flips = tuple(j + 2 for j, bit in enumerate(size_mask) if bit)
        out.append(DiagonalClass(flips, coords))
    out.sort(key=lambda c: (len(c.flips), c.flips))
    return out


@dataclass(frozen=True)
class FixedPointReport:
    curve: dict
    point_count: int
    classes_with_fixed_points: tuple[DiagonalClass, ...]
    fixed_counts: dict
    only_sign_flips: bool
    slices_match: bool
    unwitnessed: tuple[int, ...]
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "curve": dict(self.curve),
            "point_count": self.point_count,
            "classes_with_fixed_points": [
                {"flips": c.to_list(), "label": c.label()} for c in self.classes_with_fixed_points
            ],
            "fixed_counts": {k: v for k, v in sorted(self.fixed_counts.items())},
            "only_sign_flips": self.only_sign_flips,
            "slices_match": self.slices_match,
            "unwitnessed": list(self.unwitnessed),
            "conclusion": self.conclusion,
        }


def fixed_point_classes(curve: FermatCurve, budget: int = DEFAULT_POINT_BUDGET) -> FixedPointReport:
    """Which sign classes fix a rational point, verified exhaustively.

    Expected answer: only the single-coordinate flips a_j, each fixing
    exactly the x_j = 0 slice.  Over fields where some slice has no rational
    points the report flags those a_j as unwitnessed instead of concluding.
    """
    field = curve.field
    points = enumerate_points(curve, budget)
    n = curve.coords
    sign_flip_classes = {j: DiagonalClass.sign_flip(j, n) for j in range(1, n + 1)}
    with_fixed = []
    fixed_sets = {}
    for cls in all_diagonal_classes(n):
        if cls.is_identity:
            continue
        fixed = [p for p in points if cls.apply(p, field) == p]
        if fixed:
            with_fixed.append(cls)
            fixed_sets[cls] = fixed
    allowed = set(sign_flip_classes.values())
    only_sign_flips = all(cls in allowed for cls in with_fixed)
    slices_match = True
    fixed_counts = {}
    unwitnessed = []
    for j, cls in sign_flip_classes.items():
        zero_slice = [p for p in points if p[j - 1] == 0]
        fixed = fixed_sets.get(cls, [])
        fixed_counts[cls.label()] = len(fixed)
        if sorted(fixed) != sorted(zero_slice):
            slices_match = False
        if not zero_slice:
            unwitnessed.append(j)
    if not only_sign_flips or not slices_match:
        conclusion = "unexpected-fixed-classes"
    elif unwitnessed:
        conclusion = "insufficient-rational-points"
    else:
        conclusion = "fixed-classes-verified"
    return FixedPointReport(
        curve=curve.to_dict(),
        point_count=len(points),
        classes_with_fixed_points=tuple(with_fixed),
        fixed_counts=fixed_counts,
        only_sign_flips=only_sign_flips,
        slices_match=slices_match,
        unwitnessed=tuple(unwitnessed),
        conclusion=conclusion,
    )


def _class_to_vector(cls: DiagonalClass) -> tuple[int, ...]:
    """Canonical class -> vector in Z_2^{coords-1} (position i <-> coordinate i+2)."""
    return tuple(1 if (i + 2) in cls.flips else 0 for i in range(cls.coords - 1))


def _vector_to_class(vec, coords: int) -> DiagonalClass:
    return DiagonalClass(tuple(i + 2 for i, bit in enumerate(vec) if bit % 2), coords)


@dataclass(frozen=True)
class FreeSubgroupReport:
    curve: dict
    rank: int
    generators: tuple[str, ...]
    subgroup: zmod.Subgroup
    index: int
    contains_sign_flip: bool
    hyperplanes_scanned: int
    hyperplanes_avoiding_flips: int
    kernel_matches: bool
    point_count: int
    free_on_points: bool
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "curve": dict(self.curve),
            "sign_group_rank": self.rank,
            "generators": list(self.generators),
            "subgroup": self.subgroup.to_dict(),
            "index": self.index,
            "contains_sign_flip": self.contains_sign_flip,
            "hyperplanes_scanned": self.hyperplanes_scanned,
            "hyperplanes_avoiding_flips": self.hyperplanes_avoiding_flips,
            "kernel_matches": self.kernel_matches,
            "point_count": self.point_count,
            "free_on_points": self.free_on_points,
            "conclusion": self.conclusion,
        }


def free_index_two_subgroup(
    curve: FermatCurve, budget: int = DEFAULT_POINT_BUDGET
) -> FreeSubgroupReport:
    """The unique index-two subgroup of the sign class group missing every a_j.

    Exact computation in Z_2^{2g+1}: the subgroup generated by the products
    a_1 a_j, a scan of all index-two kernels confirming exactly one avoids
    every single-coordinate flip, and a point-level freeness check over the
    given field.
    """
    field = curve.field
    n = curve.coords
    rank = n - 1
    ones = tuple(1 for _ in range(rank))
    flip_vectors = {1: ones}
    for j in range(2, n + 1):
        flip_vectors[j] = tuple(1 if i == j - 2 else 0 for i in range(rank))
    gen_rows = []
    gen_labels = []
    for j in range(2, n + 1):
        gen_rows.append(tuple((a + b) % 2 for a, b in zip(ones, flip_vectors[j])))
        gen_labels.append(f"a1*a{j}")
    subgroup = zmod.subgroup_from_rows(gen_rows, rank, 2)
    if subgroup.order != 2 ** (n - 2):
        raise CertificationError("free candidate subgroup has the wrong order")
    contains_flip = any(subgroup.contains(vec) for vec in flip_vectors.values())
    avoiding = []
    total = 0
    for w in itertools.product((0, 1), repeat=rank):
        if not any(w):
            continue
        total += 1
        if all(sum(a * b for a, b in zip(w, vec)) % 2 for vec in flip_vectors.values()):
            avoiding.append(w)
    kernel_matches = False
    if len(avoiding) == 1:
        wmat = zmod.ResidueMatrix(tuple((x,) for x in avoiding[0]), 2)
        kernel = zmod.left_kernel(wmat)
        kernel_matches = kernel == subgroup
    points = enumerate_points(curve, budget)
    free = True
    for vec in subgroup.elements():
        if not any(vec):
            continue
        cls = _vector_to_class(vec, n)
        if any(cls.apply(p, field) == p for p in points):
            free = False
            break
    ok = not contains_flip and len(avoiding) == 1 and kernel_matches and free
    return FreeSubgroupReport(
        curve=curve.to_dict(),
        rank=rank,
        generators=tuple(gen_labels),
        subgroup=subgroup,
        index=2 ** rank // subgroup.order,
        contains_sign_flip=contains_flip,
        hyperplanes_scanned=total,
        hyperplanes_avoiding_flips=len(avoiding),
        kernel_matches=kernel_matches,
        point_count=len(points),
        free_on_points=free,
        conclusion="unique-free-index-two" if ok else "free-subgroup-check-failed",
    )


@dataclass(frozen=True)
class SwapInvolution:
    """Coordinate map y_i = c_i * x_{sigma(i)} for an involutive pairing sigma.

    Case A swaps (1 2)(3 4)...(2g+1 2g+2); case B fixes 1 and 2 and swaps the
    remaining pairs.  Composition is symbolic: the square is the diagonal map
    with entries c_i * c_{sigma(i)}.
    """

    kind: str
    coeffs: tuple[int, ...]
    field: PrimeField

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise InputError(f"unknown involution kind {self.kind!r}")
        if len(self.coeffs) % 2 or len(self.coeffs) < 6:
            raise InputError("coefficient vector must have even length >= 6")
        object.__setattr__(self, "coeffs", tuple(self.field.element(c) for c in self.coeffs))

    @property
    def coords(self) -> int:
        return len(self.coeffs)

    def permutation(self) -> tuple[int, ...]:
        n = self.coords
        sigma = list(range(1, n + 1))
        start = 1 if self.kind == "A" else 3
        for i in range(start, n + 1, 2):
            sigma[i - 1], sigma[i] = i + 1, i
        return tuple(sigma)

    def apply(self, point) -> tuple[int, ...]:
        point = tuple(point)
        sigma = self.permutation()
        image = tuple(c * point[s - 1] % self.field.q for c, s in zip(self.coeffs, sigma))
        return normalize_point(image, self.field)

    def square_diagonal(self) -> tuple[int, ...]:
        sigma = self.permutation()
        return tuple(c * self.coeffs[s - 1] % self.field.q for c, s in zip(self.coeffs, sigma))

    def square_class(self) -> DiagonalClass:
        diag = self.square_diagonal()
        q = self.field.q
        lead = diag[0]
        if lead == 0:
            raise CertificationError("degenerate square diagonal")
        inv = self.field.inv(lead)
        flips = []
        for i, d in enumerate(diag):
            ratio = d * inv % q
            if ratio == 1:
                continue
            if ratio == q - 1:
                flips.append(i + 1)
            else:
                raise CertificationError("square is not a sign-flip diagonal")
        return DiagonalClass.from_indices(flips, self.coords)


def _case_a_chain(q: int, lambdas: tuple[Fraction, ...], g: int, signs: dict):
    """Evaluate the full case-A radicand chain mod q with the given sign
    choices; returns the coefficient/fixed-point data or None if some link
    fails (non-residue, degenerate reduction)."""
    field = PrimeField(q)
    try:
        lams = [field.from_fraction(l) for l in lambdas]
    except Exception:
        return None
    if any(l in (0, 1) for l in lams) or len(set(lams)) != len(lams):
        return None

    def root(x, key):
        r = field.sqrt(x)
        if r is None or r == 0:
            return None
        return r if signs.get(key, 1) == 1 else q - r

    lam1 = lams[0]
    a2 = root(lam1, "A2")
    if a2 is None or a2 == 1:
        return None
    mu = root(a2, "mu")
    if mu is None:
        return None
    p3 = root((lam1 - 1) * field.inv(1 - a2) % q, "p3")
    if p3 is None:
        return None
    a3 = 1 if signs.get("A3", 1) == 1 else q - 1
    a4 = a2 * a3 % q
    p4 = mu * p3 % q * field.inv(a3) % q
    coeffs = {2: a2, 3: a3, 4: a4}
    ps = {3: p3, 4: p4}
    for j in range(3, g + 2):
        lam_lo = lams[2 * j - 5]  # lambda_{2j-4}
        lam_hi = lams[2 * j - 4]  # lambda_{2j-3}
        a_odd = root(lam_lo, f"A{2 * j - 1}")
        if a_odd is None:
            return None
        a_even = a2 * field.inv(a_odd) % q
        if a_even * a_even % q != lam_hi:
            raise CertificationError("pairing failed to propagate to the coefficients")
        denom = (1 - a_even * field.inv(a_odd)) % q
        if denom == 0:
            return None
        p_odd = root((lam_hi - lam_lo) * field.inv(denom) % q, f"p{2 * j - 1}")
        if p_odd is None:
            return None
        coeffs[2 * j - 1] = a_odd
        coeffs[2 * j] = a_even
        ps[2 * j - 1] = p_odd
        ps[2 * j] = mu * p_odd % q * field.inv(a_odd) % q
    return {"field": field, "lams": tuple(lams), "coeffs": coeffs, "mu": mu, "ps": ps}


_SIGN_KEYS_FIXED = ("A2", "mu", "p3", "A3")


def _validate_sign_choices(signs: dict | None, g: int) -> dict:
    signs = dict(signs or {})
    allowed = set(_SIGN_KEYS_FIXED)
    for j in range(3, g + 2):
        allowed.add(f"A{2 * j - 1}")
        allowed.add(f"p{2 * j - 1}")
    for key, val in signs.items():
        if key not in allowed:
            raise InputError(f"unknown sign choice {key!r}; allowed: {sorted(allowed)}")
        if val not in (1, -1):
            raise InputError(f"sign choice {key!r} must be 1 or -1, got {val!r}")
    return signs


@dataclass(frozen=True)
class CaseAReport:
    g: int
    lambdas: tuple[Fraction, ...]
    sign_choices: dict
    primes: tuple[int, ...]
    evidence: tuple[dict, ...]
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "lambdas": [str(l) for l in self.lambdas],
            "sign_choices": dict(self.sign_choices),
            "primes": list(self.primes),
            "evidence": [dict(e) for e in self.evidence],
            "conclusion": self.conclusion,
        }


def case_a_involution(
    g: int,
    lambdas,
    sign_choices: dict | None = None,
    num_primes: int = 3,
    lower: int = 20,
    sample_count: int = 10,
    seed: int = 0,
    search_limit: int = 1_000_000,
) -> CaseAReport:
    """Order-two lift candidate for a pairing-admissible rational coefficient
    tuple, certified at several splitting primes.

    Admissibility means lam_{2j} lam_{2j+1} = lam_1 for j = 1..g-1 (the
    downstairs pairing z -> lam_1/z preserves the branch set).  At each
    splitting prime the lift's coefficients and its fixed point are built
    from the radicand chain lam_1 -> A_2 -> mu -> p_3 -> ..., and the report
    checks the fixed point lies on the curve and is alpha-fixed, that alpha
    preserves the curve on sampled points, and that alpha squares to the
    identity.  Conclusion: the lift exists and has a fixed point, so no free
    lifted action of this shape exists.
    """
    if not isinstance(g, int) or g < 2:
        raise GenusTooSmallError(f"g must be an integer >= 2, got {g!r}")
    lams = tuple(Fraction(l) for l in lambdas)
    if len(lams) != 2 * g - 1:
        raise BadLambdaError(f"expected {2 * g - 1} coefficients, got {len(lams)}")
    if any(l in (0, 1) for l in lams) or len(set(lams)) != len(lams):
        raise BadLambdaError("coefficients must be pairwise distinct and avoid 0, 1")
    for j in range(1, g):
        if lams[2 * j - 1] * lams[2 * j] != lams[0]:
            raise ConstraintInfeasibleError(
                f"pairing requires lambda_{2 * j} * lambda_{2 * j + 1} = lambda_1"
            )
    signs = _validate_sign_choices(sign_choices, g)
    if not isinstance(num_primes, int) or num_primes < 1:
        raise InputError("num_primes must be a positive integer")

    rational_radicands = [lams[0]] + [lams[2 * j - 5] for j in range(3, g + 2)]
    request = RadicandRequest(tuple(rational_radicands), context="case-A radicand chain")
    primes = find_splitting_prime(
        request,
        lower,
        count=num_primes,
        search_limit=search_limit,
        extra_check=lambda q: _case_a_chain(q, lams, g, signs) is not None,
    )
    evidence = []
    for q in primes:
        data = _case_a_chain(q, lams, g, signs)
        if data is None:
            raise CertificationError("splitting prime stopped splitting on re-evaluation")
        field = data["field"]
        curve = FermatCurve(g, field, data["lams"])
        n = curve.coords
        coeff_vec = tuple([1] + [data["coeffs"][i] for i in range(2, n + 1)])
        alpha = SwapInvolution("A", coeff_vec, field)
        fixed_point = tuple([1, data["mu"]] + [data["ps"][i] for i in range(3, n + 1)])
        fixed_point = normalize_point(fixed_point, field)
        if not curve.contains(fixed_point):
            raise CertificationError(f"constructed fixed point is not on the curve mod {q}")
        if alpha.apply(fixed_point) != fixed_point:
            raise CertificationError(f"constructed point is not alpha-fixed mod {q}")
        if not alpha.square_class().is_identity:
            raise CertificationError(f"alpha is not an involution mod {q}")
        samples = sample_points(curve, sample_count, seed)
        for s in samples:
            image = alpha.apply(s)
            if not curve.contains(image):
                raise CertificationError(f"alpha does not preserve the curve mod {q}")
            if alpha.apply(image) != s:
                raise CertificationError(f"alpha fails to be an involution on points mod {q}")
        evidence.append(
            {
                "q": q,
                "coefficients": {f"A{i}": data["coeffs"][i] for i in range(2, n + 1)},
                "mu": data["mu"],
                "fixed_point": list(fixed_point),
                "on_curve": True,
                "alpha_fixed": True,
                "samples_checked": len(samples),
                "alpha_preserves_curve": True,
                "alpha_involution_on_samples": True,
            }
        )
    return CaseAReport(
        g=g,
        lambdas=lams,
        sign_choices=signs,
        primes=primes,
        evidence=tuple(evidence),
        conclusion="fixed-point-exists",
    )


@dataclass(frozen=True)
class CaseBReport:
    g: int
    q: int
    lambdas: tuple[int, ...]
    sqrt_minus_one: int
    coefficients: tuple[int, ...]
    square_class: DiagonalClass
    samples_checked: int
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "q": self.q,
            "lambdas": list(self.lambdas),
            "sqrt_minus_one": self.sqrt_minus_one,
            "coefficients": list(self.coefficients),
            "square_flips": self.square_class.to_list(),
            "square_label": self.square_class.label(),
            "square_is_identity": self.square_class.is_identity,
            "fourth_power_identity": True,
            "samples_checked": self.samples_checked,
            "conclusion": self.conclusion,
        }


def case_b_involution(
    g: int, lambdas, q: int, sample_count: int = 10, seed: int = 0
) -> CaseBReport:
    """The remaining lift candidate, where the pairing is z -> -z: lam_1 = -1
    and lam_{2j+1} = -lam_{2j}.  All its coefficients square to -1, and the
    symbolic square is the sign flip a_2, not the identity, so no order-two
    lift exists in this case.  Needs a square root of -1 in the field."""
    field = PrimeField(q)
    curve = FermatCurve(g, field, tuple(field.element(l) for l in lambdas))
    lams = curve.lambdas
    if lams[0] != q - 1:
        raise BadLambdaError("case B requires lambda_1 = -1")
    for j in range(1, g):
        if (lams[2 * j - 1] + lams[2 * j]) % q:
            raise BadLambdaError("case B requires lambda_{2j+1} = -lambda_{2j}")
    i = field.sqrt(q - 1)
    if i is None:
        raise FieldInsufficientError(f"-1 is not a square mod {q}")
    n = curve.coords
    coeffs = [1, i]
    for _ in range(3, n + 1, 2):
        coeffs += [i, q - i]
    alpha = SwapInvolution("B", tuple(coeffs), field)
    for c in coeffs[1:]:
        if c * c % q != q - 1:
            raise CertificationError("coefficient fails to square to -1")
    square = alpha.square_class()
    expected = DiagonalClass.sign_flip(2, n)
    if square != expected or square.is_identity:
        raise CertificationError("symbolic square is not the sign flip a_2")
    if not square.compose(square).is_identity:
        raise CertificationError("fourth power is not the identity")
    samples = sample_points(curve, sample_count, seed)
    for s in samples:
        if not curve.contains(alpha.apply(s)):
            raise CertificationError(f"alpha does not preserve the curve mod {q}")
    return CaseBReport(
        g=g,
        q=q,
        lambdas=lams,
        sqrt_minus_one=i,
        coefficients=tuple(coeffs),
        square_class=square,
        samples_checked=len(samples),
        conclusion="no-involutive-lift",
    )


@dataclass(frozen=True)
class CurveVerifyReport:
    curve: dict
    point_count: int
    x1_zero_count: int
    sqrt_minus_one_exists: bool
    at_most_one_zero: bool
    action_preserves_membership: bool
    classes_checked: int
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "curve": dict(self.curve),
            "point_count": self.point_count,
            "x1_zero_count": self.x1_zero_count,
            "sqrt_minus_one_exists": self.sqrt_minus_one_exists,
            "at_most_one_zero": self.at_most_one_zero,
            "action_preserves_membership": self.action_preserves_membership,
            "classes_checked": self.classes_checked,
            "conclusion": self.conclusion,
        }


def verify_curve(curve: FermatCurve, budget: int = DEFAULT_POINT_BUDGET) -> CurveVerifyReport:
    """Builds the point set and checks the structural invariants: at most one
    zero coordinate per point and invariance of the point set under every
    sign class."""
    field = curve.field
    points = enumerate_points(curve, budget)
    point_set = set(points)
    preserved = True
    classes = all_diagonal_classes(curve.coords)
    for cls in classes:
        for p in points:
            if cls.apply(p, field) not in point_set:
                preserved = False
                break
        if not preserved:
            break
    return CurveVerifyReport(
        curve=curve.to_dict(),
        point_count=len(points),
        x1_zero_count=sum(1 for p in points if p[0] == 0),
        sqrt_minus_one_exists=field.sqrt(field.q - 1) is not None,
        at_most_one_zero=True,
        action_preserves_membership=preserved,
        classes_checked=len(classes),
        conclusion="verified" if preserved else "action-does-not-preserve-curve",
    )
