"""Exact linear algebra over Z/k, k >= 2 and possibly composite.

Subgroups of (Z/k)^m are stored through their Howell-form basis.  The
Howell form is the canonical echelon form for row spans over Z/k: on top
of the usual echelon shape it keeps the annihilator rows that make greedy
reduction a complete membership test, and it is unique per row span, so
subgroup equality is a plain comparison of basis tuples.

Everything here is immutable and side-effect free; matrices act on column
vectors (``mat.apply(v)`` is the image of v, so the columns of a matrix
are the images of the standard basis).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    BadActionError,
    CertificationError,
    DimensionMismatchError,
    EnumerationBudgetError,
    InvalidModulusError,
    NotInvertibleError,
    OrderBoundError,
)

DEFAULT_ENUMERATION_BUDGET = 2**20
DEFAULT_ORDER_BOUND = 2**20


def _validate_modulus(k) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise InvalidModulusError(f"modulus must be an integer >= 2, got {k!r}")


@dataclass(frozen=True)
class ResidueVector:
    """Vector with entries in Z/modulus, normalized to [0, modulus)."""

    entries: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        _validate_modulus(self.modulus)
        if len(self.entries) == 0:
            raise DimensionMismatchError("vector must have at least one entry")
        object.__setattr__(self, "entries", tuple(x % self.modulus for x in self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "ResidueVector") -> "ResidueVector":
        if self.modulus != other.modulus or len(self) != len(other):
            raise DimensionMismatchError("vector shape or modulus mismatch")
        return ResidueVector(
            tuple(a + b for a, b in zip(self.entries, other.entries)), self.modulus
        )

    def scale(self, c: int) -> "ResidueVector":
        return ResidueVector(tuple(c * x for x in self.entries), self.modulus)


@dataclass(frozen=True)
class ResidueMatrix:
    """Rectangular matrix over Z/modulus."""

    rows: tuple[tuple[int, ...], ...]
    modulus: int

    def __post_init__(self):
        _validate_modulus(self.modulus)
        if not self.rows:
            raise DimensionMismatchError("matrix must have at least one row")
        width = len(self.rows[0])
        if width == 0 or any(len(r) != width for r in self.rows):
            raise DimensionMismatchError("matrix rows must be nonempty and of equal length")
        object.__setattr__(
            self, "rows", tuple(tuple(x % self.modulus for x in r) for r in self.rows)
        )

    @classmethod
    def identity(cls, n: int, modulus: int) -> "ResidueMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), modulus)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row_vectors(self) -> tuple[ResidueVector, ...]:
        return tuple(ResidueVector(r, self.modulus) for r in self.rows)

    def transpose(self) -> "ResidueMatrix":
        return ResidueMatrix(tuple(zip(*self.rows)), self.modulus)

    def apply(self, vec) -> tuple[int, ...]:
        """Image of a column vector: (M v)_i = sum_j M[i][j] v[j]."""
        vec = tuple(vec)
        if len(vec) != self.ncols:
            raise DimensionMismatchError(
                f"matrix has {self.ncols} columns, vector has {len(vec)} entries"
            )
        return tuple(sum(a * b for a, b in zip(row, vec)) % self.modulus for row in self.rows)

    def __matmul__(self, other: "ResidueMatrix") -> "ResidueMatrix":
        if self.modulus != other.modulus:
            raise DimensionMismatchError("modulus mismatch in matrix product")
        if self.ncols != other.nrows:
            raise DimensionMismatchError("inner dimensions do not match")
        cols = other.transpose().rows
        return ResidueMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) % self.modulus for col in cols)
                for row in self.rows
            ),
            self.modulus,
        )

    def power(self, e: int) -> "ResidueMatrix":
        if not self.is_square:
            raise DimensionMismatchError("powers need a square matrix")
        if e < 0:
            raise DimensionMismatchError("negative powers are not supported")
        result = ResidueMatrix.identity(self.nrows, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _unit_scaling(a: int, modulus: int) -> int:
    """A unit u mod `modulus` with (u * a) % modulus == gcd(a, modulus).

    Exists for every nonzero a: gcd(a/d, modulus/d) = 1 for d = gcd(a, modulus),
    and some lift of the inverse of a/d is coprime to the whole modulus.
    """
    a %= modulus
    d = math.gcd(a, modulus)
    a1 = a // d
    n1 = modulus // d
    u0 = pow(a1, -1, n1) if n1 > 1 else 1
    for t in range(d):
        u = u0 + t * n1
        if math.gcd(u, modulus) == 1:
            return u % modulus
    raise CertificationError("no unit scaling found")  # unreachable


def howell_form(rows, width: int, modulus: int) -> tuple[tuple[int, ...], ...]:
    """Canonical Howell basis of the row span of `rows` inside (Z/modulus)^width.

    Pivots divide the modulus, pivot columns strictly increase, entries above
    a pivot are reduced modulo it, and for every pivot the annihilator row
    (modulus/pivot times the pivot row) is part of the span closure, so greedy
    reduction decides membership.
    """
    _validate_modulus(modulus)
    n = modulus
    pending = []
    for r in rows:
        if len(r) != width:
            raise DimensionMismatchError("generator width mismatch")
        row = [x % n for x in r]
        if any(row):
            pending.append(row)
    result = []
    for col in range(width):
        rest = []
        pivot = None
        for row in pending:
            if row[col] == 0:
                rest.append(row)
                continue
            if pivot is None:
                pivot = row
                continue
            a, b = pivot[col], row[col]
            g, s, t = _xgcd(a, b)
            u, v = -(b // g), a // g
            new_pivot = [(s * x + t * y) % n for x, y in zip(pivot, row)]
            new_rest = [(u * x + v * y) % n for x, y in zip(pivot, row)]
            pivot = new_pivot
            if any(new_rest):
                rest.append(new_rest)
        if pivot is not None:
            unit = _unit_scaling(pivot[col], n)
            pivot = [(unit * x) % n for x in pivot]
            result.append(pivot)
            d = pivot[col]
            ann = [((n // d) * x) % n for x in pivot]
            if any(ann):
                rest.append(ann)
        pending = rest
    for i, row in enumerate(result):
        col = next(j for j, x in enumerate(row) if x)
        d = row[col]
        for above in result[:i]:
            q = above[col] // d
            if q:
                for j in range(width):
                    above[j] = (above[j] - q * row[j]) % n
    return tuple(tuple(r) for r in result)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of (Z/modulus)^ambient_rank, identified by its Howell basis.

    Instances must be built via `canonical_form` / `subgroup_from_rows` (or the
    trivial/full constructors); dataclass equality is then subgroup equality.
    """

    ambient_rank: int
    modulus: int
    basis: tuple[tuple[int, ...], ...]
    order: int

    @classmethod
    def trivial(cls, ambient_rank: int, modulus: int) -> "Subgroup":
        _validate_modulus(modulus)
        return cls(ambient_rank, modulus, (), 1)

    @classmethod
    def full(cls, ambient_rank: int, modulus: int) -> "Subgroup":
        return subgroup_from_rows(
            ResidueMatrix.identity(ambient_rank, modulus).rows, ambient_rank, modulus
        )

    @property
    def is_trivial(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return self.order == self.modulus**self.ambient_rank

    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def contains(self, vec) -> bool:
        v = [x % self.modulus for x in vec]
        if len(v) != self.ambient_rank:
            raise DimensionMismatchError("vector length does not match ambient rank")
        for row in self.basis:
            col = next(j for j, x in enumerate(row) if x)
            d = row[col]
            c = v[col]
            if c % d:
                return False
            q = c // d
            if q:
                v = [(x - q * y) % self.modulus for x, y in zip(v, row)]
        return not any(v)

    def contains_subgroup(self, other: "Subgroup") -> bool:
        _check_compatible(self, other)
        return all(self.contains(row) for row in other.basis)

    def elements(self, budget: int = DEFAULT_ENUMERATION_BUDGET):
        """Iterate all elements (exactly `order` of them, no repeats)."""
        if self.order > budget:
            raise EnumerationBudgetError(
                f"subgroup order {self.order} exceeds enumeration budget {budget}"
            )
        pivots = [row[col] for row, col in zip(self.basis, self.pivot_columns())]
        ranges = [range(self.modulus // d) for d in pivots]
        for coeffs in itertools.product(*ranges):
            vec = [0] * self.ambient_rank
            for c, row in zip(coeffs, self.basis):
                if c:
                    vec = [(x + c * y) % self.modulus for x, y in zip(vec, row)]
            yield tuple(vec)

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "ambient_rank": self.ambient_rank,
            "basis_rows": [list(r) for r in self.basis],
            "order": self.order,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Subgroup":
        return subgroup_from_rows(
            [tuple(r) for r in data["basis_rows"]],
            int(data["ambient_rank"]),
            int(data["modulus"]),
        )


def _check_compatible(a: Subgroup, b: Subgroup) -> None:
    if a.modulus != b.modulus or a.ambient_rank != b.ambient_rank:
        raise DimensionMismatchError("subgroups live in different ambient groups")


def subgroup_from_rows(rows, ambient_rank: int, modulus: int) -> Subgroup:
    """Subgroup spanned by `rows` (possibly none of them nonzero)."""
    basis = howell_form(rows, ambient_rank, modulus)
    order = 1
    for row in basis:
        col = next(j for j, x in enumerate(row) if x)
        order *= modulus // row[col]
    return Subgroup(ambient_rank, modulus, basis, order)


def canonical_form(gens: ResidueMatrix) -> Subgroup:
    """Canonical (Howell basis) form of the row span of `gens`."""
    return subgroup_from_rows(gens.rows, gens.ncols, gens.modulus)


def join(a: Subgroup, b: Subgroup) -> Subgroup:
    _check_compatible(a, b)
    return subgroup_from_rows(a.basis + b.basis, a.ambient_rank, a.modulus)


def left_kernel(mat: ResidueMatrix) -> Subgroup:
    """All row vectors u with u @ mat = 0, as a subgroup of (Z/k)^nrows.

    Computed from the Howell form of [mat | I]: rows whose mat-part vanished
    record exactly the combinations that kill mat (the Howell span property
    makes this list complete, not just a subset).
    """
    n, m = mat.nrows, mat.ncols
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat.rows)]
    h = howell_form(aug, m + n, mat.modulus)
    kernel_rows = [r[m:] for r in h if not any(r[:m])]
    return subgroup_from_rows(kernel_rows, n, mat.modulus)


def intersect(a: Subgroup, b: Subgroup) -> Subgroup:
    """Intersection of two subgroups of the same ambient group."""
    _check_compatible(a, b)
    if a.is_trivial or b.is_trivial:
        return Subgroup.trivial(a.ambient_rank, a.modulus)
    stacked = ResidueMatrix(a.basis + b.basis, a.modulus)
    ker = left_kernel(stacked)
    na = len(a.basis)
    gens = []
    for u in ker.basis:
        vec = [0] * a.ambient_rank
        for c, row in zip(u[:na], a.basis):
            if c:
                vec = [(x + c * y) % a.modulus for x, y in zip(vec, row)]
        gens.append(tuple(vec))
    return subgroup_from_rows(gens, a.ambient_rank, a.modulus)


def image_subgroup(mat: ResidueMatrix, sub: Subgroup) -> Subgroup:
    """Image of a subgroup under the column action of `mat`."""
    if mat.modulus != sub.modulus:
        raise DimensionMismatchError("modulus mismatch between matrix and subgroup")
    if mat.ncols != sub.ambient_rank:
        raise DimensionMismatchError("matrix does not act on this ambient group")
    return subgroup_from_rows([mat.apply(row) for row in sub.basis], mat.nrows, mat.modulus)


def det_mod(mat: ResidueMatrix) -> int:
    """Determinant reduced mod the modulus (Bareiss over the integer lift)."""
    if not mat.is_square:
        raise DimensionMismatchError("determinant needs a square matrix")
    a = [list(r) for r in mat.rows]
    n = len(a)
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return (sign * a[-1][-1]) % mat.modulus


def is_invertible(mat: ResidueMatrix) -> bool:
    if not mat.is_square:
        return False
    return subgroup_from_rows(mat.rows, mat.ncols, mat.modulus).is_full


def matrix_order(mat: ResidueMatrix, bound: int = DEFAULT_ORDER_BOUND) -> int:
    """Multiplicative order of an invertible matrix over Z/k."""
    if not mat.is_square:
        raise DimensionMismatchError("order needs a square matrix")
    if not is_invertible(mat):
        raise NotInvertibleError("matrix is singular mod its modulus")
    ident = ResidueMatrix.identity(mat.nrows, mat.modulus)
    power = mat
    n = 1
    while power != ident:
        power = power @ mat
        n += 1
        if n > bound:
            raise OrderBoundError(f"matrix order exceeds configured bound {bound}")
    return n


def _invariant_closure(mat: ResidueMatrix, sub: Subgroup) -> Subgroup:
    """Smallest mat-invariant subgroup containing `sub`."""
    current = sub
    while True:
        grown = join(current, image_subgroup(mat, current))
        if grown == current:
            return current
        current = grown


def enumerate_invariant_subgroups(
    mat: ResidueMatrix, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> list[Subgroup]:
    """All subgroups S of (Z/k)^m with mat(S) = S, canonically sorted.

    Works by closing every cyclic orbit span and then saturating under joins;
    complete because every invariant subgroup is the join of the invariant
    closures of its elements.  Raises when k^m, or the number of invariant
    subgroups discovered, exceeds the budget (never truncates silently).
    """
    if not mat.is_square:
        raise DimensionMismatchError("invariant subgroups need a square matrix")
    if not is_invertible(mat):
        raise NotInvertibleError("matrix is singular mod its modulus")
    m, k = mat.nrows, mat.modulus
    if k**m > budget:
        raise EnumerationBudgetError(
            f"ambient size {k}^{m} exceeds enumeration budget {budget}"
        )
    found: dict[tuple, Subgroup] = {}
    trivial = Subgroup.trivial(m, k)
    found[trivial.basis] = trivial
    for vec in itertools.product(range(k), repeat=m):
        if not any(vec):
            continue
        closure = _invariant_closure(mat, subgroup_from_rows([vec], m, k))
        found.setdefault(closure.basis, closure)
    frontier = list(found.values())
    while frontier:
        fresh = []
        snapshot = list(found.values())
        for a in frontier:
            for b in snapshot:
                joined = join(a, b)
                if joined.basis not in found:
                    found[joined.basis] = joined
                    fresh.append(joined)
                    if len(found) > budget:
                        raise EnumerationBudgetError(
                            f"invariant subgroup count exceeds budget {budget}"
                        )
        frontier = fresh
    return sorted(found.values(), key=lambda s: (s.order, s.basis))


def largest_invariant_subgroup_in(sub: Subgroup, mat: ResidueMatrix, p: int) -> Subgroup:
    """Intersection of the p translates mat^i(sub); the maximal mat-invariant
    subgroup contained in `sub` when mat has order p."""
    if mat.modulus != sub.modulus or mat.ncols != sub.ambient_rank:
        raise DimensionMismatchError("matrix does not act on this ambient group")
    if matrix_order(mat) != p:
        raise BadActionError(f"matrix does not have order {p} mod {mat.modulus}")
    result = sub
    translate = sub
    for _ in range(p - 1):
        translate = image_subgroup(mat, translate)
        result = intersect(result, translate)
    if image_subgroup(mat, result) != result:
        raise CertificationError("closure of translates failed to be invariant")
    return result
