"""Deck transformation computations for abelian covers and Galois closures.

The setting: an unramified abelian cover of a genus-g surface with group
Z_k^{2g} sits under a composed cover built from a mod-k homology quotient of
an orbifold group.  The composed cover is rarely Galois; its closure has
deck group K x| Z_p, where K is the largest subgroup of the kernel invariant
under an order-p matrix action (the rotation permuting the cone points).
Everything is computed exactly over Z/k via the Howell machinery in
`zmod`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import zmod
from .errors import (
    CertificationError,
    EnumerationBudgetError,
    HypothesisViolatedError,
    InputError,
    NotPrimeError,
    NotSurjectiveError,
    StructureError,
)
from .fields import is_prime
from .presentations import smith_invariant_factors

DEFAULT_CROSSCHECK_BUDGET = 2 ** 12


def kernel_of_surjection(theta: zmod.ResidueMatrix) -> zmod.Subgroup:
    """Kernel of the map Z_k^m -> Z_k^n given by v -> theta @ v.

    Raises if theta is not surjective.  The kernel has order k^(m-n) exactly
    when theta is surjective, which is asserted.
    """
    k = theta.modulus
    n = len(theta.rows)
    m = len(theta.rows[0]) if theta.rows else 0
    columns = tuple(tuple(row[j] for row in theta.rows) for j in range(m))
    image = zmod.subgroup_from_rows(columns, n, k)
    if not image.is_full:
        raise NotSurjectiveError(
            f"columns span a subgroup of order {image.order}, need {k ** n}"
        )
    kernel = zmod.left_kernel(theta.transpose())
    if kernel.order * k ** n != k ** m:
        raise CertificationError("kernel order does not complement the image")
    return kernel


@dataclass(frozen=True)
class GilmanAction:
    """Integer matrix of the cone-point rotation on orbifold homology.

    For a prime p and r >= 3 cone points the reduced homology lattice has
    rank (p-1)(r-2); the rotation acts in r-2 blocks, cycling each block's
    basis and sending the last vector to minus the block sum (the companion
    action of the p-th cyclotomic polynomial).
    """

    p: int
    r: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return (self.p - 1) * (self.r - 2)

    def reduced(self, k: int) -> zmod.ResidueMatrix:
        return zmod.ResidueMatrix(tuple(tuple(x % k for x in row) for row in self.rows), k)

    def to_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "rank": self.rank, "rows": [list(r) for r in self.rows]}


def gilman_action(p: int, r: int) -> GilmanAction:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not isinstance(r, int) or r < 3:
        raise InputError(f"need at least 3 cone points, got {r!r}")
    size = p - 1
    blocks = r - 2
    m = size * blocks
    cols = []
    for b in range(blocks):
        base = b * size
        for i in range(size):
            col = [0] * m
            if i + 1 < size:
                col[base + i + 1] = 1
            else:
                for t in range(size):
                    col[base + t] = -1
            cols.append(col)
    rows = tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))
    action = GilmanAction(p, r, rows)
    # sanity: the action has exact order p over the integers
    power = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for _ in range(p):
        power = [
            [sum(power[i][t] * rows[t][j] for t in range(m)) for j in range(m)]
            for i in range(m)
        ]
    if any(power[i][j] != (1 if i == j else 0) for i in range(m) for j in range(m)):
        raise CertificationError("rotation matrix does not have order p")
    return action


def subgroup_invariant_factors(sub: zmod.Subgroup) -> tuple[int, ...]:
    """Cyclic decomposition S = (+) Z_{k/a_i}: the a_i are the invariant
    factors of the basis rows stacked over k times the identity."""
    k = sub.modulus
    m = sub.ambient_rank
    rows = [list(row) for row in sub.basis]
    rows += [[k if i == j else 0 for j in range(m)] for i in range(m)]
    factors = smith_invariant_factors(rows)
    if len(factors) != m or any(k % a for a in factors):
        raise CertificationError("subgroup invariant factors do not divide the modulus")
    return tuple(factors)


def elementary_rank(sub: zmod.Subgroup) -> int | None:
    """s with S isomorphic to Z_k^s, or None if S is not of that shape."""
    k = sub.modulus
    s = 0
    for a in subgroup_invariant_factors(sub):
        if a == 1:
            s += 1
        elif a != k:
            return None
    return s


@dataclass(frozen=True)
class InvariantRankScan:
    k: int
    p: int
    r: int
    ambient_rank: int
    subgroup_count: int
    elementary_count: int
    s_values: tuple[int, ...]
    congruence_ok: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "r": self.r,
            "ambient_rank": self.ambient_rank,
            "invariant_subgroup_count": self.subgroup_count,
            "elementary_count": self.elementary_count,
            "s_values": list(self.s_values),
            "congruence_ok": self.congruence_ok,
        }


def invariant_s_values(
    k: int, p: int, r: int, budget: int = zmod.DEFAULT_ENUMERATION_BUDGET
) -> InvariantRankScan:
    """Ranks s of the rotation-invariant subgroups isomorphic to Z_k^s.

    Every invariant subgroup has order congruent to 1 mod p (the rotation
    acts freely on its nonzero vectors when gcd(k, p) = 1), so each listed s
    satisfies k^s = 1 mod p; that congruence is checked, not assumed.
    """
    if math.gcd(k, p) != 1:
        raise HypothesisViolatedError(f"need gcd(k, p) = 1, got k={k}, p={p}")
    action = gilman_action(p, r)
    mat = action.reduced(k)
    subs = zmod.enumerate_invariant_subgroups(mat, budget=budget)
    s_values = set()
    elementary = 0
    congruence_ok = True
    for sub in subs:
        if sub.order % p != 1 % p:
            raise CertificationError(
                f"invariant subgroup of order {sub.order} violates the mod-{p} congruence"
            )
        s = elementary_rank(sub)
        if s is None:
            continue
        elementary += 1
        s_values.add(s)
        if pow(k, s, p) != 1 % p:
            congruence_ok = False
    return InvariantRankScan(
        k=k,
        p=p,
        r=r,
        ambient_rank=action.rank,
        subgroup_count=len(subs),
        elementary_count=elementary,
        s_values=tuple(sorted(s_values)),
        congruence_ok=congruence_ok,
    )


@dataclass(frozen=True)
class ClosureReport:
    k: int
    p: int
    ambient_rank: int
    kernel: zmod.Subgroup
    core: zmod.Subgroup
    s: int
    deck_order: int
    descriptor: str
    constraint_ok: bool
    cross_check: str

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "ambient_rank": self.ambient_rank,
            "kernel": self.kernel.to_dict(),
            "core": self.core.to_dict(),
            "s": self.s,
            "deck_order": self.deck_order,
            "descriptor": self.descriptor,
            "constraint_ok": self.constraint_ok,
            "cross_check": self.cross_check,
        }


def galois_closure(
    kernel: zmod.Subgroup,
    action: zmod.ResidueMatrix,
    p: int,
    crosscheck_budget: int = DEFAULT_CROSSCHECK_BUDGET,
) -> ClosureReport:
    """Deck group of the Galois closure of the cover attached to `kernel`.

    The closure corresponds to the core K = intersection of the p rotation
    translates of the kernel, the largest invariant subgroup inside it.  K
    must be elementary (isomorphic to Z_k^s); the closure's deck group is
    then Z_k^(m-s) x| Z_p of order k^(m-s) * p ... with m the ambient rank.
    A brute-force maximality cross-check runs when k^m fits the budget.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    k = kernel.modulus
    if math.gcd(k, p) != 1:
        raise HypothesisViolatedError(f"need gcd(k, p) = 1, got k={k}, p={p}")
    if action.modulus != k:
        raise InputError("action modulus does not match the kernel modulus")
    m = kernel.ambient_rank
    if len(action.rows) != m:
        raise InputError("action size does not match the kernel ambient rank")
    core = zmod.largest_invariant_subgroup_in(kernel, action, p)
    s = elementary_rank(core)
    if s is None:
        raise StructureError(
            "the invariant core is not elementary; no split closure descriptor applies"
        )
    deck_order = k ** (m - s) * p
    descriptor = f"Z_{k}^{m - s} x| Z_{p}"
    constraint_ok = pow(k, s, p) == 1 % p
    if not constraint_ok:
        raise CertificationError(f"core rank {s} violates k^s = 1 mod {p}")
    cross_check = "skipped-budget"
    if k ** m <= crosscheck_budget:
        for sub in zmod.enumerate_invariant_subgroups(action, budget=crosscheck_budget):
            inside = kernel.contains_subgroup(sub)
            if inside and not core.contains_subgroup(sub):
                raise CertificationError("found an invariant subgroup beating the computed core")
        if not kernel.contains_subgroup(core):
            raise CertificationError("computed core is not inside the kernel")
        cross_check = "confirmed"
    return ClosureReport(
        k=k,
        p=p,
        ambient_rank=m,
        kernel=kernel,
        core=core,
        s=s,
        deck_order=deck_order,
        descriptor=descriptor,
        constraint_ok=constraint_ok,
        cross_check=cross_check,
    )


@dataclass(frozen=True)
class FiberProductCertificate:
    g: int
    k: int
    factor_count: int
    subsets_checked: int
    orders_ok: bool
    diagonal_injective: bool
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "k": self.k,
            "factor_count": self.factor_count,
            "subsets_checked": self.subsets_checked,
            "orders_ok": self.orders_ok,
            "diagonal_injective": self.diagonal_injective,
            "conclusion": self.conclusion,
        }


def fiber_product_check(
    g: int, k: int, budget: int = zmod.DEFAULT_ENUMERATION_BUDGET
) -> FiberProductCertificate:
    """The 2g coordinate quotients of Z_k^{2g} assemble to a fiber product.

    K_j = span{e_i : i != j} is the kernel of the j-th coordinate map; the
    certificate verifies every nonempty intersection of l of them has order
    k^(2g-l) and that the full intersection is trivial, elementwise, so the
    diagonal map to the product of cyclic quotients is injective.
    """
    if not isinstance(g, int) or g < 1:
        raise InputError(f"g must be a positive integer, got {g!r}")
    if not isinstance(k, int) or k < 2:
        raise InputError(f"k must be an integer >= 2, got {k!r}")
    m = 2 * g
    if k ** m > budget:
        raise EnumerationBudgetError(f"k^(2g) = {k ** m} exceeds budget {budget}")
    kernels = []
    for j in range(m):
        rows = [tuple(1 if t == i else 0 for t in range(m)) for i in range(m) if i != j]
        kernels.append(zmod.subgroup_from_rows(rows, m, k))
    orders_ok = True
    subsets = 0
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            subsets += 1
            inter = kernels[combo[0]]
            for idx in combo[1:]:
                inter = zmod.intersect(inter, kernels[idx])
            if inter.order != k ** (m - size):
                orders_ok = False
    full = kernels[0]
    for sub in kernels[1:]:
        full = zmod.intersect(full, sub)
    diagonal_injective = full.is_trivial
    if diagonal_injective:
        # elementwise confirmation: only the zero vector dies in every quotient
        for vec in zmod.Subgroup.full(m, k).elements(budget):
            if any(vec) and all(vec[j] % k == 0 for j in range(m)):
                diagonal_injective = False
                break
    ok = orders_ok and diagonal_injective
    return FiberProductCertificate(
        g=g,
        k=k,
        factor_count=m,
        subsets_checked=subsets,
        orders_ok=orders_ok,
        diagonal_injective=diagonal_injective,
        conclusion="fiber-product-verified" if ok else "fiber-product-failed",
    )


@dataclass(frozen=True)
class LiftExponentReport:
    k: int
    p: int
    exponent: int
    pairs_checked: int
    cyclic_checked: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "exponent": self.exponent,
            "pairs_checked": self.pairs_checked,
            "cyclic_checked": self.cyclic_checked,
        }


def order_p_lift_exponent(k: int, p: int) -> LiftExponentReport:
    """Multiplying any preimage of an order-p rotation by k yields an element
    of order exactly p, provided gcd(k, p) = 1.

    Checked by brute force in the split model Z_k x Z_p (eta = (a, b) with
    b != 0 maps onto a generator downstairs) and in the cyclic model Z_{kp}
    (eta with eta % p != 0).  In both, k * eta must have order exactly p.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not isinstance(k, int) or k < 2:
        raise InputError(f"k must be an integer >= 2, got {k!r}")
    if math.gcd(k, p) != 1:
        raise HypothesisViolatedError(f"need gcd(k, p) = 1, got k={k}, p={p}")
    pairs = 0
    for a in range(k):
        for b in range(1, p):
            pairs += 1
            scaled = (a * k % k, b * k % p)
            # order exactly p: trivial first slot, nonzero second slot
            if scaled[0] != 0 or scaled[1] == 0:
                raise CertificationError(f"k * ({a},{b}) does not have order {p}")
    cyclic = 0
    n = k * p
    for eta in range(n):
        if eta % p == 0:
            continue
        cyclic += 1
        scaled = eta * k % n
        if scaled == 0 or (scaled * p) % n != 0:
            raise CertificationError(f"k * {eta} does not have order {p} in Z_{n}")
    return LiftExponentReport(k=k, p=p, exponent=k, pairs_checked=pairs, cyclic_checked=cyclic)
