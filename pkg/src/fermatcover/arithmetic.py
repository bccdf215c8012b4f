"""Closed-form genus arithmetic and uniqueness/exclusion certificates for
elementary abelian homology covers.

The cover in question has deck group Z_k^{2g} over a closed genus-g base,
so its genus is 1 + k^{2g}(g-1); everything else here is exact integer
bookkeeping on top of that formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CertificationError,
    GenusTooSmallError,
    InputError,
    InvalidModulusError,
    NotApplicableError,
    NotPrimeError,
)
from .fields import is_prime


def _validate_g(g) -> None:
    if not isinstance(g, int) or isinstance(g, bool) or g < 2:
        raise GenusTooSmallError(f"base genus must be an integer >= 2, got {g!r}")


def _validate_k(k) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise InvalidModulusError(f"deck exponent must be an integer >= 2, got {k!r}")


def cover_genus(g: int, k: int) -> int:
    """Genus 1 + k^{2g}(g-1) of the Z_k^{2g} homology cover of a genus-g surface."""
    _validate_g(g)
    _validate_k(k)
    return 1 + k ** (2 * g) * (g - 1)


def base_genus_from_cover(k: int, gamma: int) -> int | None:
    """The g >= 2 with cover_genus(g, k) == gamma, or None.

    cover_genus is strictly increasing in g for fixed k, so a simple upward
    scan is exact and terminates.
    """
    _validate_k(k)
    if not isinstance(gamma, int) or gamma < 2:
        raise InputError(f"cover genus must be an integer >= 2, got {gamma!r}")
    g = 2
    while True:
        value = cover_genus(g, k)
        if value == gamma:
            return g
        if value > gamma:
            return None
        g += 1


def hurwitz_bound(gamma: int) -> int:
    """84(gamma - 1), the classical conformal automorphism bound in genus >= 2."""
    if not isinstance(gamma, int) or gamma < 2:
        raise GenusTooSmallError(f"Hurwitz bound needs genus >= 2, got {gamma!r}")
    return 84 * (gamma - 1)


@dataclass(frozen=True)
class AutOrderCertificate:
    base_aut: int
    g: int
    k: int
    order: int
    power_form: int
    genus_ratio_form: int
    forms_agree: bool

    def to_dict(self) -> dict:
        return {
            "base_aut": self.base_aut,
            "g": self.g,
            "k": self.k,
            "order": self.order,
            "power_form": self.power_form,
            "genus_ratio_form": self.genus_ratio_form,
            "forms_agree": self.forms_agree,
        }


def aut_order(base_aut: int, g: int, k: int) -> AutOrderCertificate:
    """Order base_aut * k^{2g} of the deck-preserving automorphism group of
    the homology cover, computed two ways (power form and genus-ratio form)
    and asserted equal."""
    _validate_g(g)
    _validate_k(k)
    if not isinstance(base_aut, int) or base_aut < 1:
        raise InputError(f"base automorphism count must be a positive integer, got {base_aut!r}")
    power_form = base_aut * k ** (2 * g)
    gamma = cover_genus(g, k)
    if (gamma - 1) % (g - 1):
        raise CertificationError("genus ratio is not integral")
    ratio_form = base_aut * ((gamma - 1) // (g - 1))
    if power_form != ratio_form:
        raise CertificationError("the two closed forms disagree")
    return AutOrderCertificate(base_aut, g, k, power_form, power_form, ratio_form, True)


@dataclass(frozen=True)
class SylowUniquenessCertificate:
    g: int
    p: int
    r: int
    bound: int
    hypothesis_ok: bool
    candidate_counts: tuple[int, ...]
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "p": self.p,
            "r": self.r,
            "bound": self.bound,
            "hypothesis_ok": self.hypothesis_ok,
            "candidate_counts": list(self.candidate_counts),
            "conclusion": self.conclusion,
        }


def sylow_uniqueness_certificate(g: int, p: int, r: int = 1) -> SylowUniquenessCertificate:
    """Certifies normality of the Sylow p-subgroup of any automorphism group
    of a genus-g surface when p > 84(g-1).

    The Sylow count is congruent to 1 mod p and divides the group order, so
    it is either 1 or lies in (1, 84(g-1)].  The certificate scans that whole
    interval (a conservative superset of the divisors of any candidate group
    order) and records every count that survives; "unique" requires both the
    hypothesis and an empty candidate list.
    """
    _validate_g(g)
    if not isinstance(r, int) or r < 1:
        raise InputError(f"exponent r must be a positive integer, got {r!r}")
    if not isinstance(p, int) or p < 2 or not is_prime(p):
        raise NotPrimeError(f"p must be prime, got {p!r}")
    bound = 84 * (g - 1)
    hypothesis_ok = p > bound
    candidates = tuple(n for n in range(2, bound + 1) if n % p == 1)
    if hypothesis_ok and candidates:
        raise CertificationError("hypothesis holds yet candidate counts survive")
    conclusion = "unique" if hypothesis_ok and not candidates else "not-certified"
    return SylowUniquenessCertificate(g, p, r, bound, hypothesis_ok, candidates, conclusion)


@dataclass(frozen=True)
class HyperellipticExclusionCertificate:
    g: int
    k: int
    rank: int
    cases: tuple[dict, ...]
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "k": self.k,
            "rank": self.rank,
            "cases": [dict(c) for c in self.cases],
            "conclusion": self.conclusion,
        }


def hyperelliptic_exclusion(g: int, k: int) -> HyperellipticExclusionCertificate:
    """Certifies the homology cover is not hyperelliptic.

    If it were, the deck group Z_k^{2g} would embed in the reduced Mobius
    automorphism picture, where a finite abelian group must be trivial,
    Klein, or cyclic; the full list of shapes that allows for the deck group
    is Z_2, Z_n, Z_{2n}, Z_2^2, Z_2^3.  Each needs minimal generating rank
    at most 3, while Z_k^{2g} needs rank 2g >= 4.
    """
    _validate_g(g)
    _validate_k(k)
    rank = 2 * g
    cases = []
    for shape, max_rank in (
        ("Z_2", 1),
        ("Z_n", 1),
        ("Z_2n", 2),
        ("Z_2^2", 2),
        ("Z_2^3", 3),
    ):
        excluded = rank > max_rank
        cases.append(
            {
                "shape": shape,
                "max_rank": max_rank,
                "required_rank": rank,
                "excluded": excluded,
                "reason": f"{shape} is generated by {max_rank} element(s); "
                f"Z_{k}^{rank} needs {rank} independent generators",
            }
        )
    if not all(c["excluded"] for c in cases):
        raise CertificationError("an allowed quotient shape matches the deck group")
    return HyperellipticExclusionCertificate(g, k, rank, tuple(cases), "non-hyperelliptic")


def teichmuller_dimension(genus: int, cone_count: int) -> int:
    """Complex dimension 3*genus - 3 + cone_count of the relevant deformation
    space; signatures with a non-positive value (including triangular ones)
    are rejected as carrying no moduli."""
    if not isinstance(genus, int) or genus < 0:
        raise InputError(f"genus must be a nonnegative integer, got {genus!r}")
    if not isinstance(cone_count, int) or cone_count < 0:
        raise InputError(f"cone count must be a nonnegative integer, got {cone_count!r}")
    dim = 3 * genus - 3 + cone_count
    if dim <= 0:
        raise NotApplicableError(
            f"signature (genus {genus}, {cone_count} cone points) has no positive-dimensional moduli"
        )
    return dim
