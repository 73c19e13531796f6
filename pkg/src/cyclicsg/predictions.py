"""Closed-form predictions for cyclic subgroup graphs.

Each function returns :class:`Prediction` objects computed from family
parameters or from cheap group-level facts (element orders, nilpotency).
Nothing here looks at the graph itself; the audit compares these values
against the brute-force graph.

Three quantities carry two candidate closed forms.  They are returned with
applicability ``INCONSISTENT``, holding the nominal value and the value that
the underlying counting supports; see :data:`DISCREPANCIES`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .group_core import (
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    Factorization,
    GeneralizedQuaternion,
    Group,
    MinimalNonCyclic,
    Subgroup,
    factorize,
    find_conjugation_exponent,
    is_nilpotent,
    is_p_group,
    is_prime,
    is_prime_power,
    is_square_free,
    max_element_exponents,
    order_profile,
)

APPLIES = "applies"
NOT_APPLICABLE = "not-applicable"
INCONSISTENT = "paper-inconsistent"


@dataclass(frozen=True)
class Discrepancy:
    key: str
    quantity: str
    statement: str
    evidence: str
    support: str


DISCREPANCIES: tuple[Discrepancy, ...] = (
    Discrepancy(
        "quaternion-center-degree",
        "degree of Z_2 in Q_2^n (and hence the maximum degree)",
        "2^(n-2)+1",
        "2^(n-2)+2",
        "Z_2 is adjacent to {e} and to each of the 2^(n-2)+1 cyclic subgroups of order 4",
    ),
    Discrepancy(
        "minimal-noncyclic-edges",
        "edge count of Z_q x| Z_p^r",
        "3r+q+2",
        "3r+q-2",
        "the degree multiset {1 x q, 2 x 3, 3 x (2r-4), q+2} sums to 2(3r+q-2)",
    ),
    Discrepancy(
        "minimal-noncyclic-diameter",
        "diameter of Z_q x| Z_p^r",
        "r+2",
        "r+1",
        "Z_p^r and Z_q are at distance r+1 and no pair of vertices is farther apart",
    ),
)


def known_discrepancies() -> tuple[Discrepancy, ...]:
    return DISCREPANCIES


@dataclass(frozen=True)
class Prediction:
    """A predicted value.

    ``kind`` fixes how a computed value is compared: ``exact`` (equality),
    ``interval`` (``lo <= computed <= hi``), ``covers`` (every integer of
    ``[lo, hi]`` occurs in the computed collection) or ``superset`` (the
    computed collection contains every listed value).
    """

    quantity: str
    value: Any = None
    applicability: str = APPLIES
    evidence: Any = None
    discrepancy: str | None = None
    kind: str = "exact"
    note: str = ""

    @property
    def applies(self) -> bool:
        return self.applicability != NOT_APPLICABLE

    def agrees(self, computed, evidence: bool = False) -> bool:
        expected = self.evidence if evidence else self.value
        if self.kind == "exact":
            return computed == expected
        if self.kind == "interval":
            lo, hi = expected
            return isinstance(computed, int) and lo <= computed <= hi
        if self.kind == "covers":
            lo, hi = expected
            return set(range(lo, hi + 1)) <= set(computed)
        if self.kind == "superset":
            return set(expected) <= set(computed)
        raise ValueError(f"unknown prediction kind {self.kind!r}")


def _applies(quantity, value, kind="exact", note=""):
    return Prediction(quantity, value, APPLIES, kind=kind, note=note)


def _na(quantity, note=""):
    return Prediction(quantity, None, NOT_APPLICABLE, note=note)


def _inconsistent(quantity, statement, evidence, key):
    return Prediction(quantity, statement, INCONSISTENT, evidence=evidence, discrepancy=key)


# ---------------------------------------------------------------------------
# subgroup profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupProfile:
    """Exponents b_i of |H| against a reference factorization."""

    exponents: tuple[int, ...]
    reference: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(1 for b in self.exponents if b == 0)

    @property
    def r(self) -> int:
        return sum(1 for b, a in zip(self.exponents, self.reference) if b == a)


def subgroup_profile(reference: Factorization, order: int) -> SubgroupProfile:
    f = factorize(order)
    if any(p not in reference.primes for p in f.primes):
        raise ValueError(f"{order} has primes outside {reference.value}")
    return SubgroupProfile(
        tuple(f.exponent_of(p) for p in reference.primes), reference.exponents
    )


def _tau(f: Factorization) -> int:
    out = 1
    for a in f.exponents:
        out *= a + 1
    return out


def _cyclic_edge_formula(f: Factorization) -> int:
    value = sum((Fraction(a, a + 1) for a in f.exponents), Fraction(0)) * _tau(f)
    assert value.denominator == 1
    return int(value)


def _power_of_two_exponent(n: int) -> int | None:
    if n >= 1 and n & (n - 1) == 0:
        return n.bit_length() - 1
    return None


def _zpa_zq_zq(family) -> tuple[int, int, int] | None:
    """(p, a, q) when the family is Z_p^a x Z_q x Z_q with p != q, a >= 1."""
    if not isinstance(family, DirectProduct) or len(family.parts) != 3:
        return None
    first, second, third = family.parts
    if not all(isinstance(x, Cyclic) for x in family.parts):
        return None
    if second.n != third.n or not is_prime(second.n):
        return None
    f = factorize(first.n)
    if len(f) != 1 or f.primes[0] == second.n:
        return None
    (p, a), = f.factors
    return p, a, second.n


def _minnc_ok(family) -> bool:
    return isinstance(family, MinimalNonCyclic) and family.r >= 2


# ---------------------------------------------------------------------------
# counts
# ---------------------------------------------------------------------------


def predict_vertex_count(family) -> Prediction:
    q = "vertex_count"
    if isinstance(family, Cyclic):
        return _applies(q, _tau(factorize(family.n)))
    if isinstance(family, Dihedral):
        return _applies(q, _tau(factorize(family.n)) + family.n)
    if isinstance(family, GeneralizedQuaternion):
        return _applies(q, 2 ** (family.n - 2) + family.n)
    if isinstance(family, Dicyclic):
        return _applies(q, _tau(factorize(2 * family.n)) + family.n)
    if (t := _zpa_zq_zq(family)) is not None:
        _, a, qq = t
        return _applies(q, (a + 1) * (qq + 2))
    if _minnc_ok(family):
        return _applies(q, 2 * family.r + family.q)
    return _na(q)


def predict_edge_count(family) -> Prediction:
    q = "edge_count"
    if isinstance(family, Cyclic):
        return _applies(q, _cyclic_edge_formula(factorize(family.n)))
    if isinstance(family, Dihedral):
        return _applies(q, _cyclic_edge_formula(factorize(family.n)) + family.n)
    if isinstance(family, GeneralizedQuaternion):
        return _applies(q, 2 ** (family.n - 2) + family.n - 1)
    if isinstance(family, Dicyclic):
        return _applies(q, _cyclic_edge_formula(factorize(2 * family.n)) + family.n)
    if (t := _zpa_zq_zq(family)) is not None:
        _, a, qq = t
        return _applies(q, (a - 1) * (2 * qq + 3) + (3 * qq + 4))
    if _minnc_ok(family):
        r, qq = family.r, family.q
        return _inconsistent(q, 3 * r + qq + 2, 3 * r + qq - 2, "minimal-noncyclic-edges")
    return _na(q)


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------


def _quaternion_rank(family) -> int | None:
    """n for Q_2^n, also for dicyclic groups Dic_2^m = Q_2^(m+2)."""
    if isinstance(family, GeneralizedQuaternion):
        return family.n
    if isinstance(family, Dicyclic):
        m = _power_of_two_exponent(family.n)
        if m is not None:
            return m + 2
    return None


def _within_first(H: Subgroup, size: int) -> bool:
    # builders put the distinguished cyclic subgroup on ids [0, size)
    return H.elements[-1] < size


def predict_degree(family, H: Subgroup) -> Prediction:
    """Predicted degree of the vertex ``H`` of a family group built by this package."""
    q = "degree"
    if isinstance(family, Cyclic):
        f = factorize(family.n)
        prof = subgroup_profile(f, H.order)
        return _applies(q, 2 * f.omega - prof.m - prof.r)

    if isinstance(family, Dihedral):
        n = family.n
        f = factorize(n)
        if not _within_first(H, n):
            return _applies(q, 1, note="reflection")
        if H.order == 1:
            return _applies(q, f.omega + n)
        prof = subgroup_profile(f, H.order)
        return _applies(q, 2 * f.omega - prof.m - prof.r)

    if (rank := _quaternion_rank(family)) is not None:
        big = 2 ** (rank - 1)
        if H.order == 2:
            return _inconsistent(q, 2 ** (rank - 2) + 1, 2 ** (rank - 2) + 2, "quaternion-center-degree")
        if 2 < H.order < big and _within_first(H, big):
            return _applies(q, 2)
        return _applies(q, 1)

    if isinstance(family, Dicyclic):
        n = family.n
        k = factorize(n).omega
        if not _within_first(H, 2 * n):
            return _applies(q, 1)
        if H.order == 2:
            return _applies(q, k + n + 1)
        # H inside the cyclic subgroup of order 2n; exponents measured against 2n
        prof = subgroup_profile(factorize(2 * n), H.order)
        if n % 2 == 0:
            return _applies(q, 2 * k - prof.m - prof.r)
        return _applies(q, 2 * (k + 1) - prof.m - prof.r)

    if _minnc_ok(family):
        p, r, qq = family.p, family.r, family.q
        if H.order == p**r:
            return _applies(q, 1)
        if H.order == p ** (r - 1):
            return _applies(q, qq + 2)
        if H.order in (1, qq, p ** (r - 1) * qq):
            return _applies(q, 2)
        return _applies(q, 3)

    return _na(q)


def predicted_degrees(G: Group) -> list[Prediction]:
    """Per-vertex predictions in vertex order."""
    return [predict_degree(G.family, H) for H in G.cyclic_subgroups]


def predict_min_max_degree(family) -> tuple[Prediction, Prediction]:
    lo, hi = "min_degree", "max_degree"
    if isinstance(family, Cyclic):
        f = factorize(family.n)
        ell = sum(1 for a in f.exponents if a == 1)
        return _applies(lo, f.omega), _applies(hi, 2 * f.omega - ell)
    if isinstance(family, Dihedral):
        return _applies(lo, 1), _applies(hi, factorize(family.n).omega + family.n)
    if (rank := _quaternion_rank(family)) is not None:
        return _applies(lo, 1), _inconsistent(
            hi, 2 ** (rank - 2) + 1, 2 ** (rank - 2) + 2, "quaternion-center-degree"
        )
    if isinstance(family, Dicyclic):
        return _applies(lo, 1), _applies(hi, factorize(family.n).omega + family.n + 1)
    return _na(lo), _na(hi)


def predict_degree_sequence_interval(family) -> Prediction:
    q = "degree_values_cover"
    if not isinstance(family, Cyclic):
        return _na(q)
    lo, hi = predict_min_max_degree(family)
    return _applies(q, (lo.value, hi.value), kind="covers")


# ---------------------------------------------------------------------------
# diameter
# ---------------------------------------------------------------------------


def predict_diameter(family) -> Prediction:
    q = "diameter"
    if isinstance(family, Cyclic):
        return _applies(q, factorize(family.n).big_omega)
    if isinstance(family, Dihedral):
        return _applies(q, factorize(family.n).big_omega + 1)
    if isinstance(family, GeneralizedQuaternion):
        return _applies(q, family.n - 1)
    if isinstance(family, Dicyclic):
        s = factorize(family.n).big_omega
        return _applies(q, s + 1 if family.n % 2 == 0 else s + 2)
    if _minnc_ok(family):
        return _inconsistent(q, family.r + 2, family.r + 1, "minimal-noncyclic-diameter")
    return _na(q)


def predict_diameter_bounds(G: Group) -> tuple[Prediction, Prediction]:
    general = "diameter_bounds"
    if G.order >= 2:
        upper = _applies(general, (1, G.factorization.big_omega), kind="interval")
    else:
        upper = _na(general, "trivial group")
    nil = "nilpotent_diameter_bounds"
    if is_nilpotent(G):
        b = sum(max_element_exponents(G).values())
        lower = _applies(nil, (b, 2 * b), kind="interval")
    else:
        lower = _na(nil, "not nilpotent")
    return upper, lower


# ---------------------------------------------------------------------------
# characterizations
# ---------------------------------------------------------------------------


def is_q8(G: Group) -> bool:
    return G.order == 8 and order_profile(G) == {1: 1, 2: 1, 4: 6}


def all_elements_prime_order(G: Group) -> bool:
    return G.order > 1 and all(is_prime(t) for t in G.element_orders[1:])


def classify_shape(G: Group) -> dict[str, Prediction]:
    n = G.order
    cyclic = G.is_cyclic
    f = G.factorization
    path = cyclic and is_prime_power(n)
    cycle = cyclic and len(f) == 2 and f.big_omega == 2
    star = (cyclic and len(f) == 1 and f.big_omega == 2) or is_q8(G) or all_elements_prime_order(G)
    return {
        "path_graph": _applies("path_graph", path),
        "cycle_graph": _applies("cycle_graph", cycle),
        "star_graph": _applies("star_graph", star),
        "complete_graph": _applies("complete_graph", n == 1 or is_prime(n)),
        "complete_by_size": _applies("complete_by_size", len(G.cyclic_subgroups) <= 2),
    }


def predict_regular(G: Group) -> Prediction:
    return _applies("regular", G.is_cyclic and is_square_free(G.order))


def predict_eulerian(G: Group) -> Prediction:
    q = "eulerian"
    if G.is_cyclic:
        return _applies(q, is_square_free(G.order) and G.factorization.omega % 2 == 0)
    fam = G.family
    if isinstance(fam, GeneralizedQuaternion):
        return _applies(q, False)
    if isinstance(fam, (Dihedral, Dicyclic)) and fam.n >= 3:
        return _applies(q, False)
    return _na(q)


def predict_tree_and_pendants(G: Group) -> tuple[Prediction, Prediction]:
    pgroup = is_p_group(G)
    nil = is_nilpotent(G)
    if pgroup:
        pendant = _na("has_pendant", "p-group")
    else:
        pendant = _applies("has_pendant", not nil)
    tree = _applies("tree", pgroup) if nil else _na("tree", "not nilpotent")
    return pendant, tree


def predict_minimal_noncyclic_profile(p: int, r: int, q: int) -> dict[str, Prediction]:
    find_conjugation_exponent(p, q)
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    names = (
        "degree_multiset", "pendant_count", "vertex_count", "edge_count",
        "diameter", "cycle_lengths_through_identity", "regular", "eulerian",
    )
    if r == 1:
        return {k: _na(k, "r = 1") for k in names}
    degrees = tuple(sorted([1] * q + [2] * 3 + [3] * (2 * r - 4) + [q + 2]))
    return {
        "degree_multiset": _applies("degree_multiset", degrees),
        "pendant_count": _applies("pendant_count", q),
        "vertex_count": _applies("vertex_count", 2 * r + q),
        "edge_count": _inconsistent("edge_count", 3 * r + q + 2, 3 * r + q - 2, "minimal-noncyclic-edges"),
        "diameter": _inconsistent("diameter", r + 2, r + 1, "minimal-noncyclic-diameter"),
        "cycle_lengths_through_identity": _applies(
            "cycle_lengths_through_identity", tuple(range(4, 2 * r + 1, 2)), kind="superset"
        ),
        "regular": _applies("regular", False),
        "eulerian": _applies("eulerian", False),
    }
