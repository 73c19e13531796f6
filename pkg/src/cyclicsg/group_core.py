"""Finite groups as identity-rooted multiplication tables.

Every group is stored as an ``order x order`` table of element ids where
``table[g, h]`` is the id of ``g*h`` and id 0 is the identity.  Builders fix
a deterministic element enumeration per family so that subgroup lists, graph
vertex orders and exported files are reproducible:

* cyclic ``Z_n``: residue ``i``
* dihedral ``D_2n``: ``r^i`` -> ``i``, ``r^i s`` -> ``n + i``
* dicyclic ``Dic_n`` and generalized quaternion ``Q_2^n``: ``a^i`` -> ``i``,
  ``a^i b`` -> ``N + i`` where ``N`` is the order of ``a``
* minimal non-cyclic ``Z_q x| Z_p^r``: ``a^i b^j`` -> ``i * p^r + j``
* direct products: mixed radix, first factor most significant
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

ALL_SUBGROUPS_CAP = 200
MATRIX_CLOSURE_CAP = 5000


class GroupError(ValueError):
    """Invalid parameters for a group builder."""


class CapExceeded(GroupError):
    """A desk-scale size cap was hit."""


class GroupTableError(ValueError):
    """A raw multiplication table does not describe a group."""


class ClosureError(GroupTableError):
    pass


class IdentityError(GroupTableError):
    pass


class InverseError(GroupTableError):
    pass


class AssociativityError(GroupTableError):
    pass


# ---------------------------------------------------------------------------
# integers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition, primes strictly increasing."""

    factors: tuple[tuple[int, int], ...] = ()

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.factors)

    @property
    def value(self) -> int:
        return math.prod(p**a for p, a in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct primes."""
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(a for _, a in self.factors)

    def exponent_of(self, p: int) -> int:
        for q, a in self.factors:
            if q == p:
                return a
        return 0

    def as_list(self) -> list[tuple[int, int]]:
        return list(self.factors)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return Factorization(tuple(out))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).factors == ((n, 1),)


def is_prime_power(n: int) -> bool:
    """True for p^a with a >= 0 (so also for 1)."""
    return n >= 1 and len(factorize(n)) <= 1


def is_square_free(n: int) -> bool:
    return all(a == 1 for _, a in factorize(n))


def big_omega(n: int) -> int:
    return factorize(n).big_omega


# ---------------------------------------------------------------------------
# family descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cyclic:
    n: int

    @property
    def label(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order 2n."""

    n: int

    @property
    def label(self) -> str:
        return f"D{2 * self.n}"


@dataclass(frozen=True)
class GeneralizedQuaternion:
    """Generalized quaternion group of order 2^n."""

    n: int

    @property
    def label(self) -> str:
        return f"Q{2 ** self.n}"


@dataclass(frozen=True)
class Dicyclic:
    """Dicyclic group of order 4n."""

    n: int

    @property
    def label(self) -> str:
        return f"Dic{self.n}"


@dataclass(frozen=True)
class DirectProduct:
    parts: tuple

    @property
    def label(self) -> str:
        return "x".join(p.label for p in self.parts)


@dataclass(frozen=True)
class MinimalNonCyclic:
    """<a, b | a^q = b^(p^r) = 1, b^-1 a b = a^s>."""

    p: int
    r: int
    q: int
    s: int

    @property
    def label(self) -> str:
        return f"Z{self.q}:Z{self.p ** self.r}"


@dataclass(frozen=True)
class MatrixGroup:
    modulus: int
    generators: tuple
    name: str = ""

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        gens = ";".join(",".join(str(x) for row in g for x in row) for g in self.generators)
        return f"Mat{self.modulus}[{gens}]"


@dataclass(frozen=True)
class Opaque:
    name: str = "G"

    @property
    def label(self) -> str:
        return self.name


FamilyDescriptor = Union[
    Cyclic, Dihedral, GeneralizedQuaternion, Dicyclic, DirectProduct,
    MinimalNonCyclic, MatrixGroup, Opaque,
]


# ---------------------------------------------------------------------------
# groups and subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    elements: tuple[int, ...]
    generator: int | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def mask(self) -> int:
        m = 0
        for e in self.elements:
            m |= 1 << e
        return m

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def issubset(self, other: Subgroup) -> bool:
        return self.mask & ~other.mask == 0

    def sort_key(self):
        return (self.order, self.elements)


def _mask_to_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Group:
    """Immutable finite group.  Build it with one of the ``make_*`` functions."""

    table: np.ndarray
    family: FamilyDescriptor = field(default_factory=Opaque)

    def __post_init__(self):
        self.table.setflags(write=False)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def label(self) -> str:
        return self.family.label

    @cached_property
    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    def mul(self, g: int, h: int) -> int:
        return self.rows[g][h]

    @cached_property
    def _power_data(self) -> tuple[tuple[int, ...], dict[int, tuple[int, ...]]]:
        # Powers of one element per cyclic subgroup; orders of every power
        # follow from t / gcd(t, k).
        rows = self.rows
        n = self.order
        orders = [0] * n
        cycles: dict[int, tuple[int, ...]] = {}
        for g in range(n):
            if orders[g]:
                continue
            seq = [0]
            x = g
            while x != 0:
                seq.append(x)
                x = rows[x][g]
            t = len(seq)
            cycles[g] = tuple(seq)
            for k, y in enumerate(seq):
                if not orders[y]:
                    orders[y] = t // math.gcd(t, k)
        return tuple(orders), cycles

    @property
    def element_orders(self) -> tuple[int, ...]:
        return self._power_data[0]

    def powers(self, g: int) -> tuple[int, ...]:
        """``(g^0, g^1, ..., g^(t-1))``."""
        cycles = self._power_data[1]
        if g in cycles:
            return cycles[g]
        seq = [0]
        x = g
        while x != 0:
            seq.append(x)
            x = self.rows[x][g]
        return tuple(seq)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(int(np.flatnonzero(self.table[g] == 0)[0]) for g in range(self.order))

    @cached_property
    def factorization(self) -> Factorization:
        return factorize(self.order)

    @property
    def is_cyclic(self) -> bool:
        return self.order in self.element_orders

    @cached_property
    def cyclic_subgroups(self) -> tuple[Subgroup, ...]:
        return _cyclic_subgroups(self)


def element_order(G: Group, g: int) -> int:
    return G.element_orders[g]


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def _check_int(name: str, value, minimum: int) -> int:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < minimum:
        raise GroupError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def make_cyclic(n: int) -> Group:
    n = _check_int("n", n, 1)
    i = np.arange(n)
    return Group((i[:, None] + i[None, :]) % n, Cyclic(n))


def make_dihedral(n: int) -> Group:
    """D_2n = <r, s | r^n = s^2 = e, srs = r^-1>, order 2n."""
    n = _check_int("n", n, 1)
    g = np.arange(2 * n)
    i, j = g % n, g // n  # element = r^i s^j
    i1, j1 = i[:, None], j[:, None]
    i2, j2 = i[None, :], j[None, :]
    # r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1 + j2)
    ri = (i1 + np.where(j1 == 1, -i2, i2)) % n
    sj = (j1 + j2) % 2
    return Group(ri + n * sj, Dihedral(n))


def _dicyclic_table(n: int) -> np.ndarray:
    # <a, b | a^2n = 1, b^2 = a^n, b^-1 a b = a^-1>, so b a^i = a^-i b
    m = 2 * n
    g = np.arange(2 * m)
    i, j = g % m, g // m
    i1, j1 = i[:, None], j[:, None]
    i2, j2 = i[None, :], j[None, :]
    exp = i1 + np.where(j1 == 1, -i2, i2) + np.where((j1 == 1) & (j2 == 1), n, 0)
    return exp % m + m * ((j1 + j2) % 2)


def make_dicyclic(n: int) -> Group:
    n = _check_int("n", n, 2)
    return Group(_dicyclic_table(n), Dicyclic(n))


def make_generalized_quaternion(n: int) -> Group:
    """Q_2^n = <x, y | x^(2^(n-1)) = 1, y^2 = x^(2^(n-2)), y^-1 x y = x^-1>."""
    n = _check_int("n", n, 3)
    half = 2 ** (n - 1)
    g = np.arange(2 * half)
    i, j = g % half, g // half  # element = x^i y^j
    table = np.empty((2 * half, 2 * half), dtype=np.int64)
    for a in range(2 * half):
        # x^i y^j * x^k y^l: moving y^j past x^k inverts it; y*y = x^(half/2)
        k, l = i, j
        e = i[a] + (k if j[a] == 0 else -k) + np.where((j[a] == 1) & (l == 1), half // 2, 0)
        table[a] = e % half + half * ((j[a] + l) % 2)
    return Group(table, GeneralizedQuaternion(n))


def make_direct_product(parts: Sequence[Group]) -> Group:
    parts = list(parts)
    if not parts:
        raise GroupError("direct product needs at least one factor")
    table = parts[0].table.astype(np.int64)
    for H in parts[1:]:
        m = H.order
        # (g, h) -> g * m + h
        table = (table[:, None, :, None] * m + H.table[None, :, None, :]).reshape(
            table.shape[0] * m, table.shape[0] * m
        )
    return Group(np.ascontiguousarray(table), DirectProduct(tuple(P.family for P in parts)))


def find_conjugation_exponent(p: int, q: int) -> int:
    """Smallest s >= 2 with s^p = 1 (mod q) and s != 1 (mod q)."""
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise GroupError(f"p and q must be distinct primes, got p={p}, q={q}")
    if (q - 1) % p:
        raise GroupError(f"no valid s exists: {p} does not divide {q} - 1")
    for s in range(2, q):
        if pow(s, p, q) == 1:
            return s
    raise AssertionError("unreachable: Cauchy guarantees an element of order p mod q")


def make_minimal_noncyclic(p: int, r: int, q: int) -> Group:
    """Z_q x| Z_(p^r) with b^-1 a b = a^s, s the smallest valid exponent."""
    r = _check_int("r", r, 1)
    s = find_conjugation_exponent(p, q)
    pr = p**r
    t = pow(s, -1, q)  # b a b^-1 = a^t
    g = np.arange(q * pr)
    i, j = g // pr, g % pr
    i1, j1 = i[:, None], j[:, None]
    i2, j2 = i[None, :], j[None, :]
    tpow = np.array([pow(t, int(x), q) for x in range(pr)])
    # a^i1 b^j1 a^i2 b^j2 = a^(i1 + i2 t^j1) b^(j1 + j2)
    ai = (i1 + i2 * tpow[j1]) % q
    bj = (j1 + j2) % pr
    return Group(ai * pr + bj, MinimalNonCyclic(p, r, q, s))


def check_group_table(raw) -> np.ndarray:
    """Validate a raw table; return it as an int array or raise GroupTableError."""
    try:
        t = np.asarray(raw, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ClosureError(f"table is not an integer array: {exc}") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
        raise ClosureError(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise ClosureError(f"entries must lie in [0, {n})")
    ids = np.arange(n)
    if not (np.array_equal(t[0], ids) and np.array_equal(t[:, 0], ids)):
        raise IdentityError("element 0 is not a two-sided identity")
    for g in range(n):
        right = np.flatnonzero(t[g] == 0)
        if right.size == 0 or t[right[0], g] != 0:
            raise InverseError(f"element {g} has no two-sided inverse")
    if any(np.unique(t[g]).size != n for g in range(n)) or any(
        np.unique(t[:, g]).size != n for g in range(n)
    ):
        raise ClosureError("table is not a Latin square")
    chunk = max(1, 2_000_000 // (n * n))
    for start in range(0, n, chunk):
        a = np.arange(start, min(n, start + chunk))
        left = t[t[a]]  # (ab)c
        right = t[a[:, None, None], t[None, :, :]]  # a(bc)
        bad = np.argwhere(left != right)
        if bad.size:
            x, y, z = bad[0]
            raise AssociativityError(f"({a[x]}*{y})*{z} != {a[x]}*({y}*{z})")
    return t


def from_cayley_table(raw, family: FamilyDescriptor | None = None) -> Group:
    return Group(check_group_table(raw), family or Opaque())


def read_cayley_file(path) -> Group:
    """Plain-text table: first line n, then n rows of n ids."""
    from pathlib import Path

    path = Path(path)
    lines = [ln.split() for ln in path.read_text().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 1:
        raise ClosureError(f"{path}: first line must hold the order")
    n = int(lines[0][0])
    rows = [[int(x) for x in ln] for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ClosureError(f"{path}: expected {n} rows of {n} entries")
    return from_cayley_table(rows, Opaque(path.stem))


def write_cayley_file(G: Group, path) -> None:
    from pathlib import Path

    lines = [str(G.order)] + [" ".join(map(str, row)) for row in G.rows]
    Path(path).write_text("\n".join(lines) + "\n")


def _normalize_matrix(m, modulus: int) -> tuple[tuple[int, int], tuple[int, int]]:
    arr = np.asarray(m, dtype=np.int64) % modulus
    if arr.shape != (2, 2):
        raise GroupError(f"generators must be 2x2 matrices, got shape {arr.shape}")
    return (int(arr[0, 0]), int(arr[0, 1])), (int(arr[1, 0]), int(arr[1, 1]))


def from_matrix_generators(
    modulus: int, gens: Iterable, cap: int = MATRIX_CLOSURE_CAP, name: str = ""
) -> Group:
    """Closure of 2x2 matrices under multiplication mod ``modulus``."""
    modulus = _check_int("modulus", modulus, 2)
    mats = [_normalize_matrix(g, modulus) for g in gens]
    for (a, b), (c, d) in mats:
        if math.gcd((a * d - b * c) % modulus, modulus) != 1:
            raise GroupError(f"generator {((a, b), (c, d))} is not invertible mod {modulus}")

    def mul(x, y):
        (a, b), (c, d) = x
        (e, f), (g, h) = y
        m = modulus
        return ((a * e + b * g) % m, (a * f + b * h) % m), ((c * e + d * g) % m, (c * f + d * h) % m)

    ident = ((1, 0), (0, 1))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in mats:
            y = mul(x, g)
            if y not in index:
                if len(elems) >= cap:
                    raise CapExceeded(f"matrix closure exceeds cap {cap}")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)

    # products via flat codes: code(M) = a m^3 + b m^2 + c m + d
    m = modulus
    arr = np.array([[a, b, c, d] for (a, b), (c, d) in elems], dtype=np.int64)
    A, B, C, D = (arr[:, k] for k in range(4))
    pa = (A[:, None] * A[None, :] + B[:, None] * C[None, :]) % m
    pb = (A[:, None] * B[None, :] + B[:, None] * D[None, :]) % m
    pc = (C[:, None] * A[None, :] + D[:, None] * C[None, :]) % m
    pd = (C[:, None] * B[None, :] + D[:, None] * D[None, :]) % m
    lookup = np.full(m**4, -1, dtype=np.int64)
    lookup[((A * m + B) * m + C) * m + D] = np.arange(len(elems))
    table = lookup[((pa * m + pb) * m + pc) * m + pd]
    if (table < 0).any():
        raise AssertionError("matrix closure is not closed")
    family = MatrixGroup(modulus, tuple(mats), name)
    return Group(table, family)


def subgroup_as_group(G: Group, H: Subgroup) -> tuple[Group, tuple[int, ...]]:
    """Relabel ``H`` as a standalone group.  Returns the group and the map
    from its ids back to ids of ``G``."""
    back = H.elements  # sorted, so identity stays at 0
    fwd = np.full(G.order, -1, dtype=np.int64)
    fwd[list(back)] = np.arange(len(back))
    idx = np.asarray(back, dtype=np.int64)
    table = fwd[G.table[np.ix_(idx, idx)]]
    return Group(table, Opaque(f"{G.label}>H{H.order}")), back


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


def _cyclic_subgroups(G: Group) -> tuple[Subgroup, ...]:
    seen: set[tuple[int, ...]] = set()
    covered = [False] * G.order
    out = []
    for g in range(G.order):
        if covered[g]:
            continue
        seq = G.powers(g)
        t = len(seq)
        for k in range(1, t):
            if math.gcd(k, t) == 1:
                covered[seq[k]] = True
        elems = tuple(sorted(seq))
        if elems not in seen:
            seen.add(elems)
            out.append(Subgroup(elems, g))
    out.sort(key=Subgroup.sort_key)
    return tuple(out)


def cyclic_subgroups(G: Group) -> list[Subgroup]:
    """All cyclic subgroups, sorted by (order, element list).  The generator
    witness is the smallest element id generating the subgroup."""
    return list(G.cyclic_subgroups)


def _closure(rows: list[list[int]], start: Iterable[int], gens: Sequence[int]) -> int:
    members = 0
    frontier = []
    for x in start:
        if not members >> x & 1:
            members |= 1 << x
            frontier.append(x)
    while frontier:
        nxt = []
        for x in frontier:
            row = rows[x]
            for g in gens:
                y = row[g]
                if not members >> y & 1:
                    members |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return members


def generated_subgroup(G: Group, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    return Subgroup(_mask_to_elements(_closure(G.rows, [0, *gens], gens)))


def _join(rows: list[list[int]], hmask: int, elems: Sequence[int], gens: Sequence[int], g: int) -> int:
    """Bitmask of <H, g>, built as a union of right cosets of H.

    ``gens`` must generate H together with ``g``.  A product r*s that already
    lies in the set sits in a coset already added, so only fresh
    representatives are expanded.
    """
    members = hmask
    for h in elems:
        members |= 1 << rows[h][g]
    reps = [g]
    i = 0
    while i < len(reps):
        row = rows[reps[i]]
        for s in gens:
            x = row[s]
            if not members >> x & 1:
                reps.append(x)
                for h in elems:
                    members |= 1 << rows[h][x]
        i += 1
    return members


def all_subgroups(G: Group, cap: int = ALL_SUBGROUPS_CAP) -> list[Subgroup]:
    """Full subgroup lattice by closing the cyclic subgroups under joins.

    Every subgroup is the join of its cyclic subgroups of prime-power order,
    so joining each found subgroup with each of those reaches a fixed point
    that contains all of them.
    """
    if G.order > cap:
        raise CapExceeded(f"all_subgroups is limited to order <= {cap}, got {G.order}")
    rows = G.rows
    cyc = G.cyclic_subgroups
    joiners = [C for C in cyc if C.order > 1 and is_prime_power(C.order)]
    found: dict[int, tuple[int, ...]] = {}  # mask -> generating set
    queue = deque()
    for C in cyc:
        found[C.mask] = (C.generator,)
        queue.append(C.mask)
    while queue:
        hmask = queue.popleft()
        gens = found[hmask]
        elems = _mask_to_elements(hmask)
        for C in joiners:
            if hmask >> C.generator & 1:
                continue
            new_gens = gens + (C.generator,)
            jmask = _join(rows, hmask, elems, new_gens, C.generator)
            if jmask not in found:
                found[jmask] = new_gens
                queue.append(jmask)
    cyclic_gen = {C.mask: C.generator for C in cyc}
    subs = [Subgroup(_mask_to_elements(m), cyclic_gen.get(m)) for m in found]
    subs.sort(key=Subgroup.sort_key)
    return subs


def count_subgroups_of_order(G: Group, m: int, cap: int = ALL_SUBGROUPS_CAP) -> int:
    if m < 1:
        return 0
    if is_prime(m) or m == 1:
        return sum(1 for H in G.cyclic_subgroups if H.order == m)
    return sum(1 for H in all_subgroups(G, cap) if H.order == m)


def sylow_exponent(G: Group, p: int) -> int:
    return G.factorization.exponent_of(p)


def is_nilpotent(G: Group) -> bool:
    """Every Sylow subgroup normal.

    A Sylow p-subgroup is unique iff the p-elements number exactly p^a: each
    p-element lies in some Sylow subgroup, and two distinct Sylow subgroups
    already hold more than p^a p-elements between them.
    """
    orders = G.element_orders
    for p, a in G.factorization:
        count = sum(1 for t in orders if t == 1 or factorize(t).primes == (p,))
        if count != p**a:
            return False
    return True


def is_p_group(G: Group) -> bool:
    return is_prime_power(G.order)


def verify_group(G: Group) -> None:
    """Re-run the table checks on a constructed group (raises on failure)."""
    check_group_table(G.table)
    for t in G.element_orders:
        if G.order % t:
            raise GroupTableError(f"element order {t} does not divide {G.order}")


def frobenius_counts(G: Group) -> dict[int, int]:
    """Number of subgroups of order p for each prime p dividing |G|."""
    return {p: count_subgroups_of_order(G, p) for p in G.factorization.primes}


def max_element_exponents(G: Group) -> dict[int, int]:
    """For each prime p | |G|, the largest e with an element of order divisible by p^e."""
    out = {p: 0 for p in G.factorization.primes}
    for t in set(G.element_orders):
        for p, e in factorize(t):
            out[p] = max(out[p], e)
    return out


def order_profile(G: Group) -> dict[int, int]:
    """Multiset of element orders as {order: count}."""
    prof: dict[int, int] = {}
    for t in G.element_orders:
        prof[t] = prof.get(t, 0) + 1
    return dict(sorted(prof.items()))


NAMED_MATRIX_GROUPS: dict[str, tuple[int, list]] = {
    "sl2f3": (3, [[[1, 1], [0, 1]], [[0, -1], [1, 0]]]),
    "gl2f3": (3, [[[2, 0], [0, 1]], [[1, 1], [0, 1]], [[0, 2], [1, 0]]]),
    "sl2f5": (5, [[[1, 1], [0, 1]], [[0, -1], [1, 0]]]),
    # affine maps x -> ax + b over F_5, the Frobenius group of order 20
    "f20": (5, [[[2, 0], [0, 1]], [[1, 1], [0, 1]]]),
}

_MATRIX_LABELS = {"sl2f3": "SL2(F3)", "gl2f3": "GL2(F3)", "sl2f5": "SL2(F5)", "f20": "F20"}


def make_named_matrix_group(name: str) -> Group:
    try:
        modulus, gens = NAMED_MATRIX_GROUPS[name]
    except KeyError:
        raise GroupError(f"unknown matrix group {name!r}; known: {sorted(NAMED_MATRIX_GROUPS)}") from None
    return from_matrix_generators(modulus, gens, name=_MATRIX_LABELS[name])
