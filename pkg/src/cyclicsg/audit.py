"""Corpus sweeps: build each group, compute its cyclic subgroup graph and
compare every applicable prediction with the brute-force answer."""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

from .gamma_graph import (
    build_gamma,
    es_parity_ok,
    generic_edges,
    induced_edges,
)
from .graph_invariants import INF, cycle_lengths_through, summarize
from .group_core import (
    ALL_SUBGROUPS_CAP,
    CapExceeded,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GeneralizedQuaternion,
    Group,
    GroupError,
    GroupTableError,
    MinimalNonCyclic,
    all_subgroups,
    factorize,
    find_conjugation_exponent,
    frobenius_counts,
    is_prime,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_generalized_quaternion,
    make_minimal_noncyclic,
    make_named_matrix_group,
    read_cayley_file,
    subgroup_as_group,
)
from .predictions import (
    APPLIES,
    INCONSISTENT,
    NOT_APPLICABLE,
    Prediction,
    _quaternion_rank,
    _zpa_zq_zq,
    classify_shape,
    known_discrepancies,
    predict_degree,
    predict_degree_sequence_interval,
    predict_diameter,
    predict_diameter_bounds,
    predict_edge_count,
    predict_eulerian,
    predict_min_max_degree,
    predict_minimal_noncyclic_profile,
    predict_regular,
    predict_tree_and_pendants,
    predict_vertex_count,
)

MATCH = "match"
DOCUMENTED = "documented-discrepancy-confirmed"
MISMATCH = "MISMATCH"
NA = "not-applicable"

DEFAULT_CAP = 1024


class CorpusError(ValueError):
    """Unreadable or malformed corpus specification."""


# ---------------------------------------------------------------------------
# corpus description
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"^(Dic|Z|D|Q)(\d+)$")


def _product_part(token: str) -> Group:
    m = _TOKEN.match(token)
    if not m:
        raise CorpusError(f"bad product factor {token!r}; use Z<n>, D<2n>, Q<2^n> or Dic<n>")
    kind, value = m.group(1), int(m.group(2))
    try:
        if kind == "Z":
            return make_cyclic(value)
        if kind == "D":
            if value % 2:
                raise CorpusError(f"{token}: dihedral order must be even")
            return make_dihedral(value // 2)
        if kind == "Q":
            if value < 8 or value & (value - 1):
                raise CorpusError(f"{token}: quaternion order must be a power of 2, at least 8")
            return make_generalized_quaternion(value.bit_length() - 1)
        return make_dicyclic(value)
    except GroupError as exc:
        raise CorpusError(f"{token}: {exc}") from None


@dataclass(frozen=True)
class Case:
    """One group of a corpus: a builder name plus parameters."""

    kind: str
    params: tuple
    figure: tuple[int, int] | None = None

    @property
    def descriptor(self) -> str:
        if self.kind == "minnc":
            p, r, q = self.params
            return f"minnc p={p} r={r} q={q}"
        return " ".join([self.kind, *map(str, self.params)])

    def expected_order(self) -> int | None:
        k, a = self.kind, self.params
        if k == "cyclic":
            return a[0]
        if k == "dihedral":
            return 2 * a[0]
        if k == "genq":
            return 2 ** a[0]
        if k == "dicyclic":
            return 4 * a[0]
        if k == "minnc":
            p, r, q = a
            return p**r * q
        return None

    def build(self, base_dir: Path | None = None) -> Group:
        k, a = self.kind, self.params
        if k == "cyclic":
            return make_cyclic(a[0])
        if k == "dihedral":
            return make_dihedral(a[0])
        if k == "genq":
            return make_generalized_quaternion(a[0])
        if k == "dicyclic":
            return make_dicyclic(a[0])
        if k == "minnc":
            return make_minimal_noncyclic(*a)
        if k == "product":
            return make_direct_product([_product_part(t) for t in a[0].split("x")])
        if k == "matrix":
            return make_named_matrix_group(a[0])
        if k == "cayley":
            return _read_cayley(a[0], base_dir)
        raise CorpusError(f"unknown group kind {k!r}")


def _read_cayley(ref: str, base_dir: Path | None) -> Group:
    if ref.startswith("data:"):
        res = resources.files("cyclicsg") / "data" / ref[5:]
        with resources.as_file(res) as path:
            return _load_table(path)
    path = Path(ref)
    if not path.is_absolute() and base_dir is not None:
        path = base_dir / path
    return _load_table(path)


def _load_table(path: Path) -> Group:
    try:
        return read_cayley_file(path)
    except OSError as exc:
        raise CorpusError(f"cannot read Cayley table {path}: {exc.strerror or exc}") from None
    except GroupTableError as exc:
        raise CorpusError(f"{path}: {exc}") from None


@dataclass(frozen=True)
class CorpusSpec:
    cases: tuple[Case, ...] = ()
    cap: int = DEFAULT_CAP
    lattice_cap: int = ALL_SUBGROUPS_CAP
    require_coverage: bool = False
    name: str = "custom"
    base_dir: Path | None = None


def _parse_values(text: str) -> list[int]:
    out: list[int] = []
    for chunk in text.split(","):
        if ".." in chunk:
            lo, hi = chunk.split("..", 1)
            try:
                lo_i, hi_i = int(lo), int(hi)
            except ValueError:
                raise CorpusError(f"bad range {chunk!r}") from None
            out.extend(range(lo_i, hi_i + 1))
        else:
            try:
                out.append(int(chunk))
            except ValueError:
                raise CorpusError(f"bad integer {chunk!r}") from None
    return out


def minimal_noncyclic_triples(max_order: int) -> list[tuple[int, int, int]]:
    """All (p, r, q) with p | q - 1 and p^r q <= max_order, sorted by (p, q, r)."""
    out = []
    for q in range(3, max_order // 2 + 1):
        if not is_prime(q):
            continue
        for p in factorize(q - 1).primes:
            r = 1
            while p**r * q <= max_order:
                out.append((p, r, q))
                r += 1
    return sorted(out)


def _parse_line(line: str) -> list[Case]:
    words = line.split()
    figure = None
    if words and words[-1].startswith("figure="):
        try:
            v, e = words.pop()[7:].split("/")
            figure = (int(v), int(e))
        except ValueError:
            raise CorpusError(f"bad figure annotation in {line!r}; use figure=V/E") from None
    if not words:
        raise CorpusError(f"empty line body: {line!r}")
    kind, args = words[0], words[1:]
    if kind in ("cyclic", "dihedral", "genq", "dicyclic"):
        if len(args) != 1:
            raise CorpusError(f"{kind} takes one value or range: {line!r}")
        cases = [Case(kind, (n,), figure) for n in _parse_values(args[0])]
    elif kind == "minnc":
        if len(args) == 1 and args[0].startswith("order<="):
            triples = minimal_noncyclic_triples(int(args[0][7:]))
        else:
            kv = {}
            for a in args:
                if "=" not in a:
                    raise CorpusError(f"minnc expects p=.. r=.. q=..: {line!r}")
                key, val = a.split("=", 1)
                kv[key] = _parse_values(val)
            if set(kv) != {"p", "r", "q"}:
                raise CorpusError(f"minnc expects exactly p, r, q: {line!r}")
            triples = []
            for p in kv["p"]:
                for q in kv["q"]:
                    try:
                        find_conjugation_exponent(p, q)
                    except GroupError:
                        continue
                    triples += [(p, r, q) for r in kv["r"] if r >= 1]
        if not triples:
            raise CorpusError(f"no valid minimal non-cyclic parameters in {line!r}")
        cases = [Case("minnc", t, figure) for t in triples]
    elif kind in ("product", "matrix", "cayley"):
        if len(args) != 1:
            raise CorpusError(f"{kind} takes one argument: {line!r}")
        cases = [Case(kind, (args[0],), figure)]
    else:
        raise CorpusError(f"unknown sweep kind {kind!r}")
    if figure is not None and len(cases) != 1:
        raise CorpusError(f"figure annotation needs a single group: {line!r}")
    return cases


def parse_corpus(text: str, **kwargs) -> CorpusSpec:
    cases: list[Case] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            cases.extend(_parse_line(line))
    return CorpusSpec(tuple(cases), **kwargs)


def load_corpus(path, **kwargs) -> CorpusSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus spec {path}: {exc.strerror or exc}") from None
    kwargs.setdefault("name", path.name)
    return parse_corpus(text, base_dir=path.parent, **kwargs)


PRESETS = {
    "paper-figures": """
        cyclic 16 figure=5/4
        cyclic 6 figure=4/4
        product Z2xZ2 figure=4/3
        dihedral 4 figure=7/6
        cyclic 12 figure=6/7
        product Z6xZ2 figure=8/10
        dicyclic 3 figure=7/7
        minnc p=2 r=3 q=3 figure=9/10
        matrix sl2f3 figure=11/14
        dihedral 6 figure=10/10
        genq 3 figure=5/4
    """,
    "default": """
        cyclic 1..300
        dihedral 1..100
        genq 3..7
        dicyclic 2..50
        minnc order<=600
        product Z2xZ3xZ3
        product Z4xZ3xZ3
        product Z8xZ3xZ3
        product Z2xZ5xZ5
        product Z4xZ5xZ5
        product Z3xZ2xZ2
        product Z9xZ2xZ2
        product Z2xZ2
        product Z6xZ2
        matrix sl2f3
        cayley data:klein4.tbl
        cayley data:z3xz3.tbl
        cayley data:z2xz2xz2.tbl
    """,
    # groups outside the families above; two of them contradict general
    # statements and are expected to produce MISMATCH entries
    "extended": """
        product D6xZ6
        product D6xZ3
        product Z3xQ8
        product Z2xQ8
        product Z4xZ4
        product Z2xZ2xZ2xZ2
        product D8xZ3
        product Dic3xZ2
        matrix f20
        matrix gl2f3
        matrix sl2f5
    """,
}


def preset(name: str, **kwargs) -> CorpusSpec:
    try:
        text = PRESETS[name]
    except KeyError:
        raise CorpusError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    kwargs.setdefault("require_coverage", name == "default")
    return parse_corpus(text, name=name, **kwargs)


# ---------------------------------------------------------------------------
# report types
# ---------------------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    return x


@dataclass(frozen=True)
class Check:
    name: str
    predicted: Any
    computed: Any
    status: str
    evidence: Any = None
    discrepancy: str | None = None
    row: str = "any"

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "predicted": _jsonable(self.predicted),
            "computed": _jsonable(self.computed),
            "status": self.status,
        }
        if self.discrepancy:
            d["evidence"] = _jsonable(self.evidence)
            d["discrepancy"] = self.discrepancy
        return d


@dataclass
class GroupReport:
    descriptor: str
    label: str
    order: int | None
    vertices: list[str] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "label": self.label,
            "order": self.order,
            "vertices": self.vertices,
            "edges": _jsonable(self.edges),
            "summary": self.summary,
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass
class AuditReport:
    corpus: str
    groups: list[GroupReport]
    coverage: dict[str, int]
    missing_coverage: list[str]

    def entries(self) -> Iterable[tuple[GroupReport, Check]]:
        for g in self.groups:
            for c in g.checks:
                yield g, c

    @property
    def totals(self) -> dict[str, int]:
        t = {"match": 0, "documented": 0, "mismatch": 0, "na": 0}
        key = {MATCH: "match", DOCUMENTED: "documented", MISMATCH: "mismatch", NA: "na"}
        for _, c in self.entries():
            t[key[c.status]] += 1
        return t

    @property
    def discrepancy_classes(self) -> list[str]:
        return sorted({c.discrepancy for _, c in self.entries() if c.status == DOCUMENTED})

    @property
    def mismatches(self) -> list[tuple[GroupReport, Check]]:
        return [(g, c) for g, c in self.entries() if c.status == MISMATCH]

    @property
    def passed(self) -> bool:
        return self.totals["mismatch"] == 0 and not self.missing_coverage

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "groups": [g.to_dict() for g in self.groups],
            "totals": self.totals,
            "discrepancy_classes": self.discrepancy_classes,
            "known_discrepancies": [d.key for d in known_discrepancies()],
            "coverage": dict(sorted(self.coverage.items())),
            "missing_coverage": self.missing_coverage,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["descriptor", "order", "check", "predicted", "evidence", "computed", "status", "discrepancy"])
        dump = lambda v: json.dumps(_jsonable(v), separators=(",", ":"))
        for g, c in self.entries():
            w.writerow([
                g.descriptor, g.order, c.name, dump(c.predicted),
                dump(c.evidence) if c.discrepancy else "", dump(c.computed),
                c.status, c.discrepancy or "",
            ])
        return buf.getvalue()

    def summary_text(self) -> str:
        t = self.totals
        lines = [
            f"audit {self.corpus}: {len(self.groups)} groups, {sum(t.values())} checks",
            f"  match {t['match']}  documented {t['documented']}  MISMATCH {t['mismatch']}  not-applicable {t['na']}",
            f"  documented discrepancy classes: {', '.join(self.discrepancy_classes) or 'none'}",
        ]
        if self.missing_coverage:
            lines.append(f"  never exercised: {', '.join(self.missing_coverage)}")
        for g, c in self.mismatches:
            lines.append(
                f"  MISMATCH {g.descriptor} [{g.label}] {c.name}: "
                f"predicted {json.dumps(_jsonable(c.predicted))}, computed {json.dumps(_jsonable(c.computed))}"
            )
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# per-group checks
# ---------------------------------------------------------------------------

FAMILY_ROWS = ("cyclic", "dihedral", "quaternion", "dicyclic")

REQUIRED_COVERAGE: tuple[str, ...] = (
    *(f"vertex_count:{r}" for r in (*FAMILY_ROWS, "zpa_zq_zq", "minnc")),
    *(f"edge_count:{r}" for r in (*FAMILY_ROWS, "zpa_zq_zq", "minnc")),
    *(f"vertex_degrees:{r}" for r in (*FAMILY_ROWS, "minnc")),
    "center_degree:quaternion",
    *(f"min_degree:{r}" for r in FAMILY_ROWS),
    *(f"max_degree:{r}" for r in FAMILY_ROWS),
    "degree_values_cover:cyclic",
    *(f"diameter:{r}" for r in (*FAMILY_ROWS, "minnc")),
    "diameter_bounds:any", "nilpotent_diameter_bounds:any",
    "bipartite:any", "connected:any", "girth_4_or_inf:any", "es_parity:any",
    "path_graph:any", "cycle_graph:any", "star_graph:any",
    "complete_graph:any", "complete_by_size:any", "regular:any",
    "eulerian:cyclic", "eulerian:pendant_family",
    "has_pendant:any", "tree:any", "frobenius:any",
    "dual_oracle:any", "lattice_oracle:any", "induced_subgraphs:any",
    *(f"minnc.{q}:minnc" for q in (
        "degree_multiset", "pendant_count", "cycle_lengths_through_identity",
        "regular", "eulerian", "subgroup_count",
    )),
)


def _row(family, quantity: str) -> str:
    if quantity in ("vertex_count", "edge_count") and _zpa_zq_zq(family) is not None:
        return "zpa_zq_zq"
    if isinstance(family, MinimalNonCyclic):
        return "minnc"
    if quantity in ("vertex_degrees", "center_degree", "min_degree", "max_degree") and _quaternion_rank(family):
        return "quaternion"
    return {
        Cyclic: "cyclic", Dihedral: "dihedral",
        GeneralizedQuaternion: "quaternion", Dicyclic: "dicyclic",
    }.get(type(family), "any")


def judge(pred: Prediction, computed) -> str:
    if pred.applicability == NOT_APPLICABLE:
        return NA
    if pred.agrees(computed):
        return MATCH
    if pred.applicability == INCONSISTENT and pred.agrees(computed, evidence=True):
        return DOCUMENTED
    return MISMATCH


def _from_prediction(name: str, pred: Prediction, computed, row: str = "any") -> Check:
    return Check(
        name, pred.value, computed, judge(pred, computed),
        evidence=pred.evidence, discrepancy=pred.discrepancy, row=row,
    )


def _invariant(name: str, predicted, computed, ok: bool, row: str = "any") -> Check:
    return Check(name, predicted, computed, MATCH if ok else MISMATCH, row=row)


def _induced_failures(G: Group, gamma, subgroups) -> int:
    bad = 0
    for H in subgroups:
        sub, back = subgroup_as_group(G, H)
        small = build_gamma(sub)
        keep, edges = induced_edges(gamma, H)
        # back is increasing, so relabeling keeps the canonical vertex order
        mapped = [tuple(back[x] for x in K.elements) for K in small.vertices]
        if [gamma.vertices[v].elements for v in keep] != mapped:
            bad += 1
            continue
        pos = {v: i for i, v in enumerate(keep)}
        if {(pos[u], pos[v]) for u, v in edges} != set(small.edges):
            bad += 1
    return bad


def audit_group(G: Group, descriptor: str, figure=None, lattice_cap: int = ALL_SUBGROUPS_CAP) -> GroupReport:
    fam = G.family
    gamma = build_gamma(G)
    s = summarize(gamma)
    rep = GroupReport(
        descriptor, G.label, G.order, list(gamma.labels), gamma.edge_list, s.to_dict()
    )
    checks = rep.checks

    if figure is not None:
        fv, fe = figure
        checks.append(_invariant("figure_vertex_count", fv, s.vertex_count, fv == s.vertex_count))
        checks.append(_invariant("figure_edge_count", fe, s.edge_count, fe == s.edge_count))

    for name, pred, comp in (
        ("vertex_count", predict_vertex_count(fam), s.vertex_count),
        ("edge_count", predict_edge_count(fam), s.edge_count),
    ):
        checks.append(_from_prediction(name, pred, comp, _row(fam, name)))

    # per-vertex degrees; vertices with a registered two-valued prediction get their own entry
    preds = [predict_degree(fam, H) for H in gamma.vertices]
    if preds and all(p.applies for p in preds):
        plain_pred, plain_comp = {}, {}
        for v, p in enumerate(preds):
            if p.applicability == INCONSISTENT:
                checks.append(_from_prediction(
                    f"degree[{gamma.labels[v]}]", p, gamma.degree(v), _row(fam, "center_degree")
                ))
            else:
                plain_pred[gamma.labels[v]] = p.value
                plain_comp[gamma.labels[v]] = gamma.degree(v)
        checks.append(_invariant(
            "vertex_degrees", plain_pred, plain_comp, plain_pred == plain_comp, _row(fam, "vertex_degrees")
        ))
    else:
        checks.append(Check("vertex_degrees", None, None, NA))

    lo, hi = predict_min_max_degree(fam)
    checks.append(_from_prediction("min_degree", lo, s.min_degree, _row(fam, "min_degree")))
    checks.append(_from_prediction("max_degree", hi, s.max_degree, _row(fam, "max_degree")))
    checks.append(_from_prediction(
        "degree_values_cover", predict_degree_sequence_interval(fam), list(s.degree_sequence), "cyclic"
    ))
    checks.append(_from_prediction("diameter", predict_diameter(fam), s.diameter, _row(fam, "diameter")))
    general, nilpotent = predict_diameter_bounds(G)
    checks.append(_from_prediction("diameter_bounds", general, s.diameter))
    checks.append(_from_prediction("nilpotent_diameter_bounds", nilpotent, s.diameter))

    checks.append(_invariant("bipartite", True, s.bipartite, s.bipartite))
    checks.append(_invariant("connected", True, s.connected, s.connected))
    checks.append(_invariant("girth_4_or_inf", [4, INF], s.girth, s.girth in (4, INF)))
    parity = es_parity_ok(gamma)
    checks.append(_invariant("es_parity", True, parity, parity))

    shapes = classify_shape(G)
    computed_shape = {
        "path_graph": s.path_graph, "cycle_graph": s.cycle_graph, "star_graph": s.star_graph,
        "complete_graph": s.complete_graph, "complete_by_size": s.complete_graph,
    }
    for name, pred in shapes.items():
        checks.append(_from_prediction(name, pred, computed_shape[name]))
    checks.append(_from_prediction("regular", predict_regular(G), s.regular))
    eul = predict_eulerian(G)
    checks.append(_from_prediction(
        "eulerian", eul, s.eulerian, "cyclic" if G.is_cyclic else "pendant_family"
    ))
    pendant, tree = predict_tree_and_pendants(G)
    checks.append(_from_prediction("has_pendant", pendant, s.pendant_count > 0))
    checks.append(_from_prediction("tree", tree, s.tree))

    counts = frobenius_counts(G)
    checks.append(_invariant(
        "frobenius", {p: f"1 mod {p}" for p in counts}, counts,
        all(c % p == 1 for p, c in counts.items()),
    ))

    lattice = None
    if G.order <= lattice_cap:
        oracle = generic_edges(G)
        checks.append(_invariant("dual_oracle", True, oracle == gamma.edges, oracle == gamma.edges))
        lattice = all_subgroups(G, lattice_cap)
        full = generic_edges(G, lattice)
        checks.append(_invariant("lattice_oracle", True, full == gamma.edges, full == gamma.edges))
        bad = _induced_failures(G, gamma, lattice)
        checks.append(_invariant("induced_subgraphs", 0, bad, bad == 0))
    else:
        for name in ("dual_oracle", "lattice_oracle", "induced_subgraphs"):
            checks.append(Check(name, None, None, NA))

    if isinstance(fam, MinimalNonCyclic):
        prof = predict_minimal_noncyclic_profile(fam.p, fam.r, fam.q)
        cycles = sorted(cycle_lengths_through(gamma.adjacency, 0)) if fam.r >= 2 else None
        computed = {
            "degree_multiset": s.degree_sequence,
            "pendant_count": s.pendant_count,
            "cycle_lengths_through_identity": cycles,
            "regular": s.regular,
            "eulerian": s.eulerian,
        }
        for name, comp in computed.items():
            checks.append(_from_prediction(f"minnc.{name}", prof[name], comp, "minnc"))
        if fam.r >= 2 and lattice is not None:
            want = 2 * fam.r + fam.q + 1
            checks.append(_invariant("minnc.subgroup_count", want, len(lattice), want == len(lattice), "minnc"))
        else:
            checks.append(Check("minnc.subgroup_count", None, None, NA, row="minnc"))
    return rep


def audit_case(case: Case, cap: int = DEFAULT_CAP, lattice_cap: int = ALL_SUBGROUPS_CAP,
               base_dir: Path | None = None) -> GroupReport:
    order = case.expected_order()
    if order is not None and order > cap:
        rep = GroupReport(case.descriptor, "", order)
        rep.checks.append(Check("order_cap", cap, order, NA))
        return rep
    try:
        G = case.build(base_dir)
    except CapExceeded as exc:
        rep = GroupReport(case.descriptor, "", None)
        rep.checks.append(Check("order_cap", cap, str(exc), NA))
        return rep
    if G.order > cap:
        rep = GroupReport(case.descriptor, G.label, G.order)
        rep.checks.append(Check("order_cap", cap, G.order, NA))
        return rep
    return audit_group(G, case.descriptor, case.figure, lattice_cap)


def _audit_case_args(args):
    return audit_case(*args)


def run_audit(spec: CorpusSpec, jobs: int = 1) -> AuditReport:
    args = [(c, spec.cap, spec.lattice_cap, spec.base_dir) for c in spec.cases]
    if jobs > 1 and len(args) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            groups = list(pool.map(_audit_case_args, args, chunksize=8))
    else:
        groups = [audit_case(*a) for a in args]

    coverage: dict[str, int] = {}
    for g in groups:
        for c in g.checks:
            if c.status in (MATCH, DOCUMENTED, MISMATCH):
                key = f"{c.name.split('[')[0]}:{c.row}"
                if c.name.startswith("degree["):
                    key = f"center_degree:{c.row}"
                coverage[key] = coverage.get(key, 0) + 1
    missing = [k for k in REQUIRED_COVERAGE if k not in coverage] if spec.require_coverage else []
    return AuditReport(spec.name, groups, coverage, missing)
