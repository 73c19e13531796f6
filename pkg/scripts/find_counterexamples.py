"""Search small direct products and matrix groups for graphs that break the
general pendant criterion or the Omega(|G|) diameter bound."""

import argparse
import itertools

from cyclicsg.gamma_graph import build_gamma
from cyclicsg.graph_invariants import summarize
from cyclicsg.group_core import (
    factorize,
    is_nilpotent,
    is_p_group,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_named_matrix_group,
)


def candidates(max_order: int):
    small = [make_cyclic(n) for n in range(2, 13)]
    small += [make_dihedral(n) for n in range(3, 9)]
    small += [make_dicyclic(n) for n in range(2, 7)]
    for a, b in itertools.combinations_with_replacement(small, 2):
        if a.order * b.order <= max_order:
            yield make_direct_product([a, b])
    for name in ("sl2f3", "gl2f3", "f20", "sl2f5"):
        yield make_named_matrix_group(name)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=72)
    args = ap.parse_args()
    seen = set()
    for G in candidates(args.max_order):
        if G.label in seen:
            continue
        seen.add(G.label)
        s = summarize(build_gamma(G))
        omega = factorize(G.order).big_omega
        if not is_p_group(G) and not is_nilpotent(G) and s.pendant_count == 0:
            print(f"{G.label:>12} order {G.order:>3}: non-nilpotent, no pendant vertex")
        if G.order > 1 and s.diameter > omega:
            print(f"{G.label:>12} order {G.order:>3}: diameter {s.diameter} > Omega(|G|) = {omega}")


if __name__ == "__main__":
    main()
