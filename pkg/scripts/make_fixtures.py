"""Regenerate the bundled Cayley table fixtures."""

import argparse
from pathlib import Path

from cyclicsg.group_core import make_cyclic, make_direct_product, write_cayley_file

FIXTURES = {
    "klein4.tbl": lambda: make_direct_product([make_cyclic(2), make_cyclic(2)]),
    "z3xz3.tbl": lambda: make_direct_product([make_cyclic(3), make_cyclic(3)]),
    "z2xz2xz2.tbl": lambda: make_direct_product([make_cyclic(2)] * 3),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    default = Path(__file__).resolve().parents[1] / "src" / "cyclicsg" / "data"
    ap.add_argument("--out-dir", type=Path, default=default)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name, build in FIXTURES.items():
        write_cayley_file(build(), args.out_dir / name)
        print(args.out_dir / name)


if __name__ == "__main__":
    main()
