"""Frobenius eigenspace dimensions h0 on pi-torsion, over small places.

For each module, pi and good place v != pi with a small enough splitting
field, print the Frobenius matrix over F_pi and h0 = r - rank(Frob - 1).
"""

import argparse
from dataclasses import dataclass

from ffiwa.drinfeld import DrinfeldModule, bad_reduction_set, frobenius_data
from ffiwa.errors import FfiwaError
from ffiwa.poly import irreducibles
from ffiwa.tower import Place


@dataclass
class Config:
    q: int = 3
    phi_T: tuple = ("T", "1")
    max_degree: int = 2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=Config.q)
    ap.add_argument("--phi_T", default=",".join(Config.phi_T), help="comma-separated coefficients of phi_T")
    ap.add_argument("--max_degree", type=int, default=Config.max_degree)
    a = ap.parse_args()
    cfg = Config(a.q, tuple(a.phi_T.split(",")), a.max_degree)
    phi = DrinfeldModule(cfg.q, list(cfg.phi_T))
    bad = bad_reduction_set(phi)
    places = [Place(phi.field, f) for d in range(1, cfg.max_degree + 1) for f in irreducibles(phi.field, d)]
    print(f"phi_T = {phi.phi_T.format()}  rank {phi.rank}")
    for pi in places:
        for v in places:
            if v == pi or v in bad:
                continue
            try:
                fd = frobenius_data(phi, v, pi)
            except FfiwaError as exc:
                print(f"pi={pi!s:<10} v={v!s:<10} skipped: {exc}")
                continue
            print(f"pi={pi!s:<10} v={v!s:<10} Frob={fd.matrix}  h0={fd.h0_dim}")


if __name__ == "__main__":
    main()
