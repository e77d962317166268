"""Class numbers along the constant Z_p-tower for every curve in the corpus.

    python3 scripts/class_tower_corpus.py --levels 6 --out towers.json
"""

import argparse
import json
from dataclasses import asdict, dataclass

from ffiwa.iwasawa import fit_invariants
from ffiwa.zeta import EXAMPLE_CURVES, class_tower, l_from_curve


@dataclass
class Config:
    levels: int = 5
    out: str | None = None


def run(cfg):
    rows = []
    for curve in EXAMPLE_CURVES:
        L = l_from_curve(curve["q"], curve["affine"], curve["inf_correction"], curve["genus"])
        tower = class_tower(L, L.p, cfg.levels)
        fit = fit_invariants(tower.e, L.p)
        rows.append({
            "curve": curve["name"],
            "lpoly": list(L.coeffs),
            "h": [str(h) for h in tower.h],
            "e": list(tower.e),
            "lambda": fit.lam, "mu": fit.mu, "nu": fit.nu, "n0": fit.n0,
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--levels", type=int, default=Config.levels)
    ap.add_argument("--out")
    cfg = Config(**vars(ap.parse_args()))
    rows = run(cfg)
    for r in rows:
        print(f"{r['curve']:<22} e = {r['e']}  (lambda, mu, nu) = ({r['lambda']}, {r['mu']}, {r['nu']})")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
