"""Quotient exponents e_n of elementary Lambda-modules and the fitted invariants."""

import argparse
from dataclasses import dataclass, field

from ffiwa.iwasawa import ElementaryModule, fit_invariants, growth


@dataclass
class GridConfig:
    primes: tuple = (2, 3)
    levels: int = 5
    mu_choices: tuple = ((), (1,), (2,))
    lambda_choices: tuple = field(default_factory=lambda: ((), ("T-{p}",), ("(T-{p})*(T-{pp})",), ("T^2+{p}",)))


def modules(cfg):
    for p in cfg.primes:
        for mu_parts in cfg.mu_choices:
            for lam in cfg.lambda_choices:
                yield ElementaryModule(p, mu_parts, tuple(s.format(p=p, pp=p * p) for s in lam))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--levels", type=int, default=GridConfig.levels)
    cfg = GridConfig(levels=ap.parse_args().levels)
    print(f"{'p':>2} {'mu parts':<9} {'lambda parts':<22} {'e_n':<40} fit (lambda, mu, nu) n0")
    for E in modules(cfg):
        e = growth(E, cfg.levels)
        f = fit_invariants(e, E.p)
        lam = ",".join(map(str, E.lambda_parts)) if E.lambda_parts else "-"
        print(f"{E.p:>2} {str(E.mu_parts):<9} {lam:<22} {str(e):<40} ({f.lam}, {f.mu}, {f.nu}) {f.n0}")


if __name__ == "__main__":
    main()
