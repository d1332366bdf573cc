"""Report the finite-difference check that the leading exponents do not depend on sigma."""
import argparse
from dataclasses import dataclass

from klchar.bosonic import sigma_independence_report


@dataclass
class ReportConfig:
    l_min: int = 2
    l_max: int = 5


def run(cfg: ReportConfig) -> bool:
    ok = True
    for l in range(cfg.l_min, cfg.l_max + 1):
        rep = sigma_independence_report(l)
        print("\n".join(rep.lines()))
        ok &= rep.ok
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l-min", type=int, default=ReportConfig.l_min)
    ap.add_argument("--l-max", type=int, default=ReportConfig.l_max)
    a = ap.parse_args()
    raise SystemExit(0 if run(ReportConfig(a.l_min, a.l_max)) else 1)
