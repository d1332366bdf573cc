"""Check every cancellation pair up to a degree at every boundary vector and summarize."""
import argparse
from dataclasses import dataclass

from klchar.configurations import all_boundaries, extremal_config
from klchar.goodmon import cancellation_pairs, decompose_blocks, split_pair, verify_cancellation
from klchar.series import Window


@dataclass
class SurveyConfig:
    l: int = 3
    max_degree: int = 8
    k: int = 2
    q_max: int = 20
    z_max: int = 10


def run(cfg: SurveyConfig) -> int:
    w = Window(0, cfg.q_max, 0, cfg.z_max)
    failures = 0
    for word, partner in cancellation_pairs(cfg.l, cfg.max_degree):
        N, K = split_pair(word, cfg.l)
        blocks = [s for s, _ in decompose_blocks("B" + N, cfg.l)]
        bvs = all_boundaries(cfg.k, cfg.l)
        ok = all(verify_cancellation(word, bv, w) for bv in bvs)
        same = all(extremal_config("A" + N + "A" + K, bv) == extremal_config("A" + N + "B" + K, bv) for bv in bvs)
        failures += not (ok and same)
        print(f"{word:>{cfg.max_degree}} ~ {partner:<{cfg.max_degree}} block lengths {blocks} "
              f"cancel={ok} same extremal={same}")
    print(f"# {failures} failures on {w}")
    return failures


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(SurveyConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    a = ap.parse_args()
    raise SystemExit(1 if run(SurveyConfig(**vars(a))) else 0)
