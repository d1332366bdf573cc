"""Print the good-monomial classes up to a degree, with their (sigma, n) parameters and graph class."""
import argparse
from dataclasses import dataclass

from klchar.bosonic import word_to_param
from klchar.goodmon import census_families, classify, good_words


@dataclass
class CensusConfig:
    l: int = 3
    max_degree: int = 6


def run(cfg: CensusConfig) -> None:
    words = good_words(cfg.l, cfg.max_degree)
    for w in words:
        p = word_to_param(w, cfg.l)
        print(f"{w or '(empty)':<{cfg.max_degree + 2}} sigma={p.sigma} n={p.n} class=G_{classify(w, cfg.l).kind}")
    print(f"# {len(words)} classes of degree <= {cfg.max_degree}")
    if cfg.l in (2, 3, 4):
        same = set(words) == census_families(cfg.l, cfg.max_degree)
        print(f"# explicit families {'match' if same else 'DO NOT match'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l", type=int, default=CensusConfig.l)
    ap.add_argument("--max-degree", type=int, default=CensusConfig.max_degree)
    a = ap.parse_args()
    run(CensusConfig(a.l, a.max_degree))
