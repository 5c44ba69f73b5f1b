"""Count law failures over enumerated and sampled structures.

Runs the closure, connective and (where applicable) projective suites and
prints, per law, how many structures break it. With --json the full
census, including one witness per law, is written to a file.

    python3 scripts/lemma_census.py --random 200 --seed 0
"""

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from qphase.invariants import check_closure, check_connectives, check_projective
from qphase.models import enumerated, random_qstructure
from qphase.phase import is_projective


@dataclass
class CensusConfig:
    enum_max_size: int = 3
    random: int = 100
    sizes: tuple = (3, 4, 5)
    seed: int = 0
    projective_share: float = 0.5
    json: str | None = None


def structures(cfg: CensusConfig):
    for n in range(1, cfg.enum_max_size + 1):
        for i, q in enumerate(enumerated(n)):
            yield {"kind": "enumerated", "size": n, "index": i}, q
    rng = random.Random(cfg.seed)
    for _ in range(cfg.random):
        n, s = rng.choice(cfg.sizes), rng.randrange(2 ** 32)
        proj = rng.random() < cfg.projective_share
        yield ({"kind": "random", "size": n, "seed": s, "projective": proj},
               random_qstructure(n, s, projective=proj))


def run(cfg: CensusConfig) -> dict:
    broken: Counter = Counter()
    witness: dict = {}
    seen = projective = 0
    t0 = time.perf_counter()
    for recipe, q in structures(cfg):
        seen += 1
        fails = check_closure(q) + check_connectives(q)
        if is_projective(q):
            projective += 1
            fails += check_projective(q)
        for law in {f.split(":")[0] for f in fails}:
            broken[law] += 1
            witness.setdefault(law, {"model": recipe,
                                     "instance": next(f for f in fails if f.startswith(law))})
    return {"config": asdict(cfg), "structures": seen, "projective": projective,
            "seconds": round(time.perf_counter() - t0, 2),
            "broken": dict(broken.most_common()), "witness": witness}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--enum-max-size", type=int, default=3)
    ap.add_argument("--random", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json")
    a = ap.parse_args()
    cfg = CensusConfig(enum_max_size=a.enum_max_size, random=a.random, seed=a.seed, json=a.json)
    res = run(cfg)
    print(f"{res['structures']} structures ({res['projective']} projective), {res['seconds']}s")
    if not res["broken"]:
        print("every law held")
    for law, k in res["broken"].items():
        print(f"  {law:36s} broken in {k} structures; e.g. {res['witness'][law]['instance']}")
    if cfg.json:
        with open(cfg.json, "w") as fh:
            json.dump(res, fh, indent=1)


if __name__ == "__main__":
    main()
