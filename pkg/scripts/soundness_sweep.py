"""Run the soundness harness for every rule and write a JSON report.

    python3 scripts/soundness_sweep.py --trials 1000 --seed 0 --out sweep.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from qphase.harness import soundness_harness
from qphase.kernel import Mode, RuleTag


@dataclass
class SweepConfig:
    trials: int = 1000
    seed: int = 0
    # WR is additionally run over unconstrained models until it breaks
    wr_plain_trials: int = 10_000
    out: str | None = None


def run(cfg: SweepConfig) -> dict:
    rows = []
    plan = [(r, Mode.plain, cfg.trials, False) for r in RuleTag if r is not RuleTag.WR]
    plan += [(RuleTag.WR, Mode.projective, cfg.trials, False),
             (RuleTag.WR, Mode.plain, cfg.wr_plain_trials, True)]
    for rule, mode, trials, stop in plan:
        t0 = time.perf_counter()
        rep = soundness_harness(rule, trials, cfg.seed, mode, stop_at_first=stop)
        rows.append({"rule": rule.value, "mode": mode.value, "trials": rep.trials,
                     "vacuous": rep.vacuous, "violations": len(rep.violations),
                     "seconds": round(time.perf_counter() - t0, 2),
                     "first": rep.violations[0].to_dict() if rep.violations else None})
        print(rep.summary())
    return {"config": asdict(cfg), "runs": rows}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--wr-plain-trials", type=int, default=10_000)
    ap.add_argument("--out")
    a = ap.parse_args()
    res = run(SweepConfig(a.trials, a.seed, a.wr_plain_trials, a.out))
    if a.out:
        with open(a.out, "w") as fh:
            json.dump(res, fh, indent=1)


if __name__ == "__main__":
    main()
