"""Run `verify all` on a profile for several seeds and write one report per seed.

    python scripts/run_desk_campaign.py --seeds 7 8 9 --profile desk --out-dir reports
"""

import argparse
from pathlib import Path

from qagt.campaign import VerifyConfig, dumps
from qagt.cli import run, summary_text


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--seeds", type=int, nargs="+", default=[7, 8, 9])
    p.add_argument("--profile", default="desk", choices=("smoke", "desk", "deep"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", default="reports")
    args = p.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    failed = set()
    for s in args.seeds:
        rep = run(VerifyConfig(target="all", profile=args.profile, seed=s, jobs=args.jobs))
        (out / f"{args.profile}_seed{s}.json").write_text(dumps(rep))
        print(f"== seed {s}")
        print(summary_text(rep))
        failed.update(rep["summary"]["failed"])
    print(f"\n{len(failed)} distinct failing check ids across seeds")
    for i in sorted(failed):
        print("  " + i)


if __name__ == "__main__":
    main()
