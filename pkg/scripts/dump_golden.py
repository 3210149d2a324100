"""Regenerate the golden files under tests/golden.

    python scripts/dump_golden.py            # both files
    python scripts/dump_golden.py macdonald  # only the P_lambda table
"""

import json
import sys
from pathlib import Path

from qagt.campaign import VerifyConfig, strip_timing
from qagt.cli import run
from qagt.exactfield import symbolic, to_text
from qagt.partitions import partition_text, partitions_upto
from qagt.symfunc import macdonald

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def macdonald_table(max_deg=4):
    F = symbolic()
    out = {}
    for lam in partitions_upto(max_deg):
        Pm = macdonald(F, lam).P_m
        out[partition_text(lam)] = {partition_text(mu): to_text(c) for mu, c in sorted(Pm.items(), reverse=True)}
    return out


def desk_report(seed=7):
    return strip_timing(run(VerifyConfig(target="all", profile="desk", seed=seed)))


def main(argv):
    what = argv[1:] or ["macdonald", "desk"]
    GOLDEN.mkdir(parents=True, exist_ok=True)
    if "macdonald" in what:
        (GOLDEN / "macdonald_P_m_basis.json").write_text(json.dumps(macdonald_table(), indent=1) + "\n")
    if "desk" in what:
        (GOLDEN / "desk_seed7.json").write_text(json.dumps(desk_report(), indent=1, default=str) + "\n")


if __name__ == "__main__":
    main(sys.argv)
