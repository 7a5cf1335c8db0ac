"""Summarise the multi-seed ablation study written by ``runs/run_study.py``.

    python3 demos/ablation_summary.py [study_dir]
"""
import json
import sys
from collections import defaultdict
from pathlib import Path

import numpy as np

root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "runs" / "study"
by_preset = defaultdict(list)
for f in sorted(root.glob("*/result.json")):
    r = json.loads(f.read_text())
    by_preset[r["preset"]].append(r)
if not by_preset:
    sys.exit(f"no results under {root}")

print(f"{'preset':<6} {'seeds':>5} {'median DSC':>10} {'mean ASSD mm':>12} {'min/run':>8}")
for preset in ("net1", "net2", "net3", "net4", "ours"):
    recs = by_preset.get(preset)
    if not recs:
        continue
    assd = [a for r in recs for a in r["test_assd"] if a is not None]
    print(f"{preset:<6} {len(recs):>5} {np.median([r['mean_test_dsc'] for r in recs]):>10.4f} "
          f"{np.mean(assd) if assd else float('nan'):>12.3f} "
          f"{np.mean([r['seconds'] for r in recs]) / 60:>8.1f}")
