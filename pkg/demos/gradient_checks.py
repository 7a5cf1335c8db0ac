"""Finite-difference verification of every differentiable operation.

Same table as ``vfseg gradcheck``; a different seed draws fresh inputs.

    python3 demos/gradient_checks.py [seed]
"""
import sys

from vfseg.gradsuite import format_table, run_suite

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
rows = run_suite(seed=seed)
print(format_table(rows))
print(f"total {sum(t for _, t in rows):.1f}s")
