"""Conjecture and theorem checks on the two worked examples.

Each check reports one of consistent, inconclusive or violated, line by
line, with the provenance of every number it compares.
"""

from pathlib import Path

from arithdeg.cli import load_spec, run_conjectures

here = Path(__file__).resolve().parent
for name in ("fibonacci.spec", "squaring.spec"):
    print(f"== {name}")
    reports, surrogates = run_conjectures(load_spec(here / "specs" / name))
    for k, a in sorted(surrogates.alphas.items()):
        print(f"  alpha_{k} ~ {a.value:.6g}  [{a.provenance}]  {a.label}")
    for rep in reports:
        print(f"  {rep.claim:20s} {rep.verdict}")
        for line in rep.lines:
            print(f"      {line.statement}: {line.lhs.value:.6g} vs {line.rhs.value:.6g} -> {line.verdict}")
