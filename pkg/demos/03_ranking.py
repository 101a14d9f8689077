"""Ranking alternatives by net agreement score, plus the CLI equivalent.

Run from the repository root: ``python demos/03_ranking.py``.
"""

import subprocess
import sys
from pathlib import Path

from bnses import export_ranking, load, rank, score

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
data = load(FIXTURES / "notebooks.json")

# %% per-value scores feeding the ranking
for k, u, v in data.set.records():
    print(f"{str(k):24s} {u}  score={score(v):.4f}")

# %% ranking
ranking = rank(data)
print()
for alt in ranking:
    print(f"#{alt.rank} {alt.element}: agree {alt.agree_score:.4f} "
          f"- disagree {alt.disagree_score:.4f} = {alt.final_score:+.4f}")

print()
print(export_ranking(ranking).decode(), end="")

# %% same thing from the command line
print(flush=True)
subprocess.run([sys.executable, "-m", "bnses", "rank", str(FIXTURES / "notebooks.json")],
               check=True)
