"""Set operations on soft expert sets loaded from the bundled fixtures.

Run from the repository root: ``python demos/02_soft_expert_sets.py``.
"""

from pathlib import Path

from bnses import (
    complement,
    equals,
    intersection,
    is_subset,
    load,
    restrict_agree,
    restrict_disagree,
    union,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

notebooks = load(FIXTURES / "notebooks.json").set
print("notebook opinions:", len(notebooks), "keys,", len(notebooks.support()), "values")

# %% agree / disagree blocks partition the data
agree, disagree = restrict_agree(notebooks), restrict_disagree(notebooks)
print("\nagree block\n" + agree.format())
print("\ndisagree block\n" + disagree.format())

# %% complement moves every key onto "not <parameter>" and swaps truth/falsity
c = complement(notebooks)
print("\ncomplement (first three keys)")
print("\n".join(c.format().splitlines()[:3]))
print("complement twice gives the original back:", complement(c) == notebooks)

# %% subset
h = load(FIXTURES / "pricing_h.json").set
g = load(FIXTURES / "pricing_g.json").set
print("\ng subset of h:", is_subset(g, h), "| h subset of g:", is_subset(h, g))

# %% union and intersection: indeterminacy is averaged, unmatched values
# are copied by union and dropped by intersection
h = load(FIXTURES / "merge_h.json").set
g = load(FIXTURES / "merge_g.json").set
print("\nunion\n" + union(h, g).format())
print("\nintersection\n" + intersection(h, g).format())
print("union commutes:", equals(union(h, g), union(g, h)))
