import random
from pathlib import Path

from hypothesis import strategies as st

from bnses import BNN, SoftExpertSet, key, load

TOL = 1e-9
FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

EDGES = (0.0, 1.0)


def random_value(rng: random.Random) -> BNN:
    """Uniform value with ~10% of components pinned to an interval end."""
    def comp():
        if rng.random() < 0.1:
            return rng.choice(EDGES)
        return rng.random()
    return BNN(comp(), comp(), comp(), -comp(), -comp(), -comp())


def random_set(rng: random.Random, params=("a", "b"), experts=("x", "y"),
               universe=("u1", "u2", "u3"), density=0.5) -> SoftExpertSet:
    entries = {}
    for p in params:
        for neg in (False, True):
            for x in experts:
                for o in (0, 1):
                    if rng.random() >= density:
                        continue
                    row = {u: random_value(rng) for u in universe if rng.random() < density}
                    entries[key(p, x, o, neg)] = row
    return SoftExpertSet(entries)


_unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, allow_infinity=False)

values = st.builds(
    lambda a, b, c, d, e, f: BNN(a, b, c, -d, -e, -f),
    _unit, _unit, _unit, _unit, _unit, _unit)


@st.composite
def soft_sets(draw, params=("a", "b"), experts=("x", "y"), universe=("u1", "u2")):
    keys = [key(p, x, o, n) for p in params for n in (False, True)
            for x in experts for o in (0, 1)]
    chosen = draw(st.lists(st.sampled_from(keys), unique=True, max_size=len(keys)))
    entries = {}
    for k in chosen:
        elems = draw(st.lists(st.sampled_from(universe), unique=True, min_size=1))
        entries[k] = {u: draw(values) for u in elems}
    return SoftExpertSet(entries)
