"""Ranking the alternatives of a dataset by net agreement score.

Each element collects the scores of every value stored for it: agree
records add, disagree records subtract.  Sums use :func:`math.fsum`, which
is exact up to one final rounding, so the result does not depend on record
order.  Elements that appear in no record score 0 on both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError
from .number import accuracy, certainty, compare, score
from .softset import Opinion

__all__ = ["RankedAlternative", "Ranking", "rank", "compare_values"]

compare_values = compare


@dataclass(frozen=True)
class RankedAlternative:
    element: str
    agree_score: float
    disagree_score: float
    final_score: float
    rank: int
    # net accuracy and certainty sums, used only to break score ties
    accuracy: float = 0.0
    certainty: float = 0.0


@dataclass(frozen=True)
class Ranking:
    alternatives: tuple[RankedAlternative, ...]

    def __iter__(self):
        return iter(self.alternatives)

    def __len__(self):
        return len(self.alternatives)

    def __getitem__(self, i):
        return self.alternatives[i]

    def order(self) -> list[str]:
        return [a.element for a in self.alternatives]

    def by_element(self) -> dict[str, RankedAlternative]:
        return {a.element: a for a in self.alternatives}


def rank(dataset) -> Ranking:
    """Rank ``dataset.universe`` best-first.

    Sort key: final score, then net accuracy, then net certainty (all
    descending), then element id ascending.
    """
    if not dataset.universe:
        raise ValidationError("cannot rank an empty universe", "universe")
    parts = {u: ([], [], [], []) for u in dataset.universe}
    for k, u, v in dataset.set.records():
        agree, disagree, acc, cert = parts[u]
        if k.opinion == Opinion.AGREE:
            agree.append(score(v))
            acc.append(accuracy(v))
            cert.append(certainty(v))
        else:
            disagree.append(score(v))
            acc.append(-accuracy(v))
            cert.append(-certainty(v))

    rows = []
    for u, (agree, disagree, acc, cert) in parts.items():
        a, d = math.fsum(agree), math.fsum(disagree)
        rows.append((u, a, d, a - d, math.fsum(acc), math.fsum(cert)))
    rows.sort(key=lambda r: (-r[3], -r[4], -r[5], r[0]))
    return Ranking(tuple(
        RankedAlternative(u, a, d, f, i, acc, cert)
        for i, (u, a, d, f, acc, cert) in enumerate(rows, start=1)
    ))
