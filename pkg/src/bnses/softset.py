"""Bipolar neutrosophic soft expert sets.

A soft expert set maps assessment keys ``(parameter, expert, opinion)`` to a
family of bipolar neutrosophic numbers indexed by universe elements.  The
representation is sparse: a ``(key, element)`` pair that is not stored is
absent, not zero.  Keys and elements always iterate in canonical order.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .errors import DomainError
from .number import DEFAULT_TOLERANCE, BipolarNeutrosophicNumber as BNN

__all__ = [
    "Opinion",
    "ParameterLiteral",
    "AssessmentKey",
    "SoftExpertSet",
    "key",
    "EMPTY",
    "negate_parameter",
    "not_set",
    "complement_value",
    "union_value",
    "intersection_value",
    "is_subset",
    "is_superset",
    "equals",
    "complement",
    "make_null",
    "is_null",
    "restrict_agree",
    "restrict_disagree",
    "union",
    "intersection",
]


class Opinion(enum.IntEnum):
    DISAGREE = 0
    AGREE = 1


@dataclass(frozen=True, order=True)
class ParameterLiteral:
    """A decision parameter ``e`` or its negation ``not e``."""

    name: str
    negated: bool = False

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise DomainError("parameter name must be a nonempty string")
        object.__setattr__(self, "negated", bool(self.negated))

    def __str__(self):
        return f"not {self.name}" if self.negated else self.name


@dataclass(frozen=True, order=True)
class AssessmentKey:
    """One element of parameters x experts x opinions.

    Field order gives the canonical sort: parameter name, negation flag,
    expert, then disagree before agree.
    """

    parameter: ParameterLiteral
    expert: str
    opinion: Opinion

    def __post_init__(self):
        if isinstance(self.parameter, str):
            object.__setattr__(self, "parameter", ParameterLiteral(self.parameter))
        if not isinstance(self.expert, str) or not self.expert:
            raise DomainError("expert id must be a nonempty string")
        object.__setattr__(self, "opinion", Opinion(self.opinion))

    def __str__(self):
        return f"({self.parameter}, {self.expert}, {int(self.opinion)})"


def key(parameter, expert, opinion, negated=False) -> AssessmentKey:
    """Shorthand: ``key("e1", "p", 1)``."""
    return AssessmentKey(ParameterLiteral(parameter, negated), expert, opinion)


class SoftExpertSet(Mapping):
    """Immutable mapping ``AssessmentKey -> {element: BipolarNeutrosophicNumber}``.

    Accepts any mapping of keys to element maps; tuple keys such as
    ``("e1", "p", 1)`` and six-tuples as values are converted.  Keys whose
    element map is empty are dropped.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data = {}
        for k, values in items:
            k = _as_key(k)
            if k in data:
                raise DomainError(f"duplicate assessment key {k}")
            row = {}
            for u, v in dict(values).items():
                if not isinstance(u, str) or not u:
                    raise DomainError(f"element id must be a nonempty string, got {u!r}")
                row[u] = v if isinstance(v, BNN) else BNN.from_sequence(v)
            if row:
                data[k] = MappingProxyType(dict(sorted(row.items())))
        self._entries = dict(sorted(data.items()))

    def __getitem__(self, k):
        return self._entries[_as_key(k)]

    def __iter__(self) -> Iterator[AssessmentKey]:
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __contains__(self, k):
        try:
            return _as_key(k) in self._entries
        except (DomainError, TypeError, ValueError):
            return False

    def __eq__(self, other):
        if not isinstance(other, SoftExpertSet):
            return NotImplemented
        return self._entries == other._entries

    __hash__ = None

    def __repr__(self):
        return f"SoftExpertSet({len(self.support())} values over {len(self)} keys)"

    def value(self, k, element) -> BNN | None:
        row = self._entries.get(_as_key(k))
        return None if row is None else row.get(element)

    def records(self) -> Iterator[tuple[AssessmentKey, str, BNN]]:
        """Yield ``(key, element, value)`` in canonical order."""
        for k, row in self._entries.items():
            for u, v in row.items():
                yield k, u, v

    def support(self) -> frozenset[tuple[AssessmentKey, str]]:
        return frozenset((k, u) for k, u, _ in self.records())

    def elements(self) -> frozenset[str]:
        return frozenset(u for _, u, _ in self.records())

    def format(self) -> str:
        lines = []
        for k, row in self._entries.items():
            vals = ", ".join(f"<{u}, " + ", ".join(f"{x:g}" for x in v) + ">"
                             for u, v in row.items())
            lines.append(f"{k}: {vals}")
        return "\n".join(lines)

    # operator sugar
    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersection(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return is_subset(self, other)

    def __ge__(self, other):
        return is_subset(other, self)


def _as_key(k) -> AssessmentKey:
    if isinstance(k, AssessmentKey):
        return k
    if isinstance(k, tuple) and len(k) in (3, 4):
        return key(*k)
    raise DomainError(f"not an assessment key: {k!r}")


EMPTY = SoftExpertSet()


def _map(entries: dict) -> SoftExpertSet:
    return SoftExpertSet(entries)


# value-level combiners

def complement_value(v: BNN) -> BNN:
    """Swap truth and falsity on both poles; indeterminacy is kept."""
    return BNN(v.f_pos, v.i_pos, v.t_pos, v.f_neg, v.i_neg, v.t_neg)


def union_value(v: BNN, w: BNN) -> BNN:
    return BNN(
        max(v.t_pos, w.t_pos),
        (v.i_pos + w.i_pos) / 2.0,
        min(v.f_pos, w.f_pos),
        min(v.t_neg, w.t_neg),
        (v.i_neg + w.i_neg) / 2.0,
        max(v.f_neg, w.f_neg),
    )


def intersection_value(v: BNN, w: BNN) -> BNN:
    return BNN(
        min(v.t_pos, w.t_pos),
        (v.i_pos + w.i_pos) / 2.0,
        max(v.f_pos, w.f_pos),
        max(v.t_neg, w.t_neg),
        (v.i_neg + w.i_neg) / 2.0,
        min(v.f_neg, w.f_neg),
    )


def _dominated(v: BNN, w: BNN, tol: float) -> bool:
    # v below w: truth and indeterminacy no larger on the positive pole,
    # falsity no smaller; all three reversed on the negative pole
    return (v.t_pos <= w.t_pos + tol and v.i_pos <= w.i_pos + tol
            and v.f_pos >= w.f_pos - tol
            and v.t_neg >= w.t_neg - tol and v.i_neg >= w.i_neg - tol
            and v.f_neg <= w.f_neg + tol)


# parameters

def negate_parameter(p: ParameterLiteral) -> ParameterLiteral:
    return ParameterLiteral(p.name, not p.negated)


def not_set(parameters: Iterable[ParameterLiteral | str]) -> list[ParameterLiteral]:
    """Negate every parameter: ``[cheap, expensive] -> [not cheap, not expensive]``."""
    return [negate_parameter(p if isinstance(p, ParameterLiteral) else ParameterLiteral(p))
            for p in parameters]


# set-level operations

def is_subset(g: SoftExpertSet, h: SoftExpertSet,
              tol: float = DEFAULT_TOLERANCE) -> bool:
    """True when every value of ``g`` is stored in ``h`` and lies below it."""
    for k, u, v in g.records():
        w = h.value(k, u)
        if w is None or not _dominated(v, w, tol):
            return False
    return True


def is_superset(h: SoftExpertSet, g: SoftExpertSet,
                tol: float = DEFAULT_TOLERANCE) -> bool:
    return is_subset(g, h, tol)


def equals(g: SoftExpertSet, h: SoftExpertSet,
           tol: float = DEFAULT_TOLERANCE) -> bool:
    if g.support() != h.support():
        return False
    return all(v.isclose(h.value(k, u), tol) for k, u, v in g.records())


def complement(h: SoftExpertSet) -> SoftExpertSet:
    """Move every key onto the negated parameter and swap truth/falsity.

    Expert and opinion are kept, so ``complement`` is an involution.
    """
    return _map({
        AssessmentKey(negate_parameter(k.parameter), k.expert, k.opinion):
            {u: complement_value(v) for u, v in row.items()}
        for k, row in h.items()
    })


def make_null(keys: Iterable, universe: Iterable[str]) -> SoftExpertSet:
    """All-zero values at every ``(key, element)`` pair of the product."""
    universe = list(universe)
    zero = BNN.zero()
    return _map({_as_key(k): {u: zero for u in universe} for k in keys})


def is_null(h: SoftExpertSet, tol: float = DEFAULT_TOLERANCE) -> bool:
    return all(abs(x) <= tol for _, _, v in h.records() for x in v)


def _restrict(h, opinion):
    return _map({k: row for k, row in h.items() if k.opinion == opinion})


def restrict_agree(h: SoftExpertSet) -> SoftExpertSet:
    return _restrict(h, Opinion.AGREE)


def restrict_disagree(h: SoftExpertSet) -> SoftExpertSet:
    return _restrict(h, Opinion.DISAGREE)


def union(h: SoftExpertSet, g: SoftExpertSet) -> SoftExpertSet:
    """Combine shared pairs with :func:`union_value`; copy the rest unchanged."""
    out = {k: dict(row) for k, row in h.items()}
    for k, row in g.items():
        target = out.setdefault(k, {})
        for u, w in row.items():
            v = target.get(u)
            target[u] = w if v is None else union_value(v, w)
    return _map(out)


def intersection(h: SoftExpertSet, g: SoftExpertSet) -> SoftExpertSet:
    """Combine pairs stored in both operands; drop everything else."""
    out = {}
    for k, row in h.items():
        other = g.get(k)
        if other is None:
            continue
        out[k] = {u: intersection_value(v, other[u])
                  for u, v in row.items() if u in other}
    return _map(out)
