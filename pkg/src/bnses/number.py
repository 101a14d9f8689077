"""Bipolar neutrosophic numbers and their arithmetic.

A bipolar neutrosophic number carries six memberships: truth,
indeterminacy and falsity on the positive pole (each in ``[0, 1]``) and the
same three on the negative pole (each in ``[-1, 0]``).  Values are
immutable; every operation here is a pure function.

>>> a = BipolarNeutrosophicNumber(0.5, 0.5, 0.5, -0.5, -0.5, -0.5)
>>> scale(2, a).as_tuple()
(0.75, 0.25, 0.25, -0.25, -0.25, -0.75)
>>> score(BipolarNeutrosophicNumber.zero())
0.5
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError

__all__ = [
    "DEFAULT_TOLERANCE",
    "COMPONENTS",
    "BipolarNeutrosophicNumber",
    "Ordering",
    "scale",
    "power",
    "add",
    "multiply",
    "score",
    "accuracy",
    "certainty",
    "compare",
    "ADD_IDENTITY",
    "MULTIPLY_IDENTITY",
]

DEFAULT_TOLERANCE = 1e-9

COMPONENTS = ("t_pos", "i_pos", "f_pos", "t_neg", "i_neg", "f_neg")
_LABELS = {
    "t_pos": "T+", "i_pos": "I+", "f_pos": "F+",
    "t_neg": "T-", "i_neg": "I-", "f_neg": "F-",
}


@dataclass(frozen=True)
class BipolarNeutrosophicNumber:
    """Six-component membership value ``<T+, I+, F+, T-, I-, F->``.

    Construction validates every component; an out-of-range or non-finite
    component raises :class:`DomainError`.  Negative zero is stored as
    ``0.0`` so equal values also print identically.
    """

    t_pos: float
    i_pos: float
    f_pos: float
    t_neg: float
    i_neg: float
    f_neg: float

    def __post_init__(self):
        for name in COMPONENTS:
            raw = getattr(self, name)
            if isinstance(raw, bool) or not isinstance(raw, (int, float)):
                raise DomainError(
                    f"{_LABELS[name]} must be a real number, got {raw!r}")
            try:
                x = float(raw) + 0.0
            except OverflowError:
                raise DomainError(f"{_LABELS[name]} = {raw!r} is not representable") from None
            if not math.isfinite(x):
                raise DomainError(f"{_LABELS[name]} must be finite, got {raw!r}")
            lo, hi = (0.0, 1.0) if name.endswith("_pos") else (-1.0, 0.0)
            if not lo <= x <= hi:
                raise DomainError(
                    f"{_LABELS[name]} = {raw!r} outside [{lo:g}, {hi:g}]")
            object.__setattr__(self, name, x)

    @classmethod
    def from_sequence(cls, values: Iterable[float]) -> "BipolarNeutrosophicNumber":
        values = tuple(values)
        if len(values) != 6:
            raise DomainError(f"expected 6 components, got {len(values)}")
        return cls(*values)

    @classmethod
    def parse(cls, text: str) -> "BipolarNeutrosophicNumber":
        """Read a comma-separated literal such as ``"0.3,0.5,0.7,-0.2,-0.3,-0.4"``."""
        parts = [p.strip() for p in text.strip().strip("()<>[]").split(",")]
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise DomainError(f"malformed value literal {text!r}") from None
        return cls.from_sequence(values)

    @classmethod
    def zero(cls) -> "BipolarNeutrosophicNumber":
        return cls(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.t_pos, self.i_pos, self.f_pos,
                self.t_neg, self.i_neg, self.f_neg)

    def __iter__(self):
        return iter(self.as_tuple())

    def isclose(self, other: "BipolarNeutrosophicNumber",
                tol: float = DEFAULT_TOLERANCE) -> bool:
        return all(abs(x - y) <= tol for x, y in zip(self, other))

    def __str__(self):
        return "<" + ", ".join(f"{x:g}" for x in self) + ">"


BNN = BipolarNeutrosophicNumber

ADD_IDENTITY = BNN(0.0, 1.0, 1.0, -1.0, 0.0, 0.0)
MULTIPLY_IDENTITY = BNN(1.0, 0.0, 0.0, 0.0, -1.0, -1.0)


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self):
        return self.name


def _check_exponent(lam):
    if isinstance(lam, bool) or not isinstance(lam, (int, float)):
        raise DomainError(f"exponent must be a real number, got {lam!r}")
    if not math.isfinite(lam) or lam <= 0:
        raise DomainError(f"exponent must be finite and > 0, got {lam!r}")
    return float(lam)


def _dual(x, y):
    # probabilistic sum x + y - xy, written so that [0, 1] inputs stay in [0, 1]
    return 1.0 - (1.0 - x) * (1.0 - y)


def scale(lam: float, a: BNN) -> BNN:
    """Scalar multiple ``lam * a`` for ``lam > 0``."""
    lam = _check_exponent(lam)
    if lam == 1.0:
        return a
    return BNN(
        1.0 - (1.0 - a.t_pos) ** lam,
        a.i_pos ** lam,
        a.f_pos ** lam,
        -((-a.t_neg) ** lam),
        -((-a.i_neg) ** lam),
        -(1.0 - (1.0 - (-a.f_neg)) ** lam),
    )


def power(a: BNN, lam: float) -> BNN:
    """Power ``a ** lam`` for ``lam > 0``."""
    lam = _check_exponent(lam)
    if lam == 1.0:
        return a
    return BNN(
        a.t_pos ** lam,
        1.0 - (1.0 - a.i_pos) ** lam,
        1.0 - (1.0 - a.f_pos) ** lam,
        -(1.0 - (1.0 - (-a.t_neg)) ** lam),
        -((-a.i_neg) ** lam),
        -((-a.f_neg) ** lam),
    )


def add(a1: BNN, a2: BNN) -> BNN:
    """Sum of two numbers; ``ADD_IDENTITY`` is its neutral element."""
    return BNN(
        _dual(a1.t_pos, a2.t_pos),
        a1.i_pos * a2.i_pos,
        a1.f_pos * a2.f_pos,
        -(a1.t_neg * a2.t_neg),
        -_dual(-a1.i_neg, -a2.i_neg),
        -_dual(-a1.f_neg, -a2.f_neg),
    )


def multiply(a1: BNN, a2: BNN) -> BNN:
    """Product of two numbers; ``MULTIPLY_IDENTITY`` is its neutral element."""
    return BNN(
        a1.t_pos * a2.t_pos,
        _dual(a1.i_pos, a2.i_pos),
        _dual(a1.f_pos, a2.f_pos),
        -_dual(-a1.t_neg, -a2.t_neg),
        -(a1.i_neg * a2.i_neg),
        -(a1.f_neg * a2.f_neg),
    )


def score(a: BNN) -> float:
    """Score in ``[0, 1]``; the all-zero number scores 0.5."""
    return (a.t_pos + 1.0 - a.i_pos + 1.0 - a.f_pos + 1.0
            + a.t_neg - a.i_neg - a.f_neg) / 6.0


def accuracy(a: BNN) -> float:
    """Accuracy ``T+ - F+ + T- - F-``, in ``[-2, 2]``."""
    return a.t_pos - a.f_pos + a.t_neg - a.f_neg


def certainty(a: BNN) -> float:
    """Certainty ``T+ - F-``, in ``[0, 2]``."""
    return a.t_pos - a.f_neg


def _order(x, y, tol):
    if abs(x - y) <= tol:
        return Ordering.EQUAL
    return Ordering.GREATER if x > y else Ordering.LESS


def compare(a1: BNN, a2: BNN, tol: float = DEFAULT_TOLERANCE) -> Ordering:
    """Order two numbers by score, then accuracy, then certainty.

    Two functionals within ``tol`` of each other count as tied and the next
    one decides.
    """
    for f in (score, accuracy, certainty):
        result = _order(f(a1), f(a2), tol)
        if result is not Ordering.EQUAL:
            return result
    return Ordering.EQUAL
