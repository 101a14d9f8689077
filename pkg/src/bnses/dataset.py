"""Dataset documents: parsing, validation and canonical serialization.

A dataset is a JSON document::

    {
      "universe": ["u1", "u2"],
      "experts": ["p", "q"],
      "parameters": ["cheap"],
      "records": [
        {"parameter": "cheap", "negated": false, "expert": "p", "opinion": 1,
         "values": {"u1": [0.3, 0.5, 0.7, -0.2, -0.3, -0.4]}}
      ]
    }

Each value array is ``[T+, I+, F+, T-, I-, F-]``.  Parsing is strict: any
out-of-range component, duplicate key or undeclared id is rejected, never
clamped.  :func:`serialize` emits records in canonical key order with
shortest round-trip floats, so ``serialize(parse(text))`` is idempotent.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .errors import DomainError, ParseError, ValidationError
from .number import BipolarNeutrosophicNumber as BNN
from .softset import AssessmentKey, Opinion, ParameterLiteral, SoftExpertSet

__all__ = ["Dataset", "parse", "serialize", "load", "dump", "export_ranking"]

_LABELS = ("T+", "I+", "F+", "T-", "I-", "F-")
_RECORD_FIELDS = {"parameter", "negated", "expert", "opinion", "values"}
_TOP_FIELDS = ("universe", "experts", "parameters", "records")


@dataclass(frozen=True)
class Dataset:
    """Universe, experts and parameters as declared, plus one soft expert set."""

    universe: tuple[str, ...]
    experts: tuple[str, ...]
    parameters: tuple[str, ...]
    set: SoftExpertSet = field(default_factory=SoftExpertSet)

    def __post_init__(self):
        for name in ("universe", "experts", "parameters"):
            ids = tuple(getattr(self, name))
            object.__setattr__(self, name, ids)
            seen = set()
            for i, x in enumerate(ids):
                if not isinstance(x, str) or not x:
                    raise ValidationError("ids must be nonempty strings", f"{name}[{i}]")
                if x in seen:
                    raise ValidationError(f"duplicate id {x!r}", f"{name}[{i}]")
                seen.add(x)
        if not isinstance(self.set, SoftExpertSet):
            object.__setattr__(self, "set", SoftExpertSet(self.set))
        universe, experts, params = map(set, (self.universe, self.experts, self.parameters))
        for k, row in self.set.items():
            if k.parameter.name not in params:
                raise ValidationError(f"undeclared parameter {k.parameter.name!r}", f"record {k}")
            if k.expert not in experts:
                raise ValidationError(f"undeclared expert {k.expert!r}", f"record {k}")
            for u in row:
                if u not in universe:
                    raise ValidationError(f"undeclared element {u!r}", f"record {k}")

    def replace_set(self, new_set: SoftExpertSet) -> "Dataset":
        return Dataset(self.universe, self.experts, self.parameters, new_set)

    def merge(self, other: "Dataset", new_set: SoftExpertSet) -> "Dataset":
        """Dataset over the sorted union of both declarations.

        Sorting keeps binary operations symmetric in their operands.
        """
        return Dataset(
            sorted(set(self.universe) | set(other.universe)),
            sorted(set(self.experts) | set(other.experts)),
            sorted(set(self.parameters) | set(other.parameters)),
            new_set,
        )


def _reject_constant(name):
    raise ValueError(f"non-finite number {name}")


def _unique_pairs(pairs):
    obj = {}
    for k, v in pairs:
        if k in obj:
            raise ValueError(f"duplicate object key {k!r}")
        obj[k] = v
    return obj


def _is_number(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _string_list(doc, name):
    ids = doc.get(name)
    if not isinstance(ids, list):
        raise ValidationError("expected a list of strings", name)
    for i, x in enumerate(ids):
        if not isinstance(x, str):
            raise ValidationError(f"expected a string, got {x!r}", f"{name}[{i}]")
    return ids


def _parse_record(i, rec):
    where = f"records[{i}]"
    if not isinstance(rec, dict):
        raise ValidationError("record must be an object", where)
    unknown = set(rec) - _RECORD_FIELDS
    if unknown:
        raise ValidationError(f"unknown field(s) {sorted(unknown)}", where)
    for name in ("parameter", "expert", "opinion", "values"):
        if name not in rec:
            raise ValidationError(f"missing field {name!r}", where)
    parameter, expert = rec["parameter"], rec["expert"]
    if not isinstance(parameter, str) or not parameter:
        raise ValidationError("parameter must be a nonempty string", where)
    if not isinstance(expert, str) or not expert:
        raise ValidationError("expert must be a nonempty string", where)
    negated = rec.get("negated", False)
    if not isinstance(negated, bool):
        raise ValidationError("negated must be true or false", where)
    opinion = rec["opinion"]
    if isinstance(opinion, bool) or opinion not in (0, 1):
        raise ValidationError(f"opinion must be 1 or 0, got {opinion!r}", where)
    k = AssessmentKey(ParameterLiteral(parameter, negated), expert, Opinion(int(opinion)))
    values = rec["values"]
    if not isinstance(values, dict):
        raise ValidationError("values must be an object of element -> six numbers", where)
    row = {}
    for u, arr in values.items():
        at = f"{where} {k} element {u!r}"
        if not u:
            raise ValidationError("element id must be nonempty", at)
        if not isinstance(arr, list) or len(arr) != 6:
            raise ValidationError("expected an array of six numbers", at)
        for label, x in zip(_LABELS, arr):
            if not _is_number(x):
                raise ValidationError(f"{label} must be a number, got {x!r}", at)
        try:
            row[u] = BNN(*arr)
        except DomainError as exc:
            raise ValidationError(str(exc), at) from None
    return k, row


def parse(text: bytes | str) -> Dataset:
    """Parse and validate a dataset document."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(text, parse_constant=_reject_constant,
                         object_pairs_hook=_unique_pairs)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(doc, dict):
        raise ValidationError("top level must be an object")
    unknown = set(doc) - set(_TOP_FIELDS)
    if unknown:
        raise ValidationError(f"unknown top-level field(s) {sorted(unknown)}")
    universe, experts, parameters = (_string_list(doc, n) for n in _TOP_FIELDS[:3])
    records = doc.get("records", [])
    if not isinstance(records, list):
        raise ValidationError("expected a list of records", "records")
    entries = {}
    for i, rec in enumerate(records):
        k, row = _parse_record(i, rec)
        if k in entries:
            raise ValidationError(f"duplicate assessment key {k}", f"records[{i}]")
        entries[k] = row
    return Dataset(universe, experts, parameters, SoftExpertSet(entries))


def _dumps(x):
    return json.dumps(x, ensure_ascii=False)


def serialize(dataset: Dataset) -> bytes:
    """Canonical UTF-8 document: one record per line, keys in canonical order."""
    lines = ["{"]
    for name in _TOP_FIELDS[:3]:
        lines.append(f'  "{name}": {_dumps(list(getattr(dataset, name)))},')
    records = []
    for k, row in dataset.set.items():
        values = ", ".join(
            f"{_dumps(u)}: [{', '.join(repr(x) for x in v)}]" for u, v in row.items())
        records.append(
            f'    {{"parameter": {_dumps(k.parameter.name)}, '
            f'"negated": {_dumps(k.parameter.negated)}, '
            f'"expert": {_dumps(k.expert)}, "opinion": {int(k.opinion)}, '
            f'"values": {{{values}}}}}')
    if records:
        lines.append('  "records": [')
        lines.append(",\n".join(records))
        lines.append("  ]")
    else:
        lines.append('  "records": []')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def load(path) -> Dataset:
    with open(path, "rb") as fh:
        return parse(fh.read())


def dump(dataset: Dataset, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize(dataset))


def _fixed(x):
    # round first so that -1e-12 prints as 0.000000, not -0.000000
    return f"{round(x, 6) + 0.0:.6f}"


def export_ranking(ranking) -> bytes:
    """Comma-separated ranking table with a header row and LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rank", "element", "agree_score", "disagree_score", "final_score"])
    for alt in ranking:
        writer.writerow([alt.rank, alt.element, _fixed(alt.agree_score),
                         _fixed(alt.disagree_score), _fixed(alt.final_score)])
    return buf.getvalue().encode("utf-8")
