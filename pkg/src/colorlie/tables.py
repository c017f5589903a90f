"""JSON spec files and dimension tables."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .groups import FiniteAbelianGroup
from .series import GeneratorClass, GradingSpec

DEFAULT_MAX_DEGREE = 12


class SpecError(ValueError):
    """A spec file is unreadable or violates a grading invariant."""


def parse_spec(data: dict, max_degree: int | None = None) -> GradingSpec:
    """Build a :class:`GradingSpec` from the decoded JSON object.

    ``{"group": {"moduli": [...], "negatives": [[...], ...]},
    "generators": [{"label": [...] | "even" | "odd", "count": k}, ...],
    "maxDegree": N}``; the group block is optional.
    """
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    try:
        n = max_degree if max_degree is not None else data.get("maxDegree", DEFAULT_MAX_DEGREE)
        gens = data["generators"]
        if not isinstance(gens, list) or not gens:
            raise SpecError("'generators' must be a nonempty list")
        group = None
        if data.get("group") is not None:
            g = data["group"]
            group = FiniteAbelianGroup(tuple(g["moduli"]), frozenset(tuple(x) for x in g.get("negatives", [])))
        classes = []
        for entry in gens:
            label, count = entry["label"], entry["count"]
            if isinstance(count, bool) or not isinstance(count, int):
                raise SpecError(f"generator count {count!r} is not an integer")
            if group is None:
                if label not in ("even", "odd"):
                    raise SpecError(f"without a group block a label must be 'even' or 'odd', got {label!r}")
                classes.append(GeneratorClass(count, label == "odd"))
            else:
                if isinstance(label, str):
                    raise SpecError(f"with a group block labels must be group elements, got {label!r}")
                elem = group.element(label)
                classes.append(GeneratorClass(count, group.is_odd(elem), elem))
        return GradingSpec(tuple(classes), n, group)
    except SpecError:
        raise
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed spec: {exc!r}") from exc
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def load_spec(path, max_degree: int | None = None) -> GradingSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read spec file {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file {path} is not valid JSON: {exc.msg}") from exc
    return parse_spec(data, max_degree)


def spec_to_json(spec: GradingSpec) -> dict:
    out = {}
    if spec.group is not None:
        out["group"] = {
            "moduli": list(spec.group.moduli),
            "negatives": sorted(list(g) for g in spec.group.negatives),
        }
        gens = [{"label": list(c.label), "count": c.count} for c in spec.classes]
    else:
        gens = [{"label": "odd" if c.odd else "even", "count": c.count} for c in spec.classes]
    out["generators"] = gens
    out["maxDegree"] = spec.max_degree
    return out


def spec_digest(spec: GradingSpec) -> str:
    canonical = json.dumps(spec_to_json(spec), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


@dataclass(frozen=True)
class DimensionRow:
    multidegree: tuple[int, ...] | None
    total_degree: int
    dim: int
    method: str
    group_element: tuple[int, ...] | None = None

    def sort_key(self):
        return (self.total_degree, self.multidegree or (), self.group_element or ())

    def to_json(self) -> dict:
        return {
            "multidegree": list(self.multidegree) if self.multidegree is not None else None,
            "totalDegree": self.total_degree,
            "groupElement": list(self.group_element) if self.group_element is not None else None,
            "dim": self.dim,
            "method": self.method,
        }

    @classmethod
    def from_json(cls, d: dict) -> DimensionRow:
        md = d.get("multidegree")
        ge = d.get("groupElement")
        return cls(
            tuple(md) if md is not None else None,
            int(d["totalDegree"]),
            int(d["dim"]),
            d["method"],
            tuple(ge) if ge is not None else None,
        )


METHODS = ("closed-form", "series", "oracle")


@dataclass
class DimensionTable:
    """Rows sorted by total degree, then multidegree.

    A row with ``multidegree`` ``None`` is the aggregate over a group fiber.
    """

    rows: list[DimensionRow]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            if not isinstance(row.dim, int) or row.dim < 0:
                raise ValueError(f"row {row} has a non-dimension value")
            if row.method not in METHODS:
                raise ValueError(f"unknown method {row.method!r}")
        self.rows = sorted(self.rows, key=DimensionRow.sort_key)

    @classmethod
    def build(cls, rows, spec: GradingSpec, prime: int | None = None, **extra) -> DimensionTable:
        meta = {
            "specDigest": spec_digest(spec),
            "truncation": spec.max_degree,
            "prime": int(prime) if prime is not None else None,
            "toolVersion": __version__,
        }
        meta.update(extra)
        return cls(list(rows), meta)

    def to_json(self) -> str:
        return json.dumps(
            {"metadata": self.metadata, "rows": [r.to_json() for r in self.rows]},
            indent=2,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> DimensionTable:
        data = json.loads(text)
        return cls([DimensionRow.from_json(r) for r in data["rows"]], data["metadata"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["multidegree", "totalDegree", "groupElement", "dim", "method"])
        for r in self.rows:
            writer.writerow([
                " ".join(map(str, r.multidegree)) if r.multidegree is not None else "",
                r.total_degree,
                " ".join(map(str, r.group_element)) if r.group_element is not None else "",
                r.dim,
                r.method,
            ])
        return buf.getvalue()
