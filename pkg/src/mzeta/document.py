"""Motive documents: YAML descriptions of atoms, classes and split motives.

Grammar (all keys optional except where noted)::

    atoms:                      # declaration order matters for relations
      - name: h1                # required, identifier, not L or T
        parity: minus           # required: plus | minus | free
        bound: 2                # required, >= 1 (e, f, or declared order)
        images: {2: "L"}        # index -> polynomial text
    relations:                  # extra rewrites, applied after images
      - symbol: "Sym3(h1)"
        value: "L*h1"
    expressions:                # named classes
      X: "1 + h1 + L"
    motives:                    # plus/minus split with weight (dimension)
      E: {plus: "1 + L", minus: "h1", weight: 1}
    tasks:                      # optional batch of CLI-style tasks
      - {zeta: X, order: 6}

Polynomial text uses ``+ - * ^`` and parentheses over ``L``, integers and
atom symbols (``h1``, ``Sym2(h1)``, ``Alt3(a)``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from .cache import UniversalCache
from .errors import MZetaError, UsageError
from .k0 import PARITIES, AtomSpec, K0Element, K0Ring, Relation
from .zeta import Motive


@dataclass
class MotiveDocument:
    atoms: list[AtomSpec] = field(default_factory=list)
    relations: list[Relation] = field(default_factory=list)
    expressions: dict[str, str] = field(default_factory=dict)
    motives: dict[str, dict[str, Any]] = field(default_factory=dict)
    tasks: list[dict[str, Any]] = field(default_factory=list)
    _ring: K0Ring | None = field(default=None, repr=False, compare=False)

    # -- parsing --------------------------------------------------------------
    @classmethod
    def from_data(cls, data: Any) -> MotiveDocument:
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise UsageError("motive document must be a mapping")
        unknown = set(data) - {"atoms", "relations", "expressions", "motives", "tasks"}
        if unknown:
            raise UsageError(f"unknown document sections: {sorted(unknown)}")
        atoms = []
        for raw in data.get("atoms") or []:
            if not isinstance(raw, dict) or not {"name", "parity", "bound"} <= set(raw):
                raise UsageError(f"atom entries need name, parity and bound: {raw!r}")
            if raw["parity"] not in PARITIES:
                raise UsageError(f"atom {raw['name']!r}: parity must be one of {PARITIES}")
            images = {}
            for k, v in (raw.get("images") or {}).items():
                try:
                    images[int(k)] = str(v)
                except (TypeError, ValueError):
                    raise UsageError(f"atom {raw['name']!r}: image index {k!r} is not an integer") from None
            bound = raw["bound"]
            if not isinstance(bound, int) or isinstance(bound, bool):
                raise UsageError(f"atom {raw['name']!r}: bound must be an integer")
            atoms.append(AtomSpec(str(raw["name"]), raw["parity"], bound, images))
        relations = []
        for raw in data.get("relations") or []:
            if not isinstance(raw, dict) or set(raw) != {"symbol", "value"}:
                raise UsageError(f"relation entries need exactly symbol and value: {raw!r}")
            relations.append(Relation(str(raw["symbol"]), str(raw["value"])))
        expressions = {str(k): str(v) for k, v in (data.get("expressions") or {}).items()}
        motives = {}
        for name, raw in (data.get("motives") or {}).items():
            if not isinstance(raw, dict) or not {"plus", "minus", "weight"} <= set(raw):
                raise UsageError(f"motive {name!r} needs plus, minus and weight")
            motives[str(name)] = {"plus": str(raw["plus"]), "minus": str(raw["minus"]), "weight": int(raw["weight"])}
        tasks = list(data.get("tasks") or [])
        doc = cls(atoms, relations, expressions, motives, tasks)
        doc.ring()  # resolve references eagerly
        for name in expressions:
            doc.expression(name)
        for name in motives:
            doc.motive(name)
        return doc

    @classmethod
    def from_text(cls, text: str) -> MotiveDocument:
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise UsageError(f"malformed motive document: {exc}") from exc
        return cls.from_data(data)

    @classmethod
    def load(cls, path: str | Path) -> MotiveDocument:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
        return cls.from_text(text)

    # -- resolution -----------------------------------------------------------
    def ring(self, cache: UniversalCache | None = None) -> K0Ring:
        if self._ring is None:
            self._ring = K0Ring(self.atoms, self.relations, cache=cache)
        return self._ring

    def expression(self, name: str) -> K0Element:
        ring = self.ring()
        if name in self.expressions:
            return ring.element(self.expressions[name])
        if name in self.motives:
            return self.motive(name).total
        raise UsageError(f"unknown expression {name!r}")

    def motive(self, name: str) -> Motive:
        if name not in self.motives:
            raise UsageError(f"unknown motive {name!r}")
        raw = self.motives[name]
        ring = self.ring()
        return Motive(ring, ring.element(raw["plus"]), ring.element(raw["minus"]), raw["weight"], name)

    # -- output ---------------------------------------------------------------
    def to_data(self) -> dict[str, Any]:
        ring = self.ring()
        out: dict[str, Any] = {}
        if self.atoms:
            out["atoms"] = [
                {"name": a.name, "parity": a.parity, "bound": a.bound,
                 **({"images": {i: a.images[i] for i in sorted(a.images)}} if a.images else {})}
                for a in self.atoms
            ]
        if self.relations:
            out["relations"] = [{"symbol": r.symbol, "value": r.value} for r in self.relations]
        if self.expressions:
            out["expressions"] = {k: ring.element(v).render() for k, v in self.expressions.items()}
        if self.motives:
            out["motives"] = {
                k: {"plus": ring.element(v["plus"]).render(), "minus": ring.element(v["minus"]).render(),
                    "weight": v["weight"]}
                for k, v in self.motives.items()
            }
        if self.tasks:
            out["tasks"] = self.tasks
        return out

    def dump(self) -> str:
        return yaml.safe_dump(self.to_data(), sort_keys=False, default_flow_style=False)


def load_document(path: str | Path) -> MotiveDocument:
    try:
        return MotiveDocument.load(path)
    except MZetaError:
        raise
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid motive document: {exc}") from exc


PRESETS: dict[str, str] = {
    "point": """
expressions:
  X: "1"
motives:
  X: {plus: "1", minus: "0", weight: 0}
""",
    "projective-line": """
expressions:
  X: "1 + L"
motives:
  X: {plus: "1 + L", minus: "0", weight: 1}
""",
    "elliptic": """
atoms:
  - {name: h1, parity: minus, bound: 2, images: {2: "L"}}
expressions:
  X: "1 + h1 + L"
motives:
  X: {plus: "1 + L", minus: "h1", weight: 1}
""",
    "elliptic-pair": """
atoms:
  - {name: a, parity: minus, bound: 2, images: {2: "L"}}
  - {name: b, parity: minus, bound: 2, images: {2: "L"}}
motives:
  E1: {plus: "1 + L", minus: "a", weight: 1}
  E2: {plus: "1 + L", minus: "b", weight: 1}
""",
}


def preset(name: str) -> MotiveDocument:
    if name not in PRESETS:
        raise UsageError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    return MotiveDocument.from_text(PRESETS[name])
