"""JSON encoding of maps, operations, config files and homotopy paths.

Floats are written with ``repr`` (shortest round-tripping form, so bit-exact);
rationals are written as ``"p/q"`` strings.  Key order is fixed so that equal
inputs give byte-identical files.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .instances import by_name
from .minkowski import MinkPoint
from .ortho import MultiMorphism, OrthoInstance, evaluate
from .rect import RectMap

CONFIG_VERSION = 1

RELATION_KIND = {"cd": "ball", "disc": "ball", "cdiam": "diamond", "diam": "diamond"}


class ConfigError(ValueError):
    pass


def encode_number(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else str(v.numerator)
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def decode_number(v):
    if isinstance(v, bool) or v is None:
        raise ConfigError(f"expected a number, got {v!r}")
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError as exc:
            raise ConfigError(f"bad rational string {v!r}") from exc
    if isinstance(v, (int, float)):
        return v
    raise ConfigError(f"expected a number, got {v!r}")


def rect_to_json(f: RectMap) -> dict:
    return {"scale": encode_number(f.scale), "translate": [encode_number(c) for c in f.translate.coords]}


def rect_from_json(obj) -> RectMap:
    try:
        scale, translate = obj["scale"], obj["translate"]
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"map needs 'scale' and 'translate': {obj!r}") from exc
    try:
        return RectMap(decode_number(scale), MinkPoint(tuple(decode_number(c) for c in translate)))
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from exc


def instance_relation(inst: OrthoInstance) -> str:
    for key in RELATION_KIND:
        if by_name(key, inst.dimension, inst.tolerance) == inst:
            return key
    raise ConfigError(f"instance {inst.name} has no config relation name")


def instance_to_json(inst: OrthoInstance) -> dict:
    return {
        "name": inst.name,
        "n": inst.dimension,
        "kind": inst.shape_kind.value,
        "relation": instance_relation(inst),
        "tolerance": inst.tolerance,
    }


def multimorphism_to_json(mm: MultiMorphism) -> dict:
    return {"instance": instance_to_json(mm.instance), "maps": [rect_to_json(f) for f in mm.maps]}


@dataclass
class ConfigFile:
    n: int
    kind: str
    relation: str
    maps: list
    seed: int | None = None
    version: int = CONFIG_VERSION

    def instance(self, tolerance: float | None = None) -> OrthoInstance:
        return by_name(self.relation, self.n, tolerance)

    def operation(self, tolerance: float | None = None) -> MultiMorphism:
        """Evaluate the maps without rejecting violations (callers decide)."""
        return evaluate(self.instance(tolerance), self.maps)

    def to_json(self) -> dict:
        out = {
            "version": self.version,
            "n": self.n,
            "kind": self.kind,
            "relation": self.relation,
            "maps": [rect_to_json(f) for f in self.maps],
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def dumps(self) -> str:
        return dumps(self.to_json())

    @classmethod
    def from_operation(cls, mm: MultiMorphism, seed: int | None = None) -> "ConfigFile":
        rel = instance_relation(mm.instance)
        return cls(mm.instance.dimension, RELATION_KIND[rel], rel, list(mm.maps), seed)

    @classmethod
    def from_json(cls, obj) -> "ConfigFile":
        if not isinstance(obj, dict):
            raise ConfigError("config must be a JSON object")
        if obj.get("version") != CONFIG_VERSION:
            raise ConfigError(f"unsupported config version {obj.get('version')!r}")
        n, relation = obj.get("n"), obj.get("relation")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ConfigError(f"bad dimension {n!r}")
        if relation not in RELATION_KIND:
            raise ConfigError(f"unknown relation {relation!r}")
        if relation != "disc" and n < 2:
            raise ConfigError(f"relation {relation} needs n >= 2")
        kind = obj.get("kind", RELATION_KIND[relation])
        if kind != RELATION_KIND[relation]:
            raise ConfigError(f"relation {relation} requires kind {RELATION_KIND[relation]}, got {kind!r}")
        raw_maps = obj.get("maps")
        if not isinstance(raw_maps, list):
            raise ConfigError("'maps' must be a list")
        maps = [rect_from_json(m) for m in raw_maps]
        for i, f in enumerate(maps):
            if f.dim != n:
                raise ConfigError(f"map {i} has dimension {f.dim}, config has n={n}")
        seed = obj.get("seed")
        return cls(n, kind, relation, maps, seed)

    @classmethod
    def loads(cls, text: str) -> "ConfigFile":
        return cls.from_json(json.loads(text))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def path_to_json(path) -> dict:
    return {
        "version": CONFIG_VERSION,
        "instance": instance_to_json(path.instance),
        "breakpoints": list(path.breakpoints),
        "stage1_constant": path.stage1_constant,
        "samples": [
            {"u": u, "margin": encode_number(mm.margin), "maps": [rect_to_json(f) for f in mm.maps]}
            for u, mm in path.samples
        ],
    }


def path_samples_from_json(obj) -> list:
    """``(u, maps)`` pairs of a serialized path."""
    try:
        return [(float(s["u"]), [rect_from_json(m) for m in s["maps"]]) for s in obj["samples"]]
    except (KeyError, TypeError) as exc:
        raise ConfigError("malformed path file") from exc

