"""Reading group, form and morphism descriptions from JSON files.

Group record::

    {"kind": "named", "family": "symmetric", "parameter": 3}
    {"kind": "abelian", "orders": [2, 2]}
    {"kind": "permutation", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}
    {"kind": "table", "elements": ["e", "a"], "table": [["e", "a"], ["a", "e"]]}

Form record: ``{"group": <group record or path>, "values": {label: "a/b"}}``.
Morphism record: ``{"source": ..., "target": ..., "map": {label: label}}`` where
source and target are form records (or paths to them) for pre-metric
morphisms, or group records for plain homomorphisms.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .errors import MalformedSpec
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, GroupHom, build_group
from .phase import Phase
from .premetric import PreMetricGroup, PremetricMorphism, validate_form

FORM_FIELDS = {"group", "values", "bicharacter"}
MORPHISM_FIELDS = {"source", "target", "map"}


def read_json(path: str | Path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MalformedSpec(f"{path}: cannot read ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSpec(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _resolve(ref, base: Path | None):
    """A nested record is either inline or a path relative to the referencing file."""
    if isinstance(ref, str):
        p = Path(ref)
        if base is not None and not p.is_absolute():
            p = base / p
        return read_json(p), p.parent
    return ref, base


def load_group(ref, base: Path | None = None, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    record, _ = _resolve(ref, base)
    return build_group(record, max_order)


def load_form(ref, base: Path | None = None, max_order: int = DEFAULT_MAX_ORDER) -> PreMetricGroup:
    record, base = _resolve(ref, base)
    if not isinstance(record, dict):
        raise MalformedSpec("form description must be a mapping")
    extra = set(record) - FORM_FIELDS
    if extra:
        raise MalformedSpec(f"unknown fields in form record: {sorted(extra)}")
    if "group" not in record or "values" not in record:
        raise MalformedSpec("form record needs 'group' and 'values'")
    G = load_group(record["group"], base, max_order)
    raw = record["values"]
    if not isinstance(raw, dict):
        raise MalformedSpec("'values' must map element labels to fractions")
    try:
        values = {G.index(str(k)): Phase.parse(v) for k, v in raw.items()}
    except ValueError as exc:
        raise MalformedSpec(str(exc)) from None
    return PreMetricGroup(G, validate_form(G, values), bicharacter=record.get("bicharacter"))


def load_morphism(ref, base: Path | None = None,
                  max_order: int = DEFAULT_MAX_ORDER) -> PremetricMorphism:
    record, base = _resolve(ref, base)
    if not isinstance(record, dict):
        raise MalformedSpec("morphism description must be a mapping")
    extra = set(record) - MORPHISM_FIELDS
    if extra:
        raise MalformedSpec(f"unknown fields in morphism record: {sorted(extra)}")
    missing = MORPHISM_FIELDS - set(record)
    if missing:
        raise MalformedSpec(f"morphism record is missing {sorted(missing)}")
    src = load_form(record["source"], base, max_order)
    tgt = load_form(record["target"], base, max_order)
    mapping = {str(k): str(v) for k, v in record["map"].items()}
    return PremetricMorphism(src, tgt, GroupHom.from_labels(src.group, tgt.group, mapping))


def form_record(M: PreMetricGroup, group_record: dict) -> dict:
    return {"group": group_record, "values": M.values_by_label()}

