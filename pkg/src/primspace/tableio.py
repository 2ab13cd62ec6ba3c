"""File formats: Cayley tables (text and JSON), homomorphisms, witnesses.

Text table format: `#` starts a comment, blank lines are skipped, the
first data line is the order n, the next n lines are the table rows as
n space-separated element indices (0-based).  The JSON equivalent is an
object {"order": n, "table": [[...], ...]}.

A homomorphism file is JSON: {"source": ..., "target": ..., "map": [...]}
where source/target are inline table objects, "@name" registry
references, or paths (resolved relative to the homomorphism file).
"""

from __future__ import annotations

import json
import os

from .core import FiniteSemigroup, SemigroupHom, check_homomorphism, validate_table
from .errors import OutOfRangeError
from .modact import ActionWitness, ModuleSpace
from .registry import REGISTRY

SCHEMA_VERSION = 1


def parse_table_text(text: str) -> FiniteSemigroup:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise OutOfRangeError("no data lines in table text")
    try:
        order = int(lines[0])
    except ValueError:
        raise OutOfRangeError(f"first data line must be the order, got {lines[0]!r}")
    if len(lines) != order + 1:
        raise OutOfRangeError(
            f"expected {order} rows after the order line, got {len(lines) - 1}"
        )
    table = []
    for line in lines[1:]:
        try:
            table.append([int(tok) for tok in line.split()])
        except ValueError:
            raise OutOfRangeError(f"bad table row {line!r}")
    return validate_table(order, table)


def parse_table_json(obj) -> FiniteSemigroup:
    if not isinstance(obj, dict) or "order" not in obj or "table" not in obj:
        raise OutOfRangeError('JSON table needs "order" and "table" keys')
    return validate_table(obj["order"], obj["table"])


def parse_table(text: str) -> FiniteSemigroup:
    """Parse either format, sniffing JSON by a leading brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_table_json(json.loads(text))
    return parse_table_text(text)


def format_table_text(sg: FiniteSemigroup, name: str | None = None) -> str:
    lines = []
    if name:
        lines.append(f"# {name}")
    lines.append(str(sg.order))
    for row in sg.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def table_to_json(sg: FiniteSemigroup) -> dict:
    return {"order": sg.order, "table": [list(r) for r in sg.table]}


def load_semigroup(ref: str, base_dir: str = ".") -> FiniteSemigroup:
    """Resolve "@name", a file path, or raise; file contents are sniffed."""
    if ref.startswith("@"):
        name = ref[1:]
        if name not in REGISTRY:
            raise OutOfRangeError(
                f"unknown registry name {name!r}; known: {sorted(REGISTRY)}"
            )
        return REGISTRY[name]
    path = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
    with open(path, "r", encoding="utf-8") as fh:
        return parse_table(fh.read())


def _resolve_end(spec, base_dir: str) -> FiniteSemigroup:
    if isinstance(spec, dict):
        return parse_table_json(spec)
    if isinstance(spec, str):
        return load_semigroup(spec, base_dir)
    raise OutOfRangeError(f"cannot interpret semigroup reference {spec!r}")


def load_hom(path: str) -> SemigroupHom:
    """Load and verify a homomorphism file."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, dict) or "map" not in obj:
        raise OutOfRangeError('homomorphism file needs "source", "target", "map"')
    base = os.path.dirname(os.path.abspath(path))
    source = _resolve_end(obj.get("source"), base)
    target = _resolve_end(obj.get("target"), base)
    return check_homomorphism(source, target, obj["map"])


def witness_to_json(w: ActionWitness) -> dict:
    return {
        "p": w.space.p,
        "k": w.space.k,
        "rho": [[list(row) for row in m] for m in w.rho],
    }


def witness_from_json(obj) -> ActionWitness:
    if not isinstance(obj, dict) or not {"p", "k", "rho"} <= set(obj):
        raise OutOfRangeError('witness JSON needs "p", "k", "rho"')
    space = ModuleSpace(obj["p"], obj["k"])
    rho = tuple(tuple(tuple(row) for row in m) for m in obj["rho"])
    return ActionWitness(space, rho)
