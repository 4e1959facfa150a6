"""Parsers for the line-oriented group and model spec formats.

Group files:
    perm (1 2 3)(4 5)        generators in disjoint-cycle notation
    table n                  followed by n rows of n indices
    product fileA fileB      direct product of two specs
    # comment

Model files:
    torus_rank d
    acting_group <file or builtin name>
    matrix <element-index> <d*d integers row-major>
    extra_factor <file or builtin name>
"""

from __future__ import annotations

import re
from pathlib import Path

from . import corpus
from .compact import CompactModel, build_model
from .errors import ParseError
from .groups import (
    DEFAULT_CLOSURE_CAP,
    FiniteGroup,
    Perm,
    close_generators,
    direct_product,
    make_group,
)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, line: int | None = None) -> list[list[int]]:
    """Disjoint cycles on 1-based points, e.g. "(1 2 3)(4 5)"."""
    stripped = text.replace(" ", "")
    if stripped != "()" and ("(" not in text or ")" not in text):
        raise ParseError(f"malformed cycle notation: {text!r}", line)
    rebuilt = "".join(f"({c})" for c in _CYCLE_RE.findall(text)).replace(" ", "")
    if rebuilt != stripped:
        raise ParseError(f"malformed cycle notation: {text!r}", line)
    cycles = []
    for body in _CYCLE_RE.findall(text):
        if not body.strip():
            continue
        try:
            pts = [int(tok) for tok in body.split()]
        except ValueError:
            raise ParseError(f"non-integer point in cycle: {body!r}", line)
        if any(p < 1 for p in pts) or len(set(pts)) != len(pts):
            raise ParseError(f"invalid cycle points: {body!r}", line)
        cycles.append(pts)
    return cycles


def _perm_from_cycles(cycles: list[list[int]], degree: int) -> Perm:
    mapping = list(range(degree))
    for cyc in cycles:
        for i, p in enumerate(cyc):
            mapping[p - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(mapping)


def parse_group_file(path: str | Path, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    perm_cycles: list[list[list[int]]] = []
    table: list[list[int]] | None = None
    expect_rows = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if expect_rows:
            try:
                row = [int(tok) for tok in line.split()]
            except ValueError:
                raise ParseError(f"bad table row: {line!r}", lineno)
            table.append(row)
            expect_rows -= 1
            continue
        verb, _, rest = line.partition(" ")
        if verb == "perm":
            perm_cycles.append(parse_cycles(rest, lineno))
        elif verb == "table":
            if not rest.strip().isdigit():
                raise ParseError(f"table needs a size: {line!r}", lineno)
            expect_rows = int(rest)
            table = []
        elif verb == "product":
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError("product needs exactly two operands", lineno)
            a = resolve_group(parts[0], cap=cap, relative_to=path.parent)
            b = resolve_group(parts[1], cap=cap, relative_to=path.parent)
            return direct_product(a, b, cap=cap, name=f"{a.name} x {b.name}")
        else:
            raise ParseError(f"unknown directive {verb!r}", lineno)
    if expect_rows:
        raise ParseError(f"table ended early, {expect_rows} rows missing")
    if table is not None:
        try:
            return make_group(table, name=path.stem)
        except ValueError as exc:
            raise ParseError(f"bad Cayley table: {exc}")
    if not perm_cycles:
        raise ParseError("no generators and no table in group spec")
    degree = max((p for cyc in perm_cycles for c in cyc for p in c), default=1)
    perms = [_perm_from_cycles(cyc, degree) for cyc in perm_cycles]
    return close_generators(perms, cap=cap, name=path.stem)


def resolve_group(
    name_or_path: str,
    cap: int = DEFAULT_CLOSURE_CAP,
    relative_to: Path | None = None,
) -> FiniteGroup:
    """Builtin name first, then filesystem path."""
    g = corpus.builtin_group(name_or_path)
    if g is not None:
        return g
    path = Path(name_or_path)
    if relative_to is not None and not path.is_absolute():
        candidate = relative_to / path
        if candidate.exists():
            path = candidate
    if not path.exists():
        raise ParseError(f"not a builtin group and not a file: {name_or_path!r}")
    return parse_group_file(path, cap=cap)


def parse_model_file(path: str | Path, cap: int = DEFAULT_CLOSURE_CAP) -> CompactModel:
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    rank: int | None = None
    acting: FiniteGroup | None = None
    extra: FiniteGroup | None = None
    matrices: dict[int, list[list[int]]] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        verb, _, rest = line.partition(" ")
        rest = rest.strip()
        if verb == "torus_rank":
            if not rest.lstrip("-").isdigit():
                raise ParseError(f"bad torus rank: {rest!r}", lineno)
            rank = int(rest)
        elif verb == "acting_group":
            acting = resolve_group(rest, cap=cap, relative_to=path.parent)
        elif verb == "extra_factor":
            extra = resolve_group(rest, cap=cap, relative_to=path.parent)
        elif verb == "matrix":
            if rank is None:
                raise ParseError("matrix line before torus_rank", lineno)
            toks = rest.split()
            try:
                vals = [int(t) for t in toks]
            except ValueError:
                raise ParseError(f"bad matrix line: {line!r}", lineno)
            if len(vals) != 1 + rank * rank:
                raise ParseError(
                    f"matrix needs element index plus {rank * rank} entries", lineno
                )
            g = vals[0]
            matrices[g] = [
                vals[1 + i * rank: 1 + (i + 1) * rank] for i in range(rank)
            ]
        else:
            raise ParseError(f"unknown directive {verb!r}", lineno)
    if rank is None:
        raise ParseError("model spec is missing torus_rank")
    if acting is None:
        raise ParseError("model spec is missing acting_group")
    return build_model(rank, acting, matrices, extra, name=path.stem)
