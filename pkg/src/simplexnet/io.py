"""Readers for edge lists, point clouds, exchange records, feature tables, targets and patterns.

Readers take a path or an open text stream. They skip blank lines and ``#`` comments and raise
:class:`ParseError` carrying the 1-based line number of the first bad line.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .complex import Graph, PointCloud
from .mining import AtomicCondition, FeatureTable, MiningError, Pattern, Target


class ParseError(ValueError):
    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


def _name(src, source: str | None) -> str:
    return source or (getattr(src, "name", "<stream>") if hasattr(src, "read") else str(src))


def _lines(src, source: str | None = None):
    """Yield ``(source, lineno, stripped_line)`` from a path or a text stream."""
    if hasattr(src, "read"):
        text = src.read()
    else:
        text = Path(src).read_text()
    source = _name(src, source)
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield source, n, line


def _int(tok: str, source: str, n: int) -> int:
    try:
        v = int(tok.strip())
    except ValueError:
        raise ParseError(source, n, f"expected an integer vertex id, got {tok.strip()!r}") from None
    if v < 0:
        raise ParseError(source, n, f"vertex id {v} is negative")
    return v


def _float(tok: str, source: str, n: int) -> float:
    try:
        return float(tok.strip())
    except ValueError:
        raise ParseError(source, n, f"expected a number, got {tok.strip()!r}") from None


def read_edge_list(fp, source: str | None = None) -> Graph:
    """One ``u,v`` pair per line. A line with a single id declares an isolated vertex."""
    edges, vertices = set(), set()
    src = _name(fp, source)
    for src, n, line in _lines(fp, source):
        toks = line.split(",")
        if len(toks) == 1:
            vertices.add(_int(toks[0], src, n))
            continue
        if len(toks) != 2:
            raise ParseError(src, n, f"expected 'u,v', got {line!r}")
        u, v = _int(toks[0], src, n), _int(toks[1], src, n)
        if u == v:
            raise ParseError(src, n, f"loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    if not edges and not vertices:
        raise ParseError(src, 0, "edge list is empty")
    return Graph.from_edges(edges, vertices)


def read_points(fp, source: str | None = None) -> dict[int, np.ndarray]:
    """``id,x1,...,xn`` rows; an optional non-numeric header line is skipped."""
    pts: dict[int, np.ndarray] = {}
    width = None
    first = True
    src = _name(fp, source)
    for src, n, line in _lines(fp, source):
        toks = line.split(",")
        if first:
            first = False
            try:
                float(toks[0])
            except ValueError:
                continue
        if len(toks) < 2:
            raise ParseError(src, n, "expected 'id,x1,...,xn'")
        vid = _int(toks[0], src, n)
        if vid in pts:
            raise ParseError(src, n, f"duplicate point id {vid}")
        coords = [_float(t, src, n) for t in toks[1:]]
        if width is None:
            width = len(coords)
        elif len(coords) != width:
            raise ParseError(src, n, f"expected {width} coordinates, got {len(coords)}")
        pts[vid] = np.array(coords)
    if not pts:
        raise ParseError(src, 0, "point file is empty")
    return pts


def read_exchanges(fp, source: str | None = None) -> dict[tuple[int, int], float]:
    """``u,v,size`` rows with positive sizes."""
    out = {}
    for src, n, line in _lines(fp, source):
        toks = line.split(",")
        if len(toks) != 3:
            raise ParseError(src, n, f"expected 'u,v,size', got {line!r}")
        u, v = _int(toks[0], src, n), _int(toks[1], src, n)
        size = _float(toks[2], src, n)
        if not size > 0:
            raise ParseError(src, n, f"exchange size must be positive, got {size}")
        out[(min(u, v), max(u, v))] = size
    return out


def read_point_cloud(points, exchanges=None) -> PointCloud:
    sizes = read_exchanges(exchanges) if exchanges is not None else None
    return PointCloud(read_points(points), exchange_size=sizes)


def _csv_rows(fp, source):
    rows = [(src, n, next(csv.reader(io.StringIO(line)))) for src, n, line in _lines(fp, source)]
    if not rows:
        raise ParseError(_name(fp, source), 0, "file is empty")
    return rows


def _ident(tok: str):
    tok = tok.strip()
    try:
        return int(tok)
    except ValueError:
        return tok


def read_feature_table(fp, source: str | None = None) -> FeatureTable:
    """Header ``individual,feature1,...`` followed by one numeric row per individual."""
    rows = _csv_rows(fp, source)
    src, _, header = rows[0]
    names = [h.strip() for h in header[1:]]
    if not names or len(set(names)) != len(names):
        raise ParseError(src, rows[0][1], "header needs unique feature names after the id column")
    ids, cols = [], [[] for _ in names]
    for src, n, row in rows[1:]:
        if len(row) != len(names) + 1:
            raise ParseError(src, n, f"expected {len(names) + 1} fields, got {len(row)}")
        ids.append(_ident(row[0]))
        for col, tok in zip(cols, row[1:]):
            col.append(_float(tok, src, n))
    try:
        return FeatureTable(tuple(ids), dict(zip(names, cols)))
    except MiningError as e:
        raise ParseError(src, 0, str(e)) from None


def read_targets(fp, source: str | None = None) -> list[Target]:
    """Header ``individual,label[,label2...]``; each label column becomes a 0/1 target."""
    rows = _csv_rows(fp, source)
    src, _, header = rows[0]
    names = [h.strip() for h in header[1:]]
    if not names:
        raise ParseError(src, rows[0][1], "header needs at least one label column")
    labels = [{} for _ in names]
    for src, n, row in rows[1:]:
        if len(row) != len(names) + 1:
            raise ParseError(src, n, f"expected {len(names) + 1} fields, got {len(row)}")
        ident = _ident(row[0])
        for lab, tok in zip(labels, row[1:]):
            tok = tok.strip()
            if tok not in ("0", "1"):
                raise ParseError(src, n, f"label must be 0 or 1, got {tok!r}")
            lab[ident] = int(tok)
    return [Target(name, lab) for name, lab in zip(names, labels)]


def parse_patterns(data) -> list[tuple[Pattern, str | None]]:
    """Patterns from decoded JSON.

    Each list item is a condition ``{"feature", "op", "threshold"}``, a list of
    conditions (a conjunction), or ``{"conditions": [...], "target": name}``.
    Returns ``(pattern, target_name_or_None)`` pairs.
    """
    if not isinstance(data, list):
        raise ParseError("<patterns>", 0, "pattern file must hold a JSON list")
    out = []
    for k, item in enumerate(data, start=1):
        target = None
        if isinstance(item, dict) and "conditions" in item:
            target = item.get("target")
            item = item["conditions"]
        conds = item if isinstance(item, list) else [item]
        try:
            pattern = Pattern(
                AtomicCondition(c["feature"], c["op"], c["threshold"]) for c in conds
            )
        except (KeyError, TypeError, MiningError) as e:
            raise ParseError("<patterns>", k, f"bad pattern entry: {e}") from None
        out.append((pattern, target))
    return out


def read_patterns(path) -> list[tuple[Pattern, str | None]]:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(str(path), e.lineno, e.msg) from None
    return parse_patterns(data)
