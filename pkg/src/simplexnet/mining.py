"""Threshold patterns over vertex features and the q_t^a quality family.

A pattern is a set of atomic conditions ``feature op threshold``; its support
is the set of individuals meeting all of them. For a binary target the
quality is

    q_t^a(p) = |support|^a * (share_in_support - share_overall).

``a = 0`` is the gain, ``a = 0.5`` the binomial test and ``a = 1`` the
Piatetsky-Shapiro quality. Integer exponents give exact ``Fraction`` results.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

OPS = {"<": operator.lt, "<=": operator.le, ">": operator.gt, ">=": operator.ge}
_OP_ALIASES = {"≤": "<=", "≥": ">=", "lt": "<", "le": "<=", "gt": ">", "ge": ">="}


class MiningError(ValueError):
    pass


@dataclass(frozen=True)
class FeatureTable:
    """Individuals (rows) by real-valued features (columns)."""

    individuals: tuple
    columns: Mapping[str, np.ndarray]

    def __post_init__(self):
        n = len(self.individuals)
        if len(set(self.individuals)) != n:
            raise MiningError("individual identifiers must be unique")
        cols = {}
        for name, col in self.columns.items():
            arr = np.asarray(col, dtype=float)
            if arr.shape != (n,):
                raise MiningError(f"feature {name!r} has {arr.size} values for {n} individuals")
            cols[name] = arr
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_mapping(cls, features: Mapping[str, Mapping]) -> "FeatureTable":
        """Build from ``{feature: {individual: value}}``; every feature must cover every individual."""
        names = list(features)
        if not names:
            raise MiningError("no features given")
        individuals = tuple(features[names[0]])
        cols = {}
        for name in names:
            col = features[name]
            if set(col) != set(individuals):
                raise MiningError(f"feature {name!r} is not defined for every individual")
            cols[name] = [col[i] for i in individuals]
        return cls(individuals, cols)

    @property
    def feature_names(self) -> list[str]:
        return list(self.columns)

    def column(self, name: str) -> np.ndarray:
        try:
            return self.columns[name]
        except KeyError:
            raise MiningError(f"unknown feature {name!r}") from None

    def __len__(self) -> int:
        return len(self.individuals)


@dataclass(frozen=True)
class Target:
    name: str
    labels: Mapping

    def __post_init__(self):
        for i, y in self.labels.items():
            if y not in (0, 1):
                raise MiningError(f"label of {i!r} in target {self.name!r} is {y!r}, not 0/1")

    def complement(self, name: str | None = None) -> "Target":
        return Target(name or f"not-{self.name}", {i: 1 - y for i, y in self.labels.items()})

    def positives(self) -> set:
        return {i for i, y in self.labels.items() if y == 1}


@dataclass(frozen=True, order=True)
class AtomicCondition:
    feature: str
    op: str
    threshold: float

    def __post_init__(self):
        op = _OP_ALIASES.get(self.op, self.op)
        if op not in OPS:
            raise MiningError(f"unknown operator {self.op!r}")
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "threshold", float(self.threshold))

    def mask(self, tbl: FeatureTable) -> np.ndarray:
        return OPS[self.op](tbl.column(self.feature), self.threshold)

    def __str__(self) -> str:
        return f"{self.feature} {self.op} {self.threshold:g}"


@dataclass(frozen=True)
class Pattern:
    """Conjunction of atomic conditions; duplicates collapse."""

    conditions: frozenset[AtomicCondition]

    def __init__(self, conditions: Iterable[AtomicCondition]):
        conds = frozenset(conditions)
        if not conds:
            raise MiningError("a pattern needs at least one condition")
        object.__setattr__(self, "conditions", conds)

    @classmethod
    def of(cls, feature: str, op: str, threshold: float) -> "Pattern":
        return cls([AtomicCondition(feature, op, threshold)])

    def __and__(self, other: "Pattern") -> "Pattern":
        return Pattern(self.conditions | other.conditions)

    def __len__(self) -> int:
        return len(self.conditions)

    def __str__(self) -> str:
        return " & ".join(str(c) for c in sorted(self.conditions))


@dataclass(frozen=True)
class QualitySpec:
    a: float = 0.0

    @property
    def exact(self) -> bool:
        return float(self.a).is_integer()


GAIN = QualitySpec(0)
BINOMIAL = QualitySpec(0.5)
PIATETSKY_SHAPIRO = QualitySpec(1)


def support(tbl: FeatureTable, p: Pattern) -> set:
    mask = np.ones(len(tbl), dtype=bool)
    for cond in p.conditions:
        mask &= cond.mask(tbl)
    return {i for i, keep in zip(tbl.individuals, mask) if keep}


def _labels_for(tbl: FeatureTable, t: Target) -> dict:
    missing = [i for i in tbl.individuals if i not in t.labels]
    if missing:
        raise MiningError(f"target {t.name!r} has no label for {missing[:5]}")
    return t.labels


def target_share(tbl: FeatureTable, p: Pattern, t: Target) -> Fraction:
    s = support(tbl, p)
    if not s:
        raise MiningError(f"pattern {p} has empty support; target share is undefined")
    labels = _labels_for(tbl, t)
    return Fraction(sum(labels[i] for i in s), len(s))


def base_rate(t: Target, individuals: Iterable | None = None) -> Fraction:
    ids = list(t.labels) if individuals is None else list(individuals)
    if not ids:
        raise MiningError("base rate of an empty population is undefined")
    return Fraction(sum(t.labels[i] for i in ids), len(ids))


def _q(size: int, share: Fraction, t0: Fraction, spec: QualitySpec):
    if spec.exact:
        return Fraction(size) ** int(spec.a) * (share - t0)
    return size ** spec.a * float(share - t0)


def quality(tbl: FeatureTable, p: Pattern, t: Target, spec: QualitySpec = GAIN):
    """``|support|^a * (target share - base rate)``.

    Returns a ``Fraction`` for integer ``a`` and a float otherwise. An empty
    support scores 0 (see :func:`evaluate` for the flag).
    """
    s = support(tbl, p)
    if not s:
        return Fraction(0) if spec.exact else 0.0
    labels = _labels_for(tbl, t)
    share = Fraction(sum(labels[i] for i in s), len(s))
    return _q(len(s), share, base_rate(t, tbl.individuals), spec)


@dataclass(frozen=True)
class Evaluation:
    pattern: Pattern
    target: str
    support: int
    share: Fraction | None
    quality: Fraction | float
    empty_support: bool = False

    def row(self) -> dict:
        q = self.quality
        return {
            "pattern": str(self.pattern),
            "target": self.target,
            "support": self.support,
            "share": "" if self.share is None else f"{float(self.share):.6g}",
            "quality": f"{float(q):.6g}",
            "quality_exact": str(q) if isinstance(q, Fraction) else "",
        }


def evaluate(tbl: FeatureTable, p: Pattern, t: Target, spec: QualitySpec = GAIN) -> Evaluation:
    s = support(tbl, p)
    if not s:
        zero = Fraction(0) if spec.exact else 0.0
        return Evaluation(p, t.name, 0, None, zero, empty_support=True)
    labels = _labels_for(tbl, t)
    share = Fraction(sum(labels[i] for i in s), len(s))
    return Evaluation(p, t.name, len(s), share, _q(len(s), share, base_rate(t, tbl.individuals), spec))


def evaluate_pattern_set(
    tbl: FeatureTable, patterns: Sequence[Pattern], targets: Sequence[Target], spec: QualitySpec = GAIN
) -> list[Evaluation]:
    """Every (pattern, target) pair, best quality first (stable for ties)."""
    out = [evaluate(tbl, p, t, spec) for p in patterns for t in targets]
    out.sort(key=lambda e: -float(e.quality))
    return out


@dataclass(frozen=True)
class ScanResult:
    feature: str
    op: str
    threshold: float
    quality: Fraction | float
    support: int
    degenerate: bool = False
    candidates: tuple = field(default=(), compare=False, repr=False)

    @property
    def pattern(self) -> Pattern:
        return Pattern.of(self.feature, self.op, self.threshold)


def candidate_thresholds(values: np.ndarray) -> list[float]:
    """Midpoints between consecutive distinct values, plus -inf and +inf."""
    distinct = np.unique(values)
    mids = [(float(a) + float(b)) / 2 for a, b in zip(distinct[:-1], distinct[1:])]
    return [-math.inf, *mids, math.inf]


def scan_thresholds(
    tbl: FeatureTable, feature: str, op: str, t: Target, spec: QualitySpec = GAIN
) -> ScanResult:
    """Best single-condition pattern on ``feature`` with operator ``op``.

    Ties go to the larger support, then to the smaller threshold. A constant
    feature offers no split and the result is flagged ``degenerate``.
    """
    col = tbl.column(feature)
    thresholds = candidate_thresholds(col)
    best = None
    scored = []
    for th in thresholds:
        ev = evaluate(tbl, Pattern.of(feature, op, th), t, spec)
        scored.append((th, ev.quality, ev.support))
        key = (ev.quality, ev.support, -th)
        if best is None or key > best[0]:
            best = (key, th, ev)
    _, th, ev = best
    op = AtomicCondition(feature, op, 0).op
    return ScanResult(
        feature, op, th, ev.quality, ev.support, degenerate=len(thresholds) == 2, candidates=tuple(scored)
    )
