from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

import numpy as np
from bitstring import Bits


@dataclass
class Finding:
    item: str          # ex) "max_fidelity", "periodic"
    value: Any         # observed value
    severity: str      # Info / Warn / Critical
    comment: str       # human-readable explanation


@dataclass
class GraphResult:
    graph: str         # catalog key
    report: Any        # dynamics.pst.PstReport
    findings: List[Finding] = field(default_factory=list)

    @property
    def failed(self):
        return [f for f in self.findings if f.severity == "Critical"]

    def to_dict(self):
        data = self.report.to_dict()
        data['graph'] = self.graph
        data['findings'] = [vars(f) for f in self.findings]
        return data


@dataclass
class TheoremReport:
    results: List[GraphResult] = field(default_factory=list)

    @property
    def pst_graphs(self):
        return [r.graph for r in self.results if r.report.verdict == "PST"]

    @property
    def verified(self):
        return not any(r.failed for r in self.results)

    def to_dict(self):
        return {
            'verified': self.verified,
            'pst_graphs': self.pst_graphs,
            'graphs': [r.to_dict() for r in self.results],
        }


@dataclass(frozen=True)
class PersistencyResult:
    pair: Tuple[int, int]
    epsilon: float
    level: float
    interval: Tuple[float, float]
    length: float

    def to_dict(self):
        return {
            'i': self.pair[0],
            'j': self.pair[1],
            'epsilon': self.epsilon,
            'level': self.level,
            't0': self.interval[0],
            't1': self.interval[1],
            'length': self.length,
        }


@dataclass(frozen=True)
class PersistencySummary:
    epsilon: float
    max_length: float
    mean_length: float
    best: PersistencyResult

    def to_dict(self):
        return {
            'epsilon': self.epsilon,
            'max_length': self.max_length,
            'mean_length': self.mean_length,
            'best': self.best.to_dict(),
        }


@dataclass(frozen=True)
class ZeroPattern:
    """Row-major support bits of an n x n matrix; 1 marks a structurally nonzero entry."""
    n: int
    bits: Bits

    @classmethod
    def from_mask(cls, mask):
        mask = np.asarray(mask, dtype=bool)
        if mask.ndim != 2 or mask.shape[0] != mask.shape[1]:
            raise ValueError(f"zero pattern needs a square mask, got shape {mask.shape}")
        return cls(mask.shape[0], Bits(mask.ravel().tolist()))

    def as_matrix(self):
        return np.array(list(self.bits), dtype=bool).reshape(self.n, self.n)

    def __getitem__(self, index):
        i, j = index
        return self.bits[(i - 1) * self.n + (j - 1)]

    def rows(self):
        return [self.bits[r * self.n:(r + 1) * self.n].bin for r in range(self.n)]

    def __str__(self):
        return "\n".join(self.rows())


@dataclass
class ProbabilityTransferResult:
    steps: int
    hit: Optional[Tuple[int, int, int]]   # (step, i, j)
    patterns: List[ZeroPattern] = field(default_factory=list)

    def to_dict(self):
        return {
            'steps': self.steps,
            'hit': None if self.hit is None else dict(zip(('step', 'i', 'j'), self.hit)),
            'patterns': [p.rows() for p in self.patterns],
        }
