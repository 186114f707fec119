"""Edge churn of maintaining CDAWG(T[i..n]) for i = n down to 1.

Every step is a fresh build; what is measured is how many edges differ
between consecutive graphs, not the cost of any particular update scheme.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .cdawg import Cdawg, build_fast, export_dot
from .families import FamilySpec, generate, predicted_sizes
from .strings import TextLike, as_bytes


def edge_diff(a: Cdawg, b: Cdawg) -> tuple[int, int]:
    """``(added, removed)`` going from ``a`` to ``b``; edges compared as label triples."""
    ea, eb = a.edge_triples(), b.edge_triples()
    return len(eb - ea), len(ea - eb)


def node_diff(a: Cdawg, b: Cdawg) -> tuple[int, int]:
    return len(b.labels - a.labels), len(a.labels - b.labels)


@dataclass(frozen=True)
class ChurnStep:
    i: int
    suffix_len: int
    e_size: int
    added: int
    removed: int
    nodes_added: int = 0
    nodes_removed: int = 0


@dataclass
class ChurnReport:
    text: bytes
    steps: list[ChurnStep] = field(default_factory=list)

    @property
    def total_churn(self) -> int:
        return sum(s.added + s.removed for s in self.steps)

    def at(self, i: int) -> ChurnStep:
        """The step whose left end is position ``i``."""
        return self.steps[len(self.text) - i]

    def to_tsv(self) -> str:
        out = ["i\tsuffix_len\te\tadded\tremoved\tnodes_added\tnodes_removed"]
        out += [
            f"{s.i}\t{s.suffix_len}\t{s.e_size}\t{s.added}\t{s.removed}\t{s.nodes_added}\t{s.nodes_removed}"
            for s in self.steps
        ]
        return "\n".join(out) + "\n"

    def to_dict(self) -> dict:
        return {
            "text": self.text.decode("latin-1"),
            "total_churn": self.total_churn,
            "steps": [s.__dict__ for s in self.steps],
        }


def leftward_run(t: TextLike, dot_dir: Optional[Path] = None) -> ChurnReport:
    t = as_bytes(t)
    if not t:
        raise ValueError("leftward_run needs a non-empty text")
    n = len(t)
    prev = build_fast(b"")
    report = ChurnReport(t)
    for i in range(n, 0, -1):
        cur = build_fast(t[i - 1 :])
        added, removed = edge_diff(prev, cur)
        n_add, n_rem = node_diff(prev, cur)
        report.steps.append(ChurnStep(i, n - i + 1, cur.size_e, added, removed, n_add, n_rem))
        if dot_dir is not None:
            dot_dir.mkdir(parents=True, exist_ok=True)
            (dot_dir / f"step_{i:05d}.dot").write_text(export_dot(cur), encoding="utf-8")
        prev = cur
    return report


class ChurnFormulaError(AssertionError):
    def __init__(self, m: int, k: int, what: str):
        super().__init__(f"m={m}, k={k}: {what}")
        self.m, self.k = m, k


@dataclass(frozen=True)
class Transition:
    k: int
    e_before: int  # e(T_{k,m})
    e_mid: int  # e(b T_{k,m})
    e_after: int  # e(T_{k+1,m})
    churn_b: int  # added + removed on prepending b
    churn_a: int  # added + removed on prepending a

    @property
    def jump_b(self) -> int:
        return abs(self.e_mid - self.e_before)

    @property
    def jump_a(self) -> int:
        return abs(self.e_after - self.e_mid)


@dataclass
class QuadraticCheck:
    m: int
    n: int
    transitions: list[Transition]
    total_churn: int

    @property
    def transition_churn(self) -> int:
        """Sum of |size change| over the prepend-b / prepend-a steps."""
        return sum(tr.jump_b + tr.jump_a for tr in self.transitions)

    @property
    def transition_edge_churn(self) -> int:
        return sum(tr.churn_b + tr.churn_a for tr in self.transitions)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "transition_churn": self.transition_churn,
            "transition_edge_churn": self.transition_edge_churn,
            "total_churn": self.total_churn,
            "transitions": [
                dict(tr.__dict__, jump_b=tr.jump_b, jump_a=tr.jump_a) for tr in self.transitions
            ],
        }


def online_text(m: int) -> bytes:
    return generate(FamilySpec("online", m, m))


def churn_quadratic_check(m: int, report: Optional[ChurnReport] = None) -> QuadraticCheck:
    """Run the leftward build of ``T_m`` and check the size formulas at every k.

    ``T_{k,m}`` starts at position ``2(m-k)+1``; one step left is
    ``b T_{k,m}``, two steps left is ``T_{k+1,m}``.  Raises
    :class:`ChurnFormulaError` naming the first offending k.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    t = online_text(m)
    rep = report if report is not None else leftward_run(t)
    transitions = []
    for k in range(m):
        i = 2 * (m - k) + 1
        s0, s1, s2 = rep.at(i), rep.at(i - 1), rep.at(i - 2)
        want0, want1 = predicted_sizes(FamilySpec("online", m, k))
        if s0.e_size != want0:
            raise ChurnFormulaError(m, k, f"e(T_k,m)={s0.e_size}, expected {want0}")
        if s1.e_size != want1:
            raise ChurnFormulaError(m, k, f"e(bT_k,m)={s1.e_size}, expected {want1}")
        tr = Transition(k, s0.e_size, s1.e_size, s2.e_size, s1.added + s1.removed, s2.added + s2.removed)
        if tr.jump_b != 3 * m + 3 * k + 3:
            raise ChurnFormulaError(m, k, f"|delta e| on prepending b is {tr.jump_b}, expected {3 * m + 3 * k + 3}")
        if tr.jump_a != 3 * m + 3 * k + 2:
            raise ChurnFormulaError(m, k, f"|delta e| on prepending a is {tr.jump_a}, expected {3 * m + 3 * k + 2}")
        transitions.append(tr)
    return QuadraticCheck(m, len(t), transitions, rep.total_churn)


def growth_exponent(ms: Iterable[int], values: Iterable[float]) -> float:
    """Least-squares slope of log(value) against log(m)."""
    xs = [math.log(m) for m in ms]
    ys = [math.log(v) for v in values]
    return statistics.linear_regression(xs, ys).slope


def fit_churn_exponent(ms: Iterable[int]) -> tuple[float, list[QuadraticCheck]]:
    ms = list(ms)
    checks = [churn_quadratic_check(m) for m in ms]
    return growth_exponent(ms, [c.transition_churn for c in checks]), checks
