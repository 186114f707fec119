"""Left-end edits, size deltas, lemma predicates and exhaustive sweeps."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from . import strings
from .cdawg import Cdawg, build_fast, build_naive, canonical_equal, show, spell_check
from .strings import TextLike, as_bytes

INSERT, DELETE, SUBSTITUTE = "insert", "delete", "substitute"
KIND_ALIASES = {
    "insert": INSERT, "ins": INSERT,
    "delete": DELETE, "del": DELETE,
    "substitute": SUBSTITUTE, "sub": SUBSTITUTE,
}
SHORT = {INSERT: "ins", DELETE: "del", SUBSTITUTE: "sub"}


class InvalidEditError(ValueError):
    pass


class BuilderMismatchError(AssertionError):
    pass


def _as_char(c) -> int:
    if isinstance(c, int):
        if not 0 <= c < 256:
            raise InvalidEditError(f"character code {c} is not a byte")
        return c
    b = as_bytes(c)
    if len(b) != 1:
        raise InvalidEditError(f"edit character must be a single byte, got {b!r}")
    return b[0]


@dataclass(frozen=True)
class EditOp:
    kind: str
    char: Optional[int] = None

    def __post_init__(self):
        kind = KIND_ALIASES.get(self.kind)
        if kind is None:
            raise InvalidEditError(f"unknown edit kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if kind == DELETE:
            if self.char is not None:
                raise InvalidEditError("delete takes no character")
        else:
            if self.char is None:
                raise InvalidEditError(f"{kind} needs a character")
            object.__setattr__(self, "char", _as_char(self.char))

    @classmethod
    def insert(cls, c) -> EditOp:
        return cls(INSERT, c)

    @classmethod
    def delete(cls) -> EditOp:
        return cls(DELETE)

    @classmethod
    def substitute(cls, c) -> EditOp:
        return cls(SUBSTITUTE, c)

    def describe(self) -> str:
        if self.char is None:
            return SHORT[self.kind]
        return f"{SHORT[self.kind]} {show(bytes([self.char]))}"

    def cli_args(self) -> str:
        if self.char is None:
            return f"--op {SHORT[self.kind]}"
        return f"--op {SHORT[self.kind]} --char {show(bytes([self.char]))}"


def apply_left_edit(t: TextLike, op: EditOp) -> bytes:
    t = as_bytes(t)
    if op.kind == INSERT:
        return bytes([op.char]) + t
    if not t:
        raise InvalidEditError(f"cannot {op.kind} the first character of the empty string")
    if op.kind == DELETE:
        return t[1:]
    if op.char == t[0]:
        raise InvalidEditError("substitution must change the first character")
    return bytes([op.char]) + t[1:]


def edits_for(t: bytes, alphabet: Iterable[int], kinds: Iterable[str]) -> Iterator[EditOp]:
    """Every applicable left-end edit of ``t`` drawing characters from ``alphabet``."""
    alphabet = sorted(set(alphabet))
    for kind in kinds:
        if kind == INSERT:
            for c in alphabet:
                yield EditOp(INSERT, c)
        elif kind == DELETE:
            if t:
                yield EditOp(DELETE)
        elif t:
            for c in alphabet:
                if c != t[0]:
                    yield EditOp(SUBSTITUTE, c)


# -- size deltas ----------------------------------------------------------


@dataclass(frozen=True)
class DeltaReport:
    original: bytes
    edited: bytes
    op: EditOp
    e_before: int
    e_after: int
    delta: int
    F: int
    G: int
    new_nodes: list[bytes]
    degree_increased_nodes: list[bytes]

    def to_dict(self) -> dict:
        js = lambda s: s.decode("latin-1")  # noqa: E731
        return {
            "text": js(self.original),
            "edited": js(self.edited),
            "op": SHORT[self.op.kind],
            "char": None if self.op.char is None else js(bytes([self.op.char])),
            "e_before": self.e_before,
            "e_after": self.e_after,
            "delta": self.delta,
            "F": self.F,
            "G": self.G,
            "new_nodes": sorted(js(s) for s in self.new_nodes),
            "degree_increased_nodes": sorted(js(s) for s in self.degree_increased_nodes),
        }


def _sorted_labels(xs: Iterable[bytes]) -> list[bytes]:
    return sorted(xs, key=lambda s: (len(s), s))


def decompose(before: dict[bytes, int], after: dict[bytes, int]):
    """F/G split from two node-to-out-degree maps.

    Returns ``(F, G, new_nodes, degree_increased_nodes)``.
    """
    new = [w for w in after if w not in before]
    inc = [w for w in after if w in before and after[w] > before[w]]
    F = sum(after[w] for w in new)
    G = sum(after[w] - before[w] for w in inc)
    return F, G, _sorted_labels(new), _sorted_labels(inc)


def _graph(t: bytes, oracle: bool, verify: bool) -> Cdawg:
    if verify:
        fast, naive = build_fast(t), build_naive(t)
        if not canonical_equal(fast, naive):
            raise BuilderMismatchError(f"builders disagree on {t!r}")
        return naive if oracle else fast
    return build_naive(t) if oracle else build_fast(t)


def delta_from_graphs(t: bytes, op: EditOp, before: Cdawg, after: Cdawg) -> DeltaReport:
    F, G, new, inc = decompose(before.degrees(), after.degrees())
    return DeltaReport(
        original=t,
        edited=after.text,
        op=op,
        e_before=before.size_e,
        e_after=after.size_e,
        delta=after.size_e - before.size_e,
        F=F,
        G=G,
        new_nodes=new,
        degree_increased_nodes=inc,
    )


def delta(t: TextLike, op: EditOp, oracle: bool = False, verify: bool = False) -> DeltaReport:
    """Size change of the CDAWG under one left-end edit.

    ``oracle`` builds with the definitional builder; ``verify`` builds both
    ways and raises :class:`BuilderMismatchError` if they differ.
    """
    t = as_bytes(t)
    edited = apply_left_edit(t, op)
    return delta_from_graphs(t, op, _graph(t, oracle, verify), _graph(edited, oracle, verify))


# -- lemma predicates -----------------------------------------------------
#
# Every predicate is evaluated on the brute-force oracle in ``strings``.
# A predicate returns None when the string/edit falls outside its
# preconditions, otherwise a list of failure descriptions.

M = strings.maximal_labels


def _deg(x: bytes, t: bytes) -> int:
    return strings.extension_count(x, t)


def _e(t: bytes) -> int:
    return sum(_deg(w, t) for w in M(t))


def _fg(before: bytes, after: bytes):
    deg_b = {w: _deg(w, before) for w in M(before)}
    deg_a = {w: _deg(w, after) for w in M(after)}
    return decompose(deg_b, deg_a)


def _sigma(t: bytes) -> int:
    return len(set(t))


def _new_prefixed_nodes(t: bytes, at: bytes, a: int) -> list[bytes]:
    """``x`` for every new node ``ax`` of ``CDAWG(at)``."""
    old = M(t)
    return [u[1:] for u in _sorted_labels(M(at) - old) if u and u[0] == a]


def _l1(t, op, mode):
    a, at = op.char, apply_left_edit(t, op)
    out = []
    for x in _new_prefixed_nodes(t, at, a):
        ax = bytes([a]) + x
        if x not in M(t):
            out.append(f"new node {show(ax)} but {show(x)} not maximal in T")
        elif _deg(ax, at) > _deg(x, t):
            out.append(f"d_aT({show(ax)})={_deg(ax, at)} > d_T({show(x)})={_deg(x, t)}")
    return out


def _source_credit(t, at, a):
    """The credit comparison shared by the two source lemmas."""
    a1 = bytes([a])
    d_new, d_src = _deg(a1, at), _deg(b"", t)
    if d_new < d_src:
        return []
    return [f"d_aT(a)={d_new} >= d_T(eps)={d_src}"]


def _l2(t, op, mode):
    a, at = op.char, apply_left_edit(t, op)
    a1 = bytes([a])
    if _sigma(t) != 2 or a1 in M(t) or a1 not in M(at):
        return None
    witnesses = [
        x for x in _new_prefixed_nodes(t, at, a) if x in M(t) and x not in (b"", t)
    ]
    if not witnesses:
        return None
    fail = _source_credit(t, at, a)
    if mode == "exists":
        return fail
    return [f"{msg} (x={show(x)})" for x in witnesses for msg in fail]


def _l3(t, op, mode):
    a, at = op.char, apply_left_edit(t, op)
    a1 = bytes([a])
    if _sigma(t) < 3 or a1 in M(t) or a1 not in M(at):
        return None
    return _source_credit(t, at, a)


def _l4(t, op, mode):
    at = apply_left_edit(t, op)
    out, bumped = [], []
    for y in _sorted_labels(M(t) & M(at)):
        d = _deg(y, at) - _deg(y, t)
        if d not in (0, 1):
            out.append(f"d_aT({show(y)}) - d_T({show(y)}) = {d}")
        elif d == 1:
            bumped.append(y)
    if len(bumped) > 1:
        out.append("several degree-increased nodes: " + ", ".join(map(show, bumped)))
    return out


def _l5(t, op, mode):
    # the argument needs T != x, which it gets from two distinct letters
    if _sigma(t) < 2:
        return None
    a, at = op.char, apply_left_edit(t, op)
    out = []
    for x in _new_prefixed_nodes(t, at, a):
        if x not in strings.substrings(t):
            continue  # reported by L1
        if _deg(x, at) != _deg(x, t):
            out.append(f"new node {show(bytes([a]) + x)} yet d_aT({show(x)}) != d_T({show(x)})")
    return out


def _l6(t, op, mode):
    s = t[1:]
    a1 = t[:1]
    out = []
    for x in _sorted_labels(M(s) - M(t)):
        ax = a1 + x
        if not s.startswith(x):
            out.append(f"new node {show(x)} is not a prefix of S")
        elif ax not in M(t):
            out.append(f"{show(ax)} not maximal in aS")
        elif _deg(x, s) != _deg(ax, t):
            out.append(f"d_S({show(x)})={_deg(x, s)} != d_aS({show(ax)})={_deg(ax, t)}")
    return out


def _l7(t, op, mode):
    s, bs = t[1:], apply_left_edit(t, op)
    b1 = bytes([op.char])
    out = []
    for x in _sorted_labels(M(s)):
        if x != s and x not in M(t) and x in M(bs) and b1 + x in M(bs):
            out.append(f"{show(b1 + x)} maximal in bS for x={show(x)}")
    return out


def _l8(t, op, mode):
    s, bs = t[1:], apply_left_edit(t, op)
    a1, b1 = t[:1], bytes([op.char])
    ms, mt = M(s), M(t)
    out = []
    for x in _sorted_labels(ms):
        bax = b1 + a1 + x
        if a1 + x in mt and x not in mt and bax not in mt and bax not in ms:
            if bax in M(bs):
                out.append(f"{show(bax)} maximal in bS for x={show(x)}")
    return out


def _f_bound(t, op, mode):
    e = _e(t)
    if e < 3:
        return None
    F, _, new, _ = _fg(t, apply_left_edit(t, op))
    return [] if F <= e - 1 else [f"F={F} > e-1={e - 1}; new nodes {', '.join(map(show, new))}"]


def _g_bound(limit):
    def check(t, op, mode):
        _, G, _, inc = _fg(t, apply_left_edit(t, op))
        return [] if G <= limit else [f"G={G} > {limit}; increased at {', '.join(map(show, inc))}"]

    return check


def _fg_sum(t, op, mode):
    edited = apply_left_edit(t, op)
    F, G, _, _ = _fg(t, edited)
    d = _e(edited) - _e(t)
    return [] if d <= F + G else [f"delta={d} > F+G={F + G}"]


# bound = e(T) - SLACK, whether or not the preconditions hold
SLACK = {INSERT: 1, DELETE: 2, SUBSTITUTE: 0}


def theorem_bound(t: bytes, op: EditOp) -> Optional[int]:
    """Upper bound on the delta promised for ``(t, op)``, or None outside the preconditions.

    The deletion bound is taken under the standing assumption of at least
    two distinct characters; unary texts are covered by the unary law.
    """
    n, e = len(t), _e(t)
    if op.kind == INSERT:
        ok = n >= 3 and e >= 3
    elif op.kind == DELETE:
        ok = _sigma(t) >= 2
    else:
        ok = n >= 4 and e >= 3
    return e - SLACK[op.kind] if ok else None


def _bound(t, op, mode):
    limit = theorem_bound(t, op)
    if limit is None:
        return None
    d = _e(apply_left_edit(t, op)) - _e(t)
    return [] if d <= limit else [f"delta={d} > bound={limit}"]


def _unary(t, op, mode):
    if _sigma(t) != 1:
        return None
    if op.kind == INSERT and op.char == t[0]:
        want = 1
    elif op.kind == DELETE and len(t) >= 2:
        want = -1
    else:
        return None
    d = _e(apply_left_edit(t, op)) - _e(t)
    return [] if d == want else [f"delta={d}, expected {want:+d}"]


@dataclass(frozen=True)
class Check:
    kinds: frozenset[str]
    fn: Callable
    about: str


_ALL = frozenset({INSERT, DELETE, SUBSTITUTE})
CHECKS: dict[str, Check] = {
    "L1": Check(frozenset({INSERT}), _l1, "new node ax implies x maximal and d(ax) <= d(x)"),
    "L2": Check(frozenset({INSERT}), _l2, "binary: new node a loses credit against the source"),
    "L3": Check(frozenset({INSERT}), _l3, "3+ letters: new node a loses credit against the source"),
    "L4": Check(frozenset({INSERT}), _l4, "surviving nodes gain at most one edge, at most one of them"),
    "L5": Check(frozenset({INSERT}), _l5, "new node ax leaves d(x) unchanged"),
    "L6": Check(frozenset({DELETE}), _l6, "deletion: new node x is a prefix and ax was a node of equal degree"),
    "L7": Check(frozenset({SUBSTITUTE}), _l7, "substitution: x and bx are not both new"),
    "L8": Check(frozenset({SUBSTITUTE}), _l8, "substitution: bax is not a new node alongside x"),
    "F_ins": Check(frozenset({INSERT}), _f_bound, "F <= e-1 when e >= 3"),
    "G_ins": Check(frozenset({INSERT}), _g_bound(1), "G <= 1"),
    "G_del": Check(frozenset({DELETE}), _g_bound(0), "G = 0"),
    "F_sub": Check(frozenset({SUBSTITUTE}), _f_bound, "F <= e-1 when e >= 3"),
    "G_sub": Check(frozenset({SUBSTITUTE}), _g_bound(1), "G <= 1"),
    "FG": Check(_ALL, _fg_sum, "delta <= F + G"),
    "bound": Check(_ALL, _bound, "insert: e-1 (n,e>=3); delete: e-2; substitute: e (n>=4, e>=3)"),
    "unary": Check(frozenset({INSERT, DELETE}), _unary, "a^n: +1 on inserting a, -1 on deleting (n>=2)"),
}


@dataclass(frozen=True)
class LemmaViolation:
    lemma_id: str
    witness_string: bytes
    edit: EditOp
    detail: str

    @property
    def repro(self) -> str:
        return f"cdawg delta {self.edit.cli_args()} --check {self.lemma_id} '{show(self.witness_string)}'"

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "text": self.witness_string.decode("latin-1"),
            "edit": self.edit.describe(),
            "detail": self.detail,
            "repro": self.repro,
        }


def evaluate_check(lemma_id: str, t: TextLike, op: EditOp, mode: str = "per_x") -> Optional[list[LemmaViolation]]:
    """Like :func:`check_lemma` but returns None when the preconditions are not met."""
    chk = CHECKS.get(lemma_id)
    if chk is None:
        raise KeyError(f"unknown check {lemma_id!r}; known: {', '.join(CHECKS)}")
    if op.kind not in chk.kinds:
        raise InvalidEditError(f"{lemma_id} is about {'/'.join(sorted(chk.kinds))}, not {op.kind}")
    if mode not in ("per_x", "exists"):
        raise ValueError(f"mode must be 'per_x' or 'exists', not {mode!r}")
    t = as_bytes(t)
    apply_left_edit(t, op)  # validates
    res = chk.fn(t, op, mode)
    if res is None:
        return None
    return [LemmaViolation(lemma_id, t, op, d) for d in res]


def check_lemma(lemma_id: str, t: TextLike, op: EditOp, mode: str = "per_x") -> list[LemmaViolation]:
    return evaluate_check(lemma_id, t, op, mode) or []


# -- sweeps ---------------------------------------------------------------

WITNESS_CAP = 5


def _keep_smallest(items: Iterable[str], cap: int = WITNESS_CAP) -> list[str]:
    return sorted(set(items), key=lambda s: (len(s), s))[:cap]


@dataclass
class OpStats:
    cases: int = 0
    max_delta: Optional[int] = None
    witnesses: list[str] = field(default_factory=list)
    # cases outside the theorem's preconditions
    outside: int = 0
    outside_exceed: int = 0
    outside_witnesses: list[str] = field(default_factory=list)

    def observe(self, delta: int, witness: str) -> None:
        self.cases += 1
        if self.max_delta is None or delta > self.max_delta:
            self.max_delta, self.witnesses = delta, [witness]
        elif delta == self.max_delta:
            self.witnesses = _keep_smallest(self.witnesses + [witness])

    def merge(self, other: OpStats) -> OpStats:
        out = OpStats(
            cases=self.cases + other.cases,
            outside=self.outside + other.outside,
            outside_exceed=self.outside_exceed + other.outside_exceed,
            outside_witnesses=_keep_smallest(self.outside_witnesses + other.outside_witnesses),
        )
        cands = [s for s in (self, other) if s.max_delta is not None]
        if cands:
            top = max(s.max_delta for s in cands)
            out.max_delta = top
            out.witnesses = _keep_smallest(w for s in cands if s.max_delta == top for w in s.witnesses)
        return out


@dataclass
class SweepReport:
    alphabet: bytes
    max_len: int
    ops: tuple[str, ...]
    checks: tuple[str, ...]
    strings: int = 0
    stats: dict[str, OpStats] = field(default_factory=dict)
    applied: dict[str, int] = field(default_factory=dict)
    violations: list[LemmaViolation] = field(default_factory=list)
    builder_mismatches: list[str] = field(default_factory=list)
    spell_failures: list[str] = field(default_factory=list)
    graphs_checked: int = 0

    @property
    def failures(self) -> int:
        return len(self.violations) + len(self.builder_mismatches) + len(self.spell_failures)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def merge(self, other: SweepReport) -> SweepReport:
        stats = dict(self.stats)
        for k, v in other.stats.items():
            stats[k] = stats[k].merge(v) if k in stats else v
        applied = dict(self.applied)
        for k, v in other.applied.items():
            applied[k] = applied.get(k, 0) + v
        key = lambda v: (v.lemma_id, len(v.witness_string), v.witness_string, v.edit.describe(), v.detail)  # noqa: E731
        return SweepReport(
            alphabet=self.alphabet,
            max_len=self.max_len,
            ops=self.ops,
            checks=self.checks,
            strings=self.strings + other.strings,
            stats=stats,
            applied=applied,
            violations=sorted(self.violations + other.violations, key=key),
            builder_mismatches=sorted(set(self.builder_mismatches + other.builder_mismatches)),
            spell_failures=sorted(set(self.spell_failures + other.spell_failures)),
            graphs_checked=self.graphs_checked + other.graphs_checked,
        )

    def to_dict(self) -> dict:
        return {
            "alphabet": self.alphabet.decode("latin-1"),
            "max_len": self.max_len,
            "ops": list(self.ops),
            "checks": list(self.checks),
            "strings": self.strings,
            "graphs_checked": self.graphs_checked,
            "ops_stats": {k: asdict(v) for k, v in sorted(self.stats.items())},
            "applied": dict(sorted(self.applied.items())),
            "violations": [v.to_dict() for v in self.violations],
            "builder_mismatches": self.builder_mismatches,
            "spell_failures": self.spell_failures,
            "failures": self.failures,
        }

    def summary(self) -> str:
        lines = [
            f"alphabet={show(self.alphabet)} max_len={self.max_len} strings={self.strings}"
            f" graphs_checked={self.graphs_checked}"
        ]
        for k in sorted(self.stats):
            s = self.stats[k]
            lines.append(
                f"{SHORT[k]}: cases={s.cases} max_delta={s.max_delta} witnesses={','.join(s.witnesses)}"
                f" outside_preconditions={s.outside} (exceeding bound: {s.outside_exceed})"
            )
        for k in sorted(self.applied):
            lines.append(f"check {k}: applied {self.applied[k]}")
        for v in self.violations:
            lines.append(f"VIOLATION {v.lemma_id} {show(v.witness_string)} [{v.edit.describe()}]: {v.detail}")
            lines.append(f"  repro: {v.repro}")
        for t in self.builder_mismatches:
            lines.append(f"BUILDER MISMATCH {t}")
        for t in self.spell_failures:
            lines.append(f"SPELL FAILURE {t}")
        lines.append(f"{self.failures} violations")
        return "\n".join(lines)


def universe(alphabet: Iterable[int], max_len: int, min_len: int = 1) -> Iterator[bytes]:
    """All strings over ``alphabet`` with length in ``[min_len, max_len]``."""
    alphabet = sorted(set(alphabet))
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(alphabet, repeat=n):
            yield bytes(tup)


def expand_checks(checks: Iterable[str], kinds: Iterable[str]) -> tuple[str, ...]:
    kinds = set(kinds)
    names: list[str] = []
    for c in checks:
        if c == "all":
            names.extend(k for k, v in CHECKS.items() if v.kinds & kinds)
        elif c in CHECKS:
            names.append(c)
        else:
            raise KeyError(f"unknown check {c!r}")
    return tuple(dict.fromkeys(names))


@dataclass(frozen=True)
class _SweepConfig:
    alphabet: bytes
    max_len: int
    ops: tuple[str, ...]
    checks: tuple[str, ...]
    cross_check: bool
    spell: bool
    mode: str


def _sweep_chunk(cfg: _SweepConfig, texts: list[bytes]) -> SweepReport:
    rep = SweepReport(cfg.alphabet, cfg.max_len, cfg.ops, cfg.checks)
    graphs: dict[bytes, Cdawg] = {}

    def graph(t: bytes) -> Cdawg:
        g = graphs.get(t)
        if g is None:
            g = build_fast(t)
            if cfg.cross_check and not canonical_equal(g, build_naive(t)):
                rep.builder_mismatches.append(show(t))
            if cfg.spell and not spell_check(g):
                rep.spell_failures.append(show(t))
            rep.graphs_checked += 1
            graphs[t] = g
        return g

    for t in texts:
        rep.strings += 1
        g = graph(t)
        for op in edits_for(t, cfg.alphabet, cfg.ops):
            d = graph(apply_left_edit(t, op)).size_e - g.size_e
            st = rep.stats.setdefault(op.kind, OpStats())
            witness = f"{show(t)}[{op.describe()}]"
            st.observe(d, witness)
            if theorem_bound(t, op) is None:
                st.outside += 1
                if d > g.size_e - SLACK[op.kind]:
                    st.outside_exceed += 1
                    st.outside_witnesses = _keep_smallest(st.outside_witnesses + [witness])
            for name in cfg.checks:
                if op.kind not in CHECKS[name].kinds:
                    continue
                res = evaluate_check(name, t, op, cfg.mode)
                if res is None:
                    continue
                rep.applied[name] = rep.applied.get(name, 0) + 1
                rep.violations.extend(res)
    return rep


def _chunks(items: list[bytes], k: int) -> list[list[bytes]]:
    return [items[i::k] for i in range(k)]


def sweep(
    alphabet: TextLike,
    max_len: int,
    ops: Iterable[str] = (INSERT, DELETE, SUBSTITUTE),
    checks: Iterable[str] = ("bound",),
    *,
    min_len: int = 1,
    cross_check: bool = False,
    spell: bool = False,
    mode: str = "per_x",
    jobs: int = 1,
) -> SweepReport:
    """Exhaustively evaluate every left-end edit of every string over ``alphabet``.

    Records the largest delta per edit kind, each selected check's
    violations, and (optionally) builder disagreements and spelling
    failures for every graph built along the way.
    """
    alpha = bytes(sorted(set(as_bytes(alphabet))))
    if not alpha:
        raise ValueError("alphabet must be non-empty")
    kinds = tuple(sorted({KIND_ALIASES[o] for o in ops}))
    names = expand_checks(checks, kinds)
    cfg = _SweepConfig(alpha, max_len, kinds, names, cross_check, spell, mode)
    texts = list(universe(alpha, max_len, min_len))
    if jobs <= 1:
        return _sweep_chunk(cfg, texts)
    report = SweepReport(alpha, max_len, kinds, names)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_sweep_chunk, [cfg] * (4 * jobs), _chunks(texts, 4 * jobs)):
            report = report.merge(part)
    return report
