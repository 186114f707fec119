"""CDAWG values, the two builders, canonical comparison and export.

Nodes are identified by their longest member string (one node per maximal
substring).  Edge labels are kept as 1-based spans into the text and
resolved to literals on demand.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from . import strings
from .strings import TextLike, as_bytes


@dataclass(frozen=True)
class NodeRecord:
    id: int
    long_label: bytes
    is_source: bool
    is_sink: bool

    @property
    def length(self) -> int:
        return len(self.long_label)


@dataclass(frozen=True)
class EdgeRecord:
    source: int
    start: int  # label = T[start..end], 1-based inclusive
    end: int
    target: int


@dataclass(frozen=True)
class Cdawg:
    text: bytes
    nodes: tuple[NodeRecord, ...]
    edges: tuple[EdgeRecord, ...]

    @property
    def size_e(self) -> int:
        return len(self.edges)

    @property
    def source(self) -> NodeRecord:
        return next(v for v in self.nodes if v.is_source)

    @property
    def sink(self) -> NodeRecord:
        return next(v for v in self.nodes if v.is_sink)

    def label(self, e: EdgeRecord) -> bytes:
        return self.text[e.start - 1 : e.end]

    @cached_property
    def _by_label(self) -> dict[bytes, NodeRecord]:
        return {v.long_label: v for v in self.nodes}

    @cached_property
    def _out(self) -> dict[int, list[EdgeRecord]]:
        out: dict[int, list[EdgeRecord]] = {v.id: [] for v in self.nodes}
        for e in self.edges:
            out[e.source].append(e)
        return out

    @property
    def labels(self) -> frozenset[bytes]:
        return frozenset(self._by_label)

    def node(self, label: TextLike) -> NodeRecord:
        return self._by_label[as_bytes(label)]

    def out_edges(self, node_id: int) -> list[EdgeRecord]:
        return self._out[node_id]

    def out_degree(self, label: TextLike) -> int:
        return len(self._out[self.node(label).id])

    def degrees(self) -> dict[bytes, int]:
        return {v.long_label: len(self._out[v.id]) for v in self.nodes}

    def edge_triples(self) -> frozenset[tuple[bytes, bytes, bytes]]:
        """Edges as (source label, edge label, target label)."""
        lab = {v.id: v.long_label for v in self.nodes}
        return frozenset(
            (lab[e.source], self.label(e), lab[e.target]) for e in self.edges
        )


def _node_key(s: bytes) -> tuple[int, bytes]:
    return (len(s), s)


def _assemble(
    text: bytes, labels: set[bytes], raw_edges: list[tuple[bytes, int, int, bytes]]
) -> Cdawg:
    order = sorted(labels, key=_node_key)
    ids = {s: i for i, s in enumerate(order)}
    nodes = tuple(
        NodeRecord(ids[s], s, is_source=(i == 0), is_sink=(s == text))
        for i, s in enumerate(order)
    )
    edges = [EdgeRecord(ids[u], i, j, ids[v]) for u, i, j, v in raw_edges]
    edges.sort(key=lambda e: (e.source, text[e.start - 1 : e.end]))
    return Cdawg(text, nodes, tuple(edges))


def build_naive(t: TextLike) -> Cdawg:
    """Instantiate the node and edge sets directly from occurrence sets.

    For every maximal ``w`` and every right extension ``c`` the edge label
    is the shortest ``beta`` starting with ``c`` such that ``w + beta`` is
    right-maximal; it points at the node of ``w + beta``'s end-position class.
    """
    text = as_bytes(t)
    an = strings.analyze(text)
    labels = set(an.maximal)
    raw = []
    for w in labels:
        for c in an.extensions(w):
            r = an.right_long[an.begs[w + bytes([c])]]
            target = an.left_long[an.ends[r]]
            end = an.ends[r][0]
            raw.append((w, end - (len(r) - len(w)) + 1, end, target))
    return _assemble(text, labels, raw)


def _suffix_automaton(text: bytes):
    length = [0]
    link = [-1]
    nxt: list[dict[int, int]] = [{}]
    firstpos = [0]
    last = 0
    for pos, c in enumerate(text, start=1):
        cur = len(length)
        length.append(length[last] + 1)
        link.append(-1)
        nxt.append({})
        firstpos.append(pos)
        p = last
        while p != -1 and c not in nxt[p]:
            nxt[p][c] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = nxt[p][c]
            if length[q] == length[p] + 1:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                nxt.append(dict(nxt[q]))
                firstpos.append(firstpos[q])
                while p != -1 and nxt[p].get(c) == q:
                    nxt[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    return length, link, nxt, firstpos, last


def build_fast(t: TextLike) -> Cdawg:
    """Compact the suffix automaton of the text.

    Kept states: the initial one, every state with two or more outgoing
    transitions, and every state whose end positions contain ``n``.  Each
    edge follows the single chain of dropped states to the next kept one.
    """
    text = as_bytes(t)
    length, link, nxt, firstpos, last = _suffix_automaton(text)
    marked = {0}
    q = last
    while q > 0:
        marked.add(q)
        q = link[q]
    marked.update(s for s, out in enumerate(nxt) if len(out) >= 2)
    if text and len(set(text)) == 1:
        # unary: the empty string shares its class with the first character
        marked.discard(0)

    def long_label(s: int) -> bytes:
        return text[firstpos[s] - length[s] : firstpos[s]]

    raw = []
    for p in marked:
        w = long_label(p)
        for q in nxt[p].values():
            steps = 1
            while q not in marked:
                (q,) = nxt[q].values()
                steps += 1
            end = firstpos[q]
            raw.append((w, end - steps + 1, end, long_label(q)))
    return _assemble(text, {long_label(s) for s in marked}, raw)


def build(t: TextLike, oracle: bool = False) -> Cdawg:
    return build_naive(t) if oracle else build_fast(t)


def canonical_form(c: Cdawg) -> dict[bytes, frozenset[tuple[bytes, bytes]]]:
    lab = {v.id: v.long_label for v in c.nodes}
    form: dict[bytes, set[tuple[bytes, bytes]]] = {s: set() for s in lab.values()}
    for e in c.edges:
        form[lab[e.source]].add((c.label(e), lab[e.target]))
    return {k: frozenset(v) for k, v in form.items()}


def canonical_equal(a: Cdawg, b: Cdawg) -> bool:
    return canonical_form(a) == canonical_form(b)


def spell_check(c: Cdawg) -> bool:
    """Every non-empty substring is spelled by exactly one (path, stop) pair from the source."""
    expected = strings.substrings(c.text) - {b""}
    budget = len(expected)
    seen: Counter[bytes] = Counter()
    src = c.source
    if src.long_label:
        seen[src.long_label] += 1
    stack = [(src.id, src.long_label)]
    total = sum(seen.values())
    while stack:
        node, prefix = stack.pop()
        for e in c.out_edges(node):
            lab = c.label(e)
            for k in range(1, len(lab) + 1):
                seen[prefix + lab[:k]] += 1
            total += len(lab)
            if total > budget:
                return False
            stack.append((e.target, prefix + lab))
    return set(seen) == expected and all(v == 1 for v in seen.values())


def show(s: bytes) -> str:
    """Printable rendering of a byte string; the empty string shows as ``ε``."""
    if not s:
        return "ε"
    return "".join(
        chr(b) if 32 <= b < 127 and b != 92 else f"\\x{b:02x}" for b in s
    )


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(c: Cdawg) -> str:
    lines = ["digraph CDAWG {", "  rankdir=LR;"]
    for v in c.nodes:
        attrs = [f"label={_dot_quote(show(v.long_label))}"]
        if v.is_sink:
            attrs.append("peripheries=2")
        lines.append(f"  n{v.id} [{', '.join(attrs)}];")
    for e in c.edges:
        lines.append(
            f"  n{e.source} -> n{e.target} [label={_dot_quote(show(c.label(e)))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _js(s: bytes) -> str:
    return s.decode("latin-1")


def to_dict(c: Cdawg) -> dict:
    deg = {v.id: len(c.out_edges(v.id)) for v in c.nodes}
    return {
        "text": _js(c.text),
        "n": len(c.text),
        "size_e": c.size_e,
        "nodes": [
            {"id": v.id, "long": _js(v.long_label), "len": v.length, "out_degree": deg[v.id]}
            for v in c.nodes
        ],
        "edges": [
            {"from": e.source, "label": _js(c.label(e)), "to": e.target} for e in c.edges
        ],
    }


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, compact separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def export_json(c: Cdawg) -> str:
    return dumps(to_dict(c))


def size(t: TextLike) -> int:
    return build_fast(t).size_e
