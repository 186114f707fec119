"""Witness strings for the lower bounds and their closed-form CDAWG sizes.

insertion     (ab)^m c (ab)^(m+1),        prepend b
deletion      (ab)^(m+1) c (ab)^m,        drop the first a
substitution  (ab)^(m+1) c (ab)^m,        first a -> b
online        (ab)^(m+k) c ab (ab)^(2m) $, prepend b   (0 <= k <= m)
"""

from __future__ import annotations

from dataclasses import dataclass

from .cdawg import size
from .sensitivity import EditOp, apply_left_edit

KINDS = ("insertion", "deletion", "substitution", "online")

# delta achieved by each lower-bound family, as e(T) - gap
GAPS = {"insertion": 2, "deletion": 4, "substitution": 3}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    m: int
    k: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {KINDS}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.kind == "online":
            if not 0 <= self.k <= self.m:
                raise ValueError(f"k must lie in 0..m, got k={self.k}, m={self.m}")
        elif self.k != 0:
            raise ValueError("k only applies to the online family")


def _ab(i: int) -> bytes:
    return b"ab" * i


def generate(spec: FamilySpec) -> bytes:
    m, k = spec.m, spec.k
    if spec.kind == "insertion":
        return _ab(m) + b"c" + _ab(m + 1)
    if spec.kind in ("deletion", "substitution"):
        return _ab(m + 1) + b"c" + _ab(m)
    return _ab(m + k) + b"cab" + _ab(2 * m) + b"$"


def edit_for(spec: FamilySpec) -> EditOp:
    if spec.kind == "deletion":
        return EditOp.delete()
    if spec.kind == "substitution":
        return EditOp.substitute(b"b")
    return EditOp.insert(b"b")


def edited(spec: FamilySpec) -> bytes:
    return apply_left_edit(generate(spec), edit_for(spec))


def predicted_sizes(spec: FamilySpec) -> tuple[int, int]:
    m, k = spec.m, spec.k
    if spec.kind == "insertion":
        return 2 * m + 3, 4 * m + 4
    if spec.kind == "deletion":
        return 2 * m + 3, 4 * m + 2
    if spec.kind == "substitution":
        return 2 * m + 3, 4 * m + 3
    return 5 * m + k + 4, 8 * m + 4 * k + 7


def predicted_delta(spec: FamilySpec) -> int:
    before, after = predicted_sizes(spec)
    return after - before


@dataclass(frozen=True)
class FamilyRow:
    kind: str
    m: int
    k: int
    length: int
    e_before: int
    e_after: int
    delta: int
    predicted: tuple[int, int]
    match: bool

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["predicted"] = list(self.predicted)
        return d


def family_row(spec: FamilySpec) -> FamilyRow:
    t = generate(spec)
    before, after = size(t), size(edited(spec))
    pred = predicted_sizes(spec)
    match = (before, after) == pred
    if spec.kind in GAPS:
        match = match and after - before == before - GAPS[spec.kind]
    return FamilyRow(spec.kind, spec.m, spec.k, len(t), before, after, after - before, pred, match)


def verify_family(spec: FamilySpec) -> bool:
    """Actual sizes equal the closed forms, and the lower-bound delta is attained.

    For the online family the prepend-b formula is only claimed for k < m:
    ``b T_{m,m}`` is not a suffix of ``T_m`` and lands one edge short.
    """
    return family_row(spec).match


TSV_COLUMNS = ("kind", "m", "k", "length", "e_before", "e_after", "delta", "predicted", "match")


def rows_to_tsv(rows: list[FamilyRow]) -> str:
    out = ["\t".join(TSV_COLUMNS)]
    for r in rows:
        out.append(
            "\t".join(
                [r.kind, str(r.m), str(r.k), str(r.length), str(r.e_before), str(r.e_after),
                 str(r.delta), f"{r.predicted[0]},{r.predicted[1]}", "yes" if r.match else "no"]
            )
        )
    return "\n".join(out) + "\n"
