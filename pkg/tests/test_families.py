import pytest

from cdawg_sens import strings as S
from cdawg_sens.cdawg import build_fast, size
from cdawg_sens.families import (
    FamilySpec,
    edited,
    family_row,
    generate,
    predicted_sizes,
    rows_to_tsv,
    verify_family,
)

AB = lambda i: b"ab" * i  # noqa: E731


def test_generate_examples():
    assert generate(FamilySpec("insertion", 3)) == AB(3) + b"c" + AB(4) == b"abababcabababab"
    assert generate(FamilySpec("deletion", 3)) == AB(4) + b"c" + AB(3)
    assert generate(FamilySpec("online", 2, 1)) == AB(3) + b"cab" + AB(4) + b"$"


def test_spec_validation():
    for bad in [("insertion", 0, 0), ("online", 2, 3), ("online", 2, -1), ("deletion", 2, 1), ("nope", 1, 0)]:
        with pytest.raises(ValueError):
            FamilySpec(*bad)


def test_predicted_examples():
    assert predicted_sizes(FamilySpec("insertion", 3)) == (9, 16)
    assert predicted_sizes(FamilySpec("deletion", 3)) == (9, 14)
    assert predicted_sizes(FamilySpec("substitution", 3)) == (9, 15)
    assert predicted_sizes(FamilySpec("online", 2, 1)) == (15, 27)


@pytest.mark.parametrize("kind", ["insertion", "deletion", "substitution"])
def test_lower_bound_families(kind):
    for m in range(1, 51):
        assert verify_family(FamilySpec(kind, m)), (kind, m)


def test_online_sizes():
    for m in range(1, 21):
        for k in range(m + 1):
            spec = FamilySpec("online", m, k)
            assert size(generate(spec)) == 5 * m + k + 4
            if k < m:
                assert verify_family(spec)


def test_online_prepend_formula_stops_at_k_equals_m():
    # b T_{m,m} is not a suffix of T_m; its size is 12m+6, one under the formula
    for m in range(1, 8):
        spec = FamilySpec("online", m, m)
        assert size(edited(spec)) == 12 * m + 6
        assert not verify_family(spec)


@pytest.mark.parametrize("m", range(1, 12))
def test_insertion_node_sets_and_degrees(m):
    t = generate(FamilySpec("insertion", m))
    t2 = b"b" + t
    mt, mt2 = S.maximal_labels(t), S.maximal_labels(t2)
    assert mt == {b""} | {AB(i) for i in range(1, m + 1)} | {t}
    assert mt2 == (mt - {t}) | {b"b" + AB(i) for i in range(m + 1)} | {t2}
    for i in range(m):
        assert S.out_degree(b"b" + AB(i), t2) == 2
    assert S.out_degree(b"b" + AB(m), t2) == 1
    assert S.out_degree(b"", t2) == 3


@pytest.mark.parametrize("m", range(1, 12))
def test_deletion_and_substitution_degrees(m):
    t = generate(FamilySpec("deletion", m))
    s = t[1:]
    g = build_fast(s)
    assert g.labels == {b"", t[1:]} | {AB(i) for i in range(1, m + 1)} | {b"b" + AB(i) for i in range(m)}
    assert g.out_degree(AB(m)) == 1
    assert all(g.out_degree(b"b" + AB(i)) == 2 for i in range(m))
    bs = b"b" + s
    h = build_fast(bs)
    assert h.out_degree(b"") == h.out_degree(b"b") == 3
    assert h.size_e == 4 * m + 3


def test_tsv_row():
    row = family_row(FamilySpec("insertion", 3))
    assert (row.length, row.e_before, row.e_after, row.delta, row.match) == (15, 9, 16, 7, True)
    tsv = rows_to_tsv([row]).splitlines()
    assert tsv[0].split("\t") == ["kind", "m", "k", "length", "e_before", "e_after", "delta", "predicted", "match"]
    assert tsv[1] == "insertion\t3\t0\t15\t9\t16\t7\t9,16\tyes"
