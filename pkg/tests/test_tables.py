import pytest
from hypothesis import given, strategies as st

from monodual.tables import (
    CayleyTable,
    MalformedTable,
    as_rows,
    canonical_form,
    canonical_form_with_opposite,
    relabel,
    render_table,
    transpose,
)
from monodual.catalog import MONOID_TABLES


def test_as_rows_rejects_out_of_range_entry():
    # a 2x2 table whose 1+1 cell points at a third, nonexistent element
    with pytest.raises(MalformedTable):
        as_rows([[0, 1], [1, 2]])


def test_as_rows_rejects_non_square():
    with pytest.raises(MalformedTable):
        as_rows([[0, 1], [1]])
    with pytest.raises(MalformedTable):
        as_rows([])


@st.composite
def small_tables(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    return tuple(
        tuple(draw(st.integers(min_value=0, max_value=n - 1)) for _ in range(n))
        for _ in range(n)
    )


@given(small_tables())
def test_json_round_trip(rows):
    t = CayleyTable.from_rows(rows)
    assert CayleyTable.from_json(t.to_json()) == t


@given(small_tables())
def test_transpose_involution(rows):
    assert transpose(transpose(rows)) == rows


@given(small_tables(), st.randoms())
def test_relabel_by_inverse_is_identity(rows, rnd):
    n = len(rows)
    perm = list(range(n))
    rnd.shuffle(perm)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    assert relabel(relabel(rows, perm), inv) == rows


@given(st.sampled_from(sorted(MONOID_TABLES)), st.randoms())
def test_canonical_form_invariant_under_relabeling(label, rnd):
    rows = MONOID_TABLES[label]
    n = len(rows)
    from monodual.tables import neutral_of

    e = neutral_of(rows)
    perm = [0] * n
    slots = [s for s in range(n) if s != 0]
    rnd.shuffle(slots)
    others = iter(slots)
    for x in range(n):
        perm[x] = 0 if x == e else next(others)
    shuffled = relabel(rows, perm)
    assert canonical_form(shuffled) == canonical_form(rows, neutral=e)


def test_canonical_form_idempotent():
    for rows in MONOID_TABLES.values():
        from monodual.tables import neutral_of

        c = canonical_form(rows, neutral=neutral_of(rows))
        assert canonical_form(c) == c
        c2 = canonical_form_with_opposite(rows, neutral=neutral_of(rows))
        assert canonical_form_with_opposite(c2) == c2


def test_render_table_layout():
    out = render_table("M6", MONOID_TABLES["M6"])
    assert out == "\n".join([
        "M6 | 0 1 2",
        "---+------",
        " 0 | 0 1 2",
        " 1 | 1 2 1",
        " 2 | 2 1 2",
    ])
