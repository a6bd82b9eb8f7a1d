import random

import pytest

from htpbasis.annihilators import annihilator_family, dimension_upper_bound
from htpbasis.basis import (
    BasisFormatError,
    BuildCertificate,
    PivotError,
    PivotedHtp,
    UpperTriangularBasis,
    build,
    complete_basis,
    find_pivot_sequence,
    induction_families,
    lift,
    lift_pivot,
    verify_upper_triangular,
)
from htpbasis.linalg import inner_product, rank
from htpbasis.timegraph import Edge, htp_edges, htp_vector


# -- base case ---------------------------------------------------------------

def test_base_basis_has_61_distinct_certified_rows(base5):
    assert len(base5) == 61
    assert len(set(base5.perms())) == 61
    assert base5.certified
    assert base5.certificate.rank == 61


def test_base_basis_first_rows(base5):
    assert base5.rows[0] == PivotedHtp((1, 5, 2, 3, 4), Edge(1, 5, 1))
    assert base5.rows[1] == PivotedHtp((3, 5, 2, 1, 4), Edge(5, 2, 2))


def test_base_basis_rank_without_prepass(base5):
    assert rank(base5.vectors(), modular_prepass=False) == 61


def test_base_basis_verifies(base5):
    report = verify_upper_triangular(base5)
    assert report.passed


def test_base_basis_self_check_catches_corruption(monkeypatch):
    import htpbasis.basis as basis_mod

    rows = list(basis_mod.BASE5_ROWS)
    rows[1] = rows[0]  # duplicate row
    monkeypatch.setattr(basis_mod, "BASE5_ROWS", tuple(rows))
    with pytest.raises(ValueError, match="embedded base data"):
        basis_mod.base_basis_5()

    rows = list(basis_mod.BASE5_ROWS)
    rows[0] = ((1, 1, 2, 3, 4), 1)  # non-permutation
    monkeypatch.setattr(basis_mod, "BASE5_ROWS", tuple(rows))
    with pytest.raises(ValueError, match="embedded base data"):
        basis_mod.base_basis_5()


# -- pivot sequences ---------------------------------------------------------

def test_find_pivot_single_row_lowest_edge():
    pivots = find_pivot_sequence(5, [(1, 2, 3, 4, 5)])
    assert pivots == [Edge(0, 1, 0)]


def test_find_pivot_duplicate_rows_fail_at_first():
    with pytest.raises(PivotError) as err:
        find_pivot_sequence(5, [(1, 2, 3, 4, 5), (1, 2, 3, 4, 5)])
    assert err.value.row_index == 0


def test_find_pivot_on_base_rows(base5):
    pivots = find_pivot_sequence(5, base5.perms())
    assert len(set(pivots)) == 61
    for perm, pivot in zip(base5.perms(), pivots):
        assert pivot in htp_edges(5, perm)


# -- lift ---------------------------------------------------------------------

def test_lift_appends_new_city():
    assert lift((1, 2, 3, 4, 5)) == (1, 2, 3, 4, 5, 6)
    assert lift((3, 5, 2, 1, 4)) == (3, 5, 2, 1, 4, 6)


def test_lift_rejects_non_permutation():
    with pytest.raises(ValueError):
        lift((1, 2, 2, 4))


def test_lift_pivot_remaps_finish_edge():
    assert lift_pivot(6, Edge(3, 0, 5)) == Edge(3, 6, 5)
    assert lift_pivot(6, Edge(2, 4, 3)) == Edge(2, 4, 3)
    assert lift_pivot(6, Edge(0, 2, 0)) == Edge(0, 2, 0)


def test_lifted_block_stays_upper_triangular(base5):
    rows = tuple(PivotedHtp(lift(r.htp), lift_pivot(6, r.pivot))
                 for r in base5.rows)
    block = UpperTriangularBasis(6, rows)
    report = verify_upper_triangular(block)
    assert report.passed


# -- induction families --------------------------------------------------------

def test_families_first_block_n6():
    fams = induction_families(6)
    assert fams[0] == (6, 1, 4, 5, 2, 3)      # varies the last day
    assert fams[3] == (6, 1, 4, 5, 3, 2)      # then the two day-5 variants
    assert len(fams) == 24


def test_families_are_valid_and_distinct():
    for n in range(6, 10):
        fams = induction_families(n)
        assert len(fams) == (n - 1) ** 2 - 1
        assert len(set(fams)) == len(fams)
        for p in fams:
            assert sorted(p) == list(range(1, n + 1))


@pytest.mark.parametrize("n", range(6, 13))
def test_families_fixed_positions_consistent(n):
    m = n - 1
    fams = induction_families(n)
    idx = 0
    for i in range(1, n):
        for j in range(1, n - 2):
            p = fams[idx]; idx += 1
            fixed = (n, i, (i % m) + 1, ((i + j) % m) + 1)
            assert (p[0], p[1], p[n - 2], p[n - 1]) == fixed
            assert len(set(fixed)) == 4
        p = fams[idx]; idx += 1
        assert (p[0], p[1], p[n - 2], p[n - 1]) == (
            n, i, ((i + 1) % m) + 1, (i % m) + 1)
        if i != n - 1:
            p = fams[idx]; idx += 1
            assert (p[0], p[1], p[n - 2], p[n - 1]) == (
                n, i, ((i + 1) % m) + 1, ((i + 2) % m) + 1)
    assert idx == len(fams)


def test_families_reject_order_five():
    with pytest.raises(ValueError):
        induction_families(5)


# -- completion and build ------------------------------------------------------

def test_complete_basis_fills_the_deficit(base5):
    n = 6
    fams = induction_families(n)
    lifted = [lift(q) for q in base5.perms()]
    perms = fams + lifted
    pivots = find_pivot_sequence(n, perms)
    cert = BuildCertificate(pivot_check=True, rank=rank([htp_vector(n, p) for p in perms]),
                            target=len(perms))
    partial = UpperTriangularBasis(n, tuple(
        PivotedHtp(p, piv) for p, piv in zip(perms, pivots)), cert)
    assert partial.certified
    full = complete_basis(n, partial, 121)
    assert len(full) == 121
    assert full.certified
    assert full.certificate.details["added"] == 36


def test_complete_basis_returns_partial_at_target(built_bases):
    b6 = built_bases[6]
    assert complete_basis(6, b6, 121) is b6


def test_complete_basis_requires_certified_partial():
    stub = UpperTriangularBasis(6, ())
    with pytest.raises(ValueError):
        complete_basis(6, stub, 121)


def test_build_rejects_small_order():
    with pytest.raises(ValueError):
        build(4)


def test_build_order_five_is_base_case(base5):
    assert build(5).perms() == base5.perms()


def test_build_six(built_bases):
    b = built_bases[6]
    assert len(b) == 121 == dimension_upper_bound(6)
    assert b.certified
    assert verify_upper_triangular(b).passed
    for p in b.perms():
        assert sorted(p) == list(range(1, 7))


def test_build_rows_are_annihilated(built_bases):
    fam = annihilator_family(6)
    for v in built_bases[6].vectors():
        for g in fam.members():
            assert inner_product(v, g) == 0


def test_build_is_deterministic(built_bases):
    again = build(6)
    assert again.perms() == built_bases[6].perms()
    assert [r.pivot for r in again.rows] == [r.pivot for r in built_bases[6].rows]


# -- verification negatives ------------------------------------------------------

def test_verify_detects_duplicate_row(base5):
    rows = list(base5.rows)
    rows[-1] = rows[0]
    tampered = UpperTriangularBasis(5, tuple(rows))
    report = verify_upper_triangular(tampered)
    assert not report.passed
    failed = {c.label for c in report.checks if not c.passed}
    assert "rows are distinct" in failed
    assert "pivot edges are private to their rows" in failed


def test_verify_detects_reversed_order(base5):
    reversed_rows = tuple(reversed(base5.rows))
    report = verify_upper_triangular(UpperTriangularBasis(5, reversed_rows))
    assert not report.passed
    failed = {c.label for c in report.checks if not c.passed}
    assert "pivot edges are private to their rows" in failed


def test_random_sublists_stay_upper_triangular(base5):
    rng = random.Random(8)
    for _ in range(100):
        size = rng.randint(1, 61)
        picks = sorted(rng.sample(range(61), size))
        rows = tuple(base5.rows[i] for i in picks)
        report = verify_upper_triangular(UpperTriangularBasis(5, rows))
        assert report.passed
        assert rank([htp_vector(5, r.htp) for r in rows]) == len(rows)


# -- serialization ----------------------------------------------------------------

def test_serialization_round_trip(base5, tmp_path):
    path = tmp_path / "b.txt"
    base5.save(path)
    loaded = UpperTriangularBasis.load(path)
    assert loaded.n == 5
    assert loaded.perms() == base5.perms()
    assert [r.pivot for r in loaded.rows] == [r.pivot for r in base5.rows]
    assert verify_upper_triangular(loaded).passed


def test_from_text_rejects_bad_header():
    with pytest.raises(BasisFormatError):
        UpperTriangularBasis.from_text("rows 2\nn 5\ncertified true\n")


def test_from_text_rejects_tiny_order():
    with pytest.raises(BasisFormatError):
        UpperTriangularBasis.from_text("n 2\nrows 0\ncertified false\n")


def test_from_text_rejects_non_permutation():
    text = "n 5\nrows 1\ncertified false\nperm: 1 2 3 4 9 ; pivot: 0 1 0\n"
    with pytest.raises(BasisFormatError):
        UpperTriangularBasis.from_text(text)


def test_from_text_rejects_count_mismatch():
    text = "n 5\nrows 2\ncertified false\nperm: 1 2 3 4 5 ; pivot: 0 1 0\n"
    with pytest.raises(BasisFormatError):
        UpperTriangularBasis.from_text(text)
