"""T-ideal oracle: linearization, relation rows, dimensions, membership."""

import pytest

from metanov import (
    IdentitySet,
    dimension_cross_check,
    load_identity_file,
    membership,
    parse_expr,
    parse_identity,
    preset,
    quotient_basis,
    quotient_dimension,
    relation_rows,
)
from metanov.fields import GF, QQ
from metanov.magma import multidegree, v, x
from metanov.oracle import DegreeCapExceeded, linearize
from metanov.wlc import wlc_basis
from metanov.wn import wn_basis


def test_presets_exist():
    for name in ("rs", "wn", "lc", "met", "flex", "antiflex",
                 "wlc2", "wnov2", "nov2", "lie-nilp:2", "jordan-nilp:3",
                 "weak-flex:+", "weak-flex:-"):
        ids = preset(name)
        assert ids.identities
    assert len(preset("wnov2").identities) == 3
    assert len(preset("wlc2+flex").identities) == 3
    with pytest.raises(ValueError):
        preset("unknown-preset")


def test_linearize_multilinear_renumbers():
    f = v(3) * v(7) - v(7) * v(3)
    g = linearize(f)
    assert sorted({a.index for w in g.terms for a in _leaves(w)}) == [1, 2]


def test_linearize_square():
    # v1*v1 linearizes to v1*v2 + v2*v1
    f = v(1) * v(1)
    g = linearize(f)
    assert g == v(1) * v(2) + v(2) * v(1)


def test_linearize_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        linearize(v(1) * v(2) + v(1) * v(1))


def test_relation_rows_shape():
    m = relation_rows(preset("wnov2"), {1: 1, 2: 1, 3: 1})
    assert m.ncols == 12  # Catalan(2) * 3! = 2 * 6
    assert m.nrows >= 3
    for row in m.rows:
        assert all(0 <= col < m.ncols for col, _ in row)


def test_degree_cap_enforced():
    with pytest.raises(DegreeCapExceeded):
        quotient_dimension(preset("met"), {i: 1 for i in range(1, 8)})
    # raising the cap explicitly is allowed
    quotient_dimension(preset("wnov2"), {1: 2, 2: 1}, cap=7)


def test_dimensions_match_basis_counts_low_degrees():
    for md in ({1: 1, 2: 1}, {1: 2}, {1: 1, 2: 1, 3: 1}, {1: 2, 2: 1},
               {1: 1, 2: 1, 3: 1, 4: 1}, {1: 2, 2: 2}):
        assert quotient_dimension(preset("wnov2"), md) == len(wn_basis(md))
        assert quotient_dimension(preset("wlc2"), md) == len(wlc_basis(md))


def test_multilinear_dimension_sequence():
    wnov2 = preset("wnov2")
    dims = [quotient_dimension(wnov2, {i: 1 for i in range(1, n + 1)})
            for n in (2, 3, 4, 5)]
    assert dims == [2, 9, 16, 5]


def test_q_and_modular_dimensions_agree():
    assert dimension_cross_check(preset("wnov2"), {1: 1, 2: 1, 3: 1, 4: 1}) == 16
    assert dimension_cross_check(preset("wlc2"), {1: 2, 2: 1, 3: 1}) == 36


def test_quotient_basis_spans():
    md = {1: 1, 2: 1, 3: 1}
    basis = quotient_basis(preset("wnov2"), md)
    assert len(basis) == 9
    assert all(multidegree(w) == md for w in basis)


def test_membership_of_consequences():
    wnov2 = preset("wnov2")
    # a substitution instance of metabelianity is in the T-ideal
    f = parse_expr("(x1*x2)*(x3*x4)")
    assert membership(f, wnov2)
    # right symmetry instance
    f = parse_expr("A(x1,x2,x3) - A(x1,x3,x2)")
    assert membership(f, wnov2)
    # a plain left-normed word is not
    f = parse_expr("((x1*x2)*x3)*x4")
    assert not membership(f, wnov2)
    # the zero polynomial is trivially a member
    assert membership(parse_expr("x1 - x1"), wnov2)


def test_membership_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        membership(parse_expr("x1*x2 + x1"), preset("wnov2"))


def test_lie_nilp_preset_cuts_dimension():
    # adding commutator-nilpotency shrinks the multilinear degree-3 component
    base = quotient_dimension(preset("wlc2"), {1: 1, 2: 1, 3: 1})
    cut = quotient_dimension(preset("wlc2+lie-nilp:2"), {1: 1, 2: 1, 3: 1})
    assert cut < base


def test_identity_file_roundtrip(tmp_path):
    p = tmp_path / "ids.txt"
    p.write_text(
        "# commutativity and metabelianity\n"
        "v1*v2 - v2*v1 = 0\n"
        "(v1*v2)*(v3*v4) = 0\n"
    )
    ids = load_identity_file(str(p))
    assert len(ids.identities) == 2
    assert quotient_dimension(ids, {1: 1, 2: 1}) == 1


def test_identity_file_rejects_generators(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("x1*x2 = 0\n")
    with pytest.raises(Exception):
        load_identity_file(str(p))


def test_union_concatenates():
    u = preset("rs").union(preset("met"))
    assert len(u.identities) == 2
    assert "rs" in u.name and "met" in u.name


def _leaves(w):
    from metanov.magma import leaves
    return leaves(w)
