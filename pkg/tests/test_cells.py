from itertools import combinations, product

import pytest

from paritykit import cells
from paritykit.cells import (
    AtomLeaf,
    CellTable,
    EnumerationCapError,
    InternalCheckError,
    NotComposableError,
)
from paritykit.chain import from_structure
from paritykit.generators import oriental
from paritykit.multiset import Multiset
from paritykit.parity_core import ParityStructure, StructureError, is_well_formed


def col(struct, dim, *names):
    return Multiset.subset(dim, [struct.gen(n, dim) for n in names])


def table(struct, neg, pos):
    return CellTable(
        [col(struct, k, *row) for k, row in enumerate(neg)],
        [col(struct, k, *row) for k, row in enumerate(pos)],
    )


class TestValidateCell:
    def test_atom_012_is_a_nu_cell(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        assert cells.validate_cell(oriental2, t, "nu") == (True, None)

    def test_identity_one_cell(self, oriental2):
        t = table(oriental2, [["0"], []], [["0"], []])
        assert cells.validate_cell(oriental2, t, "nu") == (True, None)

    def test_boundary_mismatch_reported(self, oriental2):
        t = table(oriental2, [["0"], ["01"]], [["2"], ["01"]])
        ok, reason = cells.validate_cell(oriental2, t, "nu")
        assert not ok and "boundary" in reason

    def test_top_mismatch_reported(self, oriental2):
        t = table(oriental2, [["0"], ["01"]], [["1"], ["02"]])
        ok, reason = cells.validate_cell(oriental2, t)
        assert not ok and "top" in reason

    def test_nu_requires_augmentation_one(self, oriental2):
        t = CellTable(
            [Multiset.subset(0, [oriental2.gen("0"), oriental2.gen("1")])],
            [Multiset.subset(0, [oriental2.gen("0"), oriental2.gen("1")])],
        )
        ok, reason = cells.validate_cell(oriental2, t, "nu")
        assert not ok and "augmentation" in reason
        assert cells.validate_cell(oriental2, t, "rho") == (True, None)


class TestFace:
    def test_source_of_the_triangle_atom(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        assert cells.face(t, 1, "source") == table(
            oriental2, [["0"], ["02"]], [["2"], ["02"]]
        )
        assert cells.face(t, 1, "target") == table(
            oriental2, [["0"], ["01", "12"]], [["2"], ["01", "12"]]
        )

    def test_identity_face_laws(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        lifted = cells.identity(t)
        assert cells.face(lifted, t.dim, "source") == t
        assert cells.face(lifted, t.dim, "target") == t

    def test_out_of_range(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        with pytest.raises(ValueError):
            cells.face(t, 2, "source")

    def test_oriental5_footnote_snapshot(self):
        # regression anchor: the 1-target of the top atom of the 5-oriental
        # has the spine as its edge column
        o5 = oriental(5)
        t = cells.face(cells.atom(o5, o5.gen("012345")), 1, "target")
        assert t == table(
            o5,
            [["0"], ["01", "12", "23", "34", "45"]],
            [["5"], ["01", "12", "23", "34", "45"]],
        )
        assert cells.validate_cell(o5, t, "nu") == (True, None)


class TestCompose:
    def test_edges_compose_to_the_path(self, oriental2):
        a01 = cells.atom(oriental2, oriental2.gen("01"))
        a12 = cells.atom(oriental2, oriental2.gen("12"))
        assert cells.compose(a01, a12, 0) == table(
            oriental2, [["0"], ["01", "12"]], [["2"], ["01", "12"]]
        )

    def test_unit_laws_via_lifted_identities(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        for k in range(t.dim):
            left = cells.lift(cells.face(t, k, "source"), t.dim)
            right = cells.lift(cells.face(t, k, "target"), t.dim)
            assert cells.compose(left, t, k) == t
            assert cells.compose(t, right, k) == t

    def test_globe_unit(self, globe2):
        f = cells.atom(globe2, globe2.gen("top"))
        unit = cells.lift(cells.face(f, 0, "target"), 2)
        assert cells.compose(f, unit, 0) == f

    def test_not_composable(self, oriental2):
        a01 = cells.atom(oriental2, oriental2.gen("01"))
        a02 = cells.atom(oriental2, oriental2.gen("02"))
        with pytest.raises(NotComposableError):
            cells.compose(a01, a02, 0)

    def test_dimension_mismatch(self, oriental2):
        a01 = cells.atom(oriental2, oriental2.gen("01"))
        t = cells.atom(oriental2, oriental2.gen("012"))
        with pytest.raises(NotComposableError):
            cells.compose(a01, t, 0)

    def test_subset_violation_hard_errors(self, circle):
        x = table(circle, [["p"], ["a"]], [["q"], ["a"]])
        y = table(circle, [["q"], ["b"]], [["p"], ["b"]])
        xy = cells.compose(x, y, 0)
        with pytest.raises(InternalCheckError):
            cells.compose(xy, x, 0)


class TestIdentity:
    def test_identity_of_point(self, oriental2):
        t = cells.cell_zero(oriental2, oriental2.gen("0"))
        assert cells.identity(t) == table(oriental2, [["0"], []], [["0"], []])

    def test_identity_preserves_columns(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        lifted = cells.identity(t)
        assert lifted.neg[:3] == t.neg and lifted.pos[:3] == t.pos
        assert lifted.is_identity()

    def test_injective_on_sample(self, oriental2):
        sample = cells.enumerate_cells(oriental2, 1)
        lifted = [cells.identity(t) for t in sample]
        assert len(set(lifted)) == len(sample)


class TestAtom:
    def test_globe_atom(self, globe2):
        t = cells.atom(globe2, globe2.gen("top"))
        assert t == table(
            globe2, [["e0-"], ["e1-"], ["top"]], [["e0+"], ["e1+"], ["top"]]
        )

    def test_triangle_atom(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        assert t == table(
            oriental2, [["0"], ["02"], ["012"]], [["2"], ["01", "12"], ["012"]]
        )

    def test_point_atom(self, oriental2):
        assert cells.cell_zero(oriental2, oriental2.gen("1")) == CellTable(
            [Multiset.of(oriental2.gen("1"))], [Multiset.of(oriental2.gen("1"))]
        )

    def test_additive_atom_matches_parity_atom(self, oriental3):
        additive = oriental3.to_additive()
        for g in oriental3.all_generators():
            if g.dim == 0:
                continue
            assert cells.atom(oriental3, g) == cells.atom(additive, g)


def brute_force_cells(struct: ParityStructure, max_dim: int) -> set[CellTable]:
    """Independent oracle: all tables over all subset columns, filtered by
    the cell conditions (no movement solving)."""
    found = set()
    complex_ = from_structure(struct)
    subsets_by_dim = {}
    for k in range(max_dim + 1):
        gens = list(struct.generators(k))
        subsets_by_dim[k] = [
            frozenset(c) for r in range(len(gens) + 1) for c in combinations(gens, r)
        ]
    for d in range(max_dim + 1):
        rows = [subsets_by_dim[k] for k in range(d + 1)]
        for neg_choice in product(*rows):
            for pos_choice in product(*rows[:-1]):
                pos_full = pos_choice + (neg_choice[-1],)
                t = CellTable(
                    [Multiset.subset(k, s) for k, s in enumerate(neg_choice)],
                    [Multiset.subset(k, s) for k, s in enumerate(pos_full)],
                )
                ok, _ = cells.validate_cell(complex_, t, "nu")
                if ok and all(
                    is_well_formed(struct, k, s)
                    for k, s in enumerate(neg_choice)
                ) and all(
                    is_well_formed(struct, k, s) for k, s in enumerate(pos_full)
                ):
                    found.add(t)
    return found


class TestEnumerate:
    def test_oriental2_against_brute_force(self, oriental2):
        enumerated = cells.enumerate_cells(oriental2, 2)
        assert set(enumerated) == brute_force_cells(oriental2, 2)
        counts = [sum(1 for t in enumerated if t.dim == d) for d in range(3)]
        assert counts == [3, 7, 8]

    def test_globe1_against_brute_force(self, globe1):
        enumerated = cells.enumerate_cells(globe1, 1)
        assert set(enumerated) == brute_force_cells(globe1, 1)
        counts = [sum(1 for t in enumerated if t.dim == d) for d in range(2)]
        assert counts == [2, 3]

    def test_empty_structure(self):
        assert cells.enumerate_cells(ParityStructure.build([]), 3) == []

    def test_requires_weak_parity_complex(self, circle):
        with pytest.raises(StructureError):
            cells.enumerate_cells(circle, 1)

    def test_canonical_order_is_stable(self, oriental2):
        first = cells.enumerate_cells(oriental2, 2)
        second = cells.enumerate_cells(oriental2, 2)
        assert first == second
        assert first == sorted(first, key=CellTable.sort_key)

    def test_cap(self, oriental2, monkeypatch):
        monkeypatch.setenv(cells.MAX_CELLS_ENV, "5")
        with pytest.raises(EnumerationCapError):
            cells.enumerate_cells(oriental2, 2)

    def test_all_enumerated_cells_validate(self, oriental3):
        complex_ = from_structure(oriental3)
        for t in cells.enumerate_cells(oriental3, 3):
            assert cells.validate_cell(complex_, t, "nu") == (True, None)


class TestExcision:
    def test_path_splits_into_edges(self, oriental2):
        t = table(oriental2, [["0"], ["01", "12"]], [["2"], ["01", "12"]])
        slices = cells.excision_decompose(oriental2, t)
        assert slices == [
            table(oriental2, [["0"], ["01"]], [["1"], ["01"]]),
            table(oriental2, [["1"], ["12"]], [["2"], ["12"]]),
        ]

    def test_singleton_top_is_fixed(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        assert cells.excision_decompose(oriental2, t) == [t]

    def test_identity_decomposes_to_nothing(self, oriental2):
        t = cells.identity(cells.cell_zero(oriental2, oriental2.gen("0")))
        assert cells.excision_decompose(oriental2, t) == []

    def test_oriental3_two_source_recomposes(self, oriental3):
        t = cells.face(cells.atom(oriental3, oriental3.gen("0123")), 2, "source")
        slices = cells.excision_decompose(oriental3, t)
        assert len(slices) == len(list(t.top)) and len(slices) > 1
        back = slices[0]
        for s in slices[1:]:
            back = cells.compose(back, s, t.dim - 1)
        assert back == t

    def test_ordering_respects_face_disjointness(self, oriental3):
        t = cells.face(cells.atom(oriental3, oriental3.gen("0123")), 2, "target")
        slices = cells.excision_decompose(oriental3, t)
        tops = [next(iter(s.top)) for s in slices]
        for i, b_i in enumerate(tops):
            for j, b_j in enumerate(tops):
                if i >= j:
                    assert oriental3.to_additive().pos(b_i).disjoint(
                        oriental3.to_additive().neg(b_j)
                    )

    def test_rejects_invalid_cell(self, oriental2):
        bad = table(oriental2, [["0"], ["01"]], [["2"], ["01"]])
        with pytest.raises(ValueError):
            cells.excision_decompose(oriental2, bad)

    def test_rejects_non_loop_free_structure(self, circle):
        t = table(circle, [["p"], ["a"]], [["q"], ["a"]])
        with pytest.raises(StructureError):
            cells.excision_decompose(circle, t)


class TestGeneratedByAtoms:
    def test_atom_is_its_own_witness(self, oriental2):
        t = cells.atom(oriental2, oriental2.gen("012"))
        expr = cells.generated_by_atoms(oriental2, t)
        assert isinstance(expr, AtomLeaf)
        assert expr.evaluate(oriental2) == t

    def test_identity_witness(self, oriental2):
        t = cells.identity(cells.cell_zero(oriental2, oriental2.gen("0")))
        expr = cells.generated_by_atoms(oriental2, t)
        assert expr is not None and expr.evaluate(oriental2) == t

    def test_every_oriental2_cell_reached(self, oriental2):
        for t in cells.enumerate_cells(oriental2, 2):
            expr = cells.generated_by_atoms(oriental2, t)
            assert expr is not None
            assert expr.evaluate(oriental2) == t

    def test_expression_payloads(self, oriental2):
        t = table(oriental2, [["0"], ["01", "12"]], [["2"], ["01", "12"]])
        expr = cells.generated_by_atoms(oriental2, t)
        payload = expr.to_payload()
        assert payload[0] == "compose" and payload[1] == 0
