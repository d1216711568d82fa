"""Cell tables of the omega-category generated by a parity structure.

An n-cell is a double row of positive chains (M_0..M_n; P_0..P_n) with
equal top columns, each higher column's boundary moving the column
below.  Over a weak parity complex every column of every valid cell is
a well-formed subset, the cells of each dimension are finitely
enumerable, and every cell decomposes into singleton-top slices and is
reachable from atoms and identities under composition.
"""

from __future__ import annotations

import os
from collections import deque
from typing import Iterator, Sequence

from .chain import FreeDirectedComplex, from_structure
from .multiset import GeneratorId, Multiset, SignedVector
from .ordering import lex_topological_order
from .parity_core import (
    AdditiveParityStructure,
    CLASS_WEAK,
    ParityStructure,
    Structure,
    StructureError,
    _additive_view,
    atom_faces,
    face_images,
    iterated_boundaries,
    validate,
)

#: Environment variable capping enumeration size (number of cells).
MAX_CELLS_ENV = "PARITYKIT_MAX_CELLS"
DEFAULT_MAX_CELLS = 10**6


class NotComposableError(ValueError):
    """The requested source/target faces do not match."""


class InternalCheckError(RuntimeError):
    """A consequence the theory guarantees failed to hold; inputs are suspect."""


class EnumerationCapError(RuntimeError):
    """Cell enumeration exceeded the configured cap."""


class CellTable:
    """Immutable double row of chains; dimension = number of columns - 1.

    Construction checks only the shape (equal row lengths, column k
    graded by dimension k); the cell conditions are validate_cell's job.
    """

    __slots__ = ("_neg", "_pos", "_hash")

    def __init__(self, neg: Sequence[Multiset], pos: Sequence[Multiset]):
        neg = tuple(neg)
        pos = tuple(pos)
        if not neg or len(neg) != len(pos):
            raise ValueError("cell table needs equal, nonempty rows")
        for k, (m, p) in enumerate(zip(neg, pos)):
            if m.dim != k or p.dim != k:
                raise ValueError(f"column {k} must be graded by dimension {k}")
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_pos", pos)
        object.__setattr__(self, "_hash", hash((neg, pos)))

    def __setattr__(self, name, value):
        raise AttributeError("CellTable is immutable")

    @property
    def dim(self) -> int:
        return len(self._neg) - 1

    @property
    def neg(self) -> tuple[Multiset, ...]:
        return self._neg

    @property
    def pos(self) -> tuple[Multiset, ...]:
        return self._pos

    @property
    def top(self) -> Multiset:
        return self._neg[-1]

    def is_identity(self) -> bool:
        """True iff the top column is empty (the lift of a lower cell)."""
        return self.dim >= 1 and self._neg[-1].is_empty() and self._pos[-1].is_empty()

    def is_subset_columned(self) -> bool:
        return all(m.is_radical() and p.is_radical() for m, p in zip(self._neg, self._pos))

    def sort_key(self) -> tuple:
        return (
            self.dim,
            tuple(m.sort_key() for m in self._neg),
            tuple(p.sort_key() for p in self._pos),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CellTable):
            return NotImplemented
        return self._neg == other._neg and self._pos == other._pos

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CellTable({self!s})"

    def __str__(self) -> str:
        row = lambda cols: ", ".join(str(c) for c in cols)
        return f"({row(self._neg)}; {row(self._pos)})"


def _as_complex(source: Structure | FreeDirectedComplex) -> FreeDirectedComplex:
    if isinstance(source, FreeDirectedComplex):
        return source
    return from_structure(source)


def validate_cell(
    source: Structure | FreeDirectedComplex, table: CellTable, mode: str = "nu"
) -> tuple[bool, str | None]:
    """Check the cell conditions; returns (ok, reason-if-not).

    Mode "rho" checks the boundary conditions and top equality; mode
    "nu" additionally requires augmentation 1 in dimension 0 (an error
    if the complex has no augmentation).
    """
    if mode not in ("rho", "nu"):
        raise ValueError(f"unknown cell mode {mode!r}")
    complex_ = _as_complex(source)
    for column in (*table.neg, *table.pos):
        for g in column:
            complex_.require(g)
    if table.neg[-1] != table.pos[-1]:
        return False, f"top columns differ: {table.neg[-1]} vs {table.pos[-1]}"
    for k in range(table.dim):
        want = table.pos[k].to_vector() - table.neg[k].to_vector()
        for label, column in (("negative", table.neg[k + 1]), ("positive", table.pos[k + 1])):
            got = complex_.boundary(column.to_vector())
            if got != want:
                return (
                    False,
                    f"{label} column {k + 1} has boundary {got}, expected {want}",
                )
    if mode == "nu":
        for label, column in (("negative", table.neg[0]), ("positive", table.pos[0])):
            if complex_.augmentation(column) != 1:
                return False, f"{label} column 0 has augmentation {column.total()}, expected 1"
    return True, None


def face(table: CellTable, k: int, sign: str) -> CellTable:
    """The k-source or k-target: first k columns kept, then the chosen row."""
    if not 0 <= k < table.dim:
        raise ValueError(f"face index {k} out of range for a {table.dim}-cell")
    if sign not in ("source", "target"):
        raise ValueError(f"sign must be 'source' or 'target', got {sign!r}")
    last = table.neg[k] if sign == "source" else table.pos[k]
    return CellTable(table.neg[:k] + (last,), table.pos[:k] + (last,))


def identity(table: CellTable) -> CellTable:
    """The identity one dimension up: same columns plus a pair of zeros."""
    empty = Multiset.empty(table.dim + 1)
    return CellTable(table.neg + (empty,), table.pos + (empty,))


def lift(table: CellTable, dim: int) -> CellTable:
    """Iterated identity up to the given dimension."""
    if dim < table.dim:
        raise ValueError(f"cannot lift a {table.dim}-cell down to dimension {dim}")
    out = table
    while out.dim < dim:
        out = identity(out)
    return out


def compose(x: CellTable, y: CellTable, k: int) -> CellTable:
    """The k-composite: shared columns up to k, sums above.

    When both operands have subset columns the sums are guaranteed to be
    disjoint unions; a violation means the inputs were not cells of a
    weak parity complex and raises InternalCheckError.
    """
    if x.dim != y.dim:
        raise NotComposableError(f"dimensions differ: {x.dim} vs {y.dim}")
    if not 0 <= k < x.dim:
        raise NotComposableError(f"composition index {k} out of range for {x.dim}-cells")
    if face(x, k, "target") != face(y, k, "source"):
        raise NotComposableError(f"{k}-target of the first is not the {k}-source of the second")
    check_subsets = x.is_subset_columned() and y.is_subset_columned()
    neg = list(x.neg[: k + 1])
    pos = list(y.pos[: k + 1])
    for j in range(k + 1, x.dim + 1):
        m = x.neg[j] + y.neg[j]
        p = x.pos[j] + y.pos[j]
        if check_subsets and not (m.is_radical() and p.is_radical()):
            raise InternalCheckError(
                f"column {j} of a composite of subset-columned cells is not a subset"
            )
        neg.append(m)
        pos.append(p)
    return CellTable(neg, pos)


def atom(struct: Structure, gen: GeneratorId) -> CellTable:
    """The atom of a generator: its iterated face levels as a table.

    For parity structures the rows are the subset face levels; for
    additive structures the iterated multiset boundaries.  The result is
    a valid nu-cell exactly when the structure is unital at the
    generator.
    """
    struct.require(gen)
    if isinstance(struct, ParityStructure):
        neg_levels, pos_levels = atom_faces(struct, gen)
        neg = [Multiset.subset(k, level) for k, level in enumerate(neg_levels)]
        pos = [Multiset.subset(k, level) for k, level in enumerate(pos_levels)]
        return CellTable(neg, pos)
    neg_ms, pos_ms = iterated_boundaries(struct, gen)
    return CellTable(neg_ms, pos_ms)


def cell_zero(struct: Structure, gen: GeneratorId) -> CellTable:
    """The 0-cell at a dimension-0 generator."""
    struct.require(gen)
    if gen.dim != 0:
        raise ValueError(f"{gen.name!r} has dimension {gen.dim}, expected 0")
    column = Multiset.of(gen)
    return CellTable((column,), (column,))


# ---------------------------------------------------------------------------
# enumeration


def _max_cells() -> int:
    raw = os.environ.get(MAX_CELLS_ENV)
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError:
        raise EnumerationCapError(f"{MAX_CELLS_ENV} must be an integer, got {raw!r}")
    if value <= 0:
        raise EnumerationCapError(f"{MAX_CELLS_ENV} must be positive, got {value}")
    return value


def _well_formed_subsets(parity: ParityStructure, dim: int, pool: Sequence[GeneratorId]) -> Iterator[frozenset[GeneratorId]]:
    """All well-formed subsets drawn from pool, smallest-lexicographic first.

    In dimension 0 these are exactly the singletons; in higher
    dimensions the empty set is included.
    """
    pool = sorted(pool)
    if dim == 0:
        for g in pool:
            yield frozenset([g])
        return

    def extend(start: int, chosen: list[GeneratorId], used_neg: set, used_pos: set):
        yield frozenset(chosen)
        for i in range(start, len(pool)):
            g = pool[i]
            ng, pg = parity.neg(g), parity.pos(g)
            if used_neg & ng or used_pos & pg:
                continue
            chosen.append(g)
            yield from extend(i + 1, chosen, used_neg | ng, used_pos | pg)
            chosen.pop()

    yield from extend(0, [], set(), set())


def enumerate_cells(struct: Structure, max_dim: int) -> list[CellTable]:
    """The complete, duplicate-free list of valid nu-cells up to max_dim.

    Requires the structure to classify as a weak parity complex, which
    guarantees every cell's columns are well-formed subsets and makes
    the top-down search complete.  Output is in canonical order.
    """
    report = validate(struct)
    if not report.meets(CLASS_WEAK):
        raise StructureError(
            f"enumeration needs a weak parity complex, got {report.classification}"
        )
    parity = struct if isinstance(struct, ParityStructure) else struct.as_parity()
    cap = _max_cells()
    out: list[CellTable] = []

    neg_of = {g: parity.neg(g) for g in parity.all_generators() if g.dim >= 1}
    pos_of = {g: parity.pos(g) for g in parity.all_generators() if g.dim >= 1}

    def union_faces(s: frozenset[GeneratorId], which: dict) -> set[GeneratorId]:
        acc: set[GeneratorId] = set()
        for g in s:
            acc |= which[g]
        return acc

    def finish(levels: list[tuple[frozenset, frozenset]], d: int) -> CellTable:
        # levels are (M_k, P_k) from dimension d down to 0
        neg = [Multiset.subset(d - i, m) for i, (m, _) in enumerate(levels)]
        pos = [Multiset.subset(d - i, p) for i, (_, p) in enumerate(levels)]
        neg.reverse()
        pos.reverse()
        return CellTable(neg, pos)

    def descend(levels: list[tuple[frozenset, frozenset]], d: int) -> Iterator[CellTable]:
        k = d - (len(levels) - 1)  # dimension of the lowest chosen column
        if k == 0:
            yield finish(levels, d)
            return
        above_m, above_p = levels[-1]
        fm = union_faces(above_m, neg_of), union_faces(above_m, pos_of)
        fp = union_faces(above_p, neg_of), union_faces(above_p, pos_of)
        req_m = frozenset(fm[0] - fm[1])
        req_p = frozenset(fm[1] - fm[0])
        if req_m != frozenset(fp[0] - fp[1]) or req_p != frozenset(fp[1] - fp[0]):
            return  # the two rows above cannot move one common column pair
        blocked_m: set[GeneratorId] = set()
        blocked_p: set[GeneratorId] = set()
        for b in above_m | above_p:
            blocked_m |= pos_of[b]
            blocked_p |= neg_of[b]
        if req_m & blocked_m or req_p & blocked_p:
            return
        if k - 1 == 0:
            # columns below must be singletons with the required differences
            if len(req_m) == 1 and len(req_p) == 1:
                yield from descend(levels + [(req_m, req_p)], d)
            elif not req_m and not req_p:
                for g in parity.generators(0):
                    if g in blocked_m or g in blocked_p:
                        continue
                    point = frozenset([g])
                    yield from descend(levels + [(point, point)], d)
            return
        pool = [
            g
            for g in parity.generators(k - 1)
            if g not in req_m and g not in req_p and g not in blocked_m and g not in blocked_p
        ]
        for shared in _well_formed_extensions(parity, k - 1, req_m, req_p, pool):
            m_col = req_m | shared
            p_col = req_p | shared
            yield from descend(levels + [(m_col, p_col)], d)

    def _well_formed_extensions(parity, dim, base_m, base_p, pool):
        """Shared parts X making both base_m | X and base_p | X well-formed."""
        if dim == 0:
            raise AssertionError("dimension-0 extensions are handled by the caller")
        if not _pairwise_wf(parity, base_m) or not _pairwise_wf(parity, base_p):
            return
        used = {
            "mn": union_faces(frozenset(base_m), neg_of),
            "mp": union_faces(frozenset(base_m), pos_of),
            "pn": union_faces(frozenset(base_p), neg_of),
            "pp": union_faces(frozenset(base_p), pos_of),
        }
        pool = sorted(pool)

        def extend(start, chosen, used):
            yield frozenset(chosen)
            for i in range(start, len(pool)):
                g = pool[i]
                ng, pg = neg_of[g], pos_of[g]
                if used["mn"] & ng or used["mp"] & pg or used["pn"] & ng or used["pp"] & pg:
                    continue
                chosen.append(g)
                child = {
                    "mn": used["mn"] | ng,
                    "mp": used["mp"] | pg,
                    "pn": used["pn"] | ng,
                    "pp": used["pp"] | pg,
                }
                yield from extend(i + 1, chosen, child)
                chosen.pop()

        yield from extend(0, [], used)

    def _pairwise_wf(parity, subset):
        seen_n: set[GeneratorId] = set()
        seen_p: set[GeneratorId] = set()
        for g in subset:
            ng, pg = neg_of[g], pos_of[g]
            if seen_n & ng or seen_p & pg:
                return False
            seen_n |= ng
            seen_p |= pg
        return True

    for d in range(max_dim + 1):
        for top in _well_formed_subsets(parity, d, parity.generators(d)):
            for cell in descend([(top, top)], d):
                out.append(cell)
                if len(out) > cap:
                    raise EnumerationCapError(
                        f"enumeration exceeded {cap} cells (set {MAX_CELLS_ENV} to raise)"
                    )
    out.sort(key=CellTable.sort_key)
    return out


# ---------------------------------------------------------------------------
# excision


def excision_decompose(
    source: Structure | FreeDirectedComplex, table: CellTable
) -> list[CellTable]:
    """Split a cell into singleton-top slices composing back to it.

    The top's members are ordered so that the positive faces of an
    earlier (or equal) member never meet the negative faces of a later
    one reversed -- i.e. pos(b_i) meet neg(b_j) is empty whenever
    i >= j -- and the slices' (n-1)-composite, left to right, equals the
    input.  Identity cells decompose into the empty list.

    Requires a globular, weakly loop-free structure and a valid cell of
    dimension >= 1; intermediate columns failing positivity mean the
    hypotheses were violated and raise InternalCheckError.
    """
    complex_ = _as_complex(source)
    struct = complex_.structure
    report = validate(struct)
    if not (report.globular and report.weakly_loop_free):
        raise StructureError(
            "excision needs a globular, weakly loop-free structure, got "
            f"globular={report.globular}, weakly_loop_free={report.weakly_loop_free}"
        )
    if table.dim < 1:
        raise ValueError("excision applies to cells of dimension >= 1")
    ok, reason = validate_cell(complex_, table, mode="nu" if complex_.augmented else "rho")
    if not ok:
        raise ValueError(f"not a valid cell: {reason}")

    top = table.top
    if top.is_empty():
        return []
    members = list(top.support())
    if len(members) == 1 and top.is_radical():
        return [table]

    successors = {
        b: sorted(
            c
            for c in members
            if c != b and not struct.pos(b).disjoint(struct.neg(c))
        )
        for b in members
    }
    order, cycle = lex_topological_order(sorted(members), successors)
    if order is None:
        raise InternalCheckError(
            f"cycle among top members of a weakly loop-free structure: {cycle}"
        )
    sequence: list[GeneratorId] = []
    for b in order:
        sequence.extend([b] * top.count(b))

    slices: list[CellTable] = []
    current = table.neg[table.dim - 1].to_vector()
    for b in sequence:
        nxt = current + complex_.boundary_of(b)
        if not nxt.is_positive():
            raise InternalCheckError(
                f"intermediate column {nxt} is not positive; excision order failed"
            )
        column = Multiset.of(b)
        slices.append(
            CellTable(
                table.neg[: table.dim - 1] + (current.to_multiset(), column),
                table.pos[: table.dim - 1] + (nxt.to_multiset(), column),
            )
        )
        current = nxt
    if current.to_multiset() != table.pos[table.dim - 1]:
        raise InternalCheckError("excision slices do not close up to the target column")
    return slices


# ---------------------------------------------------------------------------
# generation by atoms


class AtomExpression:
    """Expression tree over atoms, identity lifts, and k-composites."""

    __slots__ = ()

    def evaluate(self, struct: Structure) -> CellTable:
        raise NotImplementedError

    def to_payload(self) -> list:
        raise NotImplementedError


class AtomLeaf(AtomExpression):
    __slots__ = ("gen",)

    def __init__(self, gen: GeneratorId):
        object.__setattr__(self, "gen", gen)

    def evaluate(self, struct: Structure) -> CellTable:
        if self.gen.dim == 0:
            return cell_zero(struct, self.gen)
        return atom(struct, self.gen)

    def to_payload(self) -> list:
        return ["atom", self.gen.name]

    def __repr__(self):
        return f"AtomLeaf({self.gen.name})"


class IdentityLift(AtomExpression):
    __slots__ = ("inner",)

    def __init__(self, inner: AtomExpression):
        object.__setattr__(self, "inner", inner)

    def evaluate(self, struct: Structure) -> CellTable:
        return identity(self.inner.evaluate(struct))

    def to_payload(self) -> list:
        return ["id", self.inner.to_payload()]

    def __repr__(self):
        return f"IdentityLift({self.inner!r})"


class Composite(AtomExpression):
    __slots__ = ("level", "left", "right")

    def __init__(self, level: int, left: AtomExpression, right: AtomExpression):
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def evaluate(self, struct: Structure) -> CellTable:
        return compose(self.left.evaluate(struct), self.right.evaluate(struct), self.level)

    def to_payload(self) -> list:
        return ["compose", self.level, self.left.to_payload(), self.right.to_payload()]

    def __repr__(self):
        return f"Composite({self.level}, {self.left!r}, {self.right!r})"


def atom_closure(struct: Structure, max_dim: int) -> dict[CellTable, AtomExpression]:
    """Breadth-first closure of atoms and identities under composition.

    Returns a witness expression for every cell reached; over a parity
    complex this covers every cell of each dimension <= max_dim.
    """
    known: dict[CellTable, AtomExpression] = {}
    queue: deque[CellTable] = deque()
    # (dim, k, face-table) -> cells of that dimension with that k-source / k-target
    by_source: dict[tuple[int, int, CellTable], list[CellTable]] = {}
    by_target: dict[tuple[int, int, CellTable], list[CellTable]] = {}

    def add(cell: CellTable, expr: AtomExpression) -> None:
        if cell not in known:
            known[cell] = expr
            queue.append(cell)

    for g in sorted(struct.all_generators()):
        if g.dim <= max_dim:
            leaf = AtomLeaf(g)
            add(leaf.evaluate(struct), leaf)

    while queue:
        cell = queue.popleft()
        if cell.dim < max_dim:
            add(identity(cell), IdentityLift(known[cell]))
        for k in range(cell.dim):
            src = face(cell, k, "source")
            tgt = face(cell, k, "target")
            partners_after = list(by_source.get((cell.dim, k, tgt), ()))
            partners_before = list(by_target.get((cell.dim, k, src), ()))
            by_source.setdefault((cell.dim, k, src), []).append(cell)
            by_target.setdefault((cell.dim, k, tgt), []).append(cell)
            if src == tgt:
                partners_after.append(cell)
                partners_before.append(cell)
            for y in partners_after:
                add(compose(cell, y, k), Composite(k, known[cell], known[y]))
            for x in partners_before:
                if x is not cell:
                    add(compose(x, cell, k), Composite(k, known[x], known[cell]))
    return known


def generated_by_atoms(struct: Structure, table: CellTable) -> AtomExpression | None:
    """A witness that the cell is generated by atoms, if one exists.

    The witness evaluates back to the cell exactly; absence means the
    breadth-first closure of atoms and identities under composition does
    not contain the cell.
    """
    complex_ = _as_complex(struct)
    ok, reason = validate_cell(complex_, table, mode="nu" if complex_.augmented else "rho")
    if not ok:
        raise ValueError(f"not a valid cell: {reason}")
    closure = atom_closure(struct, table.dim)
    return closure.get(table)
