"""Finite posets, lattices, and echelon dynamics.

Elements of a poset on ``n`` points are the integers ``0 .. n-1``.  Order
data is stored as bitmasks: ``up[x]`` has bit ``y`` set iff ``x <= y``
(reflexive), and ``down[y]`` is the transpose.  Everything downstream
(meets, joins, covers, linear extensions, the echelon map) works on these
masks with exact integer arithmetic only.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator

from .core import IntMatrix, Permutation
from .report import COUNTEREXAMPLE, SKIPPED, VERIFIED, Report


class PosetError(ValueError):
    pass


class CyclicCoversError(PosetError):
    """The supplied cover relation contains a directed cycle."""


class NotALatticeError(PosetError):
    def __init__(self, a: int, b: int, reason: str):
        self.pair = (a, b)
        self.reason = reason
        super().__init__(f"elements {a} and {b} have {reason}")


class NotDistributiveError(PosetError):
    pass


class SingularMatrixError(ValueError):
    """Raised when Bruhat elimination meets a column with no usable pivot."""


class ExtensionCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} linear extensions")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


class Poset:
    """A finite poset stored as reflexive up-set bitmasks."""

    __slots__ = ("n", "up", "down", "_cov_up", "_cov_down")

    def __init__(self, n: int, up_masks: Iterable[int], *, validate: bool = True):
        up = tuple(up_masks)
        if validate:
            _validate_up_masks(n, up)
        down = [0] * n
        for x in range(n):
            for y in _bits(up[x]):
                down[y] |= 1 << x
        self.n = n
        self.up = up
        self.down = tuple(down)
        self._cov_up: tuple[int, ...] | None = None
        self._cov_down: tuple[int, ...] | None = None

    # -- order queries -------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def covers_up(self) -> tuple[int, ...]:
        """Bitmask per element of its upper covers."""
        if self._cov_up is None:
            masks = []
            for x in range(self.n):
                strict = self.up[x] & ~(1 << x)
                m = 0
                for y in _bits(strict):
                    # y covers x iff nothing sits strictly between them
                    if not strict & self.down[y] & ~(1 << y):
                        m |= 1 << y
                masks.append(m)
            self._cov_up = tuple(masks)
        return self._cov_up

    def covers_down(self) -> tuple[int, ...]:
        if self._cov_down is None:
            ups = self.covers_up()
            masks = [0] * self.n
            for x in range(self.n):
                for y in _bits(ups[x]):
                    masks[y] |= 1 << x
            self._cov_down = tuple(masks)
        return self._cov_down

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in _bits(self.covers_up()[x])]

    def minimal_elements(self) -> list[int]:
        return [x for x in range(self.n) if self.down[x] == 1 << x]

    def maximal_elements(self) -> list[int]:
        return [x for x in range(self.n) if self.up[x] == 1 << x]

    def is_bounded(self) -> bool:
        """True when there is a unique minimum and a unique maximum."""
        return len(self.minimal_elements()) == 1 and len(self.maximal_elements()) == 1

    # -- construction --------------------------------------------------

    @classmethod
    def from_cover_pairs(cls, n: int, covers: Iterable[tuple[int, int]]) -> "Poset":
        """Build the reflexive-transitive closure of a cover relation.

        Raises CyclicCoversError when the digraph has a cycle, PosetError
        on out-of-range element labels.
        """
        succ = [0] * n
        for x, y in covers:
            if not (0 <= x < n and 0 <= y < n) or x == y:
                raise PosetError(f"bad cover pair ({x}, {y}) for n={n}")
            succ[x] |= 1 << y
        # Kahn's algorithm; leftovers mean a cycle.
        indeg = [0] * n
        for x in range(n):
            for y in _bits(succ[x]):
                indeg[y] += 1
        queue = [x for x in range(n) if indeg[x] == 0]
        topo = []
        while queue:
            x = queue.pop()
            topo.append(x)
            for y in _bits(succ[x]):
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if len(topo) != n:
            raise CyclicCoversError("cover relation has a directed cycle")
        up = [0] * n
        for x in reversed(topo):
            m = 1 << x
            for y in _bits(succ[x]):
                m |= up[y]
            up[x] = m
        return cls(n, up, validate=False)

    @classmethod
    def chain(cls, n: int) -> "Poset":
        full = (1 << n) - 1
        return cls(n, [full & ~((1 << x) - 1) for x in range(n)], validate=False)

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, [1 << x for x in range(n)], validate=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.n, self.up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={self.cover_pairs()})"


def _validate_up_masks(n: int, up: tuple[int, ...]) -> None:
    if len(up) != n:
        raise PosetError(f"expected {n} masks, got {len(up)}")
    full = (1 << n) - 1
    for x in range(n):
        m = up[x]
        if m & ~full:
            raise PosetError(f"mask of element {x} mentions elements >= {n}")
        if not m >> x & 1:
            raise PosetError(f"order is not reflexive at {x}")
        for y in _bits(m & ~(1 << x)):
            if up[y] >> x & 1:
                raise PosetError(f"antisymmetry fails on {{{x}, {y}}}")
            if up[y] & ~m:
                raise PosetError(f"transitivity fails at {x} <= {y}")


def poset_product(p: Poset, q: Poset) -> Poset:
    """Componentwise order on pairs, pair (a, b) encoded as a*q.n + b."""
    n = p.n * q.n
    up = []
    for a in range(p.n):
        for b in range(q.n):
            m = 0
            for a2 in _bits(p.up[a]):
                for b2 in _bits(q.up[b]):
                    m |= 1 << (a2 * q.n + b2)
            up.append(m)
    return Poset(n, up, validate=False)


def cover_counts(p: Poset) -> tuple[tuple[int, int], ...]:
    """Per element: (number of lower covers, number of upper covers)."""
    cu = p.covers_up()
    cd = p.covers_down()
    return tuple((cd[x].bit_count(), cu[x].bit_count()) for x in range(p.n))


# -- linear extensions ----------------------------------------------------


class LinearExtension:
    """A linear extension as the sequence order[0], order[1], ... (bottom up).

    ``rank(x)`` is the 1-based position of element x in that sequence.
    """

    __slots__ = ("order", "_ranks")

    def __init__(self, order: Iterable[int]):
        self.order = tuple(order)
        ranks = [0] * len(self.order)
        for pos, x in enumerate(self.order, start=1):
            ranks[x] = pos
        self._ranks = tuple(ranks)

    def rank(self, x: int) -> int:
        return self._ranks[x]

    def __len__(self) -> int:
        return len(self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearExtension):
            return NotImplemented
        return self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"LinearExtension({list(self.order)})"


def linear_extensions(p: Poset, cap: int | None = None) -> Iterator[LinearExtension]:
    """Yield every linear extension of p in lexicographic order of the sequence.

    With ``cap`` set, stop silently after that many extensions.
    """
    n = p.n
    down = p.down
    order: list[int] = []

    def rec(placed: int) -> Iterator[LinearExtension]:
        if len(order) == n:
            yield LinearExtension(order)
            return
        for x in range(n):
            b = 1 << x
            if placed & b:
                continue
            if down[x] & ~(placed | b):
                continue
            order.append(x)
            yield from rec(placed | b)
            order.pop()

    emitted = 0
    for ext in rec(0):
        yield ext
        emitted += 1
        if cap is not None and emitted >= cap:
            return


def count_linear_extensions(p: Poset, cap: int | None = None) -> int:
    k = 0
    for _ in linear_extensions(p, cap=cap):
        k += 1
    return k


def is_linear_extension(p: Poset, ext: LinearExtension) -> bool:
    if sorted(ext.order) != list(range(p.n)):
        return False
    return all(ext.rank(x) <= ext.rank(y) for x in range(p.n) for y in _bits(p.up[x]))


# -- Cartan matrices and Bruhat pivots ------------------------------------


def cartan_matrix(p: Poset, ext: LinearExtension) -> IntMatrix:
    """0/1 matrix with entry (i, j) = 1 iff order[j] <= order[i] in p.

    Rows and columns are indexed by positions of the extension, so the
    result is always unit lower triangular.
    """
    if not is_linear_extension(p, ext):
        raise PosetError("sequence is not a linear extension of this poset")
    return IntMatrix(_cartan_rows(p.down, ext.order))


def _cartan_rows(down: tuple[int, ...], order: tuple[int, ...]) -> list[list[int]]:
    return [[down[x] >> y & 1 for y in order] for x in order]


def _bruhat_pivot_cols(rows: list[list[int]]) -> list[int]:
    """Pivot column of each row under bottom-most pivoting, fraction free.

    Processes columns left to right and always pivots on the lowest row
    that is still pivotless and nonzero in the current column.  Row
    operations only ever add multiples of lower rows to higher rows, which
    preserves the rank of every lower-left justified submatrix, so the
    resulting pivot positions are exactly the lower-left rank jumps of the
    input.  Divisions follow the Bareiss one-step scheme and are exact.
    """
    n = len(rows)
    col_of_row = [-1] * n
    prev = 1
    for j in range(n):
        piv = -1
        for i in range(n - 1, -1, -1):
            if col_of_row[i] < 0 and rows[i][j]:
                piv = i
                break
        if piv < 0:
            raise SingularMatrixError(f"no pivot available in column {j + 1}")
        prow = rows[piv]
        pv = prow[j]
        scale_only_is_noop = pv == prev
        for r in range(n):
            if col_of_row[r] >= 0 or r == piv:
                continue
            row = rows[r]
            lv = row[j]
            if lv == 0:
                if scale_only_is_noop:
                    continue
                for c in range(j + 1, n):
                    v = row[c]
                    if v:
                        q, rem = divmod(pv * v, prev)
                        assert rem == 0, "Bareiss scaling must divide exactly"
                        row[c] = q
            else:
                for c in range(j + 1, n):
                    num = pv * row[c] - lv * prow[c]
                    q, rem = divmod(num, prev)
                    assert rem == 0, "Bareiss update must divide exactly"
                    row[c] = q
                row[j] = 0
        col_of_row[piv] = j
        prev = pv
    return col_of_row


def bruhat_permutation(m: IntMatrix) -> Permutation:
    """The permutation P with m in B.P.B for upper triangular invertible B.

    In matrix terms: w(i) = j iff the lower-left ranks of m jump at (i, j).
    For a permutation matrix this recovers the permutation itself.
    """
    if m.rows != m.cols:
        raise ValueError("Bruhat decomposition needs a square matrix")
    rows = [list(r) for r in m.entries]
    cols = _bruhat_pivot_cols(rows)
    return Permutation(c + 1 for c in cols)


def bruhat_rank_profile(m: IntMatrix) -> tuple[tuple[int, ...], ...]:
    """Table r with r[i-1][j-1] = rank of the submatrix on rows i..n, cols 1..j.

    Computed from the pivot positions; tests compare it against ranks of the
    literal submatrices.
    """
    n = m.rows
    rows = [list(r) for r in m.entries]
    cols = _bruhat_pivot_cols(rows)
    table = []
    for i in range(1, n + 1):
        table.append(tuple(
            sum(1 for r, c in enumerate(cols) if r + 1 >= i and c + 1 <= j)
            for j in range(1, n + 1)
        ))
    return tuple(table)


# -- echelonmotion ---------------------------------------------------------


class EchelonMap:
    """The echelon bijection of a poset induced by one linear extension."""

    __slots__ = ("extension", "mapping")

    def __init__(self, extension: LinearExtension, mapping: tuple[int, ...]):
        self.extension = extension
        self.mapping = mapping

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def permutation(self) -> Permutation:
        """The map written in extension coordinates, as a permutation of ranks."""
        ext = self.extension
        n = len(self.mapping)
        img = [0] * n
        for x in range(n):
            img[ext.rank(x) - 1] = ext.rank(self.mapping[x])
        return Permutation(img)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EchelonMap):
            return NotImplemented
        return self.extension == other.extension and self.mapping == other.mapping

    def __repr__(self) -> str:
        return f"EchelonMap(extension={self.extension!r}, mapping={self.mapping})"


def echelonmotion(p: Poset | "Lattice", ext: LinearExtension) -> EchelonMap:
    """Echelon map of p for the extension ext.

    Take the Cartan matrix W of (p, ext) and its Bruhat permutation P.
    A pivot of W at row i, column j sends the element at position j to the
    element at position i.  The pivot positions of an invertible matrix form
    a permutation, so this is a bijection on the elements.
    """
    if isinstance(p, Lattice):
        p = p.poset
    if not is_linear_extension(p, ext):
        raise PosetError("sequence is not a linear extension of this poset")
    rows = _cartan_rows(p.down, ext.order)
    cols = _bruhat_pivot_cols(rows)
    mapping = [-1] * p.n
    for i, j in enumerate(cols):
        mapping[ext.order[j]] = ext.order[i]
    return EchelonMap(ext, tuple(mapping))


def is_echelon_independent(p: Poset, extension_cap: int = 100_000) -> bool:
    """Whether every linear extension of p induces the same echelon map.

    Raises ExtensionCapExceeded rather than silently sampling when the
    poset has more than extension_cap extensions.
    """
    first: tuple[int, ...] | None = None
    seen = 0
    for ext in linear_extensions(p):
        seen += 1
        if seen > extension_cap:
            raise ExtensionCapExceeded(extension_cap)
        mapping = echelonmotion(p, ext).mapping
        if first is None:
            first = mapping
        elif mapping != first:
            return False
    return True


# -- lattices --------------------------------------------------------------


class Lattice:
    """A poset together with full meet and join tables."""

    __slots__ = ("poset", "meet_table", "join_table")

    def __init__(self, poset: Poset, meet_table, join_table):
        self.poset = poset
        self.meet_table = meet_table
        self.join_table = join_table

    @property
    def n(self) -> int:
        return self.poset.n

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def bottom(self) -> int:
        (m,) = self.poset.minimal_elements()
        return m

    def top(self) -> int:
        (m,) = self.poset.maximal_elements()
        return m

    def __repr__(self) -> str:
        return f"Lattice({self.poset!r})"


def _meet_join_tables(n, up, down):
    """Build both tables or return an offending pair with a reason."""
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        meet[a][a] = a
        join[a][a] = a
        for b in range(a):
            common = up[a] & up[b]
            z = _least_member(common, up)
            if z < 0:
                return None, (b, a, "no least upper bound")
            join[a][b] = join[b][a] = z
            common = down[a] & down[b]
            z = _least_member(common, down)
            if z < 0:
                return None, (b, a, "no greatest lower bound")
            meet[a][b] = meet[b][a] = z
    return (meet, join), None


def _least_member(common: int, up: tuple[int, ...]) -> int:
    # the element of `common` below all of `common`, if any
    for z in _bits(common):
        if not common & ~up[z]:
            return z
    return -1


def build_lattice(p: Poset) -> Lattice:
    """Promote a poset to a lattice, or raise NotALatticeError."""
    tables, bad = _meet_join_tables(p.n, p.up, p.down)
    if tables is None:
        a, b, reason = bad
        raise NotALatticeError(a, b, reason)
    meet, join = tables
    return Lattice(p, tuple(map(tuple, meet)), tuple(map(tuple, join)))


def is_lattice(p: Poset) -> bool:
    tables, _ = _meet_join_tables(p.n, p.up, p.down)
    return tables is not None


def modular_witness(L: Lattice) -> tuple[int, int, int] | None:
    """None when L is modular, else (a, b, x) violating the modular law.

    Checks the law a <= b implies a v (x ^ b) = (a v x) ^ b, and cross
    checks against the cover characterization: for all a, b the relations
    "a ^ b is covered by a" and "b is covered by a v b" must coincide.
    Disagreement between the two routes would be a bug, not a property of
    the input, hence the assert.
    """
    p = L.poset
    n = p.n
    law: tuple[int, int, int] | None = None
    for b in range(n):
        for a in _bits(p.down[b]):
            for x in range(n):
                if L.join(a, L.meet(x, b)) != L.meet(L.join(a, x), b):
                    law = (a, b, x)
                    break
            if law:
                break
        if law:
            break

    # the cover condition is not symmetric in (a, b): on the pentagon it
    # fails for exactly one ordering of the incomparable pair
    cov_up = p.covers_up()
    cover_ok = True
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            lhs = cov_up[L.meet(a, b)] >> a & 1
            rhs = cov_up[b] >> L.join(a, b) & 1
            if lhs != rhs:
                cover_ok = False
                break
        if not cover_ok:
            break
    assert (law is None) == cover_ok, "modularity criteria disagree"
    return law


def is_modular(L: Lattice) -> bool:
    return modular_witness(L) is None


def _m3_witness(L: Lattice) -> tuple[int, int, int] | None:
    """A triple generating a diamond M3 sublattice, if one exists."""
    p = L.poset
    n = p.n
    for x in range(n):
        for y in range(x + 1, n):
            if p.leq(x, y) or p.leq(y, x):
                continue
            mxy = L.meet(x, y)
            jxy = L.join(x, y)
            for z in range(y + 1, n):
                if p.leq(x, z) or p.leq(z, x) or p.leq(y, z) or p.leq(z, y):
                    continue
                if L.meet(x, z) == L.meet(y, z) == mxy and L.join(x, z) == L.join(y, z) == jxy:
                    return (x, y, z)
    return None


def is_distributive(L: Lattice) -> bool:
    """Modular with no M3 sublattice."""
    return is_modular(L) and _m3_witness(L) is None


# -- distributive rowmotion ------------------------------------------------


def join_irreducibles(L: Lattice) -> list[int]:
    """Elements with exactly one lower cover."""
    cd = L.poset.covers_down()
    return [x for x in range(L.n) if cd[x].bit_count() == 1]


def rowmotion_distributive(L: Lattice) -> tuple[int, ...]:
    """Rowmotion of a distributive lattice, as a mapping on elements.

    Identify each element x with the set I(x) of join irreducibles below
    it.  Rowmotion replaces I with the complement of the up-closure of the
    maximal elements of I, and the result is the element corresponding to
    that new set.  On the chain 0 < 1 < 2 this sends bottom to top, top to
    the middle, and the middle to bottom.

    Raises NotDistributiveError when the irreducible sets fail to realize
    L as the lattice of down-closed subsets.
    """
    p = L.poset
    n = p.n
    jlist = join_irreducibles(L)
    k = len(jlist)
    # order on irreducibles, in jlist coordinates
    jup = []
    for a in range(k):
        m = 0
        for b in range(k):
            if p.leq(jlist[a], jlist[b]):
                m |= 1 << b
        jup.append(m)

    ideal_of = []
    for x in range(n):
        m = 0
        for a in range(k):
            if p.leq(jlist[a], x):
                m |= 1 << a
        ideal_of.append(m)
    element_of = {}
    for x, m in enumerate(ideal_of):
        if m in element_of:
            raise NotDistributiveError(
                f"elements {element_of[m]} and {x} lie above the same irreducibles")
        element_of[m] = x

    # count all down-closed subsets of the irreducible subposet; for a
    # distributive lattice there are exactly n of them
    ideals = 0
    for s in range(1 << k):
        ok = True
        for a in _bits(s):
            # need everything below a inside s
            for b in range(k):
                if jup[b] >> a & 1 and not s >> b & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            ideals += 1
            if ideals > n:
                break
    if ideals != n:
        raise NotDistributiveError(
            f"{ideals if ideals <= n else 'more than ' + str(n)} irreducible ideals for {n} elements")

    full = (1 << k) - 1
    mapping = []
    for x in range(n):
        ideal = ideal_of[x]
        filt = 0
        for a in _bits(ideal):
            if not jup[a] & ideal & ~(1 << a):
                filt |= jup[a]
        mapping.append(element_of[full & ~filt])
    return tuple(mapping)


# -- theorem checkers ------------------------------------------------------


def verify_echelon_theorem(L: Lattice, extension_cap: int | None = None) -> Report:
    """Check that the echelon map turns lower cover counts into upper ones.

    For every linear extension (up to extension_cap, when given) and every
    element x, the image y of x must satisfy |covers above y| = |covers
    below x|.  Skips with a witness when L is not modular, since the claim
    only holds on modular lattices.
    """
    name = "echelon-cover-transfer"
    w = modular_witness(L)
    if w is not None:
        a, b, x = w
        return Report(name, 0, SKIPPED,
                      {"reason": "lattice is not modular", "law_failure": [a, b, x]})
    p = L.poset
    n = p.n
    down_counts = [m.bit_count() for m in p.covers_down()]
    up_counts = [m.bit_count() for m in p.covers_up()]
    checked = 0
    for ext in linear_extensions(p, cap=extension_cap):
        rows = _cartan_rows(p.down, ext.order)
        cols = _bruhat_pivot_cols(rows)
        order = ext.order
        for i, j in enumerate(cols):
            x = order[j]
            y = order[i]
            if up_counts[y] != down_counts[x]:
                return Report(name, checked + 1, COUNTEREXAMPLE, {
                    "extension": list(order),
                    "element": x,
                    "image": y,
                    "covers_below_element": down_counts[x],
                    "covers_above_image": up_counts[y],
                })
        checked += 1
    return Report(name, checked, VERIFIED)


def verify_dilworth(L: Lattice) -> Report:
    """Multiset of lower cover counts vs upper cover counts on a modular lattice."""
    name = "cover-count-multisets"
    w = modular_witness(L)
    if w is not None:
        a, b, x = w
        return Report(name, 0, SKIPPED,
                      {"reason": "lattice is not modular", "law_failure": [a, b, x]})
    p = L.poset
    down = sorted(m.bit_count() for m in p.covers_down())
    up = sorted(m.bit_count() for m in p.covers_up())
    witness = {"down_multiset": down, "up_multiset": up}
    if down != up:
        return Report(name, 1, COUNTEREXAMPLE, witness)
    return Report(name, 1, VERIFIED, witness)


# -- exhaustive enumeration ------------------------------------------------


def _closed_subsets(k: int, masks: tuple[int, ...]) -> list[int]:
    # subsets S with masks[x] a subset of S for every x in S
    out = []
    for s in range(1 << k):
        ok = True
        m = s
        while m:
            x = (m & -m).bit_length() - 1
            if masks[x] & ~s:
                ok = False
                break
            m &= m - 1
        if ok:
            out.append(s)
    return out


def _extensions(up: tuple[int, ...], down: tuple[int, ...]):
    """One-point extensions of a labelled poset, new element gets label k.

    Choosing what lies below the new element (a down-closed D) and what
    lies above it (an up-closed U disjoint from and compatible with D)
    produces each labelled poset on k+1 points exactly once.
    """
    k = len(up)
    full = (1 << k) - 1
    downsets = _closed_subsets(k, down)
    upsets = _closed_subsets(k, up)
    for d in downsets:
        allowed = full & ~d
        for x in _bits(d):
            allowed &= up[x]
        for u in upsets:
            if u & ~allowed:
                continue
            bit = 1 << k
            new_up = tuple(m | bit if d >> x & 1 else m for x, m in enumerate(up))
            new_down = tuple(m | bit if u >> x & 1 else m for x, m in enumerate(down))
            yield new_up + (bit | u,), new_down + (bit | d,)


def enumerate_posets_up_to(max_n: int) -> Iterator[Poset]:
    """Every labelled poset on 1 .. max_n elements, each exactly once."""
    if max_n < 1:
        return

    def rec(up, down):
        yield up
        if len(up) < max_n:
            for ext in _extensions(up, down):
                yield from rec(*ext)

    for up in rec((1,), (1,)):
        yield Poset(len(up), up, validate=False)


ENUMERATION_LIMIT = 6


def enumerate_posets(n: int, limit: int = ENUMERATION_LIMIT) -> Iterator[Poset]:
    """All labelled posets on exactly n elements.

    Sizes above ``limit`` are refused: the counts grow too fast for the
    exhaustive sweeps this enumerator exists to serve (130023 already at
    n = 6).
    """
    if n > limit:
        raise ValueError(f"poset enumeration capped at {limit} elements, asked for {n}")
    if n < 1:
        raise ValueError("need at least one element")
    for p in enumerate_posets_up_to(n):
        if p.n == n:
            yield p


# -- named lattices --------------------------------------------------------


def diamond(k: int) -> Lattice:
    """Bottom, k pairwise incomparable atoms, top.  M3 is diamond(3)."""
    n = k + 2
    top = k + 1
    covers = [(0, a) for a in range(1, k + 1)] + [(a, top) for a in range(1, k + 1)]
    return build_lattice(Poset.from_cover_pairs(n, covers))


def pentagon() -> Lattice:
    """N5, the smallest non-modular lattice."""
    covers = [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]
    return build_lattice(Poset.from_cover_pairs(5, covers))


def subspace_lattice_gf2_dim3() -> Lattice:
    """All subspaces of a 3-dimensional binary vector space, 16 elements.

    Vectors are the integers 0..7 under xor.  Modular but not distributive.
    """
    subspaces = {frozenset({0})}
    vectors = range(1, 8)
    for v in vectors:
        subspaces.add(frozenset({0, v}))
    for v in vectors:
        for w in vectors:
            if w > v:
                subspaces.add(frozenset({0, v, w, v ^ w}))
    subspaces.add(frozenset(range(8)))
    ordered = sorted(subspaces, key=lambda s: (len(s), sorted(s)))
    n = len(ordered)
    up = []
    for i, s in enumerate(ordered):
        m = 0
        for j, t in enumerate(ordered):
            if s <= t:
                m |= 1 << j
        up.append(m)
    return build_lattice(Poset(n, up, validate=False))


def lattice_catalog() -> dict[str, Lattice]:
    """Named test lattices: chain products, diamonds, N5, and the GF(2)^3 subspaces."""
    chains = {
        "C2xC2": (2, 2), "C2xC3": (2, 3), "C2xC4": (2, 4), "C3xC3": (3, 3),
        "C2xC5": (2, 5), "C2xC6": (2, 6), "C3xC4": (3, 4),
    }
    catalog: dict[str, Lattice] = {}
    for name, (a, b) in chains.items():
        catalog[name] = build_lattice(poset_product(Poset.chain(a), Poset.chain(b)))
    catalog["M3"] = diamond(3)
    catalog["M4"] = diamond(4)
    catalog["M5"] = diamond(5)
    catalog["N5"] = pentagon()
    catalog["GF2_dim3_subspaces"] = subspace_lattice_gf2_dim3()
    return catalog


# -- serialization ---------------------------------------------------------


def poset_to_json_obj(p: Poset) -> dict:
    return {"n": p.n, "covers": [[x, y] for x, y in sorted(p.cover_pairs())]}


def poset_from_json_obj(obj) -> Poset:
    if not isinstance(obj, dict) or set(obj) != {"n", "covers"}:
        raise PosetError('poset JSON must be an object with keys "n" and "covers"')
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise PosetError('"n" must be a positive integer')
    covers = []
    for pair in obj["covers"]:
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(v, int) for v in pair)):
            raise PosetError(f"bad cover entry {pair!r}")
        covers.append((pair[0], pair[1]))
    return Poset.from_cover_pairs(n, covers)


def load_poset_file(path: str) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return poset_from_json_obj(json.load(fh))
