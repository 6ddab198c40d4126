"""Shared exact-arithmetic primitives.

Permutations in one-line notation, words over the positive integers,
sparse bivariate polynomials with integer coefficients, and integer
matrices with exact rank.  Everything is immutable and every number is
a Python int, so nothing ever rounds or overflows.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

Word = tuple[int, ...]


def as_word(letters: Iterable[int]) -> Word:
    """Validate and freeze a word, i.e. a finite sequence of letters >= 1."""
    w = tuple(int(x) for x in letters)
    if any(x < 1 for x in w):
        raise ValueError(f"word letters must be positive integers: {w!r}")
    return w


class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    ``w(i)`` is the image of i for 1 <= i <= n.  The empty permutation
    (n = 0) is allowed; it is the identity of S_0.

    >>> w = Permutation((3, 1, 2))
    >>> w(1), w(3)
    (3, 2)
    >>> w.inverse().one_line
    (2, 3, 1)
    """

    __slots__ = ("one_line",)

    def __init__(self, values: Iterable[int]):
        word = tuple(int(v) for v in values)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of [{len(word)}]: {word!r}")
        self.one_line = word

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.one_line):
            raise IndexError(f"index {i} out of range 1..{len(self.one_line)}")
        return self.one_line[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.one_line)

    def __len__(self) -> int:
        return len(self.one_line)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __hash__(self) -> int:
        return hash(self.one_line)

    def __repr__(self) -> str:
        return f"Permutation({self.one_line!r})"

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.one_line)
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def descent_set(self) -> frozenset[int]:
        """Positions i with w(i) > w(i+1)."""
        w = self.one_line
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def des(self) -> int:
        return len(self.descent_set())

    def big_descent_count(self) -> int:
        """Number of positions i with w(i) > w(i+1) + 1."""
        w = self.one_line
        return sum(1 for i in range(1, len(w)) if w[i - 1] > w[i] + 1)

    def to_matrix(self) -> "IntMatrix":
        """Permutation matrix with (i, j) entry 1 exactly when w(i) = j."""
        n = len(self.one_line)
        return IntMatrix(
            tuple(
                tuple(1 if self.one_line[i] == j + 1 else 0 for j in range(n))
                for i in range(n)
            )
        )


class PermStats(NamedTuple):
    descents: frozenset[int]
    des: int
    des_big: int


def perm_stats(w: Permutation) -> PermStats:
    """Descent set, descent count and big-descent count of w."""
    return PermStats(w.descent_set(), w.des(), w.big_descent_count())


def standardize(word: Sequence[int]) -> Permutation:
    """Permutation of ranks of a word with pairwise distinct values.

    >>> standardize((4, 9, 2)).one_line
    (2, 3, 1)
    """
    if len(set(word)) != len(word):
        raise ValueError(f"cannot standardize a word with repeats: {word!r}")
    ranks = {v: i for i, v in enumerate(sorted(word), start=1)}
    return Permutation(ranks[v] for v in word)


class BiPoly:
    """Sparse polynomial in two variables with exact integer coefficients.

    Terms are stored as a dict mapping (q_exponent, t_exponent) to a
    nonzero coefficient.  Exponents are nonnegative.  Instances are
    treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (eq, et), c in terms.items():
                if eq < 0 or et < 0:
                    raise ValueError(f"negative exponent in term ({eq}, {et})")
                if c:
                    clean[(eq, et)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, q_exp: int, t_exp: int, coeff: int = 1) -> "BiPoly":
        return cls({(q_exp, t_exp): coeff})

    @classmethod
    def q(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def sorted_terms(self) -> tuple[tuple[int, int, int], ...]:
        """Terms as (q_exp, t_exp, coeff), sorted by exponents."""
        return tuple((eq, et, c) for (eq, et), c in sorted(self._terms.items()))

    def coefficient(self, q_exp: int, t_exp: int) -> int:
        return self._terms.get((q_exp, t_exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _coerce(other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.constant(other)
        return None

    def __add__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        p = BiPoly.__new__(BiPoly)
        p._terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        p = BiPoly.__new__(BiPoly)
        p._terms = {k: -c for k, c in self._terms.items()}
        return p

    def __sub__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (aq, at), ac in self._terms.items():
            for (bq, bt), bc in o._terms.items():
                k = (aq + bq, at + bt)
                s = out.get(k, 0) + ac * bc
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        p = BiPoly.__new__(BiPoly)
        p._terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.render()})"

    def subs_q(self, value: int) -> "BiPoly":
        """Substitute an integer for q, leaving a polynomial in t."""
        out: dict[tuple[int, int], int] = {}
        for (eq, et), c in self._terms.items():
            k = (0, et)
            s = out.get(k, 0) + c * value**eq
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        p = BiPoly.__new__(BiPoly)
        p._terms = out
        return p

    def subs_t(self, value: int) -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for (eq, et), c in self._terms.items():
            k = (eq, 0)
            s = out.get(k, 0) + c * value**et
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        p = BiPoly.__new__(BiPoly)
        p._terms = out
        return p

    def eval_at(self, q_value: int, t_value: int) -> int:
        return sum(c * q_value**eq * t_value**et for (eq, et), c in self._terms.items())

    def deriv_t(self) -> "BiPoly":
        """Formal derivative with respect to the second variable."""
        out = {}
        for (eq, et), c in self._terms.items():
            if et:
                out[(eq, et - 1)] = et * c
        return BiPoly(out)

    def reciprocal_t(self, degree: int) -> "BiPoly":
        """Replace t^k by t^(degree-k); requires t-degree <= degree."""
        out = {}
        for (eq, et), c in self._terms.items():
            if et > degree:
                raise ValueError(f"t-degree {et} exceeds reciprocal degree {degree}")
            out[(eq, degree - et)] = c
        return BiPoly(out)

    def q_degree(self) -> int:
        return max((eq for (eq, _t) in self._terms), default=0)

    def t_degree(self) -> int:
        return max((et for (_q, et) in self._terms), default=0)

    def render(self, names: tuple[str, str] = ("q", "t")) -> str:
        """Human-readable rendering with terms in exponent order."""
        if not self._terms:
            return "0"
        qn, tn = names
        parts = []
        for eq, et, c in self.sorted_terms():
            factors = []
            if eq == 1:
                factors.append(qn)
            elif eq > 1:
                factors.append(f"{qn}^{eq}")
            if et == 1:
                factors.append(tn)
            elif et > 1:
                factors.append(f"{tn}^{et}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_terms(self) -> list[dict]:
        """JSON-safe term list, sorted by (q exponent, t exponent).

        Coefficients are decimal strings so arbitrarily large values
        survive any JSON reader.
        """
        return [
            {"q": eq, "t": et, "c": str(c)} for eq, et, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_terms(cls, items: Iterable[dict]) -> "BiPoly":
        terms: dict[tuple[int, int], int] = {}
        for item in items:
            key = (int(item["q"]), int(item["t"]))
            if key in terms:
                raise ValueError(f"duplicate term {key} in polynomial payload")
            terms[key] = int(item["c"])
        return cls(terms)


class IntMatrix:
    """Immutable integer matrix; rows are tuples."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows in matrix")
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({list(map(list, self.entries))!r})"

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.entries)) if self.entries else IntMatrix(())

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bt = list(zip(*other.entries))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                for row in self.entries
            )
        )

    def rank(self) -> int:
        return int_matrix_rank(self)


def int_matrix_rank(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, by fraction-free (Bareiss) elimination.

    Stays in exact integer arithmetic throughout: the usual pivoting
    update is followed by an exact division by the previous pivot, so
    intermediate entries are minors of the input and never blow up the
    way division-free elimination would.
    """
    entries = m.entries if isinstance(m, IntMatrix) else m
    rows = [list(r) for r in entries]
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot_row = rows[rank]
        pv = pivot_row[col]
        for r in range(rank + 1, nr):
            row = rows[r]
            lv = row[col]
            for c in range(col + 1, nc):
                num = pv * row[c] - lv * pivot_row[c]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row[c] = q
            row[col] = 0
        prev = pv
        rank += 1
        if rank == nr:
            break
    return rank


def random_unit_upper_triangular(n: int, rng, bound: int = 2) -> IntMatrix:
    """Random upper-triangular matrix with unit diagonal, entries in [-bound, bound]."""
    rows = []
    for i in range(n):
        row = [0] * i + [1] + [rng.randint(-bound, bound) for _ in range(n - i - 1)]
        rows.append(row)
    return IntMatrix(rows)
