"""Kaluza numbers and the direct, table-driven multiplication.

The direct product accumulates all 1024 signed coefficient products, so
it doubles as the oracle that every faster engine is checked against.
Floating-point note: table signs are +/-1, so with integer coefficients
every intermediate here is exactly representable and results are
bit-exact; non-finite inputs propagate per IEEE semantics.
"""

from __future__ import annotations

from . import fixtures
from .cayley import TABLE, BasisProduct, CayleyTable
from .linops import OpCount


class KaluzaNumber:
    """32 real coefficients over the basis (1, e1, ..., e31)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = tuple(float(v) for v in coeffs)
        if len(c) != 32:
            raise ValueError(f"expected 32 coefficients, got {len(c)}")
        self.coeffs = c

    @classmethod
    def zero(cls) -> "KaluzaNumber":
        return cls((0.0,) * 32)

    @classmethod
    def basis(cls, index: int, scale: float = 1.0) -> "KaluzaNumber":
        if not 0 <= index <= 31:
            raise IndexError(f"basis index must be in 0..31, got {index}")
        c = [0.0] * 32
        c[index] = scale
        return cls(c)

    @classmethod
    def one(cls) -> "KaluzaNumber":
        return cls.basis(0)

    @classmethod
    def from_text(cls, text: str) -> "KaluzaNumber":
        """Parse 32 whitespace-separated decimals; '#' starts a comment."""
        values = []
        for line in text.splitlines():
            values.extend(line.split("#", 1)[0].split())
        return cls(float(v) for v in values)

    def to_text(self) -> str:
        return " ".join(f"{v:.17g}" for v in self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return 32

    def __eq__(self, other):
        return isinstance(other, KaluzaNumber) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [
            (f"{v:g}" if i == 0 else f"{v:g}*e{i}")
            for i, v in enumerate(self.coeffs)
            if v != 0.0
        ]
        return f"KaluzaNumber<{' + '.join(terms) if terms else '0'}>"


def add(a: KaluzaNumber, b: KaluzaNumber, counter: OpCount | None = None) -> KaluzaNumber:
    """Componentwise sum; 32 real additions."""
    out = [x + y for x, y in zip(a.coeffs, b.coeffs)]
    if counter is not None:
        counter.count(adds=32)
    return KaluzaNumber(out)


# Flattened table rows for the hot loop below.
_SIGNS = tuple(tuple(p.sign for p in row) for row in TABLE.entries)
_INDICES = tuple(tuple(p.index for p in row) for row in TABLE.entries)


def mul_naive(a: KaluzaNumber, b: KaluzaNumber, counter: OpCount | None = None) -> KaluzaNumber:
    """Direct product: route all 1024 signed terms through the table.

    Exactly 1024 real multiplications and 992 real additions: the
    identity row deposits the first term into every output slot (a move,
    not an addition), and each of the remaining 31 rows adds one term
    per column.
    """
    av, bv = a.coeffs, b.coeffs
    a0 = av[0]
    out = [a0 * bj for bj in bv]  # row 0 is the identity row: e0*ej = ej
    for i in range(1, 32):
        ai = av[i]
        signs = _SIGNS[i]
        idxs = _INDICES[i]
        for j in range(32):
            t = ai * bv[j]
            if signs[j] < 0:
                out[idxs[j]] -= t
            else:
                out[idxs[j]] += t
    if counter is not None:
        counter.count(mults=1024, adds=992)
    return KaluzaNumber(out)


class MulMatrix:
    """Dense 32x32 matrix M(b) with mul(a, b) = M(b) applied to a.

    Every entry is a signed copy of one b-coefficient, never a sum.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        r = tuple(tuple(float(v) for v in row) for row in rows)
        if len(r) != 32 or any(len(row) != 32 for row in r):
            raise ValueError("expected a 32x32 matrix")
        self.rows = r


def symbolic_mul_matrix(table: CayleyTable | None = None):
    """The multiplication matrix with symbolic entries.

    Grid entry (k, i) is the signed b-index that multiplies a_i into
    output coefficient k: e_i * e_j = sign * e_k puts (sign, j) there.
    Each (k, i) slot is hit exactly once because every table row is a
    signed permutation.
    """
    t = (TABLE if table is None else table).entries
    grid = [[None] * 32 for _ in range(32)]
    for i in range(32):
        for j in range(32):
            s, k = t[i][j]
            if grid[k][i] is not None:
                raise ValueError(f"table row {i} is not a signed permutation")
            grid[k][i] = BasisProduct(s, j)
    return tuple(tuple(row) for row in grid)


_SYMBOLIC = symbolic_mul_matrix()


def build_mul_matrix(b: KaluzaNumber, table: CayleyTable | None = None) -> MulMatrix:
    """Materialize M(b) by placing signed copies of b's coefficients."""
    sym = _SYMBOLIC if table is None else symbolic_mul_matrix(table)
    bv = b.coeffs
    return MulMatrix(
        [[(bv[j] if s > 0 else -bv[j]) for (s, j) in row] for row in sym]
    )


def mul_dense(a: KaluzaNumber, m: MulMatrix, counter: OpCount | None = None) -> KaluzaNumber:
    """Plain dense matrix-vector product: 1024 multiplications, 992 additions."""
    av = a.coeffs
    out = []
    for row in m.rows:
        acc = row[0] * av[0]
        for i in range(1, 32):
            acc += row[i] * av[i]
        out.append(acc)
    if counter is not None:
        counter.count(mults=1024, adds=992)
    return KaluzaNumber(out)


def compare_printed_blocks(table: CayleyTable | None = None):
    """Diff the derived symbolic matrix against its reference rendering.

    Returns (row, column, derived token, printed token) for every cell
    that disagrees.  The basis table is authoritative, so a mismatch
    documents a typo in the rendering, not an error in the derivation.
    """
    derived = _SYMBOLIC if table is None else symbolic_mul_matrix(table)
    printed = fixtures.printed_mul_matrix()
    out = []
    for r in range(32):
        for c in range(32):
            d, p = derived[r][c], printed[r][c]
            if (d.sign, d.index) != p:
                out.append(
                    (
                        r,
                        c,
                        fixtures.signed_token(d.sign, d.index, "b"),
                        fixtures.signed_token(p[0], p[1], "b"),
                    )
                )
    return out
