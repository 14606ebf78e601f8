"""Arithmetic in GF(p^m) and rank computation of matrices over prime fields.

Field elements are plain ints in [0, q): the integer sum(c_i * p**i) encodes
the polynomial residue c_0 + c_1 x + ... + c_{m-1} x^(m-1) modulo the context
modulus.  For m = 1 this degenerates to the ordinary residue mod p, and for
q = 2 to a plain bit.

Matrices over F_p carry one int bitmask per row (bit j = column j) when
p = 2, and one entry tuple per row otherwise.  Rank is computed by folding
rows one at a time into a growing reduced basis, so a huge row stream never
has to be materialized for elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Sequence

FieldElement = int


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(enc: int, p: int) -> list[int]:
    """Base-p digit list of enc, constant term first."""
    out = []
    while enc:
        enc, rem = divmod(enc, p)
        out.append(rem)
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    enc = 0
    for c in reversed(digits):
        enc = enc * p + c
    return enc


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_trim(out)


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num modulo den (den need not be monic)."""
    rem = list(num)
    lead_inv = pow(den[-1], p - 2, p)
    while len(rem) >= len(den) and _poly_trim(rem):
        shift = len(rem) - len(den)
        coef = (rem[-1] * lead_inv) % p
        for i, c in enumerate(den):
            rem[shift + i] = (rem[shift + i] - coef * c) % p
        _poly_trim(rem)
    return rem


def _is_irreducible(digits: Sequence[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(digits) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_mod(digits, divisor, p):
                return False
    return True


def default_modulus(p: int, m: int) -> int:
    """Smallest-encoding monic irreducible polynomial of degree m over F_p."""
    for enc in range(p**m, 2 * p**m):
        if _is_irreducible(_digits(enc, p), p):
            return enc
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldCtx:
    """GF(p^m) with its modulus polynomial.

    The modulus is encoded like elements are: sum(c_i * p**i) of its
    coefficient sequence, constant term = c_0.
    """

    p: int
    m: int
    q: int
    modulus: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise ValueError("extension degree must be >= 1")
        if self.q != self.p**self.m:
            raise ValueError(f"q={self.q} is not {self.p}^{self.m}")
        if self.q > 512:
            raise ValueError("fields with q > 512 are not supported")
        if not (self.p**self.m <= self.modulus < 2 * self.p**self.m):
            raise ValueError(f"modulus {self.modulus} is not monic of degree {self.m}")
        if not _is_irreducible(_digits(self.modulus, self.p), self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")

    @classmethod
    def of(cls, q: int, modulus: int | None = None) -> "FieldCtx":
        """Context for GF(q), with the default modulus unless overridden."""
        if q < 2:
            raise ValueError("field order must be at least 2")
        p = 2
        while q % p:
            p += 1
        n, m = q, 0
        while n % p == 0:
            n //= p
            m += 1
        if n != 1:
            raise ValueError(f"{q} is not a prime power")
        if modulus is None:
            modulus = default_modulus(p, m)
        return cls(p=p, m=m, q=q, modulus=modulus)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        return _tables(self)[0][a][b]

    def sub(self, a: int, b: int) -> int:
        return _tables(self)[0][a][self.neg(b)]

    def neg(self, a: int) -> int:
        return _tables(self)[3][a]

    def mul(self, a: int, b: int) -> int:
        return _tables(self)[1][a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValueError("no inverse of zero")
        return _tables(self)[2][a]


@lru_cache(maxsize=None)
def _tables(ctx: FieldCtx) -> tuple:
    """(add, mul, inv, neg) lookup tables for a small field."""
    p, q = ctx.p, ctx.q
    digs = [_digits(a, p) for a in range(q)]
    mod = _digits(ctx.modulus, p)
    add = []
    neg = [0] * q
    for a in range(q):
        da = digs[a] + [0] * (ctx.m - len(digs[a]))
        row = []
        for b in range(q):
            db = digs[b] + [0] * (ctx.m - len(digs[b]))
            row.append(_undigits([(x + y) % p for x, y in zip(da, db)], p))
        add.append(tuple(row))
        neg[a] = _undigits([(-x) % p for x in da], p)
    mul = []
    inv = [0] * q
    for a in range(q):
        row = []
        for b in range(q):
            row.append(_undigits(_poly_mod(_poly_mul(digs[a], digs[b], p), mod, p), p))
        mul.append(tuple(row))
    for a in range(1, q):
        inv[a] = mul[a].index(1)
    return tuple(add), tuple(mul), tuple(inv), tuple(neg)


# ---------------------------------------------------------------------------
# Matrices over the prime field


@dataclass
class PrimeMatrix:
    """0-based matrix over F_p; rows bit-packed for p = 2, entry tuples else."""

    p: int
    ncols: int
    rows: list

    @classmethod
    def from_rows(cls, entry_rows: Iterable[Sequence[int]], p: int, ncols: int) -> "PrimeMatrix":
        rows: list = []
        for row in entry_rows:
            if len(row) != ncols:
                raise ValueError(f"row has {len(row)} entries, expected {ncols}")
            for x in row:
                if not 0 <= x < p:
                    raise ValueError("entry not in prime field")
            if p == 2:
                rows.append(_pack_bits(row))
            else:
                rows.append(tuple(row))
        return cls(p=p, ncols=ncols, rows=rows)

    @classmethod
    def from_masks(cls, masks: Iterable[int], ncols: int) -> "PrimeMatrix":
        rows = []
        for m in masks:
            if m < 0 or m >> ncols:
                raise ValueError(f"bitmask wider than {ncols} columns")
            rows.append(m)
        return cls(p=2, ncols=ncols, rows=rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_entries(self, i: int) -> tuple[int, ...]:
        if self.p == 2:
            m = self.rows[i]
            return tuple((m >> j) & 1 for j in range(self.ncols))
        return self.rows[i]

    def iter_entry_rows(self) -> Iterator[tuple[int, ...]]:
        for i in range(self.nrows):
            yield self.row_entries(i)

    def dumps(self) -> str:
        if self.p > 7:
            raise ValueError("matrix file format uses one digit per entry (p <= 7)")
        lines = [f"pmatrix rows={self.nrows} cols={self.ncols} p={self.p}"]
        for i in range(self.nrows):
            lines.append("".join(str(x) for x in self.row_entries(i)))
        return "\n".join(lines) + "\n"

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def loads(cls, text: str) -> "PrimeMatrix":
        lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
        if not lines or not lines[0].startswith("pmatrix"):
            raise ValueError("not a pmatrix file")
        hdr = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
        nrows, ncols, p = int(hdr["rows"]), int(hdr["cols"]), int(hdr["p"])
        body = lines[1:]
        if len(body) != nrows:
            raise ValueError(f"expected {nrows} rows, found {len(body)}")
        entry_rows = []
        for ln in body:
            if len(ln) != ncols:
                raise ValueError(f"row has {len(ln)} digits, expected {ncols}")
            entry_rows.append([int(ch) for ch in ln])
        return cls.from_rows(entry_rows, p, ncols)

    @classmethod
    def load(cls, path: str | Path) -> "PrimeMatrix":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


def _pack_bits(row: Sequence[int]) -> int:
    m = 0
    for j, x in enumerate(row):
        if x:
            m |= 1 << j
    return m


def _rank_stream_gf2(masks: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for row in masks:
        while row:
            piv = row.bit_length() - 1
            b = basis.get(piv)
            if b is None:
                basis[piv] = row
                break
            row ^= b
    return len(basis)


def _rank_stream_gfp(rows: Iterable[Sequence[int]], p: int) -> int:
    basis: dict[int, tuple[int, ...]] = {}
    for row in rows:
        r = list(row)
        while True:
            j = next((i for i, x in enumerate(r) if x), None)
            if j is None:
                break
            b = basis.get(j)
            if b is None:
                c_inv = pow(r[j], p - 2, p)
                basis[j] = tuple((x * c_inv) % p for x in r)
                break
            c = r[j]
            r = [(x - c * y) % p for x, y in zip(r, b)]
    return len(basis)


def matrix_rank(matrix, p: int | None = None) -> int:
    """Rank over F_p via streaming row reduction.

    `matrix` is a PrimeMatrix or an iterable of rows (int bitmasks for p = 2,
    entry sequences otherwise).  The result is independent of row order.
    Raises ValueError if an entry is not reduced mod p.
    """
    if isinstance(matrix, PrimeMatrix):
        if p is None:
            p = matrix.p
        if p == 2:
            if matrix.p == 2:
                return _rank_stream_gf2(matrix.rows)
            for row in matrix.rows:
                for x in row:
                    if x > 1:
                        raise ValueError("entry not in prime field")
            return _rank_stream_gf2(_pack_bits(row) for row in matrix.rows)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if matrix.p == 2:
            return _rank_stream_gfp(matrix.iter_entry_rows(), p)
        for row in matrix.rows:
            for x in row:
                if x >= p:
                    raise ValueError("entry not in prime field")
        return _rank_stream_gfp(matrix.rows, p)
    if p is None:
        raise ValueError("p is required when passing raw rows")
    if p == 2:
        return _rank_stream_gf2(matrix)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")

    def checked(rows):
        for row in rows:
            for x in row:
                if not 0 <= x < p:
                    raise ValueError("entry not in prime field")
            yield row

    return _rank_stream_gfp(checked(matrix), p)
