"""Binary codes from design incidence matrices: ranks, dimensions, distances.

The rows of a design's block-point incidence matrix are taken as parity
checks of a linear code over F_p, so the code dimension is n minus the
p-rank of the matrix.  For geometric (full subspace lattice) designs the
rank is also available in closed form: the general Hamada formula for
q = p^m, and the binomial-sum shortcut when p = q = 2.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb

from .designs import CombinatorialDesign, DesignParams
from .field import PrimeMatrix, matrix_rank
from .pspace import gaussian_coefficient


@dataclass(frozen=True)
class CodeSource:
    """Where a code's checks came from: construction mode plus parameters."""

    mode: str  # "projective" | "affine" | "flats" | "combinatorial"
    params: DesignParams


@dataclass
class BinaryCode:
    """Linear code given by parity-check rows over F_p (p = 2 throughout
    the built-in tables; the rank machinery is p-generic)."""

    n: int
    p: int
    checks: PrimeMatrix
    rank: int
    source: CodeSource | None = None

    _null_basis: list | None = None

    @property
    def dim(self) -> int:
        return self.n - self.rank

    def check_masks(self) -> list[int]:
        if self.checks.p != 2:
            raise ValueError("bitmask checks require p = 2")
        return self.checks.rows

    def is_codeword(self, word: int) -> bool:
        return all((word & row).bit_count() % 2 == 0 for row in self.check_masks())

    def nullspace_basis(self) -> list[int]:
        """Basis of the codeword space as bitmasks (p = 2 only), cached."""
        if self.p != 2:
            raise ValueError("nullspace enumeration is implemented for p = 2 only")
        if self._null_basis is None:
            rows, pivots = _rref_masks(self.check_masks(), self.n)
            pivot_set = set(pivots)
            basis = []
            for f in range(self.n):
                if f in pivot_set:
                    continue
                vec = 1 << f
                for row, pc in zip(rows, pivots):
                    if (row >> f) & 1:
                        vec |= 1 << pc
                basis.append(vec)
            self._null_basis = basis
        return self._null_basis

    def random_codeword(self, rng: random.Random) -> int:
        basis = self.nullspace_basis()
        word = 0
        bits = rng.getrandbits(len(basis)) if basis else 0
        for i, vec in enumerate(basis):
            if (bits >> i) & 1:
                word ^= vec
        return word


def _rref_masks(masks, ncols):
    """RREF of bitmask rows; returns (rows, pivot columns), pivots ascending."""
    rows: list[int] = []
    pivots: list[int] = []
    for m in masks:
        for row, pc in zip(rows, pivots):
            if (m >> pc) & 1:
                m ^= row
        if m == 0:
            continue
        pc = (m & -m).bit_length() - 1
        pos = next((i for i, existing in enumerate(pivots) if existing > pc), len(pivots))
        for i in range(len(rows)):
            if (rows[i] >> pc) & 1:
                rows[i] ^= m
        rows.insert(pos, m)
        pivots.insert(pos, pc)
    return rows, pivots


def incidence_matrix(design: CombinatorialDesign) -> PrimeMatrix:
    """Block-point incidence matrix, one 0/1 row per block, bit-packed."""
    masks = []
    for blk in design.blocks:
        m = 0
        for i in blk:
            m |= 1 << i
        masks.append(m)
    return PrimeMatrix.from_masks(masks, design.n)


def build_code(
    design: CombinatorialDesign, p: int = 2, mode: str = "combinatorial"
) -> BinaryCode:
    """Code whose parity checks are the design's incidence rows."""
    checks = incidence_matrix(design)
    rank = matrix_rank(checks, p)
    source = CodeSource(mode=mode, params=design.params())
    return BinaryCode(n=design.n, p=p, checks=checks, rank=rank, source=source)


def _binom(n: int, k: int) -> int:
    if n < 0 or k < 0:
        return 0
    return comb(n, k)


def hamada_rank_terms(v: int, k: int, p: int, m: int):
    """Per-tuple contributions of the geometric p-rank formula.

    Iterates all cyclic tuples (s_0, ..., s_{m-1}) with k <= s_j <= v and
    0 <= s_{j+1} p - s_j <= v (p - 1) (indices mod m); each term is the
    product over j of sum_{i=0}^{L} (-1)^i C(v, i) C(v - 1 + s_{j+1} p -
    s_j - i p, v - 1) with L = floor((s_{j+1} p - s_j) / p).  Exposed so a
    disagreement with a matrix rank can be reported tuple by tuple.
    """
    if not 0 <= k <= v:
        raise ValueError("need 0 <= k <= v")
    terms = []
    for s in itertools.product(range(k, v + 1), repeat=m):
        diffs = [s[(j + 1) % m] * p - s[j] for j in range(m)]
        if any(d < 0 or d > v * (p - 1) for d in diffs):
            continue
        prod = 1
        for d in diffs:
            upper = d // p
            inner = sum(
                (-1) ** i * _binom(v, i) * _binom(v - 1 + d - i * p, v - 1)
                for i in range(upper + 1)
            )
            prod *= inner
        terms.append((s, prod))
    return terms


def hamada_rank(v: int, k: int, p: int, m: int) -> int:
    """p-rank of the incidence matrix of points vs k-subspaces of F_q^v,
    q = p^m, by the closed formula (exact integer arithmetic)."""
    return sum(val for _, val in hamada_rank_terms(v, k, p, m))


def binary_rank_formula(v: int, k: int) -> int:
    """2-rank of the geometric design for p = q = 2: sum of C(v, i), i <= v-k."""
    return sum(comb(v, i) for i in range(v - k + 1))


def affine_binary_rank(v: int, k: int) -> int:
    """2-rank of the affine-chart geometric design for q = 2.

    The affine code is a Reed-Muller code of length 2^(v-1); its check rank
    is the same binomial sum one dimension down.
    """
    return binary_rank_formula(v - 1, k - 1)


def flats_binary_rank(v: int, k: int) -> int:
    """2-rank of the all-flats design on 2^v points (q = 2)."""
    return binary_rank_formula(v, k)


def bch_bound(v: int, k: int, q: int) -> int:
    """BCH bound on the geometric code's minimum distance."""
    return gaussian_coefficient(v - k + 1, 1, q) + 1


@dataclass(frozen=True)
class DistanceBounds:
    lower: int
    known_exact: int | None


def distance_bounds(v: int, k: int, q: int, mode: str) -> DistanceBounds:
    """Lower bound and (when known) the exact minimum distance.

    Projective mode: lower bound [v-k+1, 1]_q; the exact value is known for
    q = 2 (2^(v-k+1)), even q > 2 ((q+2) q^(v-k-1)), and k = v-1 (the BCH
    bound).  Affine mode: lower bound 2 q^(v-k), exact 2^(v-k+1) for q = 2
    via the Reed-Muller identification.
    """
    if mode == "projective":
        lower = gaussian_coefficient(v - k + 1, 1, q)
        if q == 2:
            exact = 2 ** (v - k + 1)
        elif q % 2 == 0:
            exact = (q + 2) * q ** (v - k - 1)
        elif k == v - 1:
            exact = bch_bound(v, k, q)
        else:
            exact = None
        return DistanceBounds(lower=lower, known_exact=exact)
    if mode == "affine":
        lower = 2 * q ** (v - k)
        exact = 2 ** (v - k + 1) if q == 2 else None
        return DistanceBounds(lower=lower, known_exact=exact)
    raise ValueError(f"unknown mode {mode!r}")


def min_distance_bruteforce(code: BinaryCode, cap: int = 24) -> int:
    """Minimum weight over all nonzero codewords, by Gray-code enumeration.

    Returns n + 1 for the zero code ("no nonzero codeword").  Refuses to
    enumerate more than 2^cap codewords.
    """
    if code.p != 2:
        raise ValueError("minimum distance search is implemented for p = 2 only")
    basis = code.nullspace_basis()
    dim = len(basis)
    if dim == 0:
        return code.n + 1
    if dim > cap:
        raise ValueError(f"exhaustive search refused: dim {dim} exceeds cap {cap}")
    best = code.n + 1
    cur = 0
    for i in range(1, 1 << dim):
        cur ^= basis[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if w < best:
            best = w
    return best


@dataclass(frozen=True)
class RankReport:
    """Matrix rank next to the closed-form ranks, for the rank experiment."""

    matrix_rank: int
    hamada_rank: int | None = None
    binary_simplified: int | None = None

    @property
    def all_agree(self) -> bool:
        others = [x for x in (self.hamada_rank, self.binary_simplified) if x is not None]
        return all(x == self.matrix_rank for x in others)
