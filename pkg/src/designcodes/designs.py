"""Subspace designs and combinatorial designs.

Covers parameter arithmetic (derived lambdas, block count b, repetition
number r), the trivial design of the full subspace lattice, brute-force
verification, and the three ways a subspace design yields a combinatorial
design: restriction to projective points, restriction to an affine chart,
and (for q = 2) the union of all parallel flats.

Designs are simple: duplicate blocks are a hard error, in files and in
constructors alike.  Verification is a separate explicit step because it is
exponential in the number of t-subspaces; its outcome is flagged on the
value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Sequence

from .field import FieldCtx
from .pspace import (
    Subspace,
    enumerate_subspaces,
    gaussian_coefficient,
    pack_mask,
    point_space,
    points_of_subspace,
    subspace,
    subspaces_of,
)


@dataclass(frozen=True)
class DesignParams:
    """Derived parameters of a (subspace or combinatorial) t-design.

    q is None for combinatorial parameters; lambdas[s] is the derived
    lambda_s for 0 <= s <= t, kept exact as Fractions.  Non-integrality of
    any derived value marks the parameter set inadmissible rather than
    raising.
    """

    t: int
    v: int
    k: int
    lam: int
    q: int | None
    lambdas: tuple[Fraction, ...]

    @property
    def admissible(self) -> bool:
        return all(x.denominator == 1 for x in self.lambdas)

    def lambda_s(self, s: int) -> int:
        val = self.lambdas[s]
        if val.denominator != 1:
            raise ValueError(
                f"lambda_{s} = {val} is not integral for lambda={self.lam}"
            )
        return int(val)

    @property
    def b(self) -> int:
        return self.lambda_s(0)

    @property
    def r(self) -> int:
        if self.t < 1:
            raise ValueError("repetition number needs t >= 1")
        return self.lambda_s(1)

    def violated_divisibility(self) -> str | None:
        for s, val in enumerate(self.lambdas):
            if val.denominator != 1:
                return f"lambda_{s} = {val}"
        return None


def derive_params_q(t: int, v: int, k: int, lam: int, q: int) -> DesignParams:
    """Derived lambdas of a t-(v,k,lam)_q subspace design (exact)."""
    if not 0 <= t <= k <= v:
        raise ValueError("need 0 <= t <= k <= v")
    if lam < 1:
        raise ValueError("lambda must be positive")
    lambdas = tuple(
        Fraction(lam)
        * Fraction(
            gaussian_coefficient(v - s, t - s, q), gaussian_coefficient(k - s, t - s, q)
        )
        for s in range(t + 1)
    )
    return DesignParams(t=t, v=v, k=k, lam=lam, q=q, lambdas=lambdas)


def derive_params_comb(t: int, n: int, k: int, lam: int) -> DesignParams:
    """Derived lambdas of a combinatorial t-(n,k,lam) design (exact)."""
    if not 0 <= t <= k <= n:
        raise ValueError("need 0 <= t <= k <= n")
    if lam < 1:
        raise ValueError("lambda must be positive")
    lambdas = tuple(
        Fraction(lam) * Fraction(comb(n - s, t - s), comb(k - s, t - s))
        for s in range(t + 1)
    )
    return DesignParams(t=t, v=n, k=k, lam=lam, q=None, lambdas=lambdas)


@dataclass
class SubspaceDesign:
    """A set of k-subspaces of F_q^v, every t-subspace in lam of them."""

    ctx: FieldCtx
    t: int
    v: int
    k: int
    lam: int
    blocks: tuple[Subspace, ...]
    verified: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.t <= self.k <= self.v:
            raise ValueError("need 0 <= t <= k <= v")
        blocks = tuple(sorted(self.blocks, key=Subspace.sort_key))
        for b in blocks:
            if b.v != self.v or b.ctx != self.ctx:
                raise ValueError("block lives in a different ambient space")
            if b.k != self.k:
                raise ValueError(f"block of dimension {b.k}, expected {self.k}")
        for a, b in zip(blocks, blocks[1:]):
            if a.gen == b.gen:
                raise ValueError("duplicate block (designs are simple)")
        self.blocks = blocks

    @property
    def q(self) -> int:
        return self.ctx.q

    def params(self) -> DesignParams:
        return derive_params_q(self.t, self.v, self.k, self.lam, self.q)


@dataclass
class CombinatorialDesign:
    """Blocks of size k on ground set [0, n), every t-subset in lam of them."""

    n: int
    t: int
    k: int
    lam: int
    blocks: tuple[tuple[int, ...], ...]
    verified: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.t <= self.k <= self.n:
            raise ValueError("need 0 <= t <= k <= n")
        blocks = []
        for blk in self.blocks:
            blk = tuple(sorted(blk))
            if len(blk) != self.k or len(set(blk)) != self.k:
                raise ValueError(f"block {blk} does not have {self.k} distinct points")
            if blk and (blk[0] < 0 or blk[-1] >= self.n):
                raise ValueError(f"block {blk} has points outside [0, {self.n})")
            blocks.append(blk)
        blocks.sort()
        for a, b in zip(blocks, blocks[1:]):
            if a == b:
                raise ValueError("duplicate block (designs are simple)")
        self.blocks = tuple(blocks)

    def params(self) -> DesignParams:
        return derive_params_comb(self.t, self.n, self.k, self.lam)


@dataclass(frozen=True)
class VerifyResult:
    verified: bool
    observed_lambda: int | str  # an int, or "non-constant"
    witness: tuple | None  # (t-subspace or t-subset, count) on failure


def trivial_design(t: int, v: int, k: int, ctx: FieldCtx) -> SubspaceDesign:
    """All k-subspaces of F_q^v: the t-(v, k, [v-t, k-t]_q)_q design."""
    lam = gaussian_coefficient(v - t, k - t, ctx.q)
    blocks = tuple(enumerate_subspaces(v, k, ctx))
    return SubspaceDesign(ctx=ctx, t=t, v=v, k=k, lam=lam, blocks=blocks, verified=False)


def verify_subspace_design(design: SubspaceDesign) -> VerifyResult:
    """Count, for every t-subspace, the blocks containing it.

    Containment counts are accumulated by walking the t-subspaces inside
    each block, then every t-subspace of the ambient space is checked
    against the design lambda.  On failure the witness is the first
    t-subspace (in canonical enumeration order) with an off count.
    """
    counts: dict[tuple, int] = {}
    for blk in design.blocks:
        for t_sub in subspaces_of(blk, design.t):
            counts[t_sub.gen] = counts.get(t_sub.gen, 0) + 1
    witness = None
    seen = set()
    for t_sub in enumerate_subspaces(design.v, design.t, design.ctx):
        c = counts.get(t_sub.gen, 0)
        seen.add(c)
        if c != design.lam and witness is None:
            witness = (t_sub, c)
    verified = witness is None
    observed = seen.pop() if len(seen) == 1 else "non-constant"
    design.verified = verified
    return VerifyResult(verified=verified, observed_lambda=observed, witness=witness)


def verify_comb_design(design: CombinatorialDesign) -> VerifyResult:
    counts: dict[tuple[int, ...], int] = {}
    for blk in design.blocks:
        for sub in itertools.combinations(blk, design.t):
            counts[sub] = counts.get(sub, 0) + 1
    witness = None
    seen = set()
    for sub in itertools.combinations(range(design.n), design.t):
        c = counts.get(sub, 0)
        seen.add(c)
        if c != design.lam and witness is None:
            witness = (sub, c)
    verified = witness is None
    observed = seen.pop() if len(seen) == 1 else "non-constant"
    design.verified = verified
    return VerifyResult(verified=verified, observed_lambda=observed, witness=witness)


# ---------------------------------------------------------------------------
# Constructions turning a subspace design into a combinatorial design


def _lambda2(design: SubspaceDesign) -> int:
    if design.t < 2:
        raise ValueError("construction needs a design with t >= 2")
    return design.params().lambda_s(2)


def projective_version(design: SubspaceDesign) -> CombinatorialDesign:
    """Blocks as point sets of the projective geometry: a 2-design."""
    lam2 = _lambda2(design)
    n = gaussian_coefficient(design.v, 1, design.q)
    blocks = tuple(points_of_subspace(b) for b in design.blocks)
    return CombinatorialDesign(
        n=n,
        t=2,
        k=gaussian_coefficient(design.k, 1, design.q),
        lam=lam2,
        blocks=blocks,
    )


def affine_version(
    design: SubspaceDesign, hyperplane: Sequence[int] | None = None
) -> CombinatorialDesign:
    """Restrict blocks to the affine points off a fixed hyperplane.

    The hyperplane is {x : a . x = 0} for a normal vector a, by default
    e_0 (so the chart is x_0 = 1).  Blocks inside the hyperplane are
    dropped; every surviving block meets the chart in q^(k-1) points.
    Affine point labels are dense: the chart representative is scaled so
    a . x = 1 and indexed by its remaining coordinates, least-significant
    first, the coordinate matched to a's first nonzero entry being dropped.
    """
    lam2 = _lambda2(design)
    ctx, v, q = design.ctx, design.v, design.q
    if hyperplane is None:
        normal = (1,) + (0,) * (v - 1)
    else:
        normal = tuple(ctx.check(x) for x in hyperplane)
        if len(normal) != v or not any(normal):
            raise ValueError("hyperplane normal must be a nonzero length-v vector")
    j0 = next(i for i, x in enumerate(normal) if x)

    def dot(vec):
        acc = 0
        for a, x in zip(normal, vec):
            if a and x:
                acc = ctx.add(acc, ctx.mul(a, x))
        return acc

    def affine_index(vec):
        d = dot(vec)
        if d != 1:
            vec = tuple(ctx.mul(ctx.inv(d), x) for x in vec)
        idx = 0
        weight = 1
        for i, x in enumerate(vec):
            if i == j0:
                continue
            idx += x * weight
            weight *= q
        return idx

    sp = point_space(v, ctx)
    blocks = []
    for blk in design.blocks:
        pts = [sp.points[i] for i in points_of_subspace(blk)]
        outside = [p for p in pts if dot(p) != 0]
        if not outside:
            continue  # block lies inside the hyperplane
        blocks.append(tuple(sorted(affine_index(p) for p in outside)))
    return CombinatorialDesign(
        n=q ** (v - 1), t=2, k=q ** (design.k - 1), lam=lam2, blocks=tuple(blocks)
    )


def flats_construction(design: SubspaceDesign) -> CombinatorialDesign:
    """Union of all cosets of all blocks: a 3-design on the 2^v vectors.

    Only defined for q = 2.  A vector's ground-set index is sum(x_i << i).
    Each block contributes its 2^(v-k) parallel flats.
    """
    if design.q != 2:
        raise ValueError("flats construction requires q = 2")
    lam2 = _lambda2(design)
    v = design.v
    universe = range(1 << v)
    blocks = set()
    for blk in design.blocks:
        row_masks = [pack_mask(r) for r in blk.gen]
        span = [0]
        for rm in row_masks:
            span += [x ^ rm for x in span]
        covered = set()
        for a in universe:
            if a in covered:
                continue
            coset = tuple(sorted(a ^ x for x in span))
            covered.update(coset)
            blocks.add(coset)
    return CombinatorialDesign(
        n=1 << v, t=3, k=1 << design.k, lam=lam2, blocks=tuple(sorted(blocks))
    )


# ---------------------------------------------------------------------------
# Design files


def dumps_subspace_design(design: SubspaceDesign) -> str:
    hdr = (
        f"qdesign t={design.t} v={design.v} k={design.k} "
        f"lambda={design.lam} q={design.q} poly={design.ctx.modulus}"
    )
    lines = [hdr]
    for blk in design.blocks:
        lines.append(" ; ".join(" ".join(str(x) for x in row) for row in blk.gen))
    return "\n".join(lines) + "\n"


def save_subspace_design(design: SubspaceDesign, path: str | Path) -> None:
    Path(path).write_text(dumps_subspace_design(design), encoding="utf-8")


def _strip_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _parse_header(line: str, kind: str, keys: Sequence[str]) -> dict[str, int]:
    toks = line.split()
    if not toks or toks[0] != kind:
        raise ValueError(f"expected a {kind} header, got {line!r}")
    fields = {}
    for tok in toks[1:]:
        key, _, val = tok.partition("=")
        fields[key] = int(val)
    missing = [k for k in keys if k not in fields]
    if missing:
        raise ValueError(f"{kind} header is missing {', '.join(missing)}")
    return fields


def loads_subspace_design(text: str) -> SubspaceDesign:
    lines = _strip_lines(text)
    if not lines:
        raise ValueError("empty design file")
    hdr = _parse_header(lines[0], "qdesign", ["t", "v", "k", "lambda", "q", "poly"])
    ctx = FieldCtx.of(hdr["q"], modulus=hdr["poly"])
    v, k = hdr["v"], hdr["k"]
    blocks = []
    for line in lines[1:]:
        vectors = []
        for part in line.split(";"):
            coords = [int(x) for x in part.split()]
            vectors.append(coords)
        if len(vectors) != k:
            raise ValueError(f"block has {len(vectors)} generators, expected {k}")
        blk = subspace(vectors, v, ctx)
        if blk.k != k:
            raise ValueError(f"block generators span only {blk.k} dimensions")
        blocks.append(blk)
    return SubspaceDesign(
        ctx=ctx, t=hdr["t"], v=v, k=k, lam=hdr["lambda"], blocks=tuple(blocks)
    )


def load_subspace_design(path: str | Path) -> SubspaceDesign:
    return loads_subspace_design(Path(path).read_text(encoding="utf-8"))


def dumps_comb_design(design: CombinatorialDesign) -> str:
    hdr = f"cdesign t={design.t} n={design.n} k={design.k} lambda={design.lam}"
    lines = [hdr]
    for blk in design.blocks:
        lines.append(" ".join(str(i) for i in blk))
    return "\n".join(lines) + "\n"


def save_comb_design(design: CombinatorialDesign, path: str | Path) -> None:
    Path(path).write_text(dumps_comb_design(design), encoding="utf-8")


def loads_comb_design(text: str) -> CombinatorialDesign:
    lines = _strip_lines(text)
    if not lines:
        raise ValueError("empty design file")
    hdr = _parse_header(lines[0], "cdesign", ["t", "n", "k", "lambda"])
    blocks = tuple(tuple(int(x) for x in line.split()) for line in lines[1:])
    return CombinatorialDesign(
        n=hdr["n"], t=hdr["t"], k=hdr["k"], lam=hdr["lambda"], blocks=blocks
    )


def load_comb_design(path: str | Path) -> CombinatorialDesign:
    return loads_comb_design(Path(path).read_text(encoding="utf-8"))
