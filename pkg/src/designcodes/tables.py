"""Code-parameter table rows for designs taken through each construction.

A row is determined by the subspace-design parameters t-(v, k, lambda)_q and
the construction mode.  Everything is closed-form arithmetic: length and
block counts from Gaussian coefficients, the code dimension from the
geometric rank formulas, the decoding capability from the one-step formulas,
lambda_min by scanning the divisibility conditions, and the decoder speedup
as lambda_max over lambda_known.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .codes import (
    affine_binary_rank,
    binary_rank_formula,
    flats_binary_rank,
    hamada_rank,
)
from .decoders import ell_one_step, ell_one_step_3design
from .designs import DesignParams, derive_params_comb, derive_params_q
from .field import FieldCtx
from .pspace import gaussian_coefficient

MODES = ("projective", "affine", "flats")


@dataclass(frozen=True)
class TableRowSpec:
    t: int
    v: int
    k: int
    lam: int
    q: int
    mode: str

    def label(self) -> str:
        return f"{self.t}-({self.v},{self.k},{self.lam})_{self.q}"


@dataclass(frozen=True)
class RowReport:
    spec: TableRowSpec
    n: int
    dim: int
    ell: int
    r: int
    lambda_min: int
    lambda_max: int
    speedup: Fraction | None  # None when lambda_known == lambda_max

    def speedup_str(self) -> str:
        if self.speedup is None:
            return ""
        return format_one_decimal(self.speedup)

    def tsv(self) -> str:
        return "\t".join(
            [
                self.spec.label(),
                str(self.lambda_min),
                str(self.lambda_max),
                f"[{self.n}, {self.dim}, {self.ell}]",
                str(self.r),
                self.speedup_str(),
            ]
        )

    def kv_lines(self) -> list[str]:
        return [
            f"design={self.spec.label()}",
            f"mode={self.spec.mode}",
            f"lambda_min={self.lambda_min}",
            f"lambda_max={self.lambda_max}",
            f"n={self.n}",
            f"dim={self.dim}",
            f"ell={self.ell}",
            f"r={self.r}",
            f"speedup={self.speedup_str()}",
        ]


def format_one_decimal(value: Fraction) -> str:
    """One decimal place, ties rounded up (half-up)."""
    scaled = int((value * 10 + Fraction(1, 2)) // 1)
    return f"{scaled // 10}.{scaled % 10}"


def comb_design_params(spec: TableRowSpec) -> DesignParams:
    """Parameters of the combinatorial design the row's construction yields."""
    if spec.mode not in MODES:
        raise ValueError(f"unknown mode {spec.mode!r}")
    if spec.t < 2:
        raise ValueError("constructions need t >= 2")
    qp = derive_params_q(spec.t, spec.v, spec.k, spec.lam, spec.q)
    violated = qp.violated_divisibility()
    if violated is not None:
        raise ValueError(
            f"lambda={spec.lam} is inadmissible for {spec.label()}: {violated} is not integral"
        )
    q, v, k = spec.q, spec.v, spec.k
    if spec.mode == "projective":
        return derive_params_comb(
            2,
            gaussian_coefficient(v, 1, q),
            gaussian_coefficient(k, 1, q),
            qp.lambda_s(2),
        )
    if spec.mode == "affine":
        if q == 2 and spec.t >= 3:
            return derive_params_comb(3, q ** (v - 1), q ** (k - 1), qp.lambda_s(3))
        return derive_params_comb(2, q ** (v - 1), q ** (k - 1), qp.lambda_s(2))
    if q != 2:
        raise ValueError("flats construction requires q = 2")
    return derive_params_comb(3, 2**v, 2**k, qp.lambda_s(2))


def predicted_dim(spec: TableRowSpec) -> int:
    """Code dimension from the closed-form geometric rank for the mode."""
    q, v, k = spec.q, spec.v, spec.k
    if spec.mode == "projective":
        n = gaussian_coefficient(v, 1, q)
        if q == 2:
            rank = binary_rank_formula(v, k)
        else:
            ctx = FieldCtx.of(q)
            rank = hamada_rank(v, k, ctx.p, ctx.m)
        return n - rank
    if q != 2:
        raise ValueError(f"{spec.mode} rank formula is available for q = 2 only")
    if spec.mode == "affine":
        return 2 ** (v - 1) - affine_binary_rank(v, k)
    return 2**v - flats_binary_rank(v, k)


def capability(params: DesignParams) -> int:
    """One-step decoding capability of a combinatorial design."""
    if params.t == 2:
        return ell_one_step(params.r, params.lam)
    if params.t == 3:
        return ell_one_step_3design(params.r, params.lambda_s(2), params.lam)
    raise ValueError(f"no capability formula for t = {params.t}")


def lambda_min(t: int, v: int, k: int, q: int) -> int:
    """Smallest lambda whose derived parameters are all integral."""
    lam_max = gaussian_coefficient(v - t, k - t, q)
    quotients = [
        (gaussian_coefficient(v - s, t - s, q), gaussian_coefficient(k - s, t - s, q))
        for s in range(t + 1)
    ]
    for lam in range(1, lam_max + 1):
        if all(lam * num % den == 0 for num, den in quotients):
            return lam
    raise AssertionError("trivial lambda must be admissible")  # unreachable


def table_row(spec: TableRowSpec) -> RowReport:
    params = comb_design_params(spec)
    lam_max = gaussian_coefficient(spec.v - spec.t, spec.k - spec.t, spec.q)
    if spec.lam > lam_max:
        raise ValueError(f"lambda={spec.lam} exceeds the maximum {lam_max}")
    speedup = None if spec.lam == lam_max else Fraction(lam_max, spec.lam)
    return RowReport(
        spec=spec,
        n=params.v,
        dim=predicted_dim(spec),
        ell=capability(params),
        r=params.r,
        lambda_min=lambda_min(spec.t, spec.v, spec.k, spec.q),
        lambda_max=lam_max,
        speedup=speedup,
    )
