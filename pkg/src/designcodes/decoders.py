"""One-step and two-step majority-logic decoders and their capabilities.

Decoding is binary (p = 2).  Words, blocks and checks are bitmask ints with
bit j = position j.  Every decision pass reads an immutable snapshot of the
received word and applies all flips at once; a pass that leaves some check
unsatisfied reports detected-uncorrectable rather than iterating.  Decoded
outputs always satisfy every parity check of the code.

Capability formulas:

* 2-designs: one-step decoding corrects floor((r + lambda - 1) / (2 lambda))
  errors (Rudolph's threshold rule, with the received symbol's own vote
  realized as the threshold 2 U_j > r + lambda - 1 on unsatisfied checks).
* 3-designs: e errors touch at most e lambda_2 - (e-1) lambda_3 of the
  checks through a position (union bound with spanning-tree overlap), which
  yields the largest e with (2e-1) lambda_2 - (2e-3) lambda_3 < r.
* Two-step decoding of the geometric k-subspace code via a design of
  (k-1)-subspaces corrects min(floor(J/2), floor((r + lambda - 1) /
  (2 lambda))) with J = [v-k+1, 1]_q superspaces per block.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb

from .codes import BinaryCode
from .designs import CombinatorialDesign, SubspaceDesign
from .pspace import gaussian_coefficient, points_mask, superspaces

DECODED = "decoded"
DETECTED = "detected-uncorrectable"
MISCORRECTED = "miscorrected"


@dataclass(frozen=True)
class DecodeOutcome:
    status: str
    word: int | None
    flips: tuple[int, ...]
    n: int

    def word_str(self) -> str:
        if self.word is None:
            return ""
        return "".join(str((self.word >> j) & 1) for j in range(self.n))


def as_mask(word, n: int) -> int:
    """Accept an int bitmask, a 0/1 string, or a bit sequence."""
    if isinstance(word, int):
        if word < 0 or word >> n:
            raise ValueError(f"word does not fit length {n}")
        return word
    if isinstance(word, str):
        bits = word.strip()
        if len(bits) != n:
            raise ValueError(f"word has length {len(bits)}, expected {n}")
        mask = 0
        for j, ch in enumerate(bits):
            if ch == "1":
                mask |= 1 << j
            elif ch != "0":
                raise ValueError(f"non-binary symbol {ch!r}")
        return mask
    mask = 0
    count = 0
    for j, bit in enumerate(word):
        if bit not in (0, 1):
            raise ValueError(f"non-binary symbol {bit!r}")
        if bit:
            mask |= 1 << j
        count += 1
    if count != n:
        raise ValueError(f"word has length {count}, expected {n}")
    return mask


# ---------------------------------------------------------------------------
# Capability formulas


def ell_one_step(r: int, lam: int) -> int:
    """Errors correctable by one-step decoding of a 2-design."""
    if not 1 <= lam <= r:
        raise ValueError("need r >= lambda >= 1")
    return (r + lam - 1) // (2 * lam)


def ell_one_step_3design(r: int, lambda2: int, lambda3: int) -> int:
    """Errors correctable by one-step decoding of a 3-design.

    Largest e with (2e-1) lambda_2 - (2e-3) lambda_3 < r: with pair and
    triple regularity, e errors can corrupt at most e lambda_2 - (e-1)
    lambda_3 of the r checks through a position.
    """
    if not 1 <= lambda3 < lambda2 <= r:
        raise ValueError("need r >= lambda_2 > lambda_3 >= 1")
    num = r + lambda2 - 3 * lambda3
    if num <= 0:
        return 0
    return max(0, (num - 1) // (2 * (lambda2 - lambda3)))


def ell_bounds(v: int, k: int, q: int, lam: int) -> tuple[int, int]:
    """The bracketing floor expressions for ell in terms of (v, k, q) only.

    Evaluated with exact rationals: Q = (q^(v-1)-1)/(q^(k-1)-1), lower
    floor((Q-1)/2), upper floor((Q-1)/2 + 1/(2 lambda)).  Note these can
    undershoot the exact ell by one; see the capability tests.
    """
    if not 2 <= k < v:
        raise ValueError("need 2 <= k < v")
    quot = Fraction(q ** (v - 1) - 1, q ** (k - 1) - 1)
    lower = (quot - 1) / 2
    upper = lower + Fraction(1, 2 * lam)
    return (int(lower // 1), int(upper // 1))


@dataclass(frozen=True)
class CapabilityReport:
    """Two-step capability of the geometric k-subspace code decoded through
    a (k-1)-subspace design with 2-design parameters (r, lambda_2)."""

    ell_one_step: int
    ell_bounds: tuple[int, int]
    J: int
    ell_two_step: int
    r: int
    lambda2: int


def two_step_capability(v: int, k: int, q: int, lam: int) -> CapabilityReport:
    """J, both capability floors, and their min, for a step-2 design with
    (k-1)-dimensional blocks and 2-design lambda `lam`."""
    if k < 3:
        raise ValueError("two-step needs k >= 3")
    if k > v:
        raise ValueError("need k <= v")
    J = gaussian_coefficient(v - k + 1, 1, q)
    r_frac = Fraction(lam * gaussian_coefficient(v - 1, 1, q), gaussian_coefficient(k - 2, 1, q))
    if r_frac.denominator != 1:
        raise ValueError(f"repetition number {r_frac} is not integral")
    r = int(r_frac)
    ell2 = ell_one_step(r, lam)
    return CapabilityReport(
        ell_one_step=ell2,
        ell_bounds=ell_bounds(v, k - 1, q, lam),
        J=J,
        ell_two_step=min(J // 2, ell2),
        r=r,
        lambda2=lam,
    )


# ---------------------------------------------------------------------------
# Decoders


class OneStepDecoder:
    """Per-position threshold vote over the design blocks through it.

    Position j is flipped iff 2 U_j > r + lambda_2 - 1, where U_j counts
    unsatisfied checks through j.  Ties never flip.  `check_evals` counts
    parity evaluations, the decoder's dominating cost.
    """

    def __init__(self, code: BinaryCode, design: CombinatorialDesign):
        if code.p != 2:
            raise ValueError("decoding is implemented for binary codes only")
        if design.n != code.n:
            raise ValueError("design and code disagree on length")
        if design.t < 2:
            raise ValueError("one-step decoding needs a design with t >= 2")
        if sorted(code.check_masks()) != sorted(
            sum(1 << i for i in blk) for blk in design.blocks
        ):
            raise ValueError("code checks are not the design's incidence rows")
        params = design.params()
        self.code = code
        self.n = code.n
        self.r = params.r
        self.lambda2 = params.lambda_s(2)
        through: list[list[int]] = [[] for _ in range(code.n)]
        for blk in design.blocks:
            mask = sum(1 << i for i in blk)
            for i in blk:
                through[i].append(mask)
        self._through = [tuple(masks) for masks in through]
        self.check_evals = 0

    def decode(self, word) -> DecodeOutcome:
        received = as_mask(word, self.n)
        threshold = self.r + self.lambda2 - 1
        flip_mask = 0
        flips = []
        for j, masks in enumerate(self._through):
            unsat = 0
            for bm in masks:
                unsat += (received & bm).bit_count() & 1
            self.check_evals += len(masks)
            if 2 * unsat > threshold:
                flip_mask |= 1 << j
                flips.append(j)
        out = received ^ flip_mask
        if self.code.is_codeword(out):
            return DecodeOutcome(status=DECODED, word=out, flips=tuple(flips), n=self.n)
        return DecodeOutcome(status=DETECTED, word=None, flips=tuple(flips), n=self.n)


class TwoStepDecoder:
    """Recover block parities from superspace checks, then vote per position.

    Step 1 estimates the codeword parity over each (k-1)-dimensional block B
    from the J k-superspaces K of B: each K gives the parity of the received
    word over K minus B, and the majority of the J estimates wins.  Step 2
    sets each position j to the majority, over the step-2 blocks through j,
    of (block parity) - (received parity over the block minus j); ties keep
    the received bit.  The superspace point sets are precomputed once per
    (code, design) pair.
    """

    def __init__(self, code: BinaryCode, step2: SubspaceDesign):
        if code.p != 2:
            raise ValueError("decoding is implemented for binary codes only")
        if step2.t < 2:
            raise ValueError("two-step decoding needs a step-2 design with t >= 2")
        k = step2.k + 1
        n = gaussian_coefficient(step2.v, 1, step2.q)
        if code.n != n:
            raise ValueError("code length does not match the design's geometry")
        if k > step2.v:
            raise ValueError("step-2 blocks leave no room for superspaces")
        self.code = code
        self.n = n
        self.J = gaussian_coefficient(step2.v - step2.k, 1, step2.q)
        block_masks = []
        estimates = []
        for blk in step2.blocks:
            bmask = points_mask(blk)
            diffs = tuple(points_mask(sup) & ~bmask for sup in superspaces(blk, k))
            if len(diffs) != self.J:
                raise AssertionError("superspace count disagrees with J")
            block_masks.append(bmask)
            estimates.append(diffs)
        self._blocks = block_masks
        self._estimates = estimates
        votes: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for bi, bmask in enumerate(block_masks):
            m = bmask
            while m:
                j = (m & -m).bit_length() - 1
                votes[j].append((bi, bmask ^ (1 << j)))
                m &= m - 1
        self._votes = [tuple(vs) for vs in votes]
        self.check_evals = 0

    def decode(self, word) -> DecodeOutcome:
        received = as_mask(word, self.n)
        parities = []
        for diffs in self._estimates:
            ones = 0
            for d in diffs:
                ones += (received & d).bit_count() & 1
            self.check_evals += len(diffs)
            parities.append(1 if 2 * ones > self.J else 0)
        out = 0
        for j, votes in enumerate(self._votes):
            ones = 0
            for bi, rest in votes:
                ones += parities[bi] ^ ((received & rest).bit_count() & 1)
            self.check_evals += len(votes)
            if 2 * ones > len(votes):
                out |= 1 << j
            elif 2 * ones == len(votes):
                out |= received & (1 << j)
        flip = received ^ out
        flips = []
        m = flip
        while m:
            flips.append((m & -m).bit_length() - 1)
            m &= m - 1
        if self.code.is_codeword(out):
            return DecodeOutcome(status=DECODED, word=out, flips=tuple(flips), n=self.n)
        return DecodeOutcome(status=DETECTED, word=None, flips=tuple(flips), n=self.n)


# ---------------------------------------------------------------------------
# Empirical measurement


@dataclass(frozen=True)
class RadiusReport:
    certified_radius: int
    first_failure_weight: int | None
    trials: int
    exhaustive: bool


def measure_decoding_radius(
    decoder,
    budget: int = 200_000,
    max_weight: int | None = None,
    seed: int = 0,
) -> RadiusReport:
    """Largest weight w such that every tested error pattern of weight <= w
    decodes the zero codeword back to zero.

    Each weight is swept exhaustively while C(n, w) fits the budget and by
    uniform sampling beyond that; `exhaustive` reports whether every swept
    weight up to the radius was exhaustive.
    """
    import itertools

    n = decoder.n
    rng = random.Random(seed)
    trials = 0
    exhaustive = True
    radius = 0
    w = 1
    limit = max_weight if max_weight is not None else n
    while w <= limit:
        total = comb(n, w)
        if total <= budget:
            patterns = itertools.combinations(range(n), w)
            full = True
        else:
            patterns = (tuple(rng.sample(range(n), w)) for _ in range(budget))
            full = False
        failed = False
        for pat in patterns:
            mask = 0
            for j in pat:
                mask |= 1 << j
            trials += 1
            out = decoder.decode(mask)
            if out.status != DECODED or out.word != 0:
                failed = True
                break
        if failed:
            return RadiusReport(
                certified_radius=radius,
                first_failure_weight=w,
                trials=trials,
                exhaustive=exhaustive,
            )
        radius = w
        exhaustive = exhaustive and full
        w += 1
    return RadiusReport(
        certified_radius=radius, first_failure_weight=None, trials=trials, exhaustive=exhaustive
    )


@dataclass(frozen=True)
class SimReport:
    weight: int
    trials: int
    successes: int
    miscorrected: int
    detected: int
    check_evals: int
    seed: int

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0


def simulate(
    decoder,
    weight: int,
    trials: int,
    seed: int = 0,
    zero_codeword: bool = False,
) -> SimReport:
    """Random-error channel: per trial, a random codeword (or zero, by
    linearity) plus a uniform weight-w error pattern is decoded; outcomes
    and the parity-evaluation workload are tallied."""
    rng = random.Random(seed)
    n = decoder.n
    if weight > n:
        raise ValueError("error weight exceeds code length")
    start_evals = decoder.check_evals
    successes = miscorrected = detected = 0
    for _ in range(trials):
        codeword = 0 if zero_codeword else decoder.code.random_codeword(rng)
        mask = 0
        for j in rng.sample(range(n), weight):
            mask |= 1 << j
        out = decoder.decode(codeword ^ mask)
        if out.status == DECODED and out.word == codeword:
            successes += 1
        elif out.status == DECODED:
            out = replace(out, status=MISCORRECTED)
            miscorrected += 1
        else:
            detected += 1
    return SimReport(
        weight=weight,
        trials=trials,
        successes=successes,
        miscorrected=miscorrected,
        detected=detected,
        check_evals=decoder.check_evals - start_evals,
        seed=seed,
    )
