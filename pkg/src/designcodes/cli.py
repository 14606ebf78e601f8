"""Command-line surface: design generation and verification, code building,
rank formulas, decoding, radius measurement, channel simulation, table rows,
and the rank-equality experiment.

Exit codes: 0 on success, 1 on a domain error (bad parameters, failed
verification), 2 on usage errors (argparse).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codes import (
    BinaryCode,
    bch_bound,
    binary_rank_formula,
    build_code,
    distance_bounds,
    hamada_rank,
    hamada_rank_terms,
    min_distance_bruteforce,
)
from .decoders import (
    OneStepDecoder,
    TwoStepDecoder,
    measure_decoding_radius,
    simulate,
)
from .designs import (
    CombinatorialDesign,
    SubspaceDesign,
    affine_version,
    derive_params_comb,
    derive_params_q,
    dumps_comb_design,
    dumps_subspace_design,
    flats_construction,
    load_comb_design,
    load_subspace_design,
    loads_comb_design,
    loads_subspace_design,
    projective_version,
    trivial_design,
    verify_comb_design,
    verify_subspace_design,
)
from .field import FieldCtx, PrimeMatrix, matrix_rank
from .pspace import enumerate_points, gaussian_coefficient
from .tables import TableRowSpec, capability, comb_design_params, table_row


def _ctx(args) -> FieldCtx:
    return FieldCtx.of(args.q, modulus=getattr(args, "poly", None))


def _emit(lines, out=None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_hyperplane(arg: str | None):
    if arg is None:
        return None
    return tuple(int(x) for x in arg.replace(",", " ").split())


def _load_design_file(path: str):
    """Returns (SubspaceDesign | None, CombinatorialDesign | None)."""
    text = Path(path).read_text(encoding="utf-8")
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if head == "qdesign":
        return loads_subspace_design(text), None
    if head == "cdesign":
        return None, loads_comb_design(text)
    raise ValueError(f"{path}: neither a qdesign nor a cdesign file")


def _construct(qdesign: SubspaceDesign, mode: str, hyperplane=None) -> CombinatorialDesign:
    if mode == "projective":
        return projective_version(qdesign)
    if mode == "affine":
        return affine_version(qdesign, hyperplane=hyperplane)
    if mode == "flats":
        return flats_construction(qdesign)
    raise ValueError(f"unknown mode {mode!r}")


def _resolve_comb(args) -> tuple[CombinatorialDesign, SubspaceDesign | None, str]:
    """Combinatorial design for a decoder, from a file or trivial parameters."""
    mode = getattr(args, "mode", None) or "projective"
    if getattr(args, "designfile", None):
        qd, cd = _load_design_file(args.designfile)
        if cd is not None:
            return cd, None, "combinatorial"
        return _construct(qd, mode), qd, mode
    ctx = _ctx(args)
    qd = trivial_design(args.t, args.v, args.k, ctx)
    return _construct(qd, mode), qd, mode


def _code_report(code: BinaryCode, comb: CombinatorialDesign, qd: SubspaceDesign | None, mode: str):
    lines = [f"n={code.n}", f"rank={code.rank}", f"dim={code.dim}"]
    try:
        lines.append(f"ell={capability(comb.params())}")
    except ValueError:
        pass  # no capability formula outside t = 2, 3
    if qd is not None and mode in ("projective", "affine"):
        v, k, q = qd.v, qd.k, qd.q
        lines.append(f"d_bch={bch_bound(v, k, q)}")
        b = distance_bounds(v, k, q, mode)
        lines.append(f"d_lower={b.lower}")
        lines.append(f"d_exact={b.known_exact if b.known_exact is not None else ''}")
    return lines


# ---------------------------------------------------------------------------
# Subcommand handlers


def cmd_points(args) -> int:
    ctx = _ctx(args)
    for i, pt in enumerate(enumerate_points(args.v, ctx)):
        print(f"{i}\t{' '.join(str(x) for x in pt)}")
    return 0


def cmd_design_trivial(args) -> int:
    d = trivial_design(args.t, args.v, args.k, _ctx(args))
    _emit(dumps_subspace_design(d).splitlines(), args.out)
    return 0


def cmd_design_verify(args) -> int:
    qd, cd = _load_design_file(args.file)
    res = verify_subspace_design(qd) if qd is not None else verify_comb_design(cd)
    print(f"verified={'true' if res.verified else 'false'}")
    print(f"observed_lambda={res.observed_lambda}")
    if res.witness is not None:
        witness, count = res.witness
        if qd is not None:
            desc = " ; ".join(" ".join(str(x) for x in row) for row in witness.gen)
        else:
            desc = " ".join(str(i) for i in witness)
        print(f"witness={desc}")
        print(f"witness_count={count}")
    return 0 if res.verified else 1


def cmd_design_derive(args) -> int:
    if args.q is not None:
        params = derive_params_q(args.t, args.v, args.k, args.lam, args.q)
    else:
        if args.n is None:
            raise ValueError("need --q for subspace parameters or --n for combinatorial")
        params = derive_params_comb(args.t, args.n, args.k, args.lam)
    for s, val in enumerate(params.lambdas):
        print(f"lambda_{s}={val}")
    print(f"b={params.lambdas[0]}")
    if params.t >= 1:
        print(f"r={params.lambdas[1]}")
    print(f"admissible={'true' if params.admissible else 'false'}")
    return 0


def cmd_code_build(args) -> int:
    qd, cd = _load_design_file(args.file)
    mode = args.mode or ("combinatorial" if cd is not None else "projective")
    if cd is None:
        cd = _construct(qd, mode, hyperplane=_parse_hyperplane(args.hyperplane))
    code = build_code(cd, args.p, mode)
    if args.design_out:
        Path(args.design_out).write_text(dumps_comb_design(cd), encoding="utf-8")
    if args.matrix_out:
        code.checks.save(args.matrix_out)
    for line in _code_report(code, cd, qd, mode):
        print(line)
    return 0


def cmd_code_rank(args) -> int:
    m = PrimeMatrix.load(args.file)
    print(f"rank={matrix_rank(m, args.p if args.p else m.p)}")
    return 0


def cmd_code_params(args) -> int:
    v, k, q = args.v, args.k, args.q
    ctx = FieldCtx.of(q)
    lam = args.lam if args.lam is not None else gaussian_coefficient(v - args.t, k - args.t, q)
    spec = TableRowSpec(t=args.t, v=v, k=k, lam=lam, q=q, mode=args.mode)
    params = comb_design_params(spec)
    n = params.v
    if args.mode == "projective":
        rank = binary_rank_formula(v, k) if q == 2 else hamada_rank(v, k, ctx.p, ctx.m)
    elif args.mode == "affine" and q == 2:
        rank = binary_rank_formula(v - 1, k - 1)
    elif args.mode == "flats" and q == 2:
        rank = binary_rank_formula(v, k)
    else:
        raise ValueError(f"{args.mode} rank formula is available for q = 2 only")
    lines = [f"n={n}", f"rank={rank}", f"dim={n - rank}", f"ell={capability(params)}"]
    if args.mode in ("projective", "affine"):
        lines.append(f"d_bch={bch_bound(v, k, q)}")
        b = distance_bounds(v, k, q, args.mode)
        lines.append(f"d_lower={b.lower}")
        lines.append(f"d_exact={b.known_exact if b.known_exact is not None else ''}")
    for line in lines:
        print(line)
    return 0


def cmd_code_mindist(args) -> int:
    m = PrimeMatrix.load(args.file)
    code = BinaryCode(n=m.ncols, p=m.p, checks=m, rank=matrix_rank(m))
    print(f"d={min_distance_bruteforce(code, cap=args.cap)}")
    return 0


def cmd_hamada(args) -> int:
    rank = hamada_rank(args.v, args.k, args.p, args.m)
    print(f"rank={rank}")
    if args.p == 2 and args.m == 1:
        print(f"binary_formula={binary_rank_formula(args.v, args.k)}")
    if args.breakdown:
        for s, val in hamada_rank_terms(args.v, args.k, args.p, args.m):
            print(f"term s={','.join(str(x) for x in s)} value={val}")
    return 0


def _print_outcome(out) -> None:
    print(f"status={out.status}")
    print(f"flips={','.join(str(j) for j in out.flips)}")
    if out.word is not None:
        print(f"word={out.word_str()}")


def cmd_decode_one_step(args) -> int:
    comb, _, mode = _resolve_comb(args)
    code = build_code(comb, 2, mode)
    dec = OneStepDecoder(code, comb)
    out = dec.decode(args.word)
    _print_outcome(out)
    return 0


def _two_step_decoder(args) -> TwoStepDecoder:
    if getattr(args, "designfile", None):
        step2 = load_subspace_design(args.designfile)
    else:
        step2 = trivial_design(2, args.v, args.k - 1, _ctx(args))
    code = build_code(
        projective_version(trivial_design(2, step2.v, step2.k + 1, step2.ctx)),
        2,
        "projective",
    )
    return TwoStepDecoder(code, step2)


def cmd_decode_two_step(args) -> int:
    dec = _two_step_decoder(args)
    out = dec.decode(args.word)
    _print_outcome(out)
    return 0


def _decoder_for(args):
    if args.decoder == "one-step":
        comb, _, mode = _resolve_comb(args)
        code = build_code(comb, 2, mode)
        return OneStepDecoder(code, comb)
    return _two_step_decoder(args)


def cmd_radius(args) -> int:
    dec = _decoder_for(args)
    rep = measure_decoding_radius(
        dec, budget=args.budget, max_weight=args.max_weight, seed=args.seed
    )
    print(f"radius={rep.certified_radius}")
    print(f"first_failure={rep.first_failure_weight if rep.first_failure_weight is not None else ''}")
    print(f"trials={rep.trials}")
    print(f"exhaustive={'true' if rep.exhaustive else 'false'}")
    return 0


def cmd_simulate(args) -> int:
    dec = _decoder_for(args)
    rep = simulate(
        dec,
        weight=args.weight,
        trials=args.trials,
        seed=args.seed,
        zero_codeword=args.zero,
    )
    print(f"seed={rep.seed}")
    print(f"weight={rep.weight}")
    print(f"trials={rep.trials}")
    print(f"successes={rep.successes}")
    print(f"miscorrected={rep.miscorrected}")
    print(f"detected={rep.detected}")
    print(f"success_rate={rep.success_rate}")
    print(f"check_evals={rep.check_evals}")
    return 0


def cmd_table(args) -> int:
    spec = TableRowSpec(t=args.t, v=args.v, k=args.k, lam=args.lam, q=args.q, mode=args.mode)
    rep = table_row(spec)
    if args.format == "tsv":
        print(rep.tsv())
    else:
        for line in rep.kv_lines():
            print(line)
    return 0


def cmd_experiment_rank(args) -> int:
    qd, cd = _load_design_file(args.file)
    if qd is None:
        raise ValueError("the rank experiment needs a subspace-design (qdesign) file")
    res = verify_subspace_design(qd)
    if not res.verified:
        witness, count = res.witness if res.witness else (None, None)
        print("verified=false")
        if witness is not None:
            desc = " ; ".join(" ".join(str(x) for x in row) for row in witness.gen)
            print(f"witness={desc}")
            print(f"witness_count={count}")
        return 1
    comb = projective_version(qd)
    mr = matrix_rank(build_code(comb, qd.ctx.p, "projective").checks, qd.ctx.p)
    geo = hamada_rank(qd.v, qd.k, qd.ctx.p, qd.ctx.m)
    print(f"matrix_rank={mr}")
    print(f"hamada_rank={geo}")
    if qd.q == 2:
        print(f"binary_rank={binary_rank_formula(qd.v, qd.k)}")
    if args.with_geometric_matrix:
        triv = projective_version(trivial_design(qd.t, qd.v, qd.k, qd.ctx))
        gm = matrix_rank(build_code(triv, qd.ctx.p, "projective").checks, qd.ctx.p)
        print(f"geometric_matrix_rank={gm}")
    print(f"verdict={'equal' if mr == geo else 'unequal'}")
    return 0


# ---------------------------------------------------------------------------
# Parser wiring


def _add_field_args(p, need_k=True, need_t=False):
    p.add_argument("--v", type=int, required=True)
    if need_k:
        p.add_argument("--k", type=int, required=True)
    if need_t:
        p.add_argument("--t", type=int, default=2)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--poly", type=int, default=None, help="modulus polynomial encoding")


def _add_decoder_source_args(p, two_step=False):
    p.add_argument("--designfile", default=None)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--poly", type=int, default=None)
    if not two_step:
        p.add_argument("--mode", choices=["projective", "affine", "flats"], default="projective")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="designcodes",
        description="codes from designs over finite geometries and majority-logic decoding",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("points", help="list the canonical point order")
    _add_field_args(p, need_k=False)
    p.set_defaults(fn=cmd_points)

    pd = sub.add_parser("design", help="generate, verify, derive")
    dsub = pd.add_subparsers(dest="subcmd", required=True)

    p = dsub.add_parser("trivial", help="emit the full k-subspace design")
    _add_field_args(p, need_t=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_design_trivial)

    p = dsub.add_parser("verify", help="brute-force verification of a design file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_design_verify)

    p = dsub.add_parser("derive", help="derived design parameters")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(fn=cmd_design_derive)

    pc = sub.add_parser("code", help="build codes, ranks, parameters, distances")
    csub = pc.add_subparsers(dest="subcmd", required=True)

    p = csub.add_parser("build", help="code from a design file")
    p.add_argument("file")
    p.add_argument("--mode", choices=["projective", "affine", "flats"], default=None)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--hyperplane", default=None, help="normal vector, e.g. '0 1 0 0'")
    p.add_argument("--matrix-out", default=None)
    p.add_argument("--design-out", default=None)
    p.set_defaults(fn=cmd_code_build)

    p = csub.add_parser("rank", help="rank of a pmatrix file")
    p.add_argument("file")
    p.add_argument("--p", type=int, default=None)
    p.set_defaults(fn=cmd_code_rank)

    p = csub.add_parser("params", help="formula-only code report")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--lambda", dest="lam", type=int, default=None)
    p.add_argument("--mode", choices=["projective", "affine", "flats"], default="projective")
    p.set_defaults(fn=cmd_code_params)

    p = csub.add_parser("mindist", help="exhaustive minimum distance of a pmatrix file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=24)
    p.set_defaults(fn=cmd_code_mindist)

    p = sub.add_parser("hamada", help="geometric p-rank by the closed formula")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--breakdown", action="store_true")
    p.set_defaults(fn=cmd_hamada)

    pdec = sub.add_parser("decode", help="decode a received word")
    decsub = pdec.add_subparsers(dest="subcmd", required=True)

    p = decsub.add_parser("one-step")
    _add_decoder_source_args(p)
    p.add_argument("--word", required=True)
    p.set_defaults(fn=cmd_decode_one_step)

    p = decsub.add_parser("two-step")
    _add_decoder_source_args(p, two_step=True)
    p.add_argument("--word", required=True)
    p.set_defaults(fn=cmd_decode_two_step)

    p = sub.add_parser("radius", help="measure the decoding radius empirically")
    p.add_argument("--decoder", choices=["one-step", "two-step"], default="one-step")
    _add_decoder_source_args(p)
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_radius)

    p = sub.add_parser("simulate", help="random-error channel simulation")
    p.add_argument("--decoder", choices=["one-step", "two-step"], default="one-step")
    _add_decoder_source_args(p)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zero", action="store_true", help="send the zero codeword")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("table", help="one code-parameter table row")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mode", choices=["projective", "affine", "flats"], default="projective")
    p.add_argument("--format", choices=["tsv", "kv"], default="tsv")
    p.set_defaults(fn=cmd_table)

    pe = sub.add_parser("experiment", help="research experiments")
    esub = pe.add_subparsers(dest="subcmd", required=True)
    p = esub.add_parser("rank", help="matrix rank vs geometric rank of a design file")
    p.add_argument("file")
    p.add_argument("--with-geometric-matrix", action="store_true")
    p.set_defaults(fn=cmd_experiment_rank)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.cmd in ("decode", "radius", "simulate") and not getattr(args, "designfile", None):
        for name in ("v", "k"):
            if getattr(args, name, None) is None:
                ap.error(f"--{name} is required without --designfile")
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
