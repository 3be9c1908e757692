import argparse
import logging
import os
import sys
from contextlib import contextmanager
from json import JSONDecodeError
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from cpmackey.abgrp import AbHom, FgAbGroup, IntegerMatrix
from cpmackey.config.config_setup import AppConfig, read_json_config
from cpmackey.exceptions import InputError, MackeyError, PreconditionError
from cpmackey.homalg import ext, ext_coh, resolution, tor, tor_coh
from cpmackey.mackey import (
    CpMackeyFunctor,
    fixed_point,
    format_invariants,
    make_canonical,
    orbit,
    prune,
    render_functor,
    render_hom,
)
from cpmackey.models import HomDocument, HomDocumentList, MackeyDocument, ModuleDocument
from cpmackey.monoidal import box_product, internal_hom
from cpmackey.periodicity import run_periodicity, summary_line
from cpmackey.randgen import RandomSpec, random_mackey_functor
from cpmackey.trace.trace_writer import LocalWriter, SampleLogWriter
from cpmackey.utils import parse_int_list, parse_matrix

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_INTERNAL, EXIT_USER = 0, 1, 2

MAKE_KINDS = [
    "zero",
    "burnside",
    "underlying-free",
    "zero-on-underlying",
    "fixed-point",
    "orbit",
    "real-rep",
    "complex-rep",
    "random",
]
DERIVED = {"ext": ext, "tor": tor, "extcoh": ext_coh, "torcoh": tor_coh}


@contextmanager
def user_file(path: str):
    """Report unreadable or unwritable paths as input errors."""
    try:
        yield
    except OSError as e:
        raise InputError(f"{path}: {e.strerror or e}") from e


def read_text(path: str) -> str:
    with user_file(path), open(path, "r") as f:
        return f.read()


def load_functor(path: str) -> CpMackeyFunctor:
    return MackeyDocument.model_validate_json(read_text(path)).to_functor()


def save_functor(m: CpMackeyFunctor, path: str, name: Optional[str] = None):
    with user_file(path), open(path, "w") as f:
        f.write(MackeyDocument.from_functor(m, name=name).dump())
    logger.info(f"Wrote functor document to {path}")


def emit(m: CpMackeyFunctor, args, name: Optional[str] = None):
    """Print a result (diagram or invariants line) and optionally store it."""
    if getattr(args, "prune", False):
        m = prune(m)
    if getattr(args, "invariants", False):
        print(format_invariants(m))
    else:
        print(render_functor(m, name=name))
    if getattr(args, "json", None):
        save_functor(m, args.json, name=name)


def _module_from_flags(args) -> AbHom:
    if args.module:
        if args.conj or args.relations:
            raise InputError("--module replaces --conj and --relations")
        return ModuleDocument.model_validate_json(read_text(args.module)).to_ab_hom()
    if not args.conj:
        raise PreconditionError(f"{args.kind} needs --conj or --module")
    conj = IntegerMatrix.from_rows(parse_matrix(args.conj))
    n = conj.rows
    if args.relations:
        rels = IntegerMatrix.from_rows(parse_matrix(args.relations))
        if rels.rows != n:
            raise PreconditionError("--relations needs one row per generator")
    else:
        rels = IntegerMatrix.zero(n, 0)
    group = FgAbGroup(n, rels)
    return AbHom(group, group, conj)


def cmd_make(args, config: AppConfig) -> int:
    kind = args.kind
    if kind == "random":
        defaults = config.run_config.random
        spec = RandomSpec(
            prime=args.prime,
            seed=args.seed,
            max_free=args.max_free if args.max_free is not None else defaults.max_free,
            max_rel=args.max_rel if args.max_rel is not None else defaults.max_rel,
            coef_bound=args.coef_bound if args.coef_bound is not None else defaults.coef_bound,
        )
        m = random_mackey_functor(spec)
    elif kind in ("fixed-point", "orbit"):
        module = _module_from_flags(args)
        m = fixed_point(args.prime, module) if kind == "fixed-point" else orbit(args.prime, module)
    else:
        extra = FgAbGroup.from_invariants(parse_int_list(args.group)) if args.group else None
        m = make_canonical(kind, args.prime, extra)
    emit(m, args, name=args.name or kind)
    return EXIT_OK


def cmd_compute(args, config: AppConfig) -> int:
    m, n = load_functor(args.m), load_functor(args.n)
    logger.info(f"Computing {args.functor} in degree {args.i}")
    result = DERIVED[args.functor](
        args.i,
        m,
        n,
        prune=config.run_config.prune_resolutions,
        strategy=config.run_config.cover_strategy,
    )
    emit(result, args, name=f"{args.functor}_{args.i}")
    return EXIT_OK


def cmd_box(args, config: AppConfig) -> int:
    emit(box_product(load_functor(args.m), load_functor(args.n)), args, name="box")
    return EXIT_OK


def cmd_ihom(args, config: AppConfig) -> int:
    emit(internal_hom(load_functor(args.m), load_functor(args.n)), args, name="ihom")
    return EXIT_OK


def cmd_res(args, config: AppConfig) -> int:
    m = load_functor(args.m)
    do_prune = config.run_config.prune_resolutions and not args.no_prune
    strategy = args.strategy or config.run_config.cover_strategy
    complex_ = resolution(m, args.n, prune=do_prune, strategy=strategy)
    for i, d in enumerate(complex_.differentials):
        f_rank, u_rank = complex_.ranks()[i]
        print(f"d{i}: P{i} ranks (fixed {f_rank}, underlying {u_rank})")
        print(render_hom(d))
    if args.json:
        docs = [HomDocument.from_hom(d) for d in complex_.differentials]
        with user_file(args.json), open(args.json, "wb") as f:
            f.write(HomDocumentList.dump_json(docs, by_alias=True, indent=2))
        logger.info(f"Wrote {len(docs)} differentials to {args.json}")
    return EXIT_OK


def cmd_periodicity(args, config: AppConfig) -> int:
    if args.to < args.from_ + 4 or args.samples < 1:
        raise PreconditionError("periodicity needs --samples >= 1 and --to >= --from + 4")
    pair = None
    if args.m or args.n:
        if not (args.m and args.n):
            raise PreconditionError("--m and --n must be given together")
        pair = (load_functor(args.m), load_functor(args.n))
    sample_log, writer = None, None
    if args.out:
        out_dir = os.path.dirname(os.path.abspath(args.out))
        stem = os.path.splitext(os.path.basename(args.out))[0]
        log_path = os.path.join(out_dir, config.logs.samples_dir, f"{stem}.jsonl")
        with user_file(log_path):
            writer = LocalWriter(out_dir)
            sample_log = SampleLogWriter(log_path)
    report = run_periodicity(
        prime=args.prime,
        samples=args.samples,
        degree_from=args.from_,
        degree_to=args.to,
        base_seed=args.seed,
        functor=args.functor or config.run_config.periodicity_functor,
        pair=pair,
        random=config.run_config.random,
        max_workers=args.workers or config.run_config.periodicity_workers,
        prune=config.run_config.prune_resolutions,
        strategy=config.run_config.cover_strategy,
        sample_log=sample_log,
    )
    if writer:
        with user_file(args.out):
            writer.write(report, os.path.basename(args.out))
    else:
        print(report.dump())
    print(summary_line(report))
    return EXIT_OK


def cmd_show(args, config: AppConfig) -> int:
    doc = MackeyDocument.model_validate_json(read_text(args.m))
    emit(doc.to_functor(), args, name=doc.name)
    return EXIT_OK


def _add_output_flags(p: argparse.ArgumentParser, with_json: bool = True):
    p.add_argument("--prune", action="store_true", help="Print the pruned presentation")
    p.add_argument(
        "--invariants",
        action="store_true",
        help="Print only the invariant factors of both levels",
    )
    if with_json:
        p.add_argument("--json", help="Also write the result as a functor document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpmackey",
        description="Homological algebra of Mackey functors for cyclic groups of prime order",
    )
    parser.add_argument("--config", help="Run configuration JSON (default: CONFIG_PATH or run_configs/default.json)")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Override the configured log level",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    make = sub.add_parser("make", help="Construct a named or random functor")
    make.add_argument("kind", choices=MAKE_KINDS)
    make.add_argument("--prime", type=int, required=True)
    make.add_argument("--seed", type=int, default=0, help="Seed for random functors")
    make.add_argument("--max-free", type=int)
    make.add_argument("--max-rel", type=int)
    make.add_argument("--coef-bound", type=int)
    make.add_argument("--conj", help="Conjugation matrix, rows separated by ';'")
    make.add_argument("--relations", help="Relation matrix of the module, rows separated by ';'")
    make.add_argument("--module", help="Module document {relations, conj} instead of the two flags")
    make.add_argument("--group", help="Invariant factors of the fixed group for zero-on-underlying")
    make.add_argument("--name", help="Label stored in the document")
    _add_output_flags(make)
    make.set_defaults(handler=cmd_make)

    compute = sub.add_parser("compute", help="Ext, Tor and their cohomological variants")
    compute.add_argument("functor", choices=sorted(DERIVED))
    compute.add_argument("--i", type=int, required=True, help="Degree")
    compute.add_argument("--m", required=True, help="First argument (functor document)")
    compute.add_argument("--n", required=True, help="Second argument (functor document)")
    _add_output_flags(compute)
    compute.set_defaults(handler=cmd_compute)

    for name, handler, text in (
        ("box", cmd_box, "Box product"),
        ("ihom", cmd_ihom, "Internal hom"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--m", required=True)
        p.add_argument("--n", required=True)
        _add_output_flags(p)
        p.set_defaults(handler=handler)

    res = sub.add_parser("res", help="Projective resolution")
    res.add_argument("--m", required=True)
    res.add_argument("--n", type=int, required=True, help="Number of differentials after d0")
    res.add_argument("--no-prune", action="store_true", help="Cover kernels without pruning")
    res.add_argument("--strategy", choices=["minimal", "levelwise"])
    res.add_argument("--json", help="Write the differentials as a JSON array of hom documents")
    res.set_defaults(handler=cmd_res)

    per = sub.add_parser("periodicity", help="Compare derived functors in degrees n and n + 4")
    per.add_argument("--prime", type=int, required=True)
    per.add_argument("--samples", type=int, default=1)
    per.add_argument("--from", dest="from_", type=int, required=True)
    per.add_argument("--to", type=int, required=True)
    per.add_argument("--seed", type=int, default=0)
    per.add_argument("--functor", choices=["ext", "tor"])
    per.add_argument("--m", help="Fixed first argument instead of random draws")
    per.add_argument("--n", help="Fixed second argument instead of random draws")
    per.add_argument("--workers", type=int)
    per.add_argument("--out", help="Report file; the report is printed when omitted")
    per.set_defaults(handler=cmd_periodicity)

    show = sub.add_parser("show", help="Render a stored functor document")
    show.add_argument("--m", required=True)
    _add_output_flags(show, with_json=False)
    show.set_defaults(handler=cmd_show)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USER
    try:
        with user_file(args.config or "run configuration"):
            config = read_json_config(args.config)
        if args.log_level:
            logging.getLogger().setLevel(args.log_level)
        config.logs.job = args.command
        return args.handler(args, config)
    except (MackeyError, ValidationError, JSONDecodeError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USER
    except Exception:
        logger.exception("Unexpected failure")
        return EXIT_INTERNAL


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
