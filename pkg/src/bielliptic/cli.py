"""Command-line interface.

Exit codes: 0 success or true, 1 verified false, 2 parse or usage error,
3 bad model index, 4 failed precondition.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .delta import default_delta, enumerate_admissible_models, in_delta, rank_condition
from .errors import DomainError, PreconditionError
from .factorization import GeneratorWord, decompose, factor_point_image, verify_word
from .isometries import NumIsometry, block, image_index
from .lattice import P4, surface_profile
from .literals import format_ab, format_class, format_word, parse_class, parse_matrix16, parse_word

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_REFERENCE, EXIT_PRECONDITION = 0, 1, 2, 3, 4

_INT_LIST = re.compile(r"-?\d+(,-?\d*)*")


class _Parser(argparse.ArgumentParser):
    # Literals such as "-1,0,0,0" are positionals, not options.
    def _parse_optional(self, arg_string):
        if _INT_LIST.fullmatch(arg_string):
            return None
        return super()._parse_optional(arg_string)


class _BadReference(Exception):
    pass


def _emit(args, lines, obj):
    if args.json:
        print(json.dumps(obj, separators=(",", ":")))
    else:
        for line in lines:
            print(line)


def _hnf_flat(model):
    return list(model.key())


def _class_text(v, args):
    return format_ab(v, args.type) if args.ab else format_class(v)


def cmd_info(args):
    p = surface_profile(args.type)
    basis = f"e1 = (1/{p.n})A, e2 = " + ("B" if p.k == 1 else f"(1/{p.k})B")
    obj = {
        "type": p.type_id,
        "n": p.n,
        "k": p.k,
        "g_order": p.g_order,
        "split": p.split,
        "lambda_pA": p.lambda_pA,
        "lambda_pB": p.lambda_pB,
        "G": p.g_desc,
        "Gamma": p.gamma_desc,
        "basis": basis,
    }
    lines = [
        f"type {p.type_id}: n={p.n} k={p.k} |G|={p.g_order} "
        + ("split" if p.split else "non-split"),
        f"G = {p.g_desc}, Gamma = {p.gamma_desc}",
        f"lambda_pA = {p.lambda_pA}, lambda_pB = {p.lambda_pB}",
        f"Num(S) basis: {basis}; e1.e2 = 1, A.B = {p.n * p.k}",
    ]
    _emit(args, lines, obj)
    return EXIT_OK


def _select_model(t, index):
    models = enumerate_admissible_models(t)
    if index is None:
        return 0, default_delta(t)
    if not 0 <= index < len(models):
        raise _BadReference(f"model index {index} out of range 0..{len(models) - 1}")
    return index, models[index]


def cmd_delta(args):
    t = args.type
    if args.models:
        models = enumerate_admissible_models(t)
        entries = [
            {"index": i, "hnf": _hnf_flat(m), "divisor_index": m.divisor_index(), "delta_index": m.index()}
            for i, m in enumerate(models)
        ]
        lines = [f"type {t}: {len(models)} admissible model(s)"] + [
            f"model {e['index']}: hnf={','.join(map(str, e['hnf']))} "
            f"[Num:L]={e['divisor_index']} [N:Delta]={e['delta_index']}"
            for e in entries
        ]
        _emit(args, lines, {"type": t, "models": entries})
        return EXIT_OK
    if args.cls is None:
        raise DomainError("a class literal or --models is required")
    i, model = _select_model(t, args.model)
    v = parse_class(args.cls, t)
    rank_ok = rank_condition(model, v)
    divisor_ok = model.contains_divisor(v.d)
    member = in_delta(model, v)
    failed = []
    if not rank_ok:
        failed.append(f"rank divisibility: {model.profile.n} does not divide {v.r}")
    if not divisor_ok:
        failed.append("divisor lattice: D not in L")
    verdict = "in Delta" if member else "not in Delta (" + "; ".join(failed) + ")"
    obj = {
        "type": t,
        "model": i,
        "hnf": _hnf_flat(model),
        "class": format_class(v),
        "in_delta": member,
        "rank_ok": rank_ok,
        "divisor_ok": divisor_ok,
    }
    _emit(args, [f"{_class_text(v, args)}: {verdict}"], obj)
    return EXIT_OK if member else EXIT_FALSE


def cmd_index(args):
    t = args.type
    models = enumerate_admissible_models(t) if args.all_models else [default_delta(t)]
    entries = [{"index": i, "hnf": _hnf_flat(m), "image_index": image_index(m)} for i, m in enumerate(models)]
    lines = [f"type {t}: index " + ", ".join(str(e["image_index"]) for e in entries)]
    if args.all_models:
        lines += [
            f"model {e['index']}: hnf={','.join(map(str, e['hnf']))} index={e['image_index']}"
            for e in entries
        ]
    _emit(args, lines, {"type": t, "models": entries})
    return EXIT_OK


def cmd_factor(args):
    t = args.type
    v = parse_class(args.cls, t)
    word = factor_point_image(t, v)
    ok = verify_word(word, v)
    obj = {"type": t, "class": format_class(v), "word": str(word), "length": len(word), "verified": ok}
    image = _class_text(word.apply(P4), args)
    lines = [str(word), f"check: word(P4) = {image} " + ("ok" if ok else "MISMATCH")]
    _emit(args, lines, obj)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_decompose(args):
    t = args.type
    m = NumIsometry(parse_matrix16(args.matrix), t)
    dec = decompose(t, m)
    rebuilt = dec.word.action() @ block(dec.residual, t)
    ok = rebuilt.matrix == m.matrix
    obj = {
        "type": t,
        "word": str(dec.word),
        "residual": dec.residual.value,
        "in_image": dec.in_image,
        "verified": ok,
    }
    lines = [
        f"word: {dec.word}".rstrip(),
        f"residual={dec.residual.value}",
        f"in_image={'true' if dec.in_image else 'false'}",
        "check: word . block(residual) = input " + ("ok" if ok else "MISMATCH"),
    ]
    _emit(args, lines, obj)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_verify(args):
    t = args.type
    word = GeneratorWord(parse_word(args.word, t), t)
    n_ints = args.claim.count(",") + 1
    if n_ints == 16:
        claim = parse_matrix16(args.claim)
        claim_text = ",".join(str(e) for row in claim for e in row)
    else:
        claim = parse_class(args.claim, t)
        claim_text = format_class(claim)
    match = verify_word(word, claim)
    obj = {"type": t, "word": format_word(word.letters), "claim": claim_text, "match": match}
    _emit(args, ["match" if match else "mismatch"], obj)
    return EXIT_OK if match else EXIT_FALSE


def build_parser():
    parser = _Parser(prog="bielliptic", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("type", type=int, choices=range(1, 8), metavar="TYPE", help="surface type 1..7")
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "integer data of a surface type")

    p = add("delta", cmd_delta, "membership in the special sublattice")
    p.add_argument("cls", nargs="?", metavar="CLASS", help="class literal r,x,y,s")
    p.add_argument("--model", type=int, default=None, help="admissible model index (sorted HNF order)")
    p.add_argument("--models", action="store_true", help="list the admissible models")
    p.add_argument("--ab", action="store_true", help="print classes in terms of A and B")

    p = add("index", cmd_index, "index of the autoequivalence image in O_Delta(N(S))")
    p.add_argument("--all-models", action="store_true", help="report every admissible model")

    p = add("factor", cmd_factor, "word sending the point class to CLASS (split types)")
    p.add_argument("cls", metavar="CLASS", help="class literal r,x,y,s")
    p.add_argument("--ab", action="store_true", help="print classes in terms of A and B")

    p = add("decompose", cmd_decompose, "split an isometry into a word and a residual block")
    p.add_argument("matrix", metavar="MATRIX16", help="16 comma-separated integers, row-major")

    p = add("verify", cmd_verify, "check a word against a class or matrix")
    p.add_argument("word", metavar="WORD", help='word literal, e.g. "fma(1,1,0,1) shift"')
    p.add_argument("claim", metavar="CLAIM", help="class literal (image of P4) or 16-integer matrix")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        return _fail(args, EXIT_PRECONDITION, "precondition failed", exc.check, str(exc))
    except _BadReference as exc:
        return _fail(args, EXIT_REFERENCE, "bad reference", None, str(exc))
    except DomainError as exc:
        return _fail(args, EXIT_USAGE, "invalid input", None, str(exc))


def _fail(args, code, kind, check, message):
    print(f"error: {kind}: {message}", file=sys.stderr)
    if getattr(args, "json", False):
        obj = {"error": kind, "check": check, "message": message, "exit": code}
        print(json.dumps(obj, separators=(",", ":")))
    return code


if __name__ == "__main__":
    sys.exit(main())
