"""Command-line front end.

Exit codes: 0 success, 1 computation error (JSON diagnostic on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time

from . import acceptance, kzverify
from .errors import FusionError, IndexLimitExceeded, InvalidArgument, InvalidLevel
from .klcat import KLObject, canonicalize, contragredient, hom_dim_from_proj, loewy, object_factors, tensor
from .klfunctor import functor_object
from .level import Level, all_variants, classify_level, parse_level
from .qgroup import QObject, q_canonicalize, q_hom_dim, q_object_factors, tilt_tensor
from .tlskein import (
    braid_pair,
    cap_braid_scalar,
    cup_cap_pairing,
    expected_cap_double_braid,
    jones_wenzl,
    markov_trace,
    r_compose_i_scalar,
    zigzag_holds,
)


class UsageError(Exception):
    pass


def max_index() -> int:
    return int(os.environ.get("FUSIONKL_MAX_INDEX", "200"))


_TOKEN = re.compile(r"^(?:(\d+)\*?)?(Vco|Wq|Lq|Pq|T|V|L|P)(\d+)$")
_KL_KINDS = {"V": "Verma", "Vco": "CoVerma", "L": "Simple", "P": "Proj"}
_Q_KINDS = {"T": "TiltQ", "Lq": "SimpleQ", "Wq": "WeylQ", "Pq": "ProjQ"}


def _check_index(i: int):
    if i > max_index():
        raise IndexLimitExceeded(f"index {i} exceeds FUSIONKL_MAX_INDEX={max_index()}")


def parse_object(text: str, lv: Level) -> KLObject | QObject:
    """A JSON payload or a '+'-separated sum of tokens like V2, 2P7, T4, Lq3."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad JSON payload: {exc}") from None
        terms = data.get("terms", [])
        quantum = any("lambda" in t for t in terms)
        for t in terms:
            _check_index(int(t.get("lambda", t.get("r", 0))))
        return (QObject if quantum else KLObject).from_json(data, lv)
    kl: dict = {}
    q: dict = {}
    for part in text.split("+"):
        m = _TOKEN.match(part.strip())
        if not m:
            raise UsageError(f"cannot parse label token {part!r}")
        mult, short, idx = int(m.group(1) or 1), m.group(2), int(m.group(3))
        _check_index(idx)
        if short in _KL_KINDS:
            lab = canonicalize(_KL_KINDS[short], idx, lv)
            kl[lab] = kl.get(lab, 0) + mult
        else:
            lab = q_canonicalize(_Q_KINDS[short], idx, lv)
            q[lab] = q.get(lab, 0) + mult
    if kl and q:
        raise UsageError("cannot mix affine and quantum labels in one object")
    return QObject(lv, q) if q else KLObject(lv, kl)


def _single_label(obj):
    labels = obj.labels()
    if len(labels) != 1 or next(iter(obj))[1] != 1:
        raise UsageError("expected a single indecomposable label")
    return labels[0]


def _gr_json(gr: dict[int, int], key: str) -> list[dict]:
    return [{key: i, "mult": m} for i, m in sorted(gr.items())]


def cmd_tensor(args, lv):
    a, b = parse_object(args.a, lv), parse_object(args.b, lv)
    if isinstance(a, QObject) != isinstance(b, QObject):
        raise UsageError("cannot tensor an affine object with a quantum one")
    out = tilt_tensor(a, b) if isinstance(a, QObject) else tensor(a, b)
    return out.to_json(with_level=False)


def cmd_factors(args, lv):
    x = parse_object(args.x, lv)
    if isinstance(x, QObject):
        return {"factors": _gr_json(q_object_factors(x), "lambda")}
    return {"factors": _gr_json(object_factors(x), "r")}


def cmd_loewy(args, lv):
    x = parse_object(args.x, lv)
    if isinstance(x, QObject):
        raise UsageError("Loewy layers are available for affine labels only")
    return {"modules": [{"label": lab.to_json(), "mult": m, "layers": loewy(lab)} for lab, m in x]}


def cmd_hom(args, lv):
    a, b = parse_object(args.a, lv), parse_object(args.b, lv)
    src = _single_label(a)
    if isinstance(a, QObject):
        if not isinstance(b, QObject):
            raise UsageError("hom target must be a quantum object when the source is")
        return {"dim": q_hom_dim(src, b)}
    if isinstance(b, QObject):
        raise UsageError("hom target must be an affine object when the source is")
    return {"dim": hom_dim_from_proj(src, b)}


def cmd_functor(args, lv):
    x = parse_object(args.x, lv)
    if isinstance(x, QObject):
        raise UsageError("the functor takes an affine object")
    return functor_object(x).to_json()


def cmd_classify(args, lv):
    canon, variant = classify_level(lv.p, lv.q)
    return {"canonical": canon.to_json(), **variant.to_json()}


def cmd_dual(args, lv):
    x = parse_object(args.x, lv)
    if isinstance(x, QObject):
        raise UsageError("contragredients are available for affine objects only")
    return contragredient(x).to_json(with_level=False)


def cmd_tl(args, lv):
    if args.tl_verb == "delta":
        return {"delta": str(cup_cap_pairing(lv))}
    if args.tl_verb == "jw":
        jw = jones_wenzl(lv, args.n)
        return {"n": args.n, "element": jw.to_json(), "trace": str(markov_trace(jw))}
    if args.tl_verb == "braidcheck":
        found = sorted(acceptance.braid_survivors(lv))
        expected = sorted(acceptance.oracle_braid_exponents(lv))
        return {
            "candidates": 16 * lv.p**2,
            "passing": [list(x) for x in found],
            "expected": [list(x) for x in expected],
            "match": found == expected,
        }
    out = {"delta": str(cup_cap_pairing(lv)), "zigzag": zigzag_holds(lv), "variants": []}
    for v in all_variants():
        if v.sign != "+":
            continue
        a, b = braid_pair(lv, v)
        out["variants"].append(
            {
                "variant": v.flavor,
                "a": str(a),
                "b": str(b),
                "r_compose_i": str(r_compose_i_scalar(lv, v)),
                "cap_double_braid": str(cap_braid_scalar(lv, a, b, 2)),
                "expected_cap_double_braid": str(expected_cap_double_braid(lv, v)),
            }
        )
    return out


def cmd_kz(args, lv):
    levels = kzverify.KZ_LEVELS if lv is None else [(lv.p, lv.q)]
    if args.kz_verb == "residuals":
        records = kzverify.residual_report(levels)
    else:
        records = kzverify.connection_report(levels)
    return {"records": records, "pass": all(r["pass"] for r in records)}


def cmd_selftest(args, _lv):
    start = time.perf_counter()
    results = acceptance.run_all()
    passed = sum(r.passed for r in results)
    return {
        "passed": passed,
        "failed": len(results) - passed,
        "seconds": round(time.perf_counter() - start, 3),
        "criteria": [r.to_json() for r in results],
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusionkl", description="Fusion rules, tilting modules and skein checks at admissible levels of affine sl2.")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="verb", required=True)

    def options(sp, default=None):
        sp.add_argument("--level", default=default, help="p/q")
        sp.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)

    def verb(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        options(sp)
        return sp

    def subverb(group, name):
        sp = group.add_parser(name)
        options(sp, argparse.SUPPRESS)
        return sp

    sp = verb("tensor", "decompose a tensor product")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = verb("factors", "composition factors")
    sp.add_argument("x")
    sp = verb("loewy", "Loewy layers, head to socle")
    sp.add_argument("x")
    sp = verb("hom", "dimension of Hom(a, b) for projective a")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = verb("functor", "image under the weak KL functor")
    sp.add_argument("x")
    sp = verb("dual", "contragredient")
    sp.add_argument("x")
    verb("classify", "canonical level and braiding variant of -2 + p/q")

    sp = verb("tl", "Temperley-Lieb computations")
    tl = sp.add_subparsers(dest="tl_verb", required=True)
    subverb(tl, "delta")
    subverb(tl, "jw").add_argument("n", type=int)
    subverb(tl, "braidcheck")
    subverb(tl, "scalars")

    sp = verb("kz", "KZ ODE checks (all tabulated levels unless --level is given)")
    kz = sp.add_subparsers(dest="kz_verb", required=True)
    subverb(kz, "residuals")
    subverb(kz, "connection")

    verb("selftest", "run every acceptance criterion")
    return parser


_LEVEL_OPTIONAL = ("kz", "selftest")

_HANDLERS = {
    "tensor": cmd_tensor,
    "factors": cmd_factors,
    "loewy": cmd_loewy,
    "hom": cmd_hom,
    "functor": cmd_functor,
    "dual": cmd_dual,
    "classify": cmd_classify,
    "tl": cmd_tl,
    "kz": cmd_kz,
    "selftest": cmd_selftest,
}


def render_table(data, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        if set(data) >= {"kind", "mult"} and len(data) == 3:
            idx = data.get("r", data.get("lambda"))
            return f"{pad}{data['mult']} x {data['kind']}({idx})"
        lines = []
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(data, list):
        if all(not isinstance(v, (dict, list)) for v in data):
            return pad + " ".join(str(v) for v in data)
        return "\n".join(render_table(v, indent) for v in data)
    return f"{pad}{data}"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb not in _LEVEL_OPTIONAL and args.level is None:
            parser.error(f"{args.verb} needs --level p/q")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lv = None if args.level is None else parse_level(args.level)
    except (InvalidArgument, InvalidLevel) as exc:
        print(json.dumps(exc.to_json()), file=stderr)
        return 2
    try:
        result = _HANDLERS[args.verb](args, lv)
    except UsageError as exc:
        print(json.dumps({"error": "UsageError", "message": str(exc)}), file=stderr)
        return 2
    except FusionError as exc:
        print(json.dumps(exc.to_json()), file=stderr)
        return 1
    if args.format == "table":
        print(render_table(result), file=stdout)
    else:
        print(json.dumps(result), file=stdout)
    if args.verb == "selftest":
        return 0 if result["failed"] == 0 else 1
    if args.verb == "kz":
        return 0 if result["pass"] else 1
    return 0


def main() -> None:
    sys.exit(run())
