"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap exceeded.
Every result comes straight from a library call; this module only parses
arguments and formats output.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from ._config import CapExceeded
from .classcount import EXCEPTIONAL_TABLE, GroupSpec, class_number, k_gl, k_gu

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# --- family names --------------------------------------------------------------

_SIMPLE = {
    "gl": "GL", "sl": "SL", "pgl": "PGL", "psl": "PSL",
    "gu": "GU", "su": "SU", "pgu": "PGU", "psu": "PSU",
    "sp": "Sp", "between": "BetweenSLGL", "betweenslgl": "BetweenSLGL",
    "sym": "SymmetricGroup", "symmetric": "SymmetricGroup",
    "alt": "AlternatingGroup", "alternating": "AlternatingGroup",
    "o-plus": "OPlus", "o-minus": "OMinus", "so-plus": "SOPlus", "so-minus": "SOMinus",
    "omega-plus": "OmegaPlus", "omega-minus": "OmegaMinus",
    "o-odd": "OOdd", "so-odd": "SOOdd", "omega-odd": "OmegaOdd",
}

_ORTHO = {"o": ("OPlus", "OMinus", "OOdd"), "so": ("SOPlus", "SOMinus", "SOOdd"),
          "omega": ("OmegaPlus", "OmegaMinus", "OmegaOdd")}


def resolve_family(name, n, kind=None):
    """Map a command-line family name to a classcount family."""
    key = name.strip().lower()
    if key in _SIMPLE:
        return _SIMPLE[key]
    if key in _ORTHO:
        plus, minus, odd = _ORTHO[key]
        if n % 2:
            return odd
        if kind not in ("+", "-"):
            raise UsageError(f"--type + or - is needed for even-dimensional {name}")
        return plus if kind == "+" else minus
    if key.upper().replace("^", "") in EXCEPTIONAL_TABLE:
        return "Exceptional"
    raise UsageError(f"unknown family {name!r}")


# --- output --------------------------------------------------------------------

def _jsonable(x):
    # big integers become decimal strings; lists of small ints (polynomials) stay numeric
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):
        return _jsonable(x.item())
    return str(x)


class Raw(int):
    """An int that should be emitted as a JSON number (small counts and coefficients)."""


def _encode(x):
    if isinstance(x, Raw):
        return int(x)
    if isinstance(x, dict):
        return {k: _encode(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_encode(v) for v in x]
    return x


def _prepare(x):
    # Raw ints survive as numbers, everything else goes through _jsonable
    if isinstance(x, Raw):
        return x
    if isinstance(x, dict):
        return {str(k): _prepare(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_prepare(v) for v in x]
    return _jsonable(x)


def make_record(command, params, result, status):
    return {"command": command, "params": _encode(_prepare(params)),
            "result": _encode(_prepare(result)), "status": status}


def render(record, fmt, report=None):
    if fmt == "json":
        return json.dumps(record, sort_keys=True)
    if report is not None:
        if fmt == "table":
            return report.to_table()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "params", "status"])
        for e in report.sorted_entries():
            w.writerow([e["claim"], json.dumps(_jsonable(e["params"]), sort_keys=True), e["status"]])
        return buf.getvalue().rstrip("\n")
    result = record["result"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = sorted(result)
        w.writerow(keys)
        w.writerow([json.dumps(result[k]) if isinstance(result[k], (list, dict)) else result[k] for k in keys])
        return buf.getvalue().rstrip("\n")
    width = max((len(k) for k in result), default=0)
    return "\n".join(f"{k:<{width}}  {result[k]}" for k in sorted(result))


# --- commands ------------------------------------------------------------------

def cmd_kcount(args):
    if args.symbolic:
        fam = args.family.lower()
        if fam not in ("gl", "gu"):
            raise UsageError("--symbolic is available for gl and gu only")
        coeffs = (k_gl if fam == "gl" else k_gu)(args.n)
        return {"k_poly": [Raw(c) for c in coeffs]}, EXIT_OK
    if args.q is None and args.family.lower() not in ("sym", "symmetric", "alt", "alternating"):
        raise UsageError("--q is required")
    family = resolve_family(args.family, args.n, args.type)
    extra = None
    if family == "BetweenSLGL":
        if args.j is None:
            raise UsageError("--j is required for the between family")
        extra = args.j
    elif family == "Exceptional":
        extra = args.family.upper().replace("^", "")
    value, label = class_number(GroupSpec(family, args.n, args.q, extra))
    result = {"k": value}
    if label != "exact":
        result["label"] = label
    return result, EXIT_OK


_BOUND_FAMILY = {"Sp": "Sp", "OPlus": "OPlus", "OMinus": "OMinus", "SOPlus": "SOPlus",
                 "SOMinus": "SOMinus", "OOdd": "OOdd", "GL": "GL", "GU": "GU"}


def parse_class_spec(text):
    """``"1:plain:2,1;2:plain:1"`` -> ClassType; tags may be shortened to p, s, c."""
    from .centralizer import CONJUGATE_PAIR, PLAIN, SELF_CONJUGATE, ClassType

    short = {"p": PLAIN, "s": SELF_CONJUGATE, "c": CONJUGATE_PAIR,
             "plain": PLAIN, "selfconjugate": SELF_CONJUGATE, "conjugatepair": CONJUGATE_PAIR}
    entries = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        try:
            deg, tag, parts = chunk.split(":")
            entries.append((int(deg), short[tag.strip().lower()], tuple(int(x) for x in parts.split(","))))
        except (ValueError, KeyError) as exc:
            raise UsageError(f"bad class spec chunk {chunk!r}; expected degree:tag:parts") from exc
    return ClassType(tuple(entries))


def cmd_centralizer(args):
    from . import centralizer as cz

    family = resolve_family(args.family, args.n, args.type)
    if args.cls is not None:
        if family not in ("GL", "GU"):
            raise UsageError("--class is supported for gl and gu")
        ct = parse_class_spec(args.cls)
        if ct.dimension != args.n:
            raise UsageError(f"class spec has dimension {ct.dimension}, expected {args.n}")
        return {"centralizer": cz.class_type_centralizer(family, ct, args.q)}, EXIT_OK
    exact = cz.min_centralizer_exact(family, args.n, args.q)
    result = {"min_centralizer": exact}
    if family in _BOUND_FAMILY:
        bound = cz.min_centralizer_lower_bound(_BOUND_FAMILY[family], args.n, args.q)
        status = cz.compare_to_bound(exact, bound)
        result.update({"bound": round(bound.value, 4), "bound_tag": bound.formulaTag, "comparison": status})
        return result, EXIT_FAIL if status == "fail" else EXIT_OK
    return result, EXIT_OK


def _line_stabilizer(G, i):
    # matrices act on column vectors, so g fixes <e_i> iff column i is zero off row i
    from .oracle import subgroup

    d = G.elements.shape[1]
    if not 0 <= i < d:
        raise UsageError(f"--index must lie in 0..{d - 1}")
    col = G.elements[:, :, i]
    mask = (col[:, [r for r in range(d) if r != i]] == 0).all(axis=1)
    return subgroup(G, mask, f"stab<e{i}>")


def cmd_oracle(args):
    from . import oracle

    family = resolve_family(args.group, args.dim, args.type)
    extra = args.j if family == "BetweenSLGL" else None
    G = oracle.build_group(family, args.dim, args.q, extra)
    if args.report == "order":
        return {"order": G.order}, EXIT_OK
    cd = oracle.conjugacy_data(G)
    if args.report == "classes":
        return {"k": Raw(cd.k), "semisimple": Raw(int(cd.p_prime.sum()))}, EXIT_OK
    if args.report == "unipotent":
        return {"count": int(cd.sizes[cd.p_power].sum())}, EXIT_OK
    H = _line_stabilizer(G, args.index or 0)
    degree = G.order // H.order
    prop = oracle.derangement_proportion(G, H)
    ok = degree == 1 or prop >= Fraction(1, degree)
    return {"degree": degree, "proportion": prop, "lower_bound": Fraction(1, degree)}, EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args):
    from .bounds import run_suite

    report = run_suite(args.suite, args.max_n, args.max_q)
    return report, EXIT_FAIL if report.worst == "fail" else EXIT_OK


# --- parser --------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _sign(text):
    if text in ("+", "plus"):
        return "+"
    if text in ("-", "minus"):
        return "-"
    raise argparse.ArgumentTypeError("type must be + or -")


def build_parser():
    p = _Parser(prog="chevcount", description="Class numbers of finite classical groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")

    k = sub.add_parser("kcount", help="class number of one group")
    k.add_argument("--family", required=True)
    k.add_argument("--n", type=int, required=True, help="matrix size, module dimension, or degree")
    k.add_argument("--q", type=int)
    k.add_argument("--type", type=_sign)
    k.add_argument("--j", type=int)
    k.add_argument("--symbolic", action="store_true")
    common(k)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=("identities", "bounds", "oracle", "limits", "polynomiality", "all"),
                   required=True)
    v.add_argument("--max-n", type=int)
    v.add_argument("--max-q", type=int)
    common(v)

    c = sub.add_parser("centralizer", help="centralizer orders")
    c.add_argument("--family", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--type", type=_sign)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--min", action="store_true")
    g.add_argument("--class", dest="cls")
    common(c)

    o = sub.add_parser("oracle", help="brute-force enumeration of a small group")
    o.add_argument("--group", required=True)
    o.add_argument("--dim", type=int, required=True)
    o.add_argument("--q", type=int)
    o.add_argument("--type", type=_sign)
    o.add_argument("--j", type=int)
    o.add_argument("--report", choices=("order", "classes", "unipotent", "derangement"), required=True)
    o.add_argument("--index", type=int, default=0, help="basis vector whose line is stabilized")
    common(o)
    return p


_COMMANDS = {"kcount": cmd_kcount, "verify": cmd_verify, "centralizer": cmd_centralizer, "oracle": cmd_oracle}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    params = {k: (Raw(v) if type(v) is int else v) for k, v in vars(args).items()
              if k not in ("command", "format") and v is not None}
    report = None
    try:
        result, code = _COMMANDS[args.command](args)
    except CapExceeded as exc:
        print(f"chevcount: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"chevcount: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "verify":
        report, result = result, result.to_dict()
    record = make_record(args.command, params, result, code)
    print(render(record, args.format, report))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
