"""Command line front end: straighten, schur, verify, ranks, homology.

Exit codes: 0 success, 1 failed verification, 2 unreadable or unparseable
input, 3 structurally invalid input, 4 internal consistency failure (an
output complex whose differentials do not square to zero).
"""

import argparse
import json
import sys
from fractions import Fraction

from .complexes import (complex_from_dict, complex_to_dict, load_complex,
                        parity_split, homology_ranks_at_point, validate_complex)
from .ring import mat_generic_rank, scalar_rank
from .schur import SchurBasis, schur_complex
from .tableaux import Partition, Tableau, straighten, tableau_sort_key

OK, VERIFY_FAILED, PARSE_ERROR, INVALID_INPUT, INTERNAL_ERROR = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(PARSE_ERROR, "cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise CliError(PARSE_ERROR, "bad JSON in %s: %s" % (path, exc))


def _load_complex(path):
    data = _load_json(path)
    try:
        return complex_from_dict(data)
    except (KeyError, TypeError) as exc:
        raise CliError(PARSE_ERROR, "bad complex file %s: %s" % (path, exc))
    except ValueError as exc:
        raise CliError(INVALID_INPUT, "invalid complex in %s: %s" % (path, exc))


def _load_tableau(path):
    data = _load_json(path)
    try:
        shape = Partition(data["shape"])
        return Tableau.from_entries(shape, data["entries"])
    except (KeyError, TypeError) as exc:
        raise CliError(PARSE_ERROR, "bad tableau file %s: %s" % (path, exc))
    except ValueError as exc:
        raise CliError(INVALID_INPUT, "invalid tableau in %s: %s" % (path, exc))


def _emit(data, out):
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_point(text, ring):
    coords = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            if "/" in piece:
                num, den = piece.split("/")
                coords.append(Fraction(int(num), int(den)))
            else:
                coords.append(int(piece))
        except (ValueError, ZeroDivisionError):
            raise CliError(PARSE_ERROR, "bad coordinate %r" % piece)
    if len(coords) != ring.nvars:
        raise CliError(INVALID_INPUT, "point needs %d coordinates" % ring.nvars)
    return coords


def cmd_straighten(args):
    t = _load_tableau(args.tableau)
    result = straighten(t)
    items = sorted(result.items(), key=lambda kv: tableau_sort_key(kv[0]))
    payload = [{"coefficient": c, "tableau": t.to_entries()} for t, c in items]
    _emit(payload, args.out)
    return OK


def cmd_schur(args):
    f = _load_complex(args.complex)
    problems = validate_complex(f)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return INVALID_INPUT
    try:
        shape = Partition([int(p) for p in args.shape.split(",")])
    except ValueError as exc:
        raise CliError(PARSE_ERROR, "bad shape %r: %s" % (args.shape, exc))
    if args.conjugate:
        shape = shape.conjugate()
    s = schur_complex(shape, f)
    if validate_complex(s):
        print("internal error: output differentials do not compose to zero",
              file=sys.stderr)
        return INTERNAL_ERROR
    basis = SchurBasis(shape, f)
    payload = complex_to_dict(s)
    payload["shape"] = list(shape.parts)
    payload["basis"] = [
        {"degree": k, "tableaux": [t.to_entries() for t in basis.at(k)]}
        for k in basis.degrees()
    ]
    _emit(payload, args.out)
    print(" <- ".join(str(r) for r in s.ranks))
    return OK


def cmd_verify(args):
    f = _load_complex(args.complex)
    problems = validate_complex(f)
    if problems:
        for p in problems:
            print(p)
        return VERIFY_FAILED
    print("ok")
    return OK


def cmd_ranks(args):
    f = _load_complex(args.complex)
    print("degrees %d..%d, ranks %s" % (
        f.min_degree, f.max_degree, " ".join(str(r) for r in f.ranks)))
    d_rank = {}
    for i, d in enumerate(f.differentials):
        k = f.min_degree + i + 1
        r = mat_generic_rank(d, trials=args.trials, seed=args.seed)
        d_rank[k] = r
        print("rank d_%d = %d" % (k, r))
    for k in f.degrees():
        h = f.rank_at(k) - d_rank.get(k, 0) - d_rank.get(k + 1, 0)
        print("h_%d = %d" % (k, h))
    return OK


def cmd_homology(args):
    f = _load_complex(args.complex)
    point = _parse_point(args.point, f.ring)
    try:
        ranks = homology_ranks_at_point(f, point)
    except ValueError as exc:
        raise CliError(INVALID_INPUT, str(exc))
    for k, h in zip(f.degrees(), ranks):
        print("h_%d = %d" % (k, h))
    return OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schurcx",
        description="Schur complexes of free complexes over polynomial rings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("straighten", help="straighten a tableau file")
    p.add_argument("--tableau", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("schur", help="build the Schur complex of a complex file")
    p.add_argument("--complex", required=True)
    p.add_argument("--shape", required=True,
                   help="comma separated row lengths, e.g. 3,3,2")
    p.add_argument("--conjugate", action="store_true",
                   help="transpose the shape first")
    p.add_argument("--out")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("verify", help="check sizes and d.d == 0")
    p.add_argument("--complex", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ranks", help="generic differential and homology ranks")
    p.add_argument("--complex", required=True)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_ranks)

    p = sub.add_parser("homology", help="homology ranks at a point")
    p.add_argument("--complex", required=True)
    p.add_argument("--point", required=True,
                   help="comma separated coordinates, one per variable")
    p.set_defaults(func=cmd_homology)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
