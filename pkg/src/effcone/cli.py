"""``effcone`` command line.

Exit codes: 0 success, 1 verification failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import coneio
from .cone import Cone, extremal_rays, member, normalize_primitive
from .errors import ConeFormatError, EffconeError
from .moduli.generators import generator_tables
from .moduli.lattice import (
    BASES, M06_CURVE, M06_DIVISOR, boundary_class, boundary_labels, fixed_class, fixed_labels,
)
from .moduli.surfaces import (
    fsigma_curve_generators, fsigma_semiample_generators, m05_effective_generators,
    m05_nef_generators,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _labelled(pairs):
    labels, rows = zip(*pairs) if pairs else ((), ())
    return list(labels), [tuple(r) for r in rows]


def export_set(name: str) -> tuple[str, list[str], list[tuple]]:
    """(basis tag, labels, rows) for a named class set."""
    if name == "gamma":
        pairs = [(str(l), boundary_class(l)) for l in boundary_labels()]
        pairs += [(str(f), fixed_class(f)) for f in fixed_labels()]
        return M06_DIVISOR.tag, *_labelled(pairs)
    tabs = generator_tables()
    families = {
        "sigma": ("B", "A", "A_forget", "C", "C_blowdown"),
        "A": ("A", "A_forget"),
        "B": ("B",),
        "AB": ("A", "A_forget", "B"),
    }
    if name in families:
        pairs = [(k, v) for fam in families[name] for k, v in tabs[fam].entries.items()]
        return M06_CURVE.tag, *_labelled(pairs)
    surfaces = {
        "m05-sigma": ("M05/surface", m05_effective_generators),
        "m05-xi": ("M05/surface", m05_nef_generators),
        "fsigma-curves": ("Fsigma/surface", fsigma_curve_generators),
        "fsigma-xi": ("Fsigma/surface", fsigma_semiample_generators),
    }
    tag, fn = surfaces[name]
    return tag, [], [tuple(v) for v in fn()]


EXPORT_SETS = ("gamma", "sigma", "A", "B", "AB", "m05-sigma", "m05-xi", "fsigma-curves", "fsigma-xi")


def _basis_header(tag: str) -> list[str]:
    return [f"basis {tag}: " + " ".join(BASES[tag].labels)]


def _parse_vector(text: str) -> tuple:
    out = []
    for tok in text.replace(",", " ").split():
        try:
            out.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"not an integer or rational: {tok!r}") from None
    if not out:
        raise UsageError("empty vector")
    return tuple(int(x) if x.denominator == 1 else x for x in out)


def _fmt_vec(v) -> str:
    return " ".join(str(x) for x in v)


def orbits_tsv(rows) -> str:
    lines = ["index\tdegree\tsize\trepresentative"]
    for r in rows:
        lines.append(f"{r.index}\t{r.degree}\t{r.size}\t{_fmt_vec(r.representative)}")
    lines.append(f"total\t\t{sum(r.size for r in rows)}\t")
    return "\n".join(lines) + "\n"


def _cmd_dualize(args, out):
    cf = coneio.read(args.inp)
    dual = coneio.dual_of_file(cf)
    text = coneio.format_v(dual, header=[f"dual of {Path(args.inp).name}"])
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def _cmd_extremal(args, out):
    cf = coneio.read(args.inp)
    labels = dict(zip(cf.rows, cf.labels)) if cf.labels else {}
    if cf.kind == "V":
        c = extremal_rays(Cone.from_rays(cf.rows, cf.dim), method="lp")
    else:
        c = cf.to_cone()
    names = [labels.get(r, "") for r in c.rays] if labels else None
    out.write(coneio.format_v(c, labels=names, header=[f"extremal rays of {Path(args.inp).name}"]))
    return EXIT_OK


def _cmd_member(args, out):
    cf = coneio.read(args.inp)
    v = _parse_vector(args.vector)
    if len(v) != cf.dim:
        raise UsageError(f"vector has {len(v)} entries, cone has dimension {cf.dim}")
    c = cf.to_cone() if cf.kind == "H" else Cone.from_rays(cf.rows, cf.dim)
    cert = member(v, c)
    names = {}
    for row, lab in zip(cf.rows, cf.labels or [""] * len(cf.rows)):
        try:
            names.setdefault(tuple(normalize_primitive(row)), lab)
        except ValueError:
            pass
    out.write(f"verdict\t{cert.verdict}\n")
    if cert.is_member:
        for g, coeff in sorted(cert.coefficients.items()):
            name = names.get(tuple(g)) or _fmt_vec(g)
            out.write(f"coefficient\t{coeff}\t{name}\n")
    else:
        out.write(f"separator\t{_fmt_vec(cert.separator)}\n")
    return EXIT_OK


def _cmd_export(args, out):
    tag, labels, rows = export_set(args.set)
    text = coneio.format_cone("V", len(rows[0]), rows, labels,
                              header=[f"class set {args.set}"] + _basis_header(tag))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def _cmd_orbits(args, out):
    from .verifier import compute_coextremal_orbits
    out.write(orbits_tsv(compute_coextremal_orbits()))
    return EXIT_OK


def _cmd_verify(args, out):
    from .verifier import CHECK_IDS, full_report
    if args.check is not None and args.check not in CHECK_IDS:
        raise UsageError(f"unknown check {args.check!r}; choose from {', '.join(CHECK_IDS)}")
    report = full_report(checks=None if args.check is None else [args.check])
    out.write(report.to_table(timings=args.timings))
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="effcone", description="Exact polyhedral cones and the effective cone of M_{0,6}.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    d = sub.add_parser("dualize", help="write the dual cone of a cone file")
    d.add_argument("--in", dest="inp", required=True)
    d.add_argument("--out")
    d.set_defaults(fn=_cmd_dualize)

    e = sub.add_parser("extremal", help="print the extremal rays of a cone file")
    e.add_argument("--in", dest="inp", required=True)
    e.set_defaults(fn=_cmd_extremal)

    m = sub.add_parser("member", help="decide membership and print a certificate")
    m.add_argument("--vector", required=True)
    m.add_argument("--in", dest="inp", required=True)
    m.set_defaults(fn=_cmd_member)

    x = sub.add_parser("export", help="write an embedded class set as a cone file")
    x.add_argument("--set", required=True, choices=EXPORT_SETS)
    x.add_argument("--out")
    x.set_defaults(fn=_cmd_export)

    o = sub.add_parser("orbits", help="print the coextremal orbit table as TSV")
    o.add_argument("--table5", action="store_true", required=True)
    o.set_defaults(fn=_cmd_orbits)

    v = sub.add_parser("verify", help="run the verification pipeline")
    v.add_argument("--check")
    v.add_argument("--json")
    v.add_argument("--timings", action="store_true", help="append elapsed time per check")
    v.set_defaults(fn=_cmd_verify)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except UsageError as exc:
        err.write(f"effcone: {exc}\n")
        return EXIT_USAGE
    except ConeFormatError as exc:
        err.write(f"effcone: malformed cone file: {exc}\n")
        return EXIT_USAGE
    except (OSError, EffconeError, ValueError) as exc:
        err.write(f"effcone: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
