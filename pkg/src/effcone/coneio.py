"""Line-oriented text format for cones.

::

    # optional comments anywhere
    CONE V            # or CONE H
    dim 3
    rows 2
    1 0 0             # a trailing comment on a row is kept as its label
    0 1/2 1
    END

``V`` rows are generators, ``H`` rows are inequality normals ``f . x >= 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .cone import Cone, double_description, dual_cone, extremal_rays
from .errors import ConeFormatError


@dataclass(frozen=True)
class ConeFile:
    kind: str                 # "V" or "H"
    dim: int
    rows: tuple
    labels: tuple = ()

    def to_cone(self) -> Cone:
        if self.kind == "V":
            return Cone.from_rays(self.rows, self.dim)
        rays, lin = double_description(self.rows, self.dim)
        return Cone(self.dim, tuple(rays), tuple(lin), tuple(sorted(set(self.rows))))


def _parse_number(tok: str, lineno: int):
    try:
        if "/" in tok:
            num, den = tok.split("/")
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ConeFormatError(f"not an integer or rational: {tok!r}", lineno) from None
    return int(value) if value.denominator == 1 else value


def parse(text: str) -> ConeFile:
    # (lineno, content, comment)
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        body = body.strip()
        if body:
            lines.append((lineno, body, comment.strip()))
    if not lines:
        raise ConeFormatError("empty cone file", 1)
    it = iter(lines)

    def expect(prefix: str):
        try:
            lineno, body, _ = next(it)
        except StopIteration:
            raise ConeFormatError(f"unexpected end of file, expected {prefix!r}",
                                  lines[-1][0]) from None
        parts = body.split()
        if parts[0] != prefix or len(parts) != 2:
            raise ConeFormatError(f"expected '{prefix} <value>', got {body!r}", lineno)
        return lineno, parts[1]

    lineno, kind = expect("CONE")
    if kind not in ("V", "H"):
        raise ConeFormatError(f"cone kind must be V or H, got {kind!r}", lineno)
    lineno, d = expect("dim")
    if not d.isdigit() or int(d) < 1:
        raise ConeFormatError(f"dim must be a positive integer, got {d!r}", lineno)
    dim = int(d)
    lineno, k = expect("rows")
    if not k.isdigit():
        raise ConeFormatError(f"rows must be a nonnegative integer, got {k!r}", lineno)
    rows, labels = [], []
    for _ in range(int(k)):
        try:
            lineno, body, comment = next(it)
        except StopIteration:
            raise ConeFormatError(f"expected {k} rows", lines[-1][0]) from None
        toks = body.split()
        if len(toks) != dim:
            raise ConeFormatError(f"row has {len(toks)} entries, expected {dim}", lineno)
        rows.append(tuple(_parse_number(t, lineno) for t in toks))
        labels.append(comment)
    try:
        lineno, body, _ = next(it)
    except StopIteration:
        raise ConeFormatError("missing END", lines[-1][0]) from None
    if body != "END":
        raise ConeFormatError(f"expected END, got {body!r}", lineno)
    extra = next(it, None)
    if extra is not None:
        raise ConeFormatError(f"trailing content after END: {extra[1]!r}", extra[0])
    return ConeFile(kind, dim, tuple(rows), tuple(labels) if any(labels) else ())


def read(path) -> ConeFile:
    return parse(Path(path).read_text(encoding="utf-8"))


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_cone(kind: str, dim: int, rows: Iterable, labels: Iterable[str] | None = None,
                header: Iterable[str] = ()) -> str:
    rows = [tuple(r) for r in rows]
    labels = list(labels) if labels is not None else []
    out = [f"# {h}" for h in header]
    out += [f"CONE {kind}", f"dim {dim}", f"rows {len(rows)}"]
    for i, r in enumerate(rows):
        line = " ".join(_fmt(x) for x in r)
        if i < len(labels) and labels[i]:
            line += f"  # {labels[i]}"
        out.append(line)
    out.append("END")
    return "\n".join(out) + "\n"


def format_v(cone: Cone, labels=None, header=()) -> str:
    """V-representation text; lineality vectors are written with both signs."""
    return format_cone("V", cone.dim, cone.generators(), labels, header)


def dual_of_file(cf: ConeFile) -> Cone:
    """Dual of the cone a file describes, as an extremal V-representation."""
    if cf.kind == "V":
        return dual_cone(Cone.from_rays(cf.rows, cf.dim))
    return extremal_rays(Cone.from_rays(cf.rows, cf.dim), method="lp")
