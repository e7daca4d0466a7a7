"""Plain-text system files.

One polynomial per line.  A polynomial is a signed sequence of terms joined
by ``+``/``-``; a term is a decimal coefficient optionally followed by
whitespace-separated factors ``x<i>^<exponent>``.  ``#`` starts a comment.
Comments of the form ``# key: value`` before the first polynomial are kept
as metadata (``label``, ``expected_count``, ``n``).  ``n`` defaults to the
largest variable index used.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import DimensionError, Fewnomial, FewnomialSystem, Term


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_NUM = r"[0-9]+(?:\.[0-9]*)?(?:[eE][+-]?[0-9]+)?|\.[0-9]+(?:[eE][+-]?[0-9]+)?"
_TOKEN = re.compile(
    rf"""
    (?P<ws>[ \t]+)
  | (?P<sign>[+-])
  | (?P<var>x(?P<idx>[0-9]+)\^(?P<exp>[+-]?(?:{_NUM})))
  | (?P<num>{_NUM})
    """,
    re.VERBOSE,
)
_META = re.compile(r"#\s*([A-Za-z_]+)\s*:\s*(.*?)\s*$")


@dataclass(frozen=True)
class SystemFile:
    system: FewnomialSystem
    metadata: dict = field(default_factory=dict)

    @property
    def label(self) -> str | None:
        return self.metadata.get("label")

    @property
    def expected_count(self) -> int | None:
        v = self.metadata.get("expected_count")
        return None if v is None else int(v)


def _parse_line(text: str, lineno: int):
    """Terms of one polynomial as ``[(coeff, {index: exponent})]``."""
    terms = []
    pos, sign, coeff, factors = 0, None, None, None
    expect_term = True

    def close():
        nonlocal coeff, factors
        if coeff is None:
            return
        terms.append((coeff, factors))
        coeff, factors = None, None

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos + 1
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, col)
        if m.group("ws"):
            pass
        elif m.group("sign"):
            if coeff is None and not expect_term:
                raise ParseError("dangling sign", lineno, col)
            if coeff is not None:
                close()
            elif sign is not None:
                raise ParseError("two signs in a row", lineno, col)
            sign = -1.0 if m.group("sign") == "-" else 1.0
            expect_term = True
        elif m.group("var"):
            if coeff is None:
                raise ParseError("factor without a coefficient", lineno, col)
            i = int(m.group("idx"))
            if i < 1:
                raise ParseError("variable indices start at 1", lineno, col)
            if i in factors:
                raise ParseError(f"x{i} appears twice in one term", lineno, col)
            factors[i] = float(m.group("exp"))
        else:
            if coeff is not None or not expect_term or (sign is None and terms):
                raise ParseError("missing '+' or '-' between terms", lineno, col)
            coeff = (sign or 1.0) * float(m.group("num"))
            factors = {}
            sign = None
            expect_term = False
        pos = m.end()
    if sign is not None:
        raise ParseError("polynomial ends with a sign", lineno, len(text) + 1)
    close()
    if not terms:
        raise ParseError("empty polynomial", lineno, 1)
    return terms


def parse_system(text: str, n: int | None = None) -> SystemFile:
    """Parse a system file; errors carry line and column."""
    meta: dict = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, hash_, comment = raw.partition("#")
        if hash_ and not body.strip():
            mm = _META.match("#" + comment)
            if mm and not rows:
                meta[mm.group(1).lower()] = mm.group(2)
            continue
        if not body.strip():
            continue
        rows.append((lineno, _parse_line(body.rstrip(), lineno)))
    if not rows:
        raise ParseError("no polynomials found", 1, 1)
    seen = max((max(f, default=0) for _, terms in rows for _, f in terms), default=0)
    if n is None and "n" in meta:
        n = int(meta["n"])
    if n is None:
        n = max(seen, 1)
    if seen > n:
        raise DimensionError(f"variable x{seen} used but n = {n}")
    polys = []
    for lineno, terms in rows:
        out = []
        for c, fac in terms:
            e = [0.0] * n
            for i, v in fac.items():
                e[i - 1] = v
            out.append(Term(c, tuple(e)) if c != 0.0 else None)
        polys.append(Fewnomial(n, tuple(t for t in out if t is not None)))
    if "expected_count" in meta:
        try:
            int(meta["expected_count"])
        except ValueError:
            raise ParseError("expected_count must be an integer", 1, 1) from None
    return SystemFile(FewnomialSystem(n, tuple(polys)), meta)


def _fmt(x: float) -> str:
    return repr(float(x))


def format_polynomial(f: Fewnomial) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for k, t in enumerate(f.terms):
        c = t.coeff
        sign = "-" if c < 0 else "+"
        body = _fmt(abs(c))
        facs = [f"x{i + 1}^{_fmt(e)}" for i, e in enumerate(t.exponent) if e != 0.0]
        if facs:
            body += " " + " ".join(facs)
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def format_system(sf: SystemFile | FewnomialSystem) -> str:
    """Inverse of :func:`parse_system` (exact for floats, since ``repr`` round-trips)."""
    if isinstance(sf, FewnomialSystem):
        sf = SystemFile(sf)
    meta = dict(sf.metadata)
    meta["n"] = str(sf.system.n)
    lines = [f"# {k}: {v}" for k, v in meta.items()]
    lines += [format_polynomial(f) for f in sf.system]
    return "\n".join(lines) + "\n"
