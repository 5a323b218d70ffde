"""Text format for monomial ideals.

::

    vars: x1 x2 x3 x4        # or: vars: x1..x4
    x1*x2^3, x3*x4
    x2x3                     # '*' may be omitted between variables

Generators are separated by commas or newlines. ``#`` starts a comment.
A body with no generators gives the zero ideal and a warning; ``1`` is
the unit monomial.
"""

from __future__ import annotations

import re
import warnings

from .core import MonomialIdeal, Ring

_RANGE = re.compile(r"^([A-Za-z_][A-Za-z_]*)(\d+)\.\.([A-Za-z_][A-Za-z_]*)?(\d+)$")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_EXP = re.compile(r"\^(-?\d+)")


class IdealParseError(ValueError):
    pass


def _parse_header(line):
    key, _, rest = line.partition(":")
    if key.strip().lower() != "vars" or not _:
        raise IdealParseError(f"expected a 'vars:' header, got {line!r}")
    tokens = rest.replace(",", " ").split()
    names = []
    for tok in tokens:
        m = _RANGE.match(tok)
        if m:
            prefix, lo, prefix2, hi = m.groups()
            if prefix2 not in (None, prefix):
                raise IdealParseError(f"mismatched range {tok!r}")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise IdealParseError(f"empty range {tok!r}")
            names.extend(f"{prefix}{i}" for i in range(lo, hi + 1))
        elif _IDENT.fullmatch(tok):
            names.append(tok)
        else:
            raise IdealParseError(f"bad variable name {tok!r}")
    try:
        return Ring(tuple(names))
    except ValueError as exc:
        raise IdealParseError(str(exc)) from None


def parse_monomial(text: str, ring: Ring):
    """Parse ``x1*x2^3`` (or ``x1x2^3``) into an exponent tuple."""
    s = "".join(text.split())
    if s == "1":
        return ring.one()
    if not s:
        raise IdealParseError("empty generator")
    names = sorted(ring.names, key=len, reverse=True)
    exps = [0] * ring.n
    pos = 0
    expect_factor = True
    while pos < len(s):
        if s[pos] == "*":
            if expect_factor:
                raise IdealParseError(f"malformed token in {text!r}")
            pos += 1
            expect_factor = True
            continue
        name = next((v for v in names if s.startswith(v, pos)), None)
        if name is None:
            ident = _IDENT.match(s, pos)
            if ident:
                raise IdealParseError(f"undeclared variable {ident.group()!r} in {text!r}")
            raise IdealParseError(f"malformed token {s[pos:]!r} in {text!r}")
        pos += len(name)
        e = 1
        m = _EXP.match(s, pos)
        if m:
            e = int(m.group(1))
            if e < 0:
                raise IdealParseError(f"negative exponent in {text!r}")
            pos = m.end()
        elif s.startswith("^", pos):
            raise IdealParseError(f"malformed exponent in {text!r}")
        exps[ring.index(name)] += e
        expect_factor = False
    if expect_factor:
        raise IdealParseError(f"dangling '*' in {text!r}")
    return tuple(exps)


def parse_ideal(text: str) -> MonomialIdeal:
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise IdealParseError("missing 'vars:' header")
    ring = _parse_header(lines[0])
    pieces = [p for ln in lines[1:] for p in ln.split(",")]
    gens = [parse_monomial(p, ring) for p in pieces if p.strip()]
    if not gens:
        warnings.warn("ideal file has no generators; returning the zero ideal", stacklevel=2)
    return MonomialIdeal(ring, gens)


def read_ideal(path) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def format_ideal(I: MonomialIdeal) -> str:
    """Inverse of :func:`parse_ideal` on canonical ideals (one generator per line)."""
    lines = ["vars: " + " ".join(I.ring.names)]
    lines.extend(I.ring.format_monomial(g) for g in I.gens)
    return "\n".join(lines) + "\n"


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {
        "vars": list(I.ring.names),
        "generators": [I.ring.format_monomial(g) for g in I.gens],
    }
