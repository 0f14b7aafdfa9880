"""Text form of divisor classes.

Grammar (whitespace insensitive):

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := (rational '*')? atom | rational
    rational := integer ('/' positive-integer)?
    atom     := 'lambda' | 'psi'<k> | 'dirr' | 'd'<i> | 's'<i>
              | 'd{(' i ',[' labels ']),(' j ',[' labels '])}'
              | macro name: mu, theta1, theta12, sigma, mu_prime,
                theta_prime, mu_dprime, theta12_dprime

Bare rationals are only allowed when the value is zero — there is no
constant summand in a divisor class.  Unknown atoms are rejected against
the declared signature at resolution time, not parse time.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .divisors import (
    DivisorClass,
    D_IRR,
    LAM,
    _NAMED,
    d_sep,
    linear_combine,
    psi,
    zero,
)
from .errors import ExprSyntaxError, UnknownAtom
from .moduli import ModuliSignature, sep_index

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>\d+) |
        (?P<name>[A-Za-z_][A-Za-z_0-9]*) |
        (?P<brace>\{[^{}]*\}) |
        (?P<op>[-+*/])
    )""",
    re.VERBOSE,
)


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start():
            if text[pos:].strip() == "":
                break
            raise ExprSyntaxError(
                "unexpected character {!r}".format(text[pos:].lstrip()[0]), pos
            )
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


_NAME_SPLIT = re.compile(r"^([A-Za-z_]+?)(\d+)$")


def _resolve_atom(name: str, brace: str | None, sig: ModuliSignature, pos: int) -> DivisorClass:
    g = sig.genus
    if name == "lambda":
        return DivisorClass(sig, {LAM: 1})
    if name == "dirr":
        return DivisorClass(sig, {D_IRR: 1})
    if name == "d" and brace is not None:
        return DivisorClass(sig, {d_sep(_parse_pair(brace, sig, pos)): 1})
    if brace is not None:
        raise ExprSyntaxError("only 'd' takes a {...} boundary index", pos)
    if name in _NAMED:
        return _NAMED[name](sig)
    m = _NAME_SPLIT.match(name)
    if m:
        stem, k = m.group(1), int(m.group(2))
        if stem == "psi":
            if k not in sig.labels:
                raise UnknownAtom("psi{}: label {} not in T = {}".format(k, k, set(sig.labels)))
            return DivisorClass(sig, {psi(k): 1})
        if stem == "d":
            if sig.n == 0 and 1 <= k <= g // 2:
                return DivisorClass(sig, {d_sep(sep_index(sig, k, (), g - k, ())): 1})
            if sig.labels == (1,) and 1 <= k <= g - 1:
                return DivisorClass(sig, {d_sep(sep_index(sig, k, (), g - k, (1,))): 1})
            if sig.labels == (1, 2) and 1 <= k <= g:
                return DivisorClass(sig, {d_sep(sep_index(sig, k, (), g - k, (1, 2))): 1})
            raise UnknownAtom("d{} is not a boundary index on {}".format(k, sig))
        if stem == "s":
            if sig.labels == (1, 2) and 1 <= k <= g - 1:
                return DivisorClass(sig, {d_sep(sep_index(sig, k, (1,), g - k, (2,))): 1})
            raise UnknownAtom("s{} is not a boundary index on {}".format(k, sig))
    raise UnknownAtom("unknown atom {!r} on {}".format(name, sig))


_PAIR = re.compile(
    r"^\{\s*\(\s*(\d+)\s*,\s*\[([\d\s,]*)\]\s*\)\s*,\s*\(\s*(\d+)\s*,\s*\[([\d\s,]*)\]\s*\)\s*\}$"
)


def _parse_pair(brace: str, sig: ModuliSignature, pos: int):
    m = _PAIR.match(brace)
    if m is None:
        raise ExprSyntaxError("malformed boundary index {!r}".format(brace), pos)

    def labels(src):
        return tuple(int(x) for x in src.split(",")) if src.strip() else ()

    return sep_index(sig, int(m.group(1)), labels(m.group(2)), int(m.group(3)), labels(m.group(4)))


def parse_divisor(text: str, sig: ModuliSignature) -> DivisorClass:
    """Parse a divisor expression against a signature; exact round trip
    with divisors.render."""
    toks = _tokens(text)
    if not toks:
        raise ExprSyntaxError("empty expression", 0)
    i = 0
    terms = []

    def peek(k=0):
        return toks[i + k] if i + k < len(toks) else (None, None, len(text))

    while i < len(toks):
        sign = Fraction(1)
        kind, val, pos = peek()
        if kind == "op" and val in "+-":
            sign = Fraction(-1) if val == "-" else Fraction(1)
            i += 1
            kind, val, pos = peek()
        elif terms:
            raise ExprSyntaxError("expected '+' or '-'", pos)
        coef = Fraction(1)
        if kind == "num":
            coef = Fraction(int(val))
            i += 1
            kind, val, pos = peek()
            if kind == "op" and val == "/":
                i += 1
                kind, val, pos = peek()
                if kind != "num":
                    raise ExprSyntaxError("expected denominator", pos)
                if int(val) == 0:
                    raise ExprSyntaxError("zero denominator", pos)
                coef /= int(val)
                i += 1
                kind, val, pos = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, pos = peek()
            elif kind == "name":
                raise ExprSyntaxError("expected '*' between coefficient and atom", pos)
            else:
                # bare rational term: only the zero class has one
                if coef != 0:
                    raise ExprSyntaxError("constant terms are not divisor classes", pos)
                terms.append((sign * coef, zero(sig)))
                continue
        if kind != "name":
            raise ExprSyntaxError("expected an atom name", pos)
        name = val
        i += 1
        brace = None
        kind2, val2, _ = peek()
        if kind2 == "brace":
            brace = val2
            i += 1
        terms.append((sign * coef, _resolve_atom(name, brace, sig, pos)))
    return linear_combine(terms) if terms else zero(sig)
