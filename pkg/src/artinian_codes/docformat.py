"""The plain-text code document: a ``[ring]`` section and a ``[code]`` section.

    [ring]
    kind = algebra          # zmod | algebra | idealize
    q = 2
    vars = x, y
    ideal = x^2, x*y, y^2
    [code]
    n = 3
    row = x, x, 0
    row = 0, x, x

A statement starts at ``name =`` and runs to the next statement or section
header, so a whole document may also sit on one line.  Entries are sums of
terms ``c``, ``m`` or ``c*m`` with ``m`` a product of ``var^k`` factors; for a
non-prime field the symbol ``u`` (the field generator) may appear as a factor.
For ``idealize`` rings the keys are ``base.q``, ``base.vars`` and so on, and
rows are written over the base algebra (their span is taken in the
idealization).
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, RingConstructionError
from .fields import FieldDescriptor, prime_power
from .modules import span_closure
from .rings import (
    ChainRing,
    IdealizationDesc,
    IntegerChainDesc,
    MonomialAlgebraDesc,
    construct_ring,
    embed_in_idealization,
    monomial_name,
)

FIELD_SYMBOL = "u"

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<section>\[[ \t]*[A-Za-z_]+[ \t]*\])"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)?)"
    r"|(?P<int>[0-9]+)|(?P<op>[=,+*^])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out, line, start, pos = [], 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    return out


@dataclass(frozen=True)
class Statement:
    section: str
    key: Token
    value: tuple


def statements(tokens: list[Token]) -> list[Statement]:
    out, section, i = [], None, 0
    while i < len(tokens):
        t = tokens[i]
        if t.kind == "section":
            section = t.text.strip("[] \t")
            if section not in ("ring", "code"):
                raise ParseError(f"unknown section [{section}]", t.line, t.col)
            i += 1
            continue
        if t.kind != "name" or i + 1 >= len(tokens) or tokens[i + 1].text != "=":
            raise ParseError(f"expected 'key =' but found {t.text!r}", t.line, t.col)
        if section is None:
            raise ParseError("statement outside of a section", t.line, t.col)
        j = i + 2
        while j < len(tokens) and tokens[j].kind != "section" and not (
            tokens[j].kind == "name" and j + 1 < len(tokens) and tokens[j + 1].text == "="
        ):
            j += 1
        value = tuple(tokens[i + 2 : j])
        if not value:
            raise ParseError(f"missing value for {t.text!r}", t.line, t.col + len(t.text))
        out.append(Statement(section, t, value))
        i = j
    return out


# ------------------------------------------------------------- value parsers


def _err(tok: Token, reason: str):
    return ParseError(reason, tok.line, tok.col)


def _single(st: Statement, kind: str) -> Token:
    if len(st.value) != 1 or st.value[0].kind != kind:
        raise _err(st.value[0], f"{st.key.text} expects a single {'integer' if kind == 'int' else 'name'}")
    return st.value[0]


def _int(st: Statement, minimum: int = 0) -> int:
    tok = _single(st, "int")
    v = int(tok.text)
    if v < minimum:
        raise _err(tok, f"{st.key.text} must be at least {minimum}")
    return v


def _split_commas(st: Statement) -> list[tuple]:
    items, cur = [], []
    for t in st.value:
        if t.text == ",":
            if not cur:
                raise _err(t, "empty list item")
            items.append(tuple(cur))
            cur = []
        else:
            cur.append(t)
    if not cur:
        raise _err(st.value[-1], "empty list item")
    items.append(tuple(cur))
    return items


def _terms(tokens: tuple) -> list[tuple]:
    """Split a token run on '+' into terms, each a list of '*'-separated factors."""
    terms, cur = [], []
    for t in tokens:
        if t.text == "+":
            if not cur:
                raise _err(t, "dangling '+'")
            terms.append(cur)
            cur = []
        else:
            cur.append(t)
    if not cur:
        raise _err(tokens[-1], "dangling '+'")
    terms.append(cur)
    out = []
    for term in terms:
        factors, f = [], []
        for t in term:
            if t.text == "*":
                if not f:
                    raise _err(t, "dangling '*'")
                factors.append(f)
                f = []
            else:
                f.append(t)
        if not f:
            raise _err(term[-1], "dangling '*'")
        factors.append(f)
        out.append(factors)
    return out


def _factor(f: list[Token]) -> tuple[Token, int | None]:
    """``name``, ``name ^ k`` or an integer; returns (token, exponent or None)."""
    head = f[0]
    if head.kind == "int":
        if len(f) != 1:
            raise _err(f[1], "unexpected token after integer")
        return head, None
    if head.kind != "name" or "." in head.text:
        raise _err(head, f"expected a variable or integer, found {head.text!r}")
    if len(f) == 1:
        return head, 1
    if len(f) != 3 or f[1].text != "^" or f[2].kind != "int":
        raise _err(f[1], "expected '^' followed by an integer exponent")
    return head, int(f[2].text)


def _monomial(tokens: tuple, vars: tuple) -> tuple:
    terms = _terms(tokens)
    if len(terms) != 1:
        raise _err(tokens[0], "a monomial cannot contain '+'")
    factors = terms[0]
    exps = [0] * len(vars)
    for f in factors:
        tok, k = _factor(f)
        if k is None:
            if tok.text != "1":
                raise _err(tok, "integer coefficients are not allowed in a monomial")
            continue
        if tok.text not in vars:
            raise _err(tok, f"unknown variable {tok.text!r}")
        exps[vars.index(tok.text)] += k
    return tuple(exps)


def _field_poly(st: Statement, p: int, m: int) -> tuple:
    coeffs = [0] * (m + 1)
    for factors in _terms(st.value):
        c, k = 1, 0
        for f in factors:
            tok, e = _factor(f)
            if e is None:
                c *= int(tok.text)
            elif tok.text == FIELD_SYMBOL:
                k += e
            else:
                raise _err(tok, f"field_poly is a polynomial in {FIELD_SYMBOL}, not {tok.text!r}")
        if k > m:
            raise _err(st.value[0], f"field_poly must have degree {m}")
        coeffs[k] = (coeffs[k] + c) % p
    if coeffs[m] != 1:
        raise _err(st.value[0], f"field_poly must be monic of degree {m}")
    return tuple(coeffs)


# ----------------------------------------------------------------- document


@dataclass(frozen=True)
class InputDocument:
    """Ring descriptor, block length and generator rows.

    Rows are tuples of ring elements; for an idealization they are elements
    of the base algebra.
    """

    ring: object
    n: int
    rows: tuple

    @property
    def row_ring(self):
        base = self.ring.base if isinstance(self.ring, IdealizationDesc) else self.ring
        return construct_ring(base)

    def code(self):
        R = construct_ring(self.ring)
        rows = self.rows
        if isinstance(self.ring, IdealizationDesc):
            rows = [[embed_in_idealization(R, a) for a in v] for v in rows]
        return span_closure(R, self.n, rows)


_ALGEBRA_KEYS = ("q", "field_poly", "vars", "ideal")


def _ring_from(stmts: dict, prefix: str, where: Token):
    def need(key):
        if prefix + key not in stmts:
            raise _err(where, f"missing {prefix + key}")
        return stmts[prefix + key]

    q_st = need("q")
    q = _int(q_st, 2)
    try:
        p, m = prime_power(q)
    except (RingConstructionError, ValueError):
        raise _err(q_st.value[0], f"q = {q} is not a prime power") from None
    modulus = None
    if prefix + "field_poly" in stmts:
        fp = stmts[prefix + "field_poly"]
        if m == 1:
            raise _err(fp.key, "field_poly only applies to non-prime q")
        modulus = _field_poly(fp, p, m)
    vars: tuple = ()
    if prefix + "vars" in stmts:
        vst = stmts[prefix + "vars"]
        names = []
        for item in _split_commas(vst):
            if len(item) != 1 or item[0].kind != "name" or "." in item[0].text:
                raise _err(item[0], "variables are plain names")
            if item[0].text == FIELD_SYMBOL and m > 1:
                raise _err(item[0], f"{FIELD_SYMBOL!r} is reserved for the field generator")
            if item[0].text in names:
                raise _err(item[0], f"duplicate variable {item[0].text!r}")
            names.append(item[0].text)
        vars = tuple(names)
    ideal = []
    ist = stmts.get(prefix + "ideal")
    if ist is not None:
        ideal = [_monomial(item, vars) for item in _split_commas(ist)]
    try:
        fd = FieldDescriptor(p, m, modulus)
    except RingConstructionError as exc:
        anchor = stmts.get(prefix + "field_poly", q_st).value[0]
        raise _err(anchor, str(exc)) from None
    try:
        return MonomialAlgebraDesc(fd, vars, tuple(ideal))
    except RingConstructionError as exc:
        anchor = ist.key if ist is not None else where
        raise _err(anchor, str(exc)) from None


def _parse_ring(stmts: dict, header: Token):
    if "kind" not in stmts:
        raise _err(header, "missing kind")
    kind_tok = _single(stmts["kind"], "name")
    kind = kind_tok.text
    allowed = {
        "zmod": ("kind", "p", "e"),
        "algebra": ("kind",) + _ALGEBRA_KEYS,
        "idealize": ("kind",) + tuple("base." + k for k in _ALGEBRA_KEYS),
    }
    if kind not in allowed:
        raise _err(kind_tok, f"unknown ring kind {kind!r}")
    for key, st in stmts.items():
        if key not in allowed[kind]:
            raise _err(st.key, f"key {key!r} does not belong to kind {kind}")
    if kind == "zmod":
        for key in ("p", "e"):
            if key not in stmts:
                raise _err(header, f"missing {key}")
        p_st = stmts["p"]
        try:
            return IntegerChainDesc(_int(p_st, 2), _int(stmts["e"], 1))
        except RingConstructionError as exc:
            raise _err(p_st.value[0], str(exc)) from None
    if kind == "algebra":
        return _ring_from(stmts, "", header)
    return IdealizationDesc(_ring_from(stmts, "base.", header))


def _entry(tokens: tuple, desc, R):
    """Evaluate a sum of terms as an element of R (the row ring)."""
    if isinstance(desc, IntegerChainDesc):
        total = 0
        for factors in _terms(tokens):
            c = 1
            for f in factors:
                tok, e = _factor(f)
                if e is not None:
                    raise _err(tok, f"unknown variable {tok.text!r} (Z/{R.modulus} has no variables)")
                v = int(tok.text)
                if v >= R.modulus:
                    raise _err(tok, f"coefficient {v} out of range for Z/{R.modulus}")
                c *= v
            total += c
        return total % R.modulus
    F = R.field
    base = desc.base if isinstance(desc, IdealizationDesc) else desc
    vars = base.vars
    index = {mono: i for i, mono in enumerate(R.monomials)}
    acc = [0] * R.length
    for factors in _terms(tokens):
        coeff, ku = 1, 0
        exps = [0] * len(vars)
        for f in factors:
            tok, e = _factor(f)
            if e is None:
                v = int(tok.text)
                if v >= F.p:
                    raise _err(tok, f"coefficient {v} out of range for characteristic {F.p}")
                coeff = coeff * v % F.p
            elif tok.text == FIELD_SYMBOL and F.m > 1:
                ku += e
            elif tok.text in vars:
                exps[vars.index(tok.text)] += e
            else:
                raise _err(tok, f"unknown variable {tok.text!r}")
        c = F.mul[coeff, _u_power(F, ku)]
        k = index.get(tuple(exps))
        if k is not None:
            acc[k] = int(F.add[acc[k], c])
    return tuple(acc)


def _u_power(F, k: int) -> int:
    r = 1
    g = F.p if F.m > 1 else 1  # the element u has digits (0, 1, 0, ...)
    for _ in range(k):
        r = int(F.mul[r, g])
    return r


def parse_document(text: str) -> InputDocument:
    toks = tokenize(text)
    sts = statements(toks)
    ring_st: dict = {}
    code_st: dict = {}
    rows = []
    headers = {t.text.strip("[] \t"): t for t in toks if t.kind == "section"}
    for st in sts:
        target = ring_st if st.section == "ring" else code_st
        key = st.key.text
        if st.section == "code" and key == "row":
            rows.append(st)
            continue
        if st.section == "code" and key != "n":
            raise _err(st.key, f"unknown key {key!r} in [code]")
        if key in target:
            raise _err(st.key, f"duplicate key {key!r}")
        target[key] = st
    if "ring" not in headers:
        raise ParseError("missing [ring] section", 1, 1)
    if "code" not in headers:
        raise ParseError("missing [code] section", toks[-1].line if toks else 1, 1)
    desc = _parse_ring(ring_st, headers["ring"])
    if "n" not in code_st:
        raise _err(headers["code"], "missing n")
    n = _int(code_st["n"], 1)
    doc_ring = desc
    base = desc.base if isinstance(desc, IdealizationDesc) else desc
    R = construct_ring(base)
    parsed = []
    for st in rows:
        items = _split_commas(st)
        if len(items) != n:
            raise _err(st.key, f"row has {len(items)} entries, expected n = {n}")
        parsed.append(tuple(_entry(item, doc_ring, R) for item in items))
    return InputDocument(doc_ring, n, tuple(parsed))


# ------------------------------------------------------------------ emission


def _poly_u(coeffs) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (FIELD_SYMBOL if k == 1 else f"{FIELD_SYMBOL}^{k}")
        terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
    return "+".join(terms) or "0"


def format_entry(R, a) -> str:
    """An element in the document grammar (no parentheses, no minus signs)."""
    if isinstance(R, ChainRing):
        return str(int(a))
    F = R.field
    terms = []
    for c, mono in zip(a, R.monomials):
        if not c:
            continue
        mname = monomial_name(mono, R.descriptor.vars)
        for k, d in enumerate(F.digits(c)):
            if not d:
                continue
            parts = [] if d == 1 else [str(d)]
            if k:
                parts.append(FIELD_SYMBOL if k == 1 else f"{FIELD_SYMBOL}^{k}")
            if mname != "1":
                parts.append(mname)
            terms.append("*".join(parts) or "1")
    return "+".join(terms) or "0"


def _emit_algebra(desc: MonomialAlgebraDesc, prefix: str) -> list[str]:
    lines = [f"{prefix}q = {desc.q}"]
    if desc.field.m > 1:
        lines.append(f"{prefix}field_poly = {_poly_u(desc.field.modulus)}")
    if desc.vars:
        lines.append(f"{prefix}vars = {', '.join(desc.vars)}")
        lines.append(f"{prefix}ideal = {', '.join(monomial_name(m, desc.vars) for m in desc.ideal)}")
    return lines


def emit_document(doc: InputDocument) -> str:
    d = doc.ring
    lines = ["[ring]"]
    if isinstance(d, IntegerChainDesc):
        lines += ["kind = zmod", f"p = {d.p}", f"e = {d.e}"]
    elif isinstance(d, IdealizationDesc):
        lines += ["kind = idealize"] + _emit_algebra(d.base, "base.")
    else:
        lines += ["kind = algebra"] + _emit_algebra(d, "")
    lines += ["[code]", f"n = {doc.n}"]
    R = doc.row_ring
    for v in doc.rows:
        lines.append("row = " + ", ".join(format_entry(R, a) for a in v))
    return "\n".join(lines) + "\n"
