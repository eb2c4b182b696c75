"""Expression language for algebra elements, with printing both ways.

Grammar (whitespace insignificant, '-' also unary at the head of an
expression, including inside parentheses and brackets):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' NAT)?
    atom   := VAR | NUMBER | 'i' | '(' expr ')' | '[' expr ',' expr ']'
    NUMBER := INT ('/' INT)?
    VAR    := 'u' | 'v' | 'x' | 'y'

x and y are rewritten to (u+v)/2 and (u-v)/(2i) before evaluation, so
every expression lands in the u, v presentation.  Printing uses only
grammar atoms whenever the coefficients lie in Q(i), which covers every
element the language itself can denote; other cyclotomic coefficients
render in the z(m,k) notation for display only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .assoc import MetAssocElem
from .cyclo import CycNum, imag_unit
from .lie import MetLieElem
from .poly import IU, IU1, IU2, IV, IV1, IV2, CommPoly, Monomial

__all__ = [
    "Bracket",
    "Difference",
    "ExprSyntaxError",
    "Group",
    "ImagLit",
    "Power",
    "Product",
    "RationalLit",
    "Sum",
    "Variable",
    "eval_assoc",
    "parse",
    "print_elem",
    "to_xy",
]


class ExprSyntaxError(ValueError):
    """A positioned parse error with the set of tokens that would fit."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        super().__init__(
            f"syntax error at offset {offset}: expected "
            f"{' or '.join(expected)}, found {found}"
        )


# ----------------------------------------------------------------------
# Syntax trees
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Sum:
    left: object
    right: object


@dataclass(frozen=True)
class Difference:
    left: object
    right: object


@dataclass(frozen=True)
class Product:
    left: object
    right: object


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class RationalLit:
    value: Fraction


@dataclass(frozen=True)
class ImagLit:
    pass


@dataclass(frozen=True)
class Group:
    inner: object


# ----------------------------------------------------------------------
# Lexer and parser (recursive descent, one token of lookahead)
# ----------------------------------------------------------------------

_PUNCT = "+-*^()[],/"


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            out.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
            continue
        raise ExprSyntaxError(
            i, ("a number", "a variable", "an operator"), repr(ch)
        )
    out.append(_Token("eof", "", len(text)))
    return out


_ATOM_EXPECTED = ("a number", "'i'", "'u'", "'v'", "'x'", "'y'", "'('", "'['")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        tok = self.peek()
        found = repr(tok.text) if tok.kind != "eof" else "end of input"
        raise ExprSyntaxError(tok.pos, expected, found)

    def expect(self, kind: str) -> _Token:
        if self.peek().kind != kind:
            self.fail((f"'{kind}'",))
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.peek().kind != "eof":
            self.fail(("'+'", "'-'", "'*'", "'^'", "end of input"))
        return node

    def expr(self):
        if self.peek().kind == "-":
            self.advance()
            node = Difference(RationalLit(Fraction(0)), self.term())
        else:
            node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            node = Sum(node, rhs) if op == "+" else Difference(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind == "*":
            self.advance()
            node = Product(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek().kind == "^":
            self.advance()
            if self.peek().kind != "int":
                self.fail(("a nonnegative integer exponent",))
            tok = self.advance()
            node = Power(node, int(tok.text))
        return node

    def atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            num = int(tok.text)
            if self.peek().kind == "/":
                self.advance()
                den_tok = self.expect("int")
                den = int(den_tok.text)
                if den == 0:
                    raise ExprSyntaxError(
                        den_tok.pos, ("a nonzero denominator",), "'0'"
                    )
                return RationalLit(Fraction(num, den))
            return RationalLit(Fraction(num))
        if tok.kind == "name":
            self.advance()
            if tok.text == "i":
                return ImagLit()
            if tok.text in ("u", "v", "x", "y"):
                return Variable(tok.text)
            raise ExprSyntaxError(
                tok.pos, ("'u'", "'v'", "'x'", "'y'", "'i'"), repr(tok.text)
            )
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        if tok.kind == "[":
            self.advance()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right)
        self.fail(_ATOM_EXPECTED)


def parse(text: str):
    """Parse an expression; errors carry an offset and the expected set."""
    return _Parser(text).parse()


# ----------------------------------------------------------------------
# Evaluation into the associative algebra
# ----------------------------------------------------------------------

def eval_assoc(node, order: int = 4) -> MetAssocElem:
    """Evaluate a syntax tree; x, y are rewritten into u, v first."""
    match node:
        case RationalLit(value=q):
            return MetAssocElem.one(order).scale(q)
        case ImagLit():
            return MetAssocElem.one(order).scale(imag_unit(order))
        case Variable(name="u") | Variable(name="v"):
            return MetAssocElem.letter(node.name, order)
        case Variable(name="x"):
            u = MetAssocElem.letter("u", order)
            v = MetAssocElem.letter("v", order)
            return (u + v).scale(Fraction(1, 2))
        case Variable(name="y"):
            u = MetAssocElem.letter("u", order)
            v = MetAssocElem.letter("v", order)
            return (u - v).scale(imag_unit(order) * Fraction(-1, 2))
        case Group(inner=inner):
            return eval_assoc(inner, order)
        case Sum(left=l, right=r):
            return eval_assoc(l, order) + eval_assoc(r, order)
        case Difference(left=l, right=r):
            return eval_assoc(l, order) - eval_assoc(r, order)
        case Product(left=l, right=r):
            return eval_assoc(l, order) * eval_assoc(r, order)
        case Power(base=b, exponent=k):
            return eval_assoc(b, order) ** k
        case Bracket(left=l, right=r):
            return eval_assoc(l, order).commutator(eval_assoc(r, order))
    raise TypeError(f"not an expression node: {node!r}")


# ----------------------------------------------------------------------
# Printing
# ----------------------------------------------------------------------

def _fraction_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _scalar_text(c: CycNum) -> tuple[bool, str]:
    """Render a coefficient as (negate, body); body is grammar-parseable
    whenever the value lies in Q(i)."""
    g = c.as_gaussian()
    if g is not None:
        a, b = g
        if b == 0:
            return (a < 0, _fraction_text(-a if a < 0 else a))
        if a == 0:
            mag = -b if b < 0 else b
            return (b < 0, "i" if mag == 1 else f"{_fraction_text(mag)}*i")
        ipart = "i" if abs(b) == 1 else f"{_fraction_text(abs(b))}*i"
        joiner = " - " if b < 0 else " + "
        return (False, f"({_fraction_text(a)}{joiner}{ipart})")
    parts = []
    for e in sorted(c.coeffs):
        q = c.coeffs[e]
        neg = q < 0
        mag = -q if neg else q
        if e == 0:
            body = _fraction_text(mag)
        elif mag == 1:
            body = f"z({c.order},{e})"
        else:
            body = f"{_fraction_text(mag)}*z({c.order},{e})"
        parts.append((neg, body))
    if len(parts) == 1:
        return parts[0]
    text = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        text += (" - " if neg else " + ") + body
    return (False, f"({text})")


def _join_terms(chunks: list[tuple[CycNum, str]]) -> str:
    if not chunks:
        return "0"
    rendered = []
    for c, mono_text in chunks:
        neg, body = _scalar_text(c)
        if not mono_text:
            text = body
        elif body == "1":
            text = mono_text
        else:
            text = f"{body}*{mono_text}"
        rendered.append((neg, text))
    out = ("-" if rendered[0][0] else "") + rendered[0][1]
    for neg, text in rendered[1:]:
        out += (" - " if neg else " + ") + text
    return out


def _power_text(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _uv_mono_text(mono: Monomial, letters: tuple[str, str]) -> str:
    parts = []
    if mono.exps[IU]:
        parts.append(_power_text(letters[0], mono.exps[IU]))
    if mono.exps[IV]:
        parts.append(_power_text(letters[1], mono.exps[IV]))
    return "*".join(parts)


def _comm_mono_text(mono: Monomial, letters: tuple[str, str], bracket: str) -> str:
    parts = []
    if mono.exps[IU1]:
        parts.append(_power_text(letters[0], mono.exps[IU1]))
    if mono.exps[IV1]:
        parts.append(_power_text(letters[1], mono.exps[IV1]))
    parts.append(bracket)
    if mono.exps[IU2]:
        parts.append(_power_text(letters[0], mono.exps[IU2]))
    if mono.exps[IV2]:
        parts.append(_power_text(letters[1], mono.exps[IV2]))
    return "*".join(parts)


def to_xy(e: MetAssocElem) -> MetAssocElem:
    """Rewrite an element over the generators x, y.

    The result is a canonical element whose u, v slots carry x, y: the
    image of u is x + i*y and of v is x - i*y, multiplied out in the
    algebra.  Requires coefficients in a field containing i.
    """
    order = e._order()
    iu = imag_unit(order)
    x = MetAssocElem.letter("u", order)
    y = MetAssocElem.letter("v", order)
    img_u = x + y.scale(iu)
    img_v = x - y.scale(iu)
    pu: dict[int, MetAssocElem] = {0: MetAssocElem.one(order)}
    pv: dict[int, MetAssocElem] = {0: MetAssocElem.one(order)}

    def upower(k: int) -> MetAssocElem:
        while k not in pu:
            j = max(pu)
            pu[j + 1] = pu[j] * img_u
        return pu[k]

    def vpower(k: int) -> MetAssocElem:
        while k not in pv:
            j = max(pv)
            pv[j + 1] = pv[j] * img_v
        return pv[k]

    bracket = img_v * img_u - img_u * img_v
    out = MetAssocElem.zero()
    for mono, c in e.poly_part.terms.items():
        out = out + (upower(mono.exps[IU]) * vpower(mono.exps[IV])).scale(c)
    for mono, c in e.comm_part.terms.items():
        a, b = mono.exps[IU1], mono.exps[IV1]
        cc, d = mono.exps[IU2], mono.exps[IV2]
        term = upower(a) * vpower(b) * bracket * upower(cc) * vpower(d)
        out = out + term.scale(c)
    return out


def _print_assoc(e: MetAssocElem, basis: str) -> str:
    if basis == "xy":
        e = to_xy(e)
        letters, bracket = ("x", "y"), "[y,x]"
    elif basis == "uv":
        letters, bracket = ("u", "v"), "[v,u]"
    else:
        raise ValueError(f"basis must be 'uv' or 'xy', not {basis!r}")
    chunks = [(c, _uv_mono_text(m, letters)) for m, c in e.poly_part.sorted_terms()]
    chunks += [
        (c, _comm_mono_text(m, letters, bracket))
        for m, c in e.comm_part.sorted_terms()
    ]
    return _join_terms(chunks)


def _print_lie(e: MetLieElem, basis: str) -> str:
    if basis == "xy":
        order = e.order
        iu = imag_unit(order)
        lin_x = e.lin_u + e.lin_v
        lin_y = (e.lin_u - e.lin_v) * iu
        one = CycNum.one(order)
        img_u = CommPoly({Monomial((1, 0)): one, Monomial((0, 1)): iu})
        img_v = CommPoly({Monomial((1, 0)): one, Monomial((0, 1)): -iu})
        comm = e.comm.substitute({"u": img_u, "v": img_v}).scale(iu * Fraction(-2))
        letters, bracket = ("x", "y"), "[y,x]"
    elif basis == "uv":
        lin_x, lin_y, comm = e.lin_u, e.lin_v, e.comm
        letters, bracket = ("u", "v"), "[v,u]"
    else:
        raise ValueError(f"basis must be 'uv' or 'xy', not {basis!r}")
    chunks: list[tuple[CycNum, str]] = []
    if not lin_x.is_zero():
        chunks.append((lin_x, letters[0]))
    if not lin_y.is_zero():
        chunks.append((lin_y, letters[1]))
    for mono, c in comm.sorted_terms():
        parts = [bracket]
        if mono.exps[IU]:
            parts.append(_power_text(f"ad({letters[0]})", mono.exps[IU]))
        if mono.exps[IV]:
            parts.append(_power_text(f"ad({letters[1]})", mono.exps[IV]))
        chunks.append((c, " ".join(parts)))
    return _join_terms(chunks)


def print_elem(e, basis: str = "uv") -> str:
    """Deterministic canonical rendering of an element."""
    if isinstance(e, MetLieElem):
        return _print_lie(e, basis)
    if isinstance(e, MetAssocElem):
        return _print_assoc(e, basis)
    raise TypeError(f"cannot print {type(e).__name__}")
