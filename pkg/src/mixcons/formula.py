"""Object language: formula AST, atoms, parsing, printing, fresh variables.

Concrete syntax: ``T``, ``F``, ``L`` for the three constants, ``~`` for
negation, ``&`` for conjunction, ``|`` for disjunction.  Variables match
``[a-z][a-zA-Z0-9_]*``, so they never collide with the constant tokens.
Precedence is ``~`` > ``&`` > ``|``; both binary operators associate left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Lambda:
    pass


@dataclass(frozen=True)
class Not:
    sub: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Top, Bot, Lambda, Not, And, Or]

TOP = Top()
BOT = Bot()
LAM = Lambda()

# An atom is a plain string: a variable name, or one of the constant
# tokens below.  Variables start with a lowercase letter, so the two
# kinds never clash.
Atom = str
TOP_ATOM: Atom = "T"
BOT_ATOM: Atom = "F"
LAM_ATOM: Atom = "L"
CONSTANT_ATOMS = frozenset({TOP_ATOM, BOT_ATOM, LAM_ATOM})


def is_variable_atom(atom: Atom) -> bool:
    return atom not in CONSTANT_ATOMS


def atom_to_formula(atom: Atom) -> Formula:
    if atom == TOP_ATOM:
        return TOP
    if atom == BOT_ATOM:
        return BOT
    if atom == LAM_ATOM:
        return LAM
    return Var(atom)


def atoms(f: Formula) -> frozenset[Atom]:
    """All atoms of a formula; the constants count as their own atoms."""
    if isinstance(f, Var):
        return frozenset({f.name})
    if isinstance(f, Top):
        return frozenset({TOP_ATOM})
    if isinstance(f, Bot):
        return frozenset({BOT_ATOM})
    if isinstance(f, Lambda):
        return frozenset({LAM_ATOM})
    if isinstance(f, Not):
        return atoms(f.sub)
    return atoms(f.left) | atoms(f.right)


def atoms_of_set(formulas: Iterable[Formula]) -> frozenset[Atom]:
    result: frozenset[Atom] = frozenset()
    for f in formulas:
        result |= atoms(f)
    return result


def variables_of_set(formulas: Iterable[Formula]) -> frozenset[Atom]:
    return frozenset(a for a in atoms_of_set(formulas) if is_variable_atom(a))


def contains_lambda(f: Formula) -> bool:
    return LAM_ATOM in atoms(f)


def fresh_variable(avoid: Iterable[Atom]) -> Atom:
    """Smallest name in the sequence p0, p1, ... not contained in `avoid`."""
    taken = set(avoid)
    i = 0
    while f"p{i}" in taken:
        i += 1
    return f"p{i}"


def conjoin(formulas: Iterable[Formula]) -> Formula:
    """Left-associated conjunction; the empty conjunction is T."""
    result: Formula | None = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return TOP if result is None else result


def disjoin(formulas: Iterable[Formula]) -> Formula:
    """Left-associated disjunction; the empty disjunction is F."""
    result: Formula | None = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return BOT if result is None else result


# --------------------------------------------------------------------------
# printing

def _prec(f: Formula) -> int:
    if isinstance(f, Or):
        return 1
    if isinstance(f, And):
        return 2
    if isinstance(f, Not):
        return 3
    return 4


def print_formula(f: Formula) -> str:
    """Canonical text with minimal parentheses; inverse of parse_formula."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bot):
        return "F"
    if isinstance(f, Lambda):
        return "L"
    if isinstance(f, Not):
        sub = print_formula(f.sub)
        if _prec(f.sub) < 3:
            sub = f"({sub})"
        return "~" + sub
    op, prec = ("&", 2) if isinstance(f, And) else ("|", 1)
    left = print_formula(f.left)
    if _prec(f.left) < prec:
        left = f"({left})"
    right = print_formula(f.right)
    if _prec(f.right) <= prec:
        right = f"({right})"
    return f"{left} {op} {right}"


# --------------------------------------------------------------------------
# inferences

def _normalize_side(formulas: Iterable[Formula]) -> tuple[Formula, ...]:
    unique = {print_formula(f): f for f in formulas}
    return tuple(unique[key] for key in sorted(unique))


@dataclass(frozen=True)
class Inference:
    """An ordered pair of finite formula sets, premises => conclusions.

    Both sides are stored duplicate-free and sorted by canonical printing,
    so iteration order is deterministic.
    """

    premises: tuple[Formula, ...]
    conclusions: tuple[Formula, ...]

    def __init__(self, premises: Iterable[Formula], conclusions: Iterable[Formula]):
        object.__setattr__(self, "premises", _normalize_side(premises))
        object.__setattr__(self, "conclusions", _normalize_side(conclusions))

    def atoms(self) -> frozenset[Atom]:
        return atoms_of_set(self.premises) | atoms_of_set(self.conclusions)

    def variables(self) -> frozenset[Atom]:
        return frozenset(a for a in self.atoms() if is_variable_atom(a))


def print_sequent(inf: Inference) -> str:
    left = ", ".join(print_formula(f) for f in inf.premises)
    right = ", ".join(print_formula(f) for f in inf.conclusions)
    if left:
        return f"{left} => {right}" if right else f"{left} =>"
    return f"=> {right}" if right else "=>"


# --------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += " (expected " + " or ".join(expected) + ")"
        super().__init__(detail)


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<const>[TFL])"
    r"|(?P<ident>[a-z][a-zA-Z0-9_]*)"
    r"|(?P<arrow>=>)"
    r"|(?P<punct>[~&|(),])"
)


def _tokenize(text: str) -> Iterator[tuple[str, str, int]]:
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        pos = m.end()
        if m.lastgroup == "ws":
            continue
        kind = m.lastgroup
        assert kind is not None
        yield kind, m.group(), m.start()
    yield "end", "", len(text)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.index = 0

    @property
    def current(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, value: str) -> None:
        kind, text, pos = self.current
        if text != value and not (value == "end" and kind == "end"):
            shown = text if kind != "end" else "end of input"
            raise ParseError(f"unexpected {shown!r}", pos, expected=(value,))
        self.advance()

    def formula(self) -> Formula:
        return self.disjunction()

    def disjunction(self) -> Formula:
        result = self.conjunction()
        while self.current[1] == "|":
            self.advance()
            result = Or(result, self.conjunction())
        return result

    def conjunction(self) -> Formula:
        result = self.unary()
        while self.current[1] == "&":
            self.advance()
            result = And(result, self.unary())
        return result

    def unary(self) -> Formula:
        kind, text, pos = self.current
        if text == "~":
            self.advance()
            return Not(self.unary())
        if text == "(":
            self.advance()
            inner = self.disjunction()
            self.expect(")")
            return inner
        if kind == "const":
            self.advance()
            return {"T": TOP, "F": BOT, "L": LAM}[text]
        if kind == "ident":
            self.advance()
            return Var(text)
        shown = text if kind != "end" else "end of input"
        raise ParseError(
            f"unexpected {shown!r}", pos,
            expected=("~", "(", "constant", "variable"),
        )

    def formula_list(self) -> list[Formula]:
        if self.current[0] in ("end",) or self.current[1] == "=>":
            return []
        result = [self.formula()]
        while self.current[1] == ",":
            self.advance()
            result.append(self.formula())
        return result


def parse_formula(text: str) -> Formula:
    parser = _Parser(text)
    result = parser.formula()
    parser.expect("end")
    return result


def parse_sequent(text: str) -> Inference:
    parser = _Parser(text)
    premises = parser.formula_list()
    kind, tok, pos = parser.current
    if tok != "=>":
        shown = tok if kind != "end" else "end of input"
        raise ParseError(f"missing '=>' separator, got {shown!r}", pos, expected=("=>",))
    parser.advance()
    conclusions = parser.formula_list()
    parser.expect("end")
    return Inference(premises, conclusions)
