# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Term Language Module v1.0
Tüm monoidler için yüzey terim dili: cup ∪_k, cap ∩_k, daire c, diapsis h_i, birim 1,
genişletilmiş a/b/c üreteç alfabesi, ayrıştırma/yazdırma ve alfabeler arası gömmeler.

Terimler düz üreteç dizileridir; çarpım birleştirmedir (birim ve birleşme
denklemleri böylece yapıya gömülüdür).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple, Union

from errors import IndexRangeError, ParseError, TheoryError
from ordinals import ZERO, CircularForm, parse_pword, print_pword


# ═══════════════════════════════════════════════════════════════════
#  ÜRETEÇLER
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Cup:
    k: int


@dataclass(frozen=True)
class Cap:
    k: int


@dataclass(frozen=True)
class Circle:
    pass


@dataclass(frozen=True)
class Diapsis:
    i: int


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class A:
    """a_k^α"""
    k: int
    alpha: CircularForm = ZERO


@dataclass(frozen=True)
class B:
    """b_k^α"""
    k: int
    alpha: CircularForm = ZERO


@dataclass(frozen=True)
class C:
    """c_k^α — L seviyesindeki dairesel form"""
    k: int
    alpha: CircularForm = ZERO


Gen = Union[Cup, Cap, Circle, Diapsis, Unit, A, B, C]
ExtGen = Union[A, B, C]
ExtWord = Tuple[ExtGen, ...]

EXT_GENS = (A, B, C)


# ═══════════════════════════════════════════════════════════════════
#  TEORİLER
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Theory:
    """kind ∈ {L, K, J, Ln, Kn, Jn}; n yalnızca sonlu teorilerde anlamlıdır."""

    kind: str
    n: Optional[int] = None

    @property
    def finite(self) -> bool:
        return self.kind in ("Ln", "Kn", "Jn")

    @property
    def level(self) -> str:
        """L, K veya J — eşitlik seviyesi."""
        return self.kind[0]

    def omega(self) -> "Theory":
        return Theory(self.level)

    def __str__(self) -> str:
        return f"{self.kind}({self.n})" if self.finite else f"{self.kind}ω"


L = Theory("L")
K = Theory("K")
J = Theory("J")

WORD_THEORIES = ("L", "K", "J", "Ln", "Kn", "Jn")


def Ln(n: int) -> Theory:
    return _finite("Ln", n)


def Kn(n: int) -> Theory:
    return _finite("Kn", n)


def Jn(n: int) -> Theory:
    return _finite("Jn", n)


def _finite(kind: str, n: int) -> Theory:
    if n is None or n < 0:
        raise IndexRangeError(f"{kind} needs a width n ≥ 0, got {n}")
    return Theory(kind, n)


def theory_from_name(name: str, n: Optional[int] = None) -> Theory:
    if name not in WORD_THEORIES:
        raise TheoryError(f"unknown theory {name!r}; expected one of {', '.join(WORD_THEORIES)}")
    if name in ("L", "K", "J"):
        return Theory(name)
    if n is None:
        raise TheoryError(f"theory {name} needs --n")
    return _finite(name, n)


# ═══════════════════════════════════════════════════════════════════
#  TERİM
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Term:
    gens: Tuple[Gen, ...]
    theory: Theory = K

    def __iter__(self) -> Iterator[Gen]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __add__(self, other: "Term") -> "Term":
        return concat(self, other)

    def __str__(self) -> str:
        return print_term(self)


def make_term(gens: Iterable[Gen], theory: Theory = K) -> Term:
    """Üreteçleri teoriye göre doğrulayıp terim kurar."""
    gens = tuple(gens)
    for g in gens:
        _check_gen(g, theory)
    return Term(gens, theory)


def concat(t: Term, u: Term) -> Term:
    if t.theory != u.theory:
        raise TheoryError(f"cannot multiply terms of {t.theory} and {u.theory}")
    return Term(t.gens + u.gens, t.theory)


def _check_gen(g: Gen, theory: Theory) -> None:
    if isinstance(g, (Cup, Cap, Diapsis, A, B, C)):
        index = g.i if isinstance(g, Diapsis) else g.k
        if index < 1:
            raise IndexRangeError(f"index must be ≥ 1, got {index}")

    kind = theory.kind
    if kind in ("L", "K", "J"):
        if isinstance(g, Diapsis):
            raise TheoryError(f"diapsis h{g.i} must be embedded before use in {theory}")
        if kind == "L" and isinstance(g, Circle):
            raise TheoryError("the circle c is not an L-level generator; use C k^α")
        if kind != "L" and isinstance(g, EXT_GENS):
            raise TheoryError(f"extended generator not allowed in {theory}; expand it first")
        return

    n = theory.n
    if isinstance(g, (Cup, Cap)):
        raise TheoryError(f"{type(g).__name__.lower()} generators are not part of {theory}")
    if isinstance(g, (A, B)):
        raise TheoryError(f"generator {_token(g)} is not part of {theory}")
    if isinstance(g, Diapsis) and g.i > n - 1:
        raise IndexRangeError(f"diapsis index {g.i} exceeds n−1 = {n - 1}")
    if kind == "Ln":
        if isinstance(g, Circle):
            raise TheoryError("the circle c is not an L-level generator; use C k^α")
        if isinstance(g, C) and g.k > n + 1:
            raise IndexRangeError(f"circle index {g.k} exceeds n+1 = {n + 1}")
    elif isinstance(g, C):
        raise TheoryError(f"generator {_token(g)} is not part of {theory}")


# ═══════════════════════════════════════════════════════════════════
#  AYRIŞTIRMA / YAZDIRMA
# ═══════════════════════════════════════════════════════════════════

_TOKEN = re.compile(r"^(?:([unh])(\d+)|(c)|(1)|([abC])(\d+)\^(e|[()]*))$")


def parse_term(text: str, theory: Theory = K) -> Term:
    """
    Boşlukla ayrılmış token dizisini terime çevirir.
    ω teorilerinde h_i hemen ∩_i∪_i olarak gömülür; K/J seviyesinde a/b/C
    token'ları cup/cap kelimelerine açılır.
    """
    gens = []
    matches = list(re.finditer(r"\S+", text))
    if not matches:
        raise ParseError("empty term; write 1 for the unit", text, 0)

    for m in matches:
        gens.extend(_parse_token(m.group(0), text, m.start(), theory))

    return make_term(gens, theory)


def _parse_token(token: str, text: str, pos: int, theory: Theory) -> list:
    m = _TOKEN.match(token)
    if m is None:
        raise ParseError(f"unknown token {token!r}", text, pos)
    letter, index, circle, unit, ext, ext_index, pword = m.groups()

    if circle:
        return [Circle()]
    if unit:
        return [Unit()]

    k = int(index if letter else ext_index)
    if k < 1:
        raise ParseError(f"index must be ≥ 1 in {token!r}", text, pos)

    if letter == "u":
        return [Cup(k)]
    if letter == "n":
        return [Cap(k)]
    if letter == "h":
        if theory.finite:
            return [Diapsis(k)]
        return [Cap(k), Cup(k)]

    try:
        alpha = ZERO if pword == "e" else parse_pword(pword)
    except ParseError as e:
        raise ParseError(e.reason, text,
                         pos + token.index("^") + 1 + e.position) from e
    gen = {"a": A, "b": B, "C": C}[ext](k, alpha)
    if theory.kind in ("K", "J"):
        return list(from_extgen(gen).gens)
    return [gen]


def _token(g: Gen) -> str:
    if isinstance(g, Cup):
        return f"u{g.k}"
    if isinstance(g, Cap):
        return f"n{g.k}"
    if isinstance(g, Diapsis):
        return f"h{g.i}"
    if isinstance(g, Circle):
        return "c"
    if isinstance(g, Unit):
        return "1"
    letter = {A: "a", B: "b", C: "C"}[type(g)]
    return f"{letter}{g.k}^{print_pword(g.alpha) or 'e'}"


def print_term(t: Term) -> str:
    if not t.gens:
        return "1"
    return " ".join(_token(g) for g in t.gens)


def print_extword(w: Iterable[ExtGen]) -> str:
    w = tuple(w)
    if not w:
        return "1"
    return " ".join(_token(g) for g in w)


def parse_extword(text: str) -> ExtWord:
    return to_extword(parse_term(text, L))


# ═══════════════════════════════════════════════════════════════════
#  GÖMMELER
# ═══════════════════════════════════════════════════════════════════

def embed_diapsides(t: Term) -> Term:
    """h_i ↦ ∩_i ∪_i; Kn→Kω, Jn→Jω, Ln→Lω."""
    gens = []
    for g in t.gens:
        if isinstance(g, Diapsis):
            gens.extend((Cap(g.i), Cup(g.i)))
        else:
            gens.append(g)
    theory = t.theory.omega() if t.theory.finite else t.theory
    return Term(tuple(gens), theory)


def strip_units(t: Term) -> Term:
    """1 üreteçlerini siler: birim denklemleri modülo kelime eşitliği."""
    return Term(tuple(g for g in t.gens if not isinstance(g, Unit)), t.theory)


def unfold_circles(t: Term) -> Term:
    """c ↦ ∪_1 ∩_1; ψ daireyi bu kelimeyle yazar."""
    gens = []
    for g in t.gens:
        if isinstance(g, Circle):
            gens.extend((Cup(1), Cap(1)))
        else:
            gens.append(g)
    return Term(tuple(gens), t.theory)


def to_extword(t: Term) -> ExtWord:
    """∪_k ↦ a_k^0, ∩_k ↦ b_k^0, 1 silinir."""
    if t.theory.kind != "L":
        raise TheoryError(f"to_extword expects an Lω term, got {t.theory}")
    out = []
    for g in t.gens:
        if isinstance(g, Cup):
            out.append(A(g.k, ZERO))
        elif isinstance(g, Cap):
            out.append(B(g.k, ZERO))
        elif isinstance(g, EXT_GENS):
            out.append(g)
        elif isinstance(g, Unit):
            continue
        else:
            raise TheoryError(f"generator {_token(g)} has no extended counterpart")
    return tuple(out)


def _expand(g: ExtGen) -> list:
    if isinstance(g, C):
        gens = []
        for e in g.alpha.exponents:
            gens.append(Cup(g.k))
            gens.extend(_expand(C(g.k + 1, e)))
            gens.append(Cap(g.k))
        return gens
    if isinstance(g, A):
        return [Cup(g.k)] + _expand(C(g.k + 1, g.alpha))
    return _expand(C(g.k + 1, g.alpha)) + [Cap(g.k)]


def from_extgen(g: ExtGen) -> Term:
    """a/b/c üretecini cup/cap kelimesine açar (c_k^0 boş kelime)."""
    return Term(tuple(_expand(g)), L)


def extword_to_term(w: Iterable[ExtGen]) -> Term:
    gens = []
    for g in w:
        gens.extend(_expand(g))
    return Term(tuple(gens), L)


def retheory(t: Term, theory: Theory) -> Term:
    """Cup/cap kelimesini başka bir ω teorisine taşır (L'de daire yoksa)."""
    return make_term(t.gens, theory)
