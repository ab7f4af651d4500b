# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Self-Adjunction Arrows v1.0
Serbest öz-birleşimlerin (L_c, K_c, J_c) tipli ok-terimleri.

  • ψ : ok-terimi → kelime  (φ_n ↦ ∪_{n+1}, γ_n ↦ ∩_{n+1}, F silinir)
  • χ : kelime → ok-terimi  (∗ ile soldan katlama)
  • eşitlik: ψ görüntüleri monoid motorlarında karşılaştırılır

Metin grameri: "id N", "phi N", "gamma N", "F(<t>)", "<t> . <t>"
(bileşkede sağdaki çarpan önce uygulanır).
"""

from __future__ import annotations

import functools
import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from config import MAX_ARROW_DEPTH
from errors import ArrowTypeError, ParseError, TheoryError
from normalize import eq_J, eq_K, eq_L
from terms import EXT_GENS, Cap, Circle, Cup, Diapsis, K, L, Term, Theory, Unit, from_extgen

logger = logging.getLogger("tlengine.adjunction")


# ═══════════════════════════════════════════════════════════════════
#  OK-TERİMLERİ
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Id:
    n: int


@dataclass(frozen=True)
class Phi:
    """φ_n : n+2 → n"""
    n: int


@dataclass(frozen=True)
class Gamma:
    """γ_n : n → n+2"""
    n: int


@dataclass(frozen=True)
class Fof:
    f: "ArrowTerm"


@dataclass(frozen=True)
class Comp:
    """g ∘ f"""
    g: "ArrowTerm"
    f: "ArrowTerm"


ArrowTerm = Union[Id, Phi, Gamma, Fof, Comp]


@functools.lru_cache(maxsize=4096)
def type_of(f: ArrowTerm) -> Tuple[int, int]:
    """(kaynak, hedef)"""
    if isinstance(f, Id):
        return f.n, f.n
    if isinstance(f, Phi):
        return f.n + 2, f.n
    if isinstance(f, Gamma):
        return f.n, f.n + 2
    if isinstance(f, Fof):
        m, n = type_of(f.f)
        return m + 1, n + 1
    if isinstance(f, Comp):
        m, n = type_of(f.f)
        k, l = type_of(f.g)
        if n != k:
            raise ArrowTypeError(
                f"cannot compose {format_arrow(f.g)}: {k}→{l} after {format_arrow(f.f)}: {m}→{n}"
            )
        return m, l
    raise ArrowTypeError(f"not an arrow term: {f!r}")


def fpow(f: ArrowTerm, k: int) -> ArrowTerm:
    for _ in range(k):
        f = Fof(f)
    return f


def kappa(a: int) -> ArrowTerm:
    """κ_a = φ_a ∘ γ_a"""
    return Comp(Phi(a), Gamma(a))


# ═══════════════════════════════════════════════════════════════════
#  ψ, ∗, χ
# ═══════════════════════════════════════════════════════════════════

def _psi_gens(f: ArrowTerm) -> List:
    if isinstance(f, Id):
        return [Unit()]
    if isinstance(f, Phi):
        return [Cup(f.n + 1)]
    if isinstance(f, Gamma):
        return [Cap(f.n + 1)]
    if isinstance(f, Fof):
        return _psi_gens(f.f)
    return _psi_gens(f.g) + _psi_gens(f.f)


def psi(f: ArrowTerm, theory: Theory = K) -> Term:
    type_of(f)
    return Term(tuple(_psi_gens(f)), theory)


def star(g: ArrowTerm, f: ArrowTerm) -> ArrowTerm:
    """f: m→n, g: k→l;  n ≤ k ise g∘F^{k−n}f, değilse F^{n−k}g∘f."""
    _, n = type_of(f)
    k, _ = type_of(g)
    if n <= k:
        return Comp(g, fpow(f, k - n))
    return Comp(fpow(g, n - k), f)


def _chi_gen(g) -> ArrowTerm:
    if isinstance(g, Cup):
        return Phi(g.k - 1)
    if isinstance(g, Cap):
        return Gamma(g.k - 1)
    if isinstance(g, Unit):
        return Id(0)
    if isinstance(g, Circle):
        return kappa(0)
    if isinstance(g, Diapsis):
        return star(Gamma(g.i - 1), Phi(g.i - 1))
    if isinstance(g, EXT_GENS):
        return chi(from_extgen(g))
    raise TheoryError(f"generator {g!r} has no arrow counterpart")


def chi(t: Term) -> ArrowTerm:
    gens = t.gens
    if not gens:
        return Id(0)
    result = _chi_gen(gens[0])
    for g in gens[1:]:
        result = star(result, _chi_gen(g))
    return result


# ═══════════════════════════════════════════════════════════════════
#  EŞİTLİK
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class ArrowComparison:
    equal: bool
    reason: str
    caveat: str = ""

    def __bool__(self) -> bool:
        return self.equal


LC_ZERO_CAVEAT = ("type (0,0) in L_c: equality via ψ is asserted for this case "
                  "without a published argument")

_DECIDERS = {"K": (eq_K, K), "J": (eq_J, K), "L": (eq_L, L)}


def compare_arrows(f: ArrowTerm, g: ArrowTerm, level: str = "K") -> ArrowComparison:
    if level not in _DECIDERS:
        raise TheoryError(f"unknown arrow theory level {level!r}")
    tf, tg = type_of(f), type_of(g)
    if tf != tg:
        return ArrowComparison(False, f"types differ: {tf[0]}→{tf[1]} vs {tg[0]}→{tg[1]}")

    decide, theory = _DECIDERS[level]
    equal = decide(psi(f, theory), psi(g, theory))
    caveat = LC_ZERO_CAVEAT if level == "L" and tf == (0, 0) else ""
    reason = f"ψ images {'agree' if equal else 'differ'} in {level}ω"
    logger.debug("%sc: %s =? %s → %s", level, format_arrow(f), format_arrow(g), equal)
    return ArrowComparison(equal, reason, caveat)


def eq_Kc(f: ArrowTerm, g: ArrowTerm) -> bool:
    return compare_arrows(f, g, "K").equal


def eq_Jc(f: ArrowTerm, g: ArrowTerm) -> bool:
    return compare_arrows(f, g, "J").equal


def eq_Lc(f: ArrowTerm, g: ArrowTerm) -> bool:
    return compare_arrows(f, g, "L").equal


# ═══════════════════════════════════════════════════════════════════
#  METİN GRAMERİ
# ═══════════════════════════════════════════════════════════════════

_ARROW_TOKEN = re.compile(r"\s*(?:(id|phi|gamma|F)\b|(\d+)|([().∘]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _ARROW_TOKEN.match(text, pos)
        if m is None:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r} in arrow term", text, start)
        word, number, punct = m.groups()
        start = m.start(m.lastindex)
        if word:
            tokens.append(("word", word, start))
        elif number:
            tokens.append(("int", number, start))
        else:
            tokens.append(("punct", "." if punct == "∘" else punct, start))
        pos = m.end()
    return tokens


class _ArrowParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, self.text, tok[2] if tok else len(self.text))

    def expect(self, kind: str, value: str = None):
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            self.fail(f"expected {value or kind}")
        self.i += 1
        return tok

    def expr(self, depth: int) -> ArrowTerm:
        if depth > MAX_ARROW_DEPTH:
            self.fail("arrow term nested too deeply")
        left = self.factor(depth)
        tok = self.peek()
        if tok and tok[:2] == ("punct", "."):
            self.i += 1
            return Comp(left, self.expr(depth + 1))
        return left

    def factor(self, depth: int) -> ArrowTerm:
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of arrow term")
        kind, value, _ = tok
        if kind == "punct" and value == "(":
            self.i += 1
            inner = self.expr(depth + 1)
            self.expect("punct", ")")
            return inner
        if kind == "word" and value == "F":
            self.i += 1
            self.expect("punct", "(")
            inner = self.expr(depth + 1)
            self.expect("punct", ")")
            return Fof(inner)
        if kind == "word":
            self.i += 1
            n = int(self.expect("int")[1])
            return {"id": Id, "phi": Phi, "gamma": Gamma}[value](n)
        self.fail(f"unexpected {value!r}")


def parse_arrow(text: str) -> ArrowTerm:
    parser = _ArrowParser(text)
    if not parser.tokens:
        raise ParseError("empty arrow term", text, 0)
    f = parser.expr(0)
    if parser.peek() is not None:
        parser.fail("trailing input after arrow term")
    type_of(f)
    return f


def format_arrow(f: ArrowTerm) -> str:
    if isinstance(f, Id):
        return f"id {f.n}"
    if isinstance(f, Phi):
        return f"phi {f.n}"
    if isinstance(f, Gamma):
        return f"gamma {f.n}"
    if isinstance(f, Fof):
        return f"F({format_arrow(f.f)})"
    left = format_arrow(f.g)
    if isinstance(f.g, Comp):
        left = f"({left})"
    return f"{left} . {format_arrow(f.f)}"


def adjunction_equations(f: ArrowTerm) -> Dict[str, Tuple[ArrowTerm, ArrowTerm]]:
    """f: a→b için K-birleşiminin denklem örnekleri (sol, sağ)."""
    a, b = type_of(f)
    return {
        "id left": (Comp(Id(b), f), f),
        "id right": (Comp(f, Id(a)), f),
        "F id": (Fof(Id(a)), Id(a + 1)),
        "F comp": (Fof(Comp(Id(b), f)), Comp(Fof(Id(b)), Fof(f))),
        "nat φ": (Comp(f, Phi(a)), Comp(Phi(b), fpow(f, 2))),
        "nat γ": (Comp(fpow(f, 2), Gamma(a)), Comp(Gamma(b), f)),
        "φγ left": (Comp(Fof(Phi(a)), Gamma(a + 1)), Id(a + 1)),
        "φγ right": (Comp(Phi(a + 1), Fof(Gamma(a))), Id(a + 1)),
        "φγK": (Fof(kappa(a)), kappa(a + 1)),
        "κ": (Comp(f, kappa(a)), Comp(kappa(b), f)),
    }
