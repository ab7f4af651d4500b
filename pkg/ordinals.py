# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Circular Forms Module v1.0
ε₀ altındaki ordinallerin Cantor normal formu olarak dairesel formlar.
Parantez kelimeleri ↔ CNF ağaçları, doğal toplam (♯), ω-kuvveti, karşılaştırma
ve K seviyesine çöküş (daire sayısı).

Ordinaller yalnızca dairesel formlar üzerinden temsil edilir; ι ve ι⁻¹
veri temsili üzerinde özdeşliktir.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Iterator, Tuple

from errors import ParseError


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _sort_key(exponents: tuple) -> tuple:
    return tuple(e.key for e in exponents)


@functools.total_ordering
@dataclass(frozen=True)
class CircularForm:
    """
    CNF ağacı: üsler büyükten küçüğe sıralı tutulur.
    Boş üs dizisi 0'ı (boş dairesel form e) gösterir.
    """

    exponents: Tuple["CircularForm", ...] = ()
    key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ordered = tuple(sorted(self.exponents, key=lambda e: e.key, reverse=True))
        object.__setattr__(self, "exponents", ordered)
        object.__setattr__(self, "key", _sort_key(ordered))

    def __lt__(self, other):
        if not isinstance(other, CircularForm):
            return NotImplemented
        return self.key < other.key

    def __bool__(self) -> bool:
        return bool(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __str__(self) -> str:
        return print_pword(self)


ZERO = CircularForm()
ONE = CircularForm((ZERO,))
OMEGA = CircularForm((ONE,))


# ═══════════════════════════════════════════════════════════════════
#  PARSE / PRINT
# ═══════════════════════════════════════════════════════════════════

def parse_pword(text: str) -> CircularForm:
    """Parantez kelimesini CNF'e çevirir; her düğümün çocukları sıralanır."""
    stack = [[]]
    opened = []
    for pos, ch in enumerate(text):
        if ch == "(":
            stack.append([])
            opened.append(pos)
        elif ch == ")":
            if not opened:
                raise ParseError("unbalanced ')'", text, pos)
            opened.pop()
            children = stack.pop()
            stack[-1].append(CircularForm(tuple(children)))
        else:
            raise ParseError(f"unexpected character {ch!r} in parenthetical word", text, pos)
    if opened:
        raise ParseError("unclosed '('", text, opened[-1])
    return CircularForm(tuple(stack[0]))


def print_pword(a: CircularForm) -> str:
    return "".join("(" + print_pword(e) + ")" for e in a.exponents)


def describe(a: CircularForm) -> str:
    """Cantor gösterimi: 0, 3, ω, ω·2+1, ω^(ω+1)."""
    if not a:
        return "0"
    parts = []
    for exponent, group in _grouped(a.exponents):
        count = len(group)
        if not exponent:
            parts.append(str(count))
            continue
        if exponent == ONE:
            head = "ω"
        else:
            inner = describe(exponent)
            head = "ω^" + (f"({inner})" if ("+" in inner or "·" in inner) else inner)
        parts.append(head if count == 1 else f"{head}·{count}")
    return "+".join(parts)


def _grouped(exponents):
    group = []
    for e in exponents:
        if group and group[0] != e:
            yield group[0], group
            group = []
        group.append(e)
    if group:
        yield group[0], group


# ═══════════════════════════════════════════════════════════════════
#  ARİTMETİK
# ═══════════════════════════════════════════════════════════════════

def from_int(n: int) -> CircularForm:
    if n < 0:
        raise ValueError("circular forms are natural")
    return CircularForm((ZERO,) * n)


def nat_sum(a: CircularForm, b: CircularForm) -> CircularForm:
    """Doğal (Hessenberg) toplam: üs dizilerini birleştirip yeniden sırala."""
    if not a:
        return b
    if not b:
        return a
    return CircularForm(a.exponents + b.exponents)


def omega_pow(a: CircularForm) -> CircularForm:
    return CircularForm((a,))


def cmp(a: CircularForm, b: CircularForm) -> Ordering:
    if a.key < b.key:
        return Ordering.LESS
    if a.key > b.key:
        return Ordering.GREATER
    return Ordering.EQUAL


@functools.lru_cache(maxsize=4096)
def circle_count(a: CircularForm) -> int:
    """Parantez kelimesindeki '(' sayısı; dairesel formun K seviyesine çöküşü."""
    return sum(1 + circle_count(e) for e in a.exponents)


def depth(a: CircularForm) -> int:
    if not a:
        return 0
    return 1 + max(depth(e) for e in a.exponents)


def splits(a: CircularForm) -> Iterator[Tuple[CircularForm, CircularForm]]:
    """
    a = left ♯ right olacak şekilde CNF kesim noktalarındaki tüm ayrışımlar
    (boş parçalar dahil).
    """
    for cut in range(len(a.exponents) + 1):
        yield CircularForm(a.exponents[:cut]), CircularForm(a.exponents[cut:])
