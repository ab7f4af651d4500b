# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Frieze Module v1.0
K/J seviyesinde frieze semantiği: kesişmesiz mükemmel eşleşmeler + daire sayısı,
bileşke (δ), değişmezler (span, eğim dizileri, taç çifti, denge), üretme yordamı
ile diyagramdan terime dönüş ve Catalan sayımı.

Nokta kodlaması: üst nokta T_j → +j, alt nokta B_i → −i.
Eşleşmeler her zaman kırpılmış (trimmed) saklanır; tip (üst, alt) gerektiğinde
kuyruk transversalleri (B_{m+t}, T_{n+t}) eklenerek geri kazanılır.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from errors import EquationHoldsError, MatchingError, RealizabilityError, TheoryError
from normalize import enumerate_jones_nf, jones_to_term
from terms import EXT_GENS, Cap, Circle, Cup, Diapsis, Kn, Term, Unit, make_term

logger = logging.getLogger("tlengine.diagram")

Pair = Tuple[int, int]


def point_label(x: int) -> str:
    return f"T{x}" if x > 0 else f"B{-x}"


def _norm_pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


# ═══════════════════════════════════════════════════════════════════
#  EŞLEŞME
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Matching:
    top: int
    bottom: int
    pairs: FrozenSet[Pair] = frozenset()

    @classmethod
    def from_pairs(cls, top: int, bottom: int, pairs: Iterable[Pair]) -> "Matching":
        return make_matching(top, bottom, pairs)

    @property
    def square_width(self) -> int:
        """Kare tipte en küçük genişlik; kare değilse −1."""
        return self.top if self.top == self.bottom else -1

    @property
    def sort_key(self) -> tuple:
        return (self.top, self.bottom, tuple(sorted(self.pairs)))

    def partner_map(self) -> Dict[int, int]:
        partner = {}
        for a, b in self.pairs:
            partner[a] = b
            partner[b] = a
        return partner

    def cups(self) -> List[Pair]:
        return sorted(p for p in self.pairs if p[0] > 0)

    def caps(self) -> List[Pair]:
        """(−j, −i) biçiminde, i < j."""
        return sorted(p for p in self.pairs if p[1] < 0)

    def transversals(self) -> List[Pair]:
        """(−i, j): B_i ↔ T_j."""
        return sorted(p for p in self.pairs if p[0] < 0 < p[1])

    def __str__(self) -> str:
        body = ", ".join(f"({point_label(a)},{point_label(b)})"
                         for a, b in sorted(self.pairs, key=lambda p: (abs(p[0]), p)))
        return f"{self.top}↑ {self.bottom}↓ {{{body}}}"


IDENTITY = Matching(0, 0)


def identity(n: int = 0) -> Matching:
    """n genişliğinde birim; kırpılmış hali her n için boştur."""
    return trim(pad(IDENTITY, n))


def _boundary_position(x: int, top: int, bottom: int) -> int:
    """Sınır döngüsü B1,…,B_bottom,T_top,…,T1 üzerindeki sıra."""
    if x < 0:
        return -x - 1
    return bottom + (top - x)


def is_perfect(m: Matching) -> bool:
    seen = []
    for a, b in m.pairs:
        seen.extend((a, b))
    expected = sorted(list(range(-m.bottom, 0)) + list(range(1, m.top + 1)))
    return sorted(seen) == expected


def is_noncrossing(m: Matching) -> bool:
    partner = {}
    for a, b in m.pairs:
        pa = _boundary_position(a, m.top, m.bottom)
        pb = _boundary_position(b, m.top, m.bottom)
        partner[pa] = pb
        partner[pb] = pa
    stack = []
    for pos in range(m.top + m.bottom):
        other = partner.get(pos)
        if other is None:
            return False
        if other > pos:
            stack.append(other)
        elif not stack or stack.pop() != pos:
            return False
    return not stack


def trim(m: Matching) -> Matching:
    """Kuyruk transversallerini (B_bottom, T_top) sondan atar."""
    pairs = set(m.pairs)
    top, bottom = m.top, m.bottom
    while top > 0 and bottom > 0 and (-bottom, top) in pairs:
        pairs.remove((-bottom, top))
        top -= 1
        bottom -= 1
    return Matching(top, bottom, frozenset(pairs))


def pad(m: Matching, t: int) -> Matching:
    pairs = set(m.pairs)
    for s in range(1, t + 1):
        pairs.add((-(m.bottom + s), m.top + s))
    return Matching(m.top + t, m.bottom + t, frozenset(pairs))


def make_matching(top: int, bottom: int, pairs: Iterable[Pair]) -> Matching:
    """Doğrular ve kırpar; hatalı eşleşmede MatchingError."""
    m = Matching(top, bottom, frozenset(_norm_pair(a, b) for a, b in pairs))
    if not is_perfect(m):
        raise MatchingError(f"not a perfect matching on {top} top and {bottom} bottom points")
    if not is_noncrossing(m):
        raise MatchingError("threads cross")
    return trim(m)


# ═══════════════════════════════════════════════════════════════════
#  FRIEZE
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class FriezeK:
    matching: Matching = field(default_factory=lambda: IDENTITY)
    loops: int = 0

    def __str__(self) -> str:
        return f"{self.matching} loops={self.loops}"


UNIT_FRIEZE = FriezeK()


def gen_frieze(g) -> FriezeK:
    if isinstance(g, Unit):
        return UNIT_FRIEZE
    if isinstance(g, Circle):
        return FriezeK(IDENTITY, 1)
    if isinstance(g, Cup):
        k = g.k
        pairs = {(-i, i) for i in range(1, k)} | {(k, k + 1)}
        return FriezeK(trim(Matching(k + 1, k - 1, frozenset(pairs))))
    if isinstance(g, Cap):
        k = g.k
        pairs = {(-i, i) for i in range(1, k)} | {(-(k + 1), -k)}
        return FriezeK(trim(Matching(k - 1, k + 1, frozenset(pairs))))
    if isinstance(g, Diapsis):
        i = g.i
        pairs = {(-j, j) for j in range(1, i)} | {(i, i + 1), (-(i + 1), -i)}
        return FriezeK(trim(Matching(i + 1, i + 1, frozenset(pairs))))
    raise TheoryError(f"generator {g!r} has no K-level frieze")


def compose(upper: FriezeK, lower: FriezeK) -> FriezeK:
    """
    upper'ın alt noktaları lower'ın üst noktalarına yapıştırılır.
    Yeni iplikler sınır noktaları arasındaki maksimal yollardır; ara yüzde
    kalan kapalı döngülerin her biri bir daire ekler.
    """
    width = max(upper.matching.bottom, lower.matching.top)
    up = pad(upper.matching, width - upper.matching.bottom)
    low = pad(lower.matching, width - lower.matching.top)
    partner = {"U": up.partner_map(), "L": low.partner_map()}
    visited = set()

    def walk(side: str, x: int) -> int:
        while True:
            y = partner[side][x]
            if side == "U":
                if y > 0:
                    return y
                visited.add(-y)
                side, x = "L", -y
            else:
                if y < 0:
                    return y
                visited.add(y)
                side, x = "U", -y

    pairs = set()
    for j in range(1, up.top + 1):
        pairs.add(_norm_pair(j, walk("U", j)))
    for i in range(1, low.bottom + 1):
        pairs.add(_norm_pair(-i, walk("L", -i)))

    new_loops = 0
    for start in range(1, width + 1):
        if start in visited:
            continue
        new_loops += 1
        x = start
        while x not in visited:
            visited.add(x)
            y = -partner["U"][-x]
            visited.add(y)
            x = partner["L"][y]

    result = trim(Matching(up.top, low.bottom, frozenset(pairs)))
    return FriezeK(result, upper.loops + lower.loops + new_loops)


def eval_term(t: Term) -> FriezeK:
    """δ(t); en soldaki harf en alttaki diyagramdır."""
    frieze = UNIT_FRIEZE
    for g in t.gens:
        if isinstance(g, EXT_GENS):
            raise TheoryError("L-level generators carry ordinal data; normalize with the L engine instead")
        frieze = compose(gen_frieze(g), frieze)
    return frieze


def eq_frieze(f1: FriezeK, f2: FriezeK, ignore_loops: bool = False) -> bool:
    if f1.matching != f2.matching:
        return False
    return ignore_loops or f1.loops == f2.loops


# ═══════════════════════════════════════════════════════════════════
#  DEĞİŞMEZLER
# ═══════════════════════════════════════════════════════════════════

def cups_caps(f: FriezeK) -> Tuple[int, int]:
    return len(f.matching.cups()), len(f.matching.caps())


def balance(t: Term, u: Term) -> int:
    cups_t, caps_t = cups_caps(eval_term(t))
    cups_u, caps_u = cups_caps(eval_term(u))
    return abs(cups_t - cups_u + caps_u - caps_t)


def collapse_modulus(t: Term, u: Term) -> int:
    """t = u eklenince J_ω, ℤ/β(t,u)'ya çöker."""
    if eq_frieze(eval_term(t), eval_term(u), ignore_loops=True):
        raise EquationHoldsError("equation holds in J_ω; no collapse")
    return balance(t, u)


def _square(f: FriezeK) -> Matching:
    m = f.matching
    if m.top != m.bottom:
        raise MatchingError(f"frieze of type ({m.top},{m.bottom}) has no square type")
    return m


def span(f: FriezeK) -> int:
    return sum(abs(abs(a) - abs(b)) for a, b in _square(f).pairs)


def slope_sequences(f: FriezeK) -> Tuple[List[int], List[int]]:
    """
    Üst eğim noktası: eşi kendisinden büyük indisli olan üst nokta.
    Alt eğim noktası j: eşi kendisinden küçük indisli olan alt nokta; B'ye j−1 yazılır.
    """
    m = _square(f)
    partner = m.partner_map()
    tops = sorted(j for j in range(1, m.top + 1) if abs(partner[j]) > j)
    bottoms = sorted(j - 1 for j in range(1, m.bottom + 1) if abs(partner[-j]) < j)
    return tops, bottoms


def crown_pair(f: FriezeK) -> Tuple[int, int]:
    """
    Tüm cup ve cap'leri çevreleyen en içteki transversal [−k, l]; kuyruk
    transversalleri de adaydır. Cup/cap yoksa (1, 1).
    """
    m = f.matching
    arcs = m.cups() + m.caps()
    if not arcs:
        return 1, 1
    lo = min(a for a, _ in arcs)
    hi = max(b for _, b in arcs)
    tail = max(1, -lo - m.bottom + 1, hi - m.top + 1)
    best = (m.bottom + tail, m.top + tail)
    for a, b in m.transversals():
        if a < lo and b > hi and b < best[1]:
            best = (-a, b)
    return best


def threads_covering(f: FriezeK, j: int) -> int:
    """(j, j+1) aralığının üzerinden geçen iplik sayısı (kare tipte)."""
    count = 0
    for a, b in _square(f).pairs:
        left, right = sorted((abs(a), abs(b)))
        if left <= j < right:
            count += 1
    return count


def span_one_cups(f: FriezeK) -> List[int]:
    return [a for a, b in f.matching.cups() if b == a + 1]


# ═══════════════════════════════════════════════════════════════════
#  DİYAGRAM → TERİM
# ═══════════════════════════════════════════════════════════════════

def _covering_thread(partner: Dict[int, int], n: int, j: int) -> Pair:
    """
    υ_j = (T_j, T_{j+1}) dışında (j, j+1)'i örten iplik; öncelik sırası:
    cup (en büyük p), üstten alta transversal (en büyük p),
    alttan üste transversal (en küçük p), cap (en küçük p).
    Dönen çiftin ilk elemanı soldaki uçtur.
    """
    cups, down, up, caps = [], [], [], []
    for x in range(-n, n + 1):
        if x == 0 or x in (j, j + 1):
            continue
        y = partner[x]
        left, right = sorted((abs(x), abs(y)))
        if not (left <= j < right) or abs(x) != left:
            continue
        if x > 0 and y > 0:
            cups.append((left, x, y))
        elif x < 0 and y < 0:
            caps.append((left, x, y))
        elif x > 0:
            down.append((left, x, y))
        else:
            up.append((left, x, y))
    if cups:
        _, x, y = max(cups)
    elif down:
        _, x, y = max(down)
    elif up:
        _, x, y = min(up)
    elif caps:
        _, x, y = min(caps)
    else:
        raise RealizabilityError(f"no thread covers the cup at {j}")
    return x, y


def matching_to_term(f: FriezeK, n: int) -> Term:
    """
    c^loops ardından, en büyük j'li span-1 cup (T_j, T_{j+1}) her adımda H_j
    olarak ayrılır (D₁ ≅ D₂ ∘ H_j). Harfler ters sırada toplanır.
    """
    m = f.matching
    if m.top != m.bottom or m.top > n:
        raise RealizabilityError(f"frieze of type ({m.top},{m.bottom}) is not realizable within width {n}")
    partner = pad(m, n - m.top).partner_map()
    letters: List[int] = []

    for _ in range(n * n + 1):
        ones = [j for j in range(1, n) if partner[j] == j + 1]
        if not ones:
            break
        j = max(ones)
        x, y = _covering_thread(partner, n, j)
        for a in (j, j + 1, x, y):
            del partner[a]
        partner[x], partner[j] = j, x
        partner[j + 1], partner[y] = y, j + 1
        letters.append(j)
    else:
        raise RealizabilityError("generating procedure did not terminate")

    if any(partner[x] != -x for x in range(1, n + 1)):
        raise RealizabilityError("remaining frieze is not the identity")

    gens = [Circle()] * f.loops + [Diapsis(j) for j in reversed(letters)]
    logger.debug("matching_to_term: n=%d → %d diapsis", n, len(letters))
    return make_term(gens, Kn(n))


# ═══════════════════════════════════════════════════════════════════
#  CATALAN
# ═══════════════════════════════════════════════════════════════════

def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _noncrossing(positions: List[int]) -> List[List[Pair]]:
    if not positions:
        return [[]]
    first = positions[0]
    out = []
    for k in range(1, len(positions), 2):
        for inner in _noncrossing(positions[1:k]):
            for outer in _noncrossing(positions[k + 1:]):
                out.append([(first, positions[k])] + inner + outer)
    return out


def enumerate_Jn(n: int, method: str = "direct") -> List[Matching]:
    """
    Kare tip n'nin tüm kırpılmış kesişmesiz mükemmel eşleşmeleri.
    method="direct": sınır döngüsü üzerinde özyinelemeli sayım;
    method="jones": dairesiz Jones normal formlarının δ görüntüsü.
    """
    if n < 0:
        raise ValueError("n must be ≥ 0")
    if method == "direct":
        def point(pos: int) -> int:
            return -(pos + 1) if pos < n else 2 * n - pos

        found = [trim(Matching(n, n, frozenset(_norm_pair(point(a), point(b)) for a, b in pairs)))
                 for pairs in _noncrossing(list(range(2 * n)))]
    elif method == "jones":
        found = [eval_term(jones_to_term(nf, Kn(n))).matching for nf in enumerate_jones_nf(n)]
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    logger.debug("enumerate_Jn(%d, %s) → %d", n, method, len(found))
    return sorted(found, key=lambda m: m.sort_key)


def frieze_at_width(m: Matching, n: int) -> Matching:
    """Kare eşleşmeyi n genişliğine doldurur."""
    if m.top != m.bottom or m.top > n:
        raise RealizabilityError(f"matching of type ({m.top},{m.bottom}) does not fit width {n}")
    return pad(m, n - m.top)
