# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Normal Form Engines v1.0
Üç normalleştirme motoru ve eşitlik kararları:
  • L_ω  — a/b/c alternatif formülasyonu, ekleme (insertion) stratejisi → LNF
  • K_ω  — K-normal form ∩…∩ c^l ∪…∪ → KNF
  • K_n  — blok formülasyonu, en soldaki redeksin yeniden yazımı → Jones normal formu

Ekleme stratejisinin her adımı bir denklemin soldan sağa ya da sağdan sola
okunuşudur; K_n yeniden yazımı her adımda (n₁, n₂) ölçüsünü sözlük sırasında düşürür.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from errors import IndexRangeError, TheoryError
from ordinals import ZERO, CircularForm, circle_count, nat_sum, omega_pow
from terms import (
    A, B, C, K, Cap, Circle, Cup, Diapsis, ExtGen, Term, Theory, Unit,
    embed_diapsides, from_extgen, print_extword, print_term, to_extword,
)

logger = logging.getLogger("tlengine.normalize")

Entry = Tuple[int, CircularForm]


# ═══════════════════════════════════════════════════════════════════
#  L_ω: LNF
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class LNF:
    """b_{j1}…b_{jm} c_{k1}…c_{kl} a_{i1}…a_{in};  j'ler azalan, k'lar ve i'ler artan."""

    b_part: Tuple[Entry, ...] = ()
    c_part: Tuple[Entry, ...] = ()
    a_part: Tuple[Entry, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.b_part or self.c_part or self.a_part)

    def __str__(self) -> str:
        return print_extword(lnf_to_extword(self))


EMPTY_LNF = LNF()


def lnf_append(nf: LNF, g: ExtGen) -> LNF:
    """nf·g'nin LNF'i."""
    if isinstance(g, A):
        return _append_a(nf, g.k, g.alpha)
    if isinstance(g, C):
        return _append_c(nf, g.k, g.alpha)
    if isinstance(g, B):
        return _append_b(nf, g.k, g.alpha)
    raise TheoryError(f"lnf_append expects a/b/c generators, got {g!r}")


def _append_a(nf: LNF, k: int, alpha: CircularForm) -> LNF:
    # (aa): a_i a_k = a_k a_{i+2} for k ≤ i
    a = list(nf.a_part)
    suffix: List[Entry] = []
    while a and a[-1][0] >= k:
        i, form = a.pop()
        suffix.insert(0, (i + 2, form))
    a.append((k, alpha))
    a.extend(suffix)
    return LNF(nf.b_part, nf.c_part, tuple(a))


def _append_c(nf: LNF, m: int, gamma: CircularForm) -> LNF:
    if not gamma:
        return nf  # (c1)
    a = list(nf.a_part)
    for pos in range(len(a) - 1, -1, -1):
        i, form = a[pos]
        if m == i + 1:
            a[pos] = (i, nat_sum(form, gamma))  # (ac3)
            return LNF(nf.b_part, nf.c_part, tuple(a))
        if m >= i + 2:
            m -= 2  # (ac2)
        # m ≤ i: (ac1)
    return LNF(nf.b_part, _merge_c(nf.c_part, [(m, gamma)]), nf.a_part)


def _merge_c(c_part: Iterable[Entry], extra: Iterable[Entry]) -> Tuple[Entry, ...]:
    """(cc) ile sırala, (c2) ile aynı indeksleri birleştir, (c1) ile sıfırları at."""
    merged = {}
    for k, form in list(c_part) + list(extra):
        merged[k] = nat_sum(merged.get(k, ZERO), form)
    return tuple((k, merged[k]) for k in sorted(merged) if merged[k])


def _append_b(nf: LNF, m: int, beta: CircularForm) -> LNF:
    a = list(nf.a_part)
    for pos in range(len(a) - 1, -1, -1):
        i, alpha = a[pos]
        if i >= m + 2:
            a[pos] = (i - 2, alpha)  # (ab2)
            continue
        if m >= i + 2:
            m -= 2  # (ab1)
            continue

        if m == i + 1:
            produced = [C(i, beta), C(i + 1, alpha)]  # (ab3.1)
        elif i == m + 1:
            produced = [C(m, alpha), C(m + 1, beta)]  # (ab3.2)
        else:
            produced = [C(m, omega_pow(nat_sum(alpha, beta)))]  # (ab3.3)

        result = LNF(nf.b_part, nf.c_part, tuple(a[:pos]))
        for g in produced:
            result = _append_c(result, g.k, g.alpha)
        for i_suffix, form in a[pos + 1:]:
            result = _append_a(result, i_suffix, form)
        return result

    # b tüm a'ları geçti; şimdi c'leri sağdan sola geçiyor
    passed: List[Entry] = []
    for x, gamma in reversed(nf.c_part):
        if x == m + 1:
            beta = nat_sum(gamma, beta)  # (bc3)
        elif x >= m + 2:
            passed.append((x - 2, gamma))  # (bc2)
        else:
            passed.append((x, gamma))  # (bc1)
    c_part = _merge_c((), passed)

    # (bb): b_j b_m = b_{m+2} b_j for j ≤ m
    b = list(nf.b_part)
    suffix: List[Entry] = []
    while b and b[-1][0] <= m:
        suffix.insert(0, b.pop())
        m += 2
    b.append((m, beta))
    b.extend(suffix)
    return LNF(tuple(b), c_part, tuple(a))


def _as_l_term(t: Term) -> Term:
    if t.theory.kind == "Ln":
        t = embed_diapsides(t)
    if t.theory.kind != "L":
        raise TheoryError(f"L-normalization expects an Lω or Ln term, got {t.theory}")
    return t


def normalize_extword(word: Iterable[ExtGen]) -> LNF:
    nf = EMPTY_LNF
    for g in word:
        nf = lnf_append(nf, g)
    return nf


def normalize_L(t: Term) -> LNF:
    return normalize_extword(to_extword(_as_l_term(t)))


def eq_L(t: Term, u: Term) -> bool:
    return normalize_L(t) == normalize_L(u)


def eq_Ln(t: Term, u: Term, n: Optional[int] = None) -> bool:
    for term in (t, u):
        _check_width(term, n, "Ln")
    return eq_L(t, u)


def lnf_to_extword(nf: LNF) -> Tuple[ExtGen, ...]:
    return (tuple(B(j, f) for j, f in nf.b_part)
            + tuple(C(k, f) for k, f in nf.c_part)
            + tuple(A(i, f) for i, f in nf.a_part))


# ═══════════════════════════════════════════════════════════════════
#  K_ω: KNF
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class KNF:
    """∩_{j1}…∩_{jm} c^l ∪_{i1}…∪_{in};  caps azalan, cups artan."""

    caps: Tuple[int, ...] = ()
    circles: int = 0
    cups: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return print_term(knf_to_term(self))


EMPTY_KNF = KNF()


def _bubble_cup(cups: List[int], k: int) -> None:
    # (cup): ∪_i ∪_k = ∪_k ∪_{i+2} for k ≤ i
    suffix = []
    while cups and cups[-1] >= k:
        suffix.insert(0, cups.pop() + 2)
    cups.append(k)
    cups.extend(suffix)


def knf_append(nf: KNF, g) -> KNF:
    if isinstance(g, Unit):
        return nf
    if isinstance(g, Circle):
        return KNF(nf.caps, nf.circles + 1, nf.cups)
    if isinstance(g, Cup):
        cups = list(nf.cups)
        _bubble_cup(cups, g.k)
        return KNF(nf.caps, nf.circles, tuple(cups))
    if not isinstance(g, Cap):
        raise TheoryError(f"knf_append expects cup/cap/circle generators, got {g!r}")

    m = g.k
    cups = list(nf.cups)
    for pos in range(len(cups) - 1, -1, -1):
        i = cups[pos]
        if i >= m + 2:
            cups[pos] = i - 2  # (cup-cap 2)
            continue
        if m >= i + 2:
            m -= 2  # (cup-cap 1)
            continue
        # |i−m| = 1: (cup-cap 3);  i = m: ∪_k∩_k = c
        circles = nf.circles + (1 if i == m else 0)
        prefix = cups[:pos]
        for i_suffix in cups[pos + 1:]:
            _bubble_cup(prefix, i_suffix)
        return KNF(nf.caps, circles, tuple(prefix))

    # (cap): ∩_j ∩_m = ∩_{m+2} ∩_j for j ≤ m
    caps = list(nf.caps)
    suffix = []
    while caps and caps[-1] <= m:
        suffix.insert(0, caps.pop())
        m += 2
    caps.append(m)
    caps.extend(suffix)
    return KNF(tuple(caps), nf.circles, tuple(cups))


def _as_k_word(t: Term) -> Iterator:
    """K/J kelimesi olarak üreteçler; diapsisler ve a/b/c üreteçleri açılır."""
    if t.theory.finite:
        t = embed_diapsides(t)
    for g in t.gens:
        if isinstance(g, (A, B, C)):
            yield from from_extgen(g).gens
        else:
            yield g


def normalize_K(t: Term) -> KNF:
    nf = EMPTY_KNF
    for g in _as_k_word(t):
        nf = knf_append(nf, g)
    return nf


def eq_K(t: Term, u: Term) -> bool:
    return normalize_K(t) == normalize_K(u)


def eq_J(t: Term, u: Term) -> bool:
    a, b = normalize_K(t), normalize_K(u)
    return a.caps == b.caps and a.cups == b.cups


def collapse_lnf(nf: LNF) -> KNF:
    """LNF'in K seviyesine izdüşümü: tüm dairesel formlar düz daire sayısına çöker."""
    circles = sum(circle_count(f) for _, f in nf.b_part + nf.c_part + nf.a_part)
    return KNF(tuple(j for j, _ in nf.b_part), circles, tuple(i for i, _ in nf.a_part))


def knf_to_term(nf: KNF, theory: Theory = K) -> Term:
    gens = [Cap(j) for j in nf.caps] + [Circle()] * nf.circles + [Cup(i) for i in nf.cups]
    return Term(tuple(gens), theory)


# ═══════════════════════════════════════════════════════════════════
#  K_n: BLOK FORMÜLASYONU VE JONES NORMAL FORMU
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Block:
    """h_[i,j] = h_i h_{i−1} … h_j,  i ≥ j"""

    i: int
    j: int

    @property
    def weight(self) -> int:
        return self.i - self.j + 2


BlockItem = Union[Block, Circle, Unit]


@dataclass(frozen=True)
class JonesNF:
    """c^l h_[b1,a1] … h_[bk,ak];  a'lar ve b'ler kesin artan, b ≥ a."""

    circles: int = 0
    blocks: Tuple[Tuple[int, int], ...] = ()

    def __str__(self) -> str:
        return print_term(jones_to_term(self))


def block_word(t: Term) -> Tuple[BlockItem, ...]:
    """Her diapsis tekil blok h_[i,i] olur."""
    out = []
    for g in t.gens:
        if isinstance(g, Diapsis):
            out.append(Block(g.i, g.i))
        elif isinstance(g, (Circle, Unit)):
            out.append(g)
        else:
            raise TheoryError(f"generator {g!r} is not a K_n generator")
    return tuple(out)


def _is_block_redex(x: Block, y: Block) -> bool:
    return x.i >= y.i or x.j >= y.j


def _rewrite_blocks(x: Block, y: Block) -> Tuple[str, Tuple[BlockItem, ...]]:
    i, j, k, l = x.i, x.j, y.i, y.j
    if j >= k + 2:
        return "hI", (y, x)
    if abs(k - j) == 1:
        return "hII", (Block(i, l),)
    if j == k:
        return "hcII", (Circle(), Block(i, l))
    if i >= k and j >= l:
        return "hIII.1", (Block(k - 2, l), Block(i, j + 2))
    if i < k and j >= l:
        return "hIII.2", (Block(i, l), Block(k, j + 2))
    return "hIII.3", (Block(k - 2, j), Block(i, l))


def _leftmost_rewrite(word: Tuple[BlockItem, ...]):
    for p, x in enumerate(word):
        if isinstance(x, Unit):
            return "1", word[:p] + word[p + 1:]
        if not isinstance(x, Block) or p + 1 >= len(word):
            continue
        y = word[p + 1]
        if isinstance(y, Circle):
            return "hcI", word[:p] + (y, x) + word[p + 2:]
        if isinstance(y, Block) and _is_block_redex(x, y):
            rule, replacement = _rewrite_blocks(x, y)
            return rule, word[:p] + replacement + word[p + 2:]
    return None


def rewrite_steps(word: Iterable[BlockItem]) -> Iterator[Tuple[str, Tuple[BlockItem, ...]]]:
    """Her yeniden yazma adımını (kural, yeni kelime) olarak üretir."""
    word = tuple(word)
    while True:
        step = _leftmost_rewrite(word)
        if step is None:
            return
        rule, word = step
        yield rule, word


def rewrite_steps_Kn(t: Term, n: Optional[int] = None):
    _check_width(t, n, "Kn")
    return rewrite_steps(block_word(t))


def measure_Kn(word: Iterable[BlockItem]) -> Tuple[int, int]:
    """μ = (n₁, n₂): blok ağırlıkları toplamı; ρ + τ + birim sayısı."""
    word = tuple(word)
    n1 = sum(x.weight for x in word if isinstance(x, Block))
    n2 = 0
    blocks_seen = 0
    for p, x in enumerate(word):
        if isinstance(x, Block):
            n2 += sum(1 for y in word[p + 1:] if isinstance(y, Block) and _is_block_redex(x, y))
            blocks_seen += 1
        elif isinstance(x, Circle):
            n2 += blocks_seen
        else:
            n2 += 1
    return n1, n2


def _check_width(t: Term, n: Optional[int], kind: str) -> int:
    if not t.theory.finite:
        raise TheoryError(f"expected a {kind} term, got {t.theory}")
    width = t.theory.n if n is None else n
    for g in t.gens:
        if isinstance(g, Diapsis) and g.i > width - 1:
            raise IndexRangeError(f"diapsis index {g.i} exceeds n−1 = {width - 1}")
    return width


def jones_from_word(word: Iterable[BlockItem]) -> JonesNF:
    final = tuple(word)
    for _, final in rewrite_steps(final):
        pass
    circles = sum(1 for x in final if isinstance(x, Circle))
    return JonesNF(circles, tuple((x.i, x.j) for x in final if isinstance(x, Block)))


def normalize_Kn(t: Term, n: Optional[int] = None) -> JonesNF:
    _check_width(t, n, "Kn")
    return jones_from_word(block_word(t))


def eq_Kn(t: Term, u: Term, n: Optional[int] = None) -> bool:
    return normalize_Kn(t, n) == normalize_Kn(u, n)


def eq_Jn(t: Term, u: Term, n: Optional[int] = None) -> bool:
    return normalize_Kn(t, n).blocks == normalize_Kn(u, n).blocks


def jones_to_term(nf: JonesNF, theory: Optional[Theory] = None) -> Term:
    gens: List = [Circle()] * nf.circles
    for b, a in nf.blocks:
        gens.extend(Diapsis(i) for i in range(b, a - 1, -1))
    if theory is None:
        width = max((b for b, _ in nf.blocks), default=0) + 1
        theory = Theory("Kn", width)
    return Term(tuple(gens), theory)


def enumerate_jones_nf(n: int, circles: int = 0) -> List[JonesNF]:
    """K_n'in verilen daire sayısına sahip tüm Jones normal formları."""
    found: List[JonesNF] = []

    def extend(blocks, last_b, last_a):
        found.append(JonesNF(circles, tuple(blocks)))
        for a in range(last_a + 1, n):
            for b in range(max(a, last_b + 1), n):
                blocks.append((b, a))
                extend(blocks, b, a)
                blocks.pop()

    extend([], 0, 0)
    return found


# ═══════════════════════════════════════════════════════════════════
#  REDEKS TARAYICILARI (normalleştiriciden bağımsız)
# ═══════════════════════════════════════════════════════════════════

def lnf_redexes(nf: LNF) -> List[str]:
    """LNF kelimesindeki bitişik çiftlerde yönlü kuralların sol tarafları."""
    found = []
    word = lnf_to_extword(nf)
    for p, g in enumerate(word):
        if isinstance(g, C) and not g.alpha:
            found.append(f"c1@{p}")
        if p + 1 >= len(word):
            continue
        h = word[p + 1]
        if isinstance(g, A) and isinstance(h, A) and h.k <= g.k:
            found.append(f"aa@{p}")
        elif isinstance(g, B) and isinstance(h, B) and g.k <= h.k:
            found.append(f"bb@{p}")
        elif isinstance(g, C) and isinstance(h, C) and g.k >= h.k:
            found.append(f"{'c2' if g.k == h.k else 'cc'}@{p}")
        elif isinstance(g, A) and isinstance(h, (B, C)):
            found.append(f"a{'b' if isinstance(h, B) else 'c'}@{p}")
        elif isinstance(g, C) and isinstance(h, B):
            found.append(f"bc@{p}")
    return found


def knf_redexes(nf: KNF) -> List[str]:
    found = []
    word = knf_to_term(nf).gens
    for p in range(len(word) - 1):
        g, h = word[p], word[p + 1]
        if isinstance(g, Cup) and isinstance(h, (Cap, Circle)):
            found.append(f"cup-{'cap' if isinstance(h, Cap) else 'circle'}@{p}")
        elif isinstance(g, Cup) and isinstance(h, Cup) and h.k <= g.k:
            found.append(f"cup@{p}")
        elif isinstance(g, Cap) and isinstance(h, Cap) and g.k <= h.k:
            found.append(f"cap@{p}")
        elif isinstance(g, Circle) and isinstance(h, Cap):
            found.append(f"circle-cap@{p}")
    return found


def jones_redexes(nf: JonesNF) -> List[str]:
    found = []
    blocks = nf.blocks
    for p, (b, a) in enumerate(blocks):
        if b < a:
            found.append(f"malformed@{p}")
        if p + 1 < len(blocks):
            b2, a2 = blocks[p + 1]
            if b >= b2 or a >= a2:
                found.append(f"block@{p}")
    return found


# ═══════════════════════════════════════════════════════════════════
#  TEORİYE GÖRE DAĞITICI
# ═══════════════════════════════════════════════════════════════════

def normalize(t: Term):
    kind = t.theory.kind
    if kind in ("L", "Ln"):
        return normalize_L(t)
    if kind in ("K", "J"):
        return normalize_K(t)
    return normalize_Kn(t)


def format_nf(nf, theory: Theory) -> str:
    """CLI için normal form metni; J seviyesinde daireler atılır."""
    if isinstance(nf, KNF) and theory.level == "J":
        nf = KNF(nf.caps, 0, nf.cups)
    if isinstance(nf, JonesNF):
        if theory.level == "J":
            nf = JonesNF(0, nf.blocks)
        return print_term(jones_to_term(nf, theory))
    return str(nf)


def equal(t: Term, u: Term) -> bool:
    if t.theory != u.theory:
        raise TheoryError(f"cannot compare terms of {t.theory} and {u.theory}")
    kind = t.theory.kind
    decide = {
        "L": eq_L, "Ln": eq_L, "K": eq_K, "J": eq_J, "Kn": eq_Kn, "Jn": eq_Jn,
    }[kind]
    result = decide(t, u)
    logger.debug("%s: %s =? %s → %s", t.theory, print_term(t), print_term(u), result)
    return result
