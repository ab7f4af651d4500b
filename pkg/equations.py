# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Single-Step Equations v1.0
Bir kelimeye tek bir denklemin (iki yönde) uygulanması.
Normal form kararlılık protokolü bu modülü kullanır: kelimeyi bir adım boz,
yeniden normalleştir, aynı normal formu bekle.

  • L_ω : a/b/c formülasyonunun on dört denklem şeması
  • K_ω : (cup), (cap), (cup-cap 1–4), daire tanımı ve daire değişmeliliği
  • K_n : (h1), (h2), (hc1), (hc2)
Her teoride birim 1'in silinmesi/eklenmesi de bir adımdır.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ordinals import ZERO, nat_sum, omega_pow, splits
from terms import A, B, C, Cap, Circle, Cup, Diapsis, Term, Unit


@dataclass(frozen=True)
class Rewrite:
    rule: str
    position: int
    direction: str   # "→" soldan sağa, "←" sağdan sola
    result: Term


def _index(g) -> int:
    return g.i if isinstance(g, Diapsis) else getattr(g, "k", 0)


def _max_index(word) -> int:
    return max((_index(g) for g in word), default=0)


# ═══════════════════════════════════════════════════════════════════
#  L_ω: a/b/c ŞEMALARI
# ═══════════════════════════════════════════════════════════════════

def _l_pair(g, h) -> List[Tuple[str, str, tuple]]:
    out = []
    add = lambda rule, direction, *gens: out.append((rule, direction, gens))

    if isinstance(g, A) and isinstance(h, A):
        if h.k <= g.k:
            add("aa", "→", h, A(g.k + 2, g.alpha))
        if h.k >= g.k + 2:
            add("aa", "←", A(h.k - 2, h.alpha), g)

    if isinstance(g, B) and isinstance(h, B):
        if g.k <= h.k:
            add("bb", "→", B(h.k + 2, h.alpha), g)
        if g.k >= h.k + 2:
            add("bb", "←", h, B(g.k - 2, g.alpha))

    if isinstance(g, C) and isinstance(h, C):
        if g.k == h.k:
            add("c2", "→", C(g.k, nat_sum(g.alpha, h.alpha)))
        else:
            add("cc", "→" if h.k < g.k else "←", h, g)
        if h.k == g.k + 1:
            add("ab3.1", "←", A(g.k, h.alpha), B(g.k + 1, g.alpha))
            add("ab3.2", "←", A(g.k + 1, g.alpha), B(g.k, h.alpha))

    if isinstance(g, A) and isinstance(h, B):
        if h.k >= g.k + 2:
            add("ab1", "→", B(h.k - 2, h.alpha), g)
        if g.k >= h.k + 2:
            add("ab2", "→", h, A(g.k - 2, g.alpha))
        if h.k == g.k + 1:
            add("ab3.1", "→", C(g.k, h.alpha), C(g.k + 1, g.alpha))
        if g.k == h.k + 1:
            add("ab3.2", "→", C(h.k, g.alpha), C(h.k + 1, h.alpha))
        if g.k == h.k:
            add("ab3.3", "→", C(g.k, omega_pow(nat_sum(g.alpha, h.alpha))))

    if isinstance(g, B) and isinstance(h, A):
        if h.k <= g.k:
            add("ab1", "←", h, B(g.k + 2, g.alpha))
        if g.k <= h.k:
            add("ab2", "←", A(h.k + 2, h.alpha), g)

    if isinstance(g, A) and isinstance(h, C):
        if h.k <= g.k:
            add("ac1", "→", h, g)
        if h.k >= g.k + 2:
            add("ac2", "→", C(h.k - 2, h.alpha), g)
        if h.k == g.k + 1:
            add("ac3", "→", A(g.k, nat_sum(g.alpha, h.alpha)))

    if isinstance(g, C) and isinstance(h, A):
        if g.k <= h.k:
            add("ac1", "←", h, g)
        if h.k <= g.k:
            add("ac2", "←", h, C(g.k + 2, g.alpha))

    if isinstance(g, C) and isinstance(h, B):
        if g.k <= h.k:
            add("bc1", "→", h, g)
        if g.k >= h.k + 2:
            add("bc2", "→", h, C(g.k - 2, g.alpha))
        if g.k == h.k + 1:
            add("bc3", "→", B(h.k, nat_sum(g.alpha, h.alpha)))

    if isinstance(g, B) and isinstance(h, C):
        if h.k <= g.k:
            add("bc1", "←", h, g)
        if g.k <= h.k:
            add("bc2", "←", C(h.k + 2, h.alpha), g)

    return out


def _l_single(g) -> List[Tuple[str, str, tuple]]:
    out = []
    if isinstance(g, C):
        if not g.alpha:
            out.append(("c1", "→", ()))
        for left, right in splits(g.alpha):
            if left and right:
                out.append(("c2", "←", (C(g.k, left), C(g.k, right))))
        if len(g.alpha) == 1:
            inner = g.alpha.exponents[0]
            for left, right in splits(inner):
                out.append(("ab3.3", "←", (A(g.k, left), B(g.k, right))))
    if isinstance(g, A):
        for left, right in splits(g.alpha):
            if right:
                out.append(("ac3", "←", (A(g.k, left), C(g.k + 1, right))))
    if isinstance(g, B):
        for left, right in splits(g.alpha):
            if left:
                out.append(("bc3", "←", (C(g.k + 1, left), B(g.k, right))))
    return out


def l_rewrites(t: Term) -> List[Rewrite]:
    word = t.gens
    found = []
    for p, g in enumerate(word):
        if isinstance(g, Unit):
            found.append(Rewrite("1", p, "→", Term(word[:p] + word[p + 1:], t.theory)))
        for rule, direction, gens in _l_single(g):
            found.append(Rewrite(rule, p, direction, Term(word[:p] + gens + word[p + 1:], t.theory)))
        if p + 1 < len(word):
            for rule, direction, gens in _l_pair(g, word[p + 1]):
                found.append(Rewrite(rule, p, direction, Term(word[:p] + gens + word[p + 2:], t.theory)))
    for p in range(len(word) + 1):
        for k in range(1, _max_index(word) + 2):
            found.append(Rewrite("c1", p, "←", Term(word[:p] + (C(k, ZERO),) + word[p:], t.theory)))
    return found


# ═══════════════════════════════════════════════════════════════════
#  K_ω
# ═══════════════════════════════════════════════════════════════════

def _k_pair(g, h) -> List[Tuple[str, str, tuple]]:
    out = []
    add = lambda rule, direction, *gens: out.append((rule, direction, gens))

    if isinstance(g, Circle) != isinstance(h, Circle):
        add("circle", "→" if isinstance(h, Circle) else "←", h, g)
    if isinstance(g, Cup) and isinstance(h, Cup):
        if h.k <= g.k:
            add("cup", "→", h, Cup(g.k + 2))
        if h.k >= g.k + 2:
            add("cup", "←", Cup(h.k - 2), g)
    if isinstance(g, Cap) and isinstance(h, Cap):
        if g.k <= h.k:
            add("cap", "→", Cap(h.k + 2), g)
        if g.k >= h.k + 2:
            add("cap", "←", h, Cap(g.k - 2))
    if isinstance(g, Cup) and isinstance(h, Cap):
        if h.k >= g.k + 2:
            add("cup-cap 1", "→", Cap(h.k - 2), g)
        if g.k >= h.k + 2:
            add("cup-cap 2", "→", h, Cup(g.k - 2))
        if abs(g.k - h.k) == 1:
            add("cup-cap 3", "→")
        if g.k == h.k:
            add("cup-cap 4", "→", Cup(g.k + 1), Cap(g.k + 1))
            if g.k > 1:
                add("cup-cap 4", "←", Cup(g.k - 1), Cap(g.k - 1))
            add("circle-def", "→", Circle())
    if isinstance(g, Cap) and isinstance(h, Cup):
        if h.k <= g.k:
            add("cup-cap 1", "←", h, Cap(g.k + 2))
        if g.k <= h.k:
            add("cup-cap 2", "←", Cup(h.k + 2), g)
    return out


def k_rewrites(t: Term) -> List[Rewrite]:
    word = t.gens
    found = []
    for p, g in enumerate(word):
        if isinstance(g, Unit):
            found.append(Rewrite("1", p, "→", Term(word[:p] + word[p + 1:], t.theory)))
        if isinstance(g, Circle):
            found.append(Rewrite("circle-def", p, "←", Term(word[:p] + (Cup(1), Cap(1)) + word[p + 1:], t.theory)))
        if p + 1 < len(word):
            for rule, direction, gens in _k_pair(g, word[p + 1]):
                found.append(Rewrite(rule, p, direction, Term(word[:p] + gens + word[p + 2:], t.theory)))
    for p in range(len(word) + 1):
        for k in range(1, _max_index(word) + 2):
            for pair in ((Cup(k), Cap(k + 1)), (Cup(k + 1), Cap(k))):
                found.append(Rewrite("cup-cap 3", p, "←", Term(word[:p] + pair + word[p:], t.theory)))
        found.append(Rewrite("1", p, "←", Term(word[:p] + (Unit(),) + word[p:], t.theory)))
    return found


# ═══════════════════════════════════════════════════════════════════
#  K_n
# ═══════════════════════════════════════════════════════════════════

def kn_rewrites(t: Term) -> List[Rewrite]:
    word = t.gens
    n = t.theory.n
    found = []

    def emit(rule, p, direction, gens, width=1):
        found.append(Rewrite(rule, p, direction, Term(word[:p] + gens + word[p + width:], t.theory)))

    for p, g in enumerate(word):
        if isinstance(g, Unit):
            emit("1", p, "→", (), 1)
        if isinstance(g, Diapsis):
            for j in (g.i - 1, g.i + 1):
                if 1 <= j <= n - 1:
                    emit("h2", p, "←", (g, Diapsis(j), g), 1)
        if p + 1 >= len(word):
            continue
        h = word[p + 1]
        if isinstance(g, Diapsis) and isinstance(h, Diapsis):
            if abs(g.i - h.i) >= 2:
                emit("h1", p, "→" if g.i < h.i else "←", (h, g), 2)
            if g.i == h.i:
                emit("hc2", p, "→", (Circle(), g), 2)
        if isinstance(g, Diapsis) and isinstance(h, Circle):
            emit("hc1", p, "→", (h, g), 2)
        if isinstance(g, Circle) and isinstance(h, Diapsis):
            emit("hc1", p, "←", (h, g), 2)
            emit("hc2", p, "←", (h, h), 2)
        if p + 2 < len(word):
            x = word[p + 2]
            if (isinstance(g, Diapsis) and isinstance(h, Diapsis) and isinstance(x, Diapsis)
                    and x.i == g.i and abs(h.i - g.i) == 1):
                emit("h2", p, "→", (g,), 3)
    for p in range(len(word) + 1):
        emit("1", p, "←", (Unit(),), 0)
    return found


# ═══════════════════════════════════════════════════════════════════
#  DAĞITICI
# ═══════════════════════════════════════════════════════════════════

def applicable_rewrites(t: Term) -> List[Rewrite]:
    kind = t.theory.kind
    if kind == "L":
        return l_rewrites(t)
    if kind in ("K", "J"):
        return k_rewrites(t)
    if kind in ("Kn", "Jn"):
        return kn_rewrites(t)
    raise ValueError(f"no single-step equations for {t.theory}")


def random_rewrite(t: Term, rng: random.Random) -> Optional[Rewrite]:
    candidates = applicable_rewrites(t)
    if not candidates:
        return None
    return rng.choice(candidates)
