# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Sample Generators v1.0
Doğrulama paketleri ve testler için tohumlanmış rastgele kelimeler, dairesel formlar,
ok-terimleri, matrisler ve küçük kapsamlı kelime listeleri.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, List

from sympy import QQ

from adjunction import ArrowTerm, Comp, Fof, Gamma, Id, Phi, type_of
from linalg import ExactMatrix, from_rows
from matrep import BraidWord
from ordinals import CircularForm
from terms import A, B, C, Cap, Circle, Cup, Diapsis, ExtWord, K, Kn, L, Term


def random_form(rng: random.Random, depth: int = 2, width: int = 2) -> CircularForm:
    if depth <= 0:
        return CircularForm()
    count = rng.randint(0, width)
    return CircularForm(tuple(random_form(rng, depth - 1, width) for _ in range(count)))


def random_ext_word(rng: random.Random, length: int, max_index: int, depth: int = 2) -> ExtWord:
    out = []
    for _ in range(length):
        kind = rng.choice((A, B, C))
        out.append(kind(rng.randint(1, max_index), random_form(rng, depth)))
    return tuple(out)


def random_k_word(rng: random.Random, length: int, max_index: int, circles: bool = True) -> Term:
    """Cup/cap (ve istenirse daire) kelimesi; daire yoksa L teorisinde de geçerlidir."""
    gens = []
    for _ in range(length):
        roll = rng.random()
        if circles and roll < 0.1:
            gens.append(Circle())
        elif roll < 0.55:
            gens.append(Cup(rng.randint(1, max_index)))
        else:
            gens.append(Cap(rng.randint(1, max_index)))
    return Term(tuple(gens), K if circles else L)


def random_kn_word(rng: random.Random, n: int, length: int, circle_rate: float = 0.1) -> Term:
    gens = []
    for _ in range(length):
        if n < 2 or rng.random() < circle_rate:
            gens.append(Circle())
        else:
            gens.append(Diapsis(rng.randint(1, n - 1)))
    return Term(tuple(gens), Kn(n))


def exhaustive_k_words(max_length: int, max_index: int) -> Iterator[Term]:
    """Uzunluğu ≤ max_length olan tüm ∪/∩/c kelimeleri (boş kelime dahil)."""
    alphabet = ([Cup(k) for k in range(1, max_index + 1)]
                + [Cap(k) for k in range(1, max_index + 1)] + [Circle()])
    for length in range(max_length + 1):
        for word in itertools.product(alphabet, repeat=length):
            yield Term(word, K)


def random_arrow(rng: random.Random, source: int = 0, steps: int = 3) -> ArrowTerm:
    """Id(source)'tan başlayıp φ, γ, F ve bileşke adımlarıyla büyüyen iyi tipli ok-terimi."""
    f: ArrowTerm = Id(source)
    for _ in range(steps):
        _, target = type_of(f)
        roll = rng.random()
        if roll < 0.35 and target >= 2:
            f = Comp(Phi(target - 2), f)
        elif roll < 0.7:
            f = Comp(Gamma(target), f)
        elif target >= 1 and roll < 0.85:
            f = Comp(Fof(_atom(rng, target - 1)), f)
        else:
            f = Fof(f)
    return f


def _atom(rng: random.Random, n: int) -> ArrowTerm:
    """n → ? tipli tek adım (F altında kullanılır)."""
    if n >= 2 and rng.random() < 0.5:
        return Phi(n - 2)
    return Gamma(n) if rng.random() < 0.7 else Id(n)


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 3) -> ExactMatrix:
    return from_rows([[QQ(rng.randint(-bound, bound), rng.randint(1, 2)) for _ in range(cols)]
                      for _ in range(rows)])


def random_braid_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length))

