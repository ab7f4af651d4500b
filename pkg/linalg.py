# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Exact Linear Algebra v1.0
sympy DomainMatrix üzerine ince katman: ℚ (QQ) ve ℚ(√d) (QQ.algebraic_field)
skalerleri, seyrek matrisler, Kronecker çarpımı ve kesirsiz eleme ile rank.

Matrisler hep seyrek (SDM) tutulur. `A * B` yoğun biçime geçtiği için çarpım
`matmul` ile yapılır. Kayan nokta hiçbir yerde kullanılmaz.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Dict, FrozenSet, Sequence, Tuple

from sympy import QQ, sqrt
from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import CoercionFailed

from errors import DimensionError, ParseError, ScalarError

ExactMatrix = DomainMatrix


# ═══════════════════════════════════════════════════════════════════
#  SKALERLER: ℚ VE ℚ(√d)
# ═══════════════════════════════════════════════════════════════════

@functools.lru_cache(maxsize=64)
def quadratic_field(d: int) -> Domain:
    """ℚ(√d); d tam kare ise QQ'nun kendisi."""
    if d < 0:
        raise ScalarError(f"√{d} is not real")
    root = math.isqrt(d)
    if root * root == d:
        return QQ
    return QQ.algebraic_field(sqrt(d))


def radicand(domain: Domain) -> int:
    if not domain.is_AlgebraicField:
        return 0
    return int(domain.orig_ext[0] ** 2)


def qsqrt(d: int):
    """√d, quadratic_field(d) elemanı olarak."""
    return quadratic_field(d).from_sympy(sqrt(d))


def to_scalar(x, domain: Domain = QQ):
    if isinstance(x, Fraction):
        x = QQ(x.numerator, x.denominator)
    try:
        if isinstance(x, int) or domain.of_type(x):
            return domain.convert(x)
        if QQ.of_type(x):
            return domain.convert_from(x, QQ)
    except CoercionFailed as e:
        raise ScalarError(f"{x!r} is not an element of {domain}") from e
    raise ScalarError(f"{x!r} is not an element of {domain}")


@functools.lru_cache(maxsize=64)
def _root_coords(d: int) -> Tuple:
    return _coords(qsqrt(d))


def _coords(x) -> Tuple:
    """c1·θ + c0 → (c1, c0); θ alanın ilkel elemanı."""
    coeffs = [QQ.zero, QQ.zero] + list(x.to_list())
    return coeffs[-2], coeffs[-1]


def radical_parts(x, domain: Domain = QQ) -> Tuple:
    """x = a + b·√d  →  (a, b, d);  a, b ∈ QQ."""
    x = to_scalar(x, domain)
    if not domain.is_AlgebraicField:
        return x, QQ.zero, 0
    d = radicand(domain)
    c1, c0 = _coords(x)
    s1, s0 = _root_coords(d)
    b = c1 / s1
    return c0 - b * s0, b, d


def as_rational(x, domain: Domain = QQ):
    """x rasyonelse QQ elemanı, değilse None."""
    a, b, _ = radical_parts(x, domain)
    return None if b else a


def _format_rational(q) -> str:
    n, d = int(q.numerator), int(q.denominator)
    return str(n) if d == 1 else f"{n}/{d}"


def format_scalar(x, domain: Domain = QQ) -> str:
    a, b, d = radical_parts(x, domain)
    if not b:
        return _format_rational(a)
    coeff = "" if b == 1 else "-" if b == -1 else _format_rational(b)
    radical = f"{coeff}√{d}"
    if not a:
        return radical
    sign = "" if radical.startswith("-") else "+"
    return f"{_format_rational(a)}{sign}{radical}"


def parse_rational(text: str):
    """ "3/2", "-1", "0.25" → QQ elemanı."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"not a rational number: {text!r}", text, 0) from e
    return QQ(value.numerator, value.denominator)


# ═══════════════════════════════════════════════════════════════════
#  MATRİS
# ═══════════════════════════════════════════════════════════════════
# m→n oku n×m matristir.

def from_rows(rows: Sequence[Sequence], domain: Domain = QQ) -> DomainMatrix:
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else 0
    if any(len(r) != width for r in rows):
        raise DimensionError(f"ragged data for a {len(rows)}-row matrix")
    dod = {i: {j: to_scalar(x, domain) for j, x in enumerate(row) if x}
           for i, row in enumerate(rows)}
    return DomainMatrix.from_dod(dod, (len(rows), width), domain)


def zeros(rows: int, cols: int, domain: Domain = QQ) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), domain)


def identity(n: int, domain: Domain = QQ) -> DomainMatrix:
    return DomainMatrix.eye(n, domain)


def unify(a: DomainMatrix, b: DomainMatrix) -> Tuple[DomainMatrix, DomainMatrix]:
    """Ortak alana ve seyrek biçime taşır; iki farklı kök karıştırılamaz."""
    if a.domain != b.domain:
        if a.domain.is_AlgebraicField and b.domain.is_AlgebraicField:
            raise ScalarError(f"cannot mix {a.domain} and {b.domain}")
        domain = a.domain.unify(b.domain)
        a, b = a.convert_to(domain), b.convert_to(domain)
    return a.to_sparse(), b.to_sparse()


def mat_eq(a: DomainMatrix, b: DomainMatrix) -> bool:
    if a.shape != b.shape:
        return False
    a, b = unify(a, b)
    return a == b


def mat_mul(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape[0]}×{a.shape[1]} by {b.shape[0]}×{b.shape[1]}")
    a, b = unify(a, b)
    return a.matmul(b)


def mat_add(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    if a.shape != b.shape:
        raise DimensionError(f"cannot add {a.shape[0]}×{a.shape[1]} and {b.shape[0]}×{b.shape[1]}")
    a, b = unify(a, b)
    return a.add(b)


def mat_sub(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    return mat_add(a, scalar_mul(-1, b))


def scalar_mul(c, a: DomainMatrix) -> DomainMatrix:
    return a.to_sparse().scalarmul(to_scalar(c, a.domain))


def transpose(a: DomainMatrix) -> DomainMatrix:
    return a.to_sparse().transpose()


def entry(a: DomainMatrix, i: int, j: int):
    return a[i, j].element


def support(a: DomainMatrix) -> FrozenSet[Tuple[int, int]]:
    return frozenset(a.to_dok())


def frozen_entries(a: DomainMatrix) -> FrozenSet:
    """Sıfır olmayan girdiler; aynı şekilli matrisler için sözlük anahtarı."""
    return frozenset(a.to_dok().items())


def kron(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    a, b = unify(a, b)
    (m, n), (r, s) = a.shape, b.shape
    right = b.to_dod()
    dod: Dict[int, Dict[int, object]] = {}
    for i, row in a.to_dod().items():
        for k, brow in right.items():
            dod[i * r + k] = {j * s + l: x * y for j, x in row.items() for l, y in brow.items()}
    return DomainMatrix.from_dod(dod, (m * r, n * s), a.domain)


def kron_identity(n: int, a: DomainMatrix) -> DomainMatrix:
    """1_n ⊗ A: blok köşegen."""
    if n == 1:
        return a
    r, s = a.shape
    blocks = a.to_dod()
    dod = {k * r + i: {k * s + j: x for j, x in row.items()}
           for k in range(n) for i, row in blocks.items()}
    return DomainMatrix.from_dod(dod, (n * r, n * s), a.domain)


def flatten_rows(mats: Sequence[DomainMatrix]) -> DomainMatrix:
    """Her matris satır öncelikli tek bir satıra açılır."""
    if not mats:
        raise DimensionError("nothing to flatten")
    shape, domain = mats[0].shape, mats[0].domain
    if any(m.shape != shape for m in mats):
        raise DimensionError("matrices of different shapes")
    cols = shape[1]
    dod = {r: {i * cols + j: x for (i, j), x in m.to_dok().items()} for r, m in enumerate(mats)}
    return DomainMatrix.from_dod(dod, (len(mats), shape[0] * cols), domain)


# ═══════════════════════════════════════════════════════════════════
#  RANK
# ═══════════════════════════════════════════════════════════════════

def rank(a: DomainMatrix) -> int:
    """Kesirsiz Gauss-Jordan (rref_den, FF): her bölme tam bölmedir."""
    if 0 in a.shape:
        return 0
    _, _, pivots = a.to_sparse().rref_den(method="FF")
    return len(pivots)
