# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Matrix Representations v1.0
Kronecker öz-birleşimi: E_p, φ_m, γ_m, h_kⁿ, K_n temsili, H_p funktoru, η_p,
≡^J denkliği, doğrusal bağımsızlık, örgü grubu temsili ρ ve çekirdek araması.

Boyut kuralı: m→n oku n×m matristir. p^e boyutları config'deki sınırı aşamaz.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from sympy import QQ

from adjunction import ArrowTerm, Comp, Fof, Gamma, Id, Phi, type_of
from config import MAX_MATRIX_DIM
from errors import DimensionError, IndexRangeError, ParseError, ScalarError, TheoryError
from linalg import (
    ExactMatrix, as_rational, entry, flatten_rows, format_scalar, from_rows, frozen_entries,
    identity, kron, kron_identity, mat_add, mat_mul, parse_rational, qsqrt, quadratic_field, rank,
    scalar_mul, support, to_scalar, transpose, unify,
)
from normalize import JonesNF, enumerate_jones_nf, jones_to_term, normalize_Kn
from terms import EXT_GENS, Cap, Circle, Cup, Diapsis, Kn, Term, Unit, embed_diapsides, from_extgen

logger = logging.getLogger("tlengine.matrep")


def check_dim(p: int, exponent: int, max_dim: int = MAX_MATRIX_DIM) -> int:
    if p < 1:
        raise DimensionError(f"p must be ≥ 1, got {p}")
    size = p ** exponent
    if size > max_dim:
        raise DimensionError(f"{p}^{exponent} = {size} exceeds the matrix size cap {max_dim}")
    return size


# ═══════════════════════════════════════════════════════════════════
#  TEMEL MATRİSLER
# ═══════════════════════════════════════════════════════════════════

def e_row(p: int) -> ExactMatrix:
    """E_p(1, (i−1)p+j) = δ(i,j)"""
    if p < 1:
        raise DimensionError(f"p must be ≥ 1, got {p}")
    return from_rows([[1 if c % (p + 1) == 0 else 0 for c in range(p * p)]])


def phi_mat(p: int, m: int) -> ExactMatrix:
    """φ_m = E_p ⊗ 1_m  (m × p²m)"""
    return kron(e_row(p), identity(m))


def gamma_mat(p: int, m: int) -> ExactMatrix:
    return transpose(phi_mat(p, m))


def _cap_cup(p: int) -> ExactMatrix:
    e = e_row(p)
    return mat_mul(transpose(e), e)


def h_mat(p: int, n: int, k: int, max_dim: int = MAX_MATRIX_DIM) -> ExactMatrix:
    """h_kⁿ = 1_{p^{n−k−1}} ⊗ (E′E) ⊗ 1_{p^{k−1}}"""
    if not 1 <= k <= n - 1:
        raise IndexRangeError(f"h index {k} outside 1..{n - 1}")
    check_dim(p, n, max_dim)
    return kron(kron_identity(p ** (n - k - 1), _cap_cup(p)), identity(p ** (k - 1)))


def rep_Kn(p: int, n: int, t: Term, max_dim: int = MAX_MATRIX_DIM) -> ExactMatrix:
    """K_n → End(pⁿ); kelime soldan sağa çarpılır, c ↦ p·I."""
    if t.theory.kind not in ("Kn", "Jn"):
        raise TheoryError(f"rep_Kn expects a Kn or Jn term, got {t.theory}")
    size = check_dim(p, n, max_dim)
    result = identity(size)
    cache: Dict[int, ExactMatrix] = {}
    for g in t.gens:
        if isinstance(g, Diapsis):
            if g.i not in cache:
                cache[g.i] = h_mat(p, n, g.i, max_dim)
            result = mat_mul(result, cache[g.i])
        elif isinstance(g, Circle):
            result = scalar_mul(p, result)
        elif not isinstance(g, Unit):
            raise TheoryError(f"generator {g!r} is not a K_n generator")
    return result


# ═══════════════════════════════════════════════════════════════════
#  H_p VE η_p
# ═══════════════════════════════════════════════════════════════════

def H_eval(p: int, f: ArrowTerm, max_dim: int = MAX_MATRIX_DIM) -> ExactMatrix:
    """H_p(f): f: m→n için pⁿ × p^m."""
    check_dim(p, _max_exponent(f), max_dim)
    return _H(p, f)


def _max_exponent(f: ArrowTerm) -> int:
    if isinstance(f, Fof):
        return _max_exponent(f.f) + 1
    if isinstance(f, Comp):
        return max(_max_exponent(f.g), _max_exponent(f.f))
    return max(type_of(f))


def _H(p: int, f: ArrowTerm) -> ExactMatrix:
    if isinstance(f, Id):
        return identity(p ** f.n)
    if isinstance(f, Phi):
        return phi_mat(p, p ** f.n)
    if isinstance(f, Gamma):
        return gamma_mat(p, p ** f.n)
    if isinstance(f, Fof):
        return kron_identity(p, _H(p, f.f))
    return mat_mul(_H(p, f.g), _H(p, f.f))


def _eta_gen(p: int, g) -> Tuple[ExactMatrix, int, int]:
    """(matris, kaynak üssü, hedef üssü)"""
    if isinstance(g, Cup):
        return phi_mat(p, p ** (g.k - 1)), g.k + 1, g.k - 1
    if isinstance(g, Cap):
        return gamma_mat(p, p ** (g.k - 1)), g.k - 1, g.k + 1
    if isinstance(g, Circle):
        return from_rows([[p]]), 0, 0
    if isinstance(g, Unit):
        return identity(1), 0, 0
    raise TheoryError(f"generator {g!r} has no η image")


def _eta_letters(t: Term) -> Iterator:
    if t.theory.finite:
        t = embed_diapsides(t)
    for g in t.gens:
        if isinstance(g, EXT_GENS):
            yield from from_extgen(g).gens
        else:
            yield g


def eta(p: int, t: Term, max_dim: int = MAX_MATRIX_DIM) -> ExactMatrix:
    """
    η_p(tu) = η_p(t) ∗ η_p(u);  A: m→n, B: k→l için
    B∗A = B·(1_{p^{k−n}}⊗A)  (n ≤ k)  ya da  (1_{p^{n−k}}⊗B)·A.
    """
    acc, source, target = identity(1), 0, 0
    first = True
    for g in _eta_letters(t):
        a, m, n = _eta_gen(p, g)
        if first:
            check_dim(p, max(m, n), max_dim)
            acc, source, target, first = a, m, n, False
            continue
        k, l = source, target
        if n <= k:
            new_source, new_target = m + k - n, l
        else:
            new_source, new_target = m, l + n - k
        check_dim(p, max(new_source, new_target, k, n), max_dim)
        if n <= k:
            acc = mat_mul(acc, kron_identity(p ** (k - n), a))
        else:
            acc = mat_mul(kron_identity(p ** (n - k), acc), a)
        source, target = new_source, new_target
    return acc


# ═══════════════════════════════════════════════════════════════════
#  ≡^J
# ═══════════════════════════════════════════════════════════════════

def _log_p(x: int, p: int) -> int:
    e = 0
    while x > 1 and x % p == 0:
        x //= p
        e += 1
    if x != 1:
        raise DimensionError(f"dimension is not a power of {p}")
    return e


def _power_of(x, p: int) -> Optional[int]:
    """x = p^m ise m; x bir QQ elemanı."""
    if x.denominator != 1 or x.numerator < 1:
        return None
    try:
        return _log_p(int(x.numerator), p)
    except DimensionError:
        return None


@dataclass(frozen=True)
class JWitness:
    """p^m(1_{p^k}⊗A) = 1_{p^l}⊗B  (scaled_left)  ya da  1_{p^k}⊗A = p^m(1_{p^l}⊗B)."""
    k: int
    l: int
    m: int
    scaled_left: bool


def j_witness(p: int, a: ExactMatrix, b: ExactMatrix) -> Optional[JWitness]:
    if p < 2:
        raise DimensionError("≡^J needs p ≥ 2")
    ra, ca = (_log_p(x, p) for x in a.shape)
    rb, cb = (_log_p(x, p) for x in b.shape)
    if ra - ca != rb - cb:
        return None
    k, l = max(0, rb - ra), max(0, ra - rb)
    pa, pb = unify(kron_identity(p ** k, a), kron_identity(p ** l, b))

    entries = pa.to_dok()
    if not entries:
        return JWitness(k, l, 0, True) if pb.is_zero_matrix else None
    (i, j), x = min(entries.items())
    y = entry(pb, i, j)
    if not y:
        return None
    ratio = as_rational(y / x, pa.domain)
    if ratio is None:
        return None
    m = _power_of(ratio, p)
    if m is not None and scalar_mul(p ** m, pa) == pb:
        return JWitness(k, l, m, True)
    m = _power_of(QQ.one / ratio, p)
    if m is not None and pa == scalar_mul(p ** m, pb):
        return JWitness(k, l, m, False)
    return None


def equiv_J(p: int, a: ExactMatrix, b: ExactMatrix) -> bool:
    return j_witness(p, a, b) is not None


# ═══════════════════════════════════════════════════════════════════
#  BAĞIMSIZLIK VE SADAKAT
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class IndependenceReport:
    p: int
    n: int
    rank: int
    count: int

    @property
    def independent(self) -> bool:
        return self.rank == self.count


def independence_report(p: int, n: int, max_dim: int = MAX_MATRIX_DIM) -> IndependenceReport:
    """Dairesiz Jones normal formlarının temsilleri vektöre açılıp rank alınır."""
    check_dim(p, n, max_dim)
    mats = [rep_Kn(p, n, jones_to_term(nf, Kn(n)), max_dim) for nf in enumerate_jones_nf(n)]
    r = rank(flatten_rows(mats))
    logger.debug("independence p=%d n=%d: rank %d / %d", p, n, r, len(mats))
    return IndependenceReport(p, n, r, len(mats))


def independence_check(p: int, n: int, max_dim: int = MAX_MATRIX_DIM) -> bool:
    return independence_report(p, n, max_dim).independent


@dataclass(frozen=True)
class FaithfulnessReport:
    p: int
    n: int
    count: int
    collisions: Tuple[Tuple[str, str], ...] = ()

    @property
    def faithful(self) -> bool:
        return not self.collisions


def faithfulness_check(p: int, n: int, max_circles: int = 2,
                       max_dim: int = MAX_MATRIX_DIM) -> FaithfulnessReport:
    seen: Dict[tuple, JonesNF] = {}
    collisions = []
    count = 0
    for circles in range(max_circles + 1):
        for nf in enumerate_jones_nf(n, circles):
            count += 1
            key = frozen_entries(rep_Kn(p, n, jones_to_term(nf, Kn(n)), max_dim))
            if key in seen:
                collisions.append((str(seen[key]), str(nf)))
            else:
                seen[key] = nf
    return FaithfulnessReport(p, n, count, tuple(collisions))


# ═══════════════════════════════════════════════════════════════════
#  İLİŞKİ GÖRÜNÜMÜ (0-1 MATRİSLER)
# ═══════════════════════════════════════════════════════════════════

Relation = FrozenSet[Tuple[int, int]]


def boolean_product(s: Relation, t: Relation) -> Relation:
    by_source: Dict[int, List[int]] = {}
    for j, k in t:
        by_source.setdefault(j, []).append(k)
    return frozenset((i, k) for i, j in s for k in by_source.get(j, ()))


def relation_product_check(p: int, n: int, max_dim: int = MAX_MATRIX_DIM) -> Tuple[int, List[str]]:
    """
    Her t, u dairesiz Jones kelimesi için supp(rep t) ∘ supp(rep u) =
    supp(rep(tu'nun J normal formu)). (kontrol sayısı, hatalar) döner.
    """
    words = [jones_to_term(nf, Kn(n)) for nf in enumerate_jones_nf(n)]
    supports = [support(rep_Kn(p, n, w, max_dim)) for w in words]
    failures = []
    for (t, st), (u, su) in itertools.product(zip(words, supports), repeat=2):
        nf = normalize_Kn(t + u, n)
        reduced = jones_to_term(JonesNF(0, nf.blocks), Kn(n))
        if boolean_product(st, su) != support(rep_Kn(p, n, reduced, max_dim)):
            failures.append(f"{t} · {u}")
    return len(words) ** 2, failures


# ═══════════════════════════════════════════════════════════════════
#  ÖRGÜ GRUBU TEMSİLİ
# ═══════════════════════════════════════════════════════════════════

BraidWord = Tuple[Tuple[int, int], ...]   # (i, ±1)


def parse_braid(text: str) -> BraidWord:
    """ "s1 s2! s1" → ((1, 1), (2, −1), (1, 1)); boş kelime için "1"."""
    out = []
    pos = 0
    for token in text.split():
        start = text.index(token, pos)
        pos = start + len(token)
        if token == "1":
            continue
        inverse = token.endswith("!")
        body = token[:-1] if inverse else token
        if not (body.startswith("s") and body[1:].isdigit()):
            raise ParseError(f"unknown braid token {token!r}", text, start)
        i = int(body[1:])
        if i < 1:
            raise ParseError(f"braid index must be ≥ 1 in {token!r}", text, start)
        out.append((i, -1 if inverse else 1))
    return tuple(out)


def format_braid(w: BraidWord) -> str:
    if not w:
        return "1"
    return " ".join(f"s{i}" + ("!" if e < 0 else "") for i, e in w)


def parse_scalar(text: str, d: int = 0):
    """Rasyonel metin → quadratic_field(d) elemanı."""
    return to_scalar(parse_rational(text), quadratic_field(d))


@dataclass(frozen=True)
class BraidScalars:
    domain: object
    alpha: object
    beta: object
    alpha_inv: object
    beta_inv: object


def braid_scalars(p: int, alpha, branch: str = "+") -> BraidScalars:
    """
    r = αβ⁻¹ = (−p ± √(p²−4))/2 dala göre; β = α·r̄, r̄ eşlenik kök (r·r̄ = 1).
    Skalerler ℚ(√(p²−4)) içindedir; p = 2 için alan ℚ ve β = −α.
    """
    if branch not in ("+", "-"):
        raise ScalarError(f"branch must be + or -, got {branch!r}")
    d = p * p - 4
    K = quadratic_field(d)
    alpha = to_scalar(alpha, K)
    if not alpha:
        raise ScalarError("alpha must be non-zero")
    sign = 1 if branch == "+" else -1
    r_bar = (K.convert(-p) - sign * qsqrt(d)) / K.convert(2)
    beta = alpha * r_bar
    return BraidScalars(K, alpha, beta, K.one / alpha, K.one / beta)


class BraidRep:
    """ρ(σ_i) = αh_i + βI, ρ(σ_i⁻¹) = α⁻¹h_i + β⁻¹I; üreteç matrisleri önbelleklenir."""

    def __init__(self, p: int, n: int, alpha=1, branch: str = "+", max_dim: int = MAX_MATRIX_DIM):
        if p < 2:
            raise ScalarError("braid representation needs p ≥ 2")
        self.p, self.n, self.branch = p, n, branch
        self.size = check_dim(p, n, max_dim)
        self.max_dim = max_dim
        self.scalars = braid_scalars(p, alpha, branch)
        self.domain = self.scalars.domain
        self._cache: Dict[Tuple[int, int], ExactMatrix] = {}
        self.identity = identity(self.size, self.domain)

    def generator(self, i: int, e: int) -> ExactMatrix:
        if not 1 <= i <= self.n - 1:
            raise IndexRangeError(f"braid generator s{i} outside 1..{self.n - 1}")
        key = (i, e)
        if key not in self._cache:
            s = self.scalars
            a, b = (s.alpha, s.beta) if e > 0 else (s.alpha_inv, s.beta_inv)
            h = h_mat(self.p, self.n, i, self.max_dim).convert_to(self.domain)
            self._cache[key] = mat_add(scalar_mul(a, h), scalar_mul(b, self.identity))
        return self._cache[key]

    def __call__(self, w: BraidWord) -> ExactMatrix:
        result = self.identity
        for i, e in w:
            result = mat_mul(result, self.generator(i, e))
        return result


def braid_rho(p: int, n: int, w: BraidWord, alpha=1, branch: str = "+",
              max_dim: int = MAX_MATRIX_DIM) -> ExactMatrix:
    return BraidRep(p, n, alpha, branch, max_dim)(w)


@dataclass(frozen=True)
class RelationCheck:
    name: str
    lhs: str
    rhs: str
    holds: bool


@dataclass
class BraidReport:
    p: int
    n: int
    alpha: str
    branch: str
    relations: List[RelationCheck] = field(default_factory=list)
    witnesses: List[RelationCheck] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.relations)


def check_braid_relations(p: int, n: int, alpha=1, branch: str = "+",
                          max_dim: int = MAX_MATRIX_DIM) -> BraidReport:
    rho = BraidRep(p, n, alpha, branch, max_dim)
    report = BraidReport(p, n, format_scalar(rho.scalars.alpha, rho.domain), branch)

    def check(name: str, lhs: BraidWord, rhs: BraidWord, target: Optional[ExactMatrix] = None):
        left = rho(lhs)
        right = rho(rhs) if target is None else target
        return RelationCheck(name, format_braid(lhs), format_braid(rhs), left == right)

    gens = range(1, n)
    for i, j in itertools.combinations(gens, 2):
        if j - i >= 2:
            report.relations.append(check("σ0", ((i, 1), (j, 1)), ((j, 1), (i, 1))))
    for i in gens:
        report.relations.append(check("σ2", ((i, 1), (i, -1)), ()))
        report.relations.append(check("σ2", ((i, -1), (i, 1)), ()))
    for i in range(1, n - 1):
        report.relations.append(check("σ3", ((i, 1), (i + 1, 1), (i, 1)),
                                      ((i + 1, 1), (i, 1), (i + 1, 1))))

    if p == 2 and n >= 2:
        a2 = rho.scalars.alpha * rho.scalars.alpha
        report.witnesses.append(RelationCheck(
            "σ1² = α²I", "s1 s1", f"{format_scalar(a2, rho.domain)}·1",
            rho(((1, 1), (1, 1))) == scalar_mul(a2, rho.identity)))
        if n >= 3:
            report.witnesses.append(check("kernel", ((1, 1), (1, 1), (2, -1), (2, -1)), ()))
    logger.debug("braid relations p=%d n=%d: %d checks, all hold=%s",
                 p, n, len(report.relations), report.all_hold)
    return report


@dataclass(frozen=True)
class KernelReport:
    p: int
    n: int
    max_len: int
    words_checked: int
    certified: Tuple[str, ...]
    candidates: Tuple[str, ...]


def braid_kernel_search(p: int, n: int, alpha=1, branch: str = "+", max_len: int = 4,
                        max_dim: int = MAX_MATRIX_DIM) -> KernelReport:
    """
    max_len uzunluğa kadar serbest indirgenmiş örgü kelimeleri içinde ρ(w) = I
    olanlar. Üs toplamı sıfırdan farklı olan bir bulgu kesin çekirdek
    elemanıdır (üs toplamı örgü değişmezidir); üs toplamı 0 olanlar yalnızca
    adaydır. Sadakat hakkında hüküm verilmez.
    """
    rho = BraidRep(p, n, alpha, branch, max_dim)
    letters = [(i, e) for i in range(1, n) for e in (1, -1)]
    certified, candidates = [], []
    checked = 0
    stack = [((), rho.identity)]
    while stack:
        word, matrix = stack.pop()
        if len(word) == max_len:
            continue
        for letter in letters:
            if word and word[-1] == (letter[0], -letter[1]):
                continue
            w = word + (letter,)
            m = mat_mul(matrix, rho.generator(*letter))
            checked += 1
            if m == rho.identity:
                (certified if sum(e for _, e in w) else candidates).append(format_braid(w))
            stack.append((w, m))
    logger.debug("kernel search p=%d n=%d len≤%d: %d words, %d certified, %d candidates",
                 p, n, max_len, checked, len(certified), len(candidates))
    return KernelReport(p, n, max_len, checked, tuple(sorted(certified)), tuple(sorted(candidates)))


# ═══════════════════════════════════════════════════════════════════
#  Mat İÇİNDE K-BİRLEŞİMİ
# ═══════════════════════════════════════════════════════════════════

def mat_adjunction_identities(p: int, f: ExactMatrix) -> Dict[str, bool]:
    """f: a→b (b×a) için F = 1_p⊗(−) ile birleşim denklemleri."""
    b, a = f.shape
    def F(x: ExactMatrix) -> ExactMatrix:
        return kron_identity(p, x)

    ffa = F(F(f))
    return {
        "nat φ": mat_mul(f, phi_mat(p, a)) == mat_mul(phi_mat(p, b), ffa),
        "nat γ": mat_mul(ffa, gamma_mat(p, a)) == mat_mul(gamma_mat(p, b), f),
        "φγ left": mat_mul(F(phi_mat(p, a)), gamma_mat(p, p * a)) == identity(p * a),
        "φγ right": mat_mul(phi_mat(p, p * a), F(gamma_mat(p, a))) == identity(p * a),
        "φγK": F(mat_mul(phi_mat(p, a), gamma_mat(p, a)))
               == mat_mul(phi_mat(p, p * a), gamma_mat(p, p * a)),
        "φγ = p·1": mat_mul(phi_mat(p, a), gamma_mat(p, a)) == scalar_mul(p, identity(a)),
    }


# ═══════════════════════════════════════════════════════════════════
#  ÇIKTI
# ═══════════════════════════════════════════════════════════════════

def format_matrix(a: ExactMatrix, fmt: str = "text") -> str:
    cells = [[format_scalar(x, a.domain) for x in row] for row in a.to_list()]
    if fmt == "csv":
        return "".join(",".join(row) + "\n" for row in cells)
    if fmt != "text":
        raise ValueError(f"unknown matrix format {fmt!r}")
    width = max((len(c) for row in cells for c in row), default=1)
    return "".join(" ".join(c.rjust(width) for c in row) + "\n" for row in cells)
