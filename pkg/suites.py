# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Verification Suites v1.0
`tl verify` altında koşan kabul paketleri. Her paket tohumlanmış bir
random.Random alır, kontrollerini bir _Tally'ye yazar ve SuiteTimer ile
ölçülür.

Sonuç biçimi:
    {ad: {passed, checks, failures, examples, elapsed, resources}}
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional

from adjunction import (
    Comp, Fof, Gamma, Id, Phi, adjunction_equations, chi, compare_arrows, eq_Kc, eq_Lc,
    format_arrow, fpow, kappa, psi, type_of,
)
from config import (
    DEFAULT_SEED, KERNEL_SEARCH_LENGTH, SUITE_ARROW_SAMPLES, SUITE_CATALAN_MAX_N,
    SUITE_ETA_CONVERSE, SUITE_ETA_INDEX, SUITE_ETA_LENGTH, SUITE_ETA_MAX_DIM, SUITE_FORM_DEPTH,
    SUITE_KN_WIDTH, SUITE_MAT_SAMPLES, SUITE_MAX_INDEX, SUITE_ORACLE_INDEX, SUITE_ORACLE_LENGTH,
    SUITE_RANDOM_WORDS, SUITE_ROUNDTRIP_N, SUITE_WORD_LENGTH,
)
from diagram import (
    FriezeK, balance, catalan, compose, crown_pair, cups_caps, enumerate_Jn, eval_term,
    make_matching, matching_to_term, slope_sequences, span_one_cups, threads_covering,
)
from errors import DimensionError
from linalg import from_rows, mat_mul, scalar_mul
from matrep import (
    H_eval, braid_kernel_search, check_braid_relations, e_row, equiv_J, eta, faithfulness_check,
    gamma_mat, h_mat, independence_report, mat_adjunction_identities, phi_mat,
    relation_product_check, rep_Kn,
)
from normalize import (
    block_word, collapse_lnf, enumerate_jones_nf, eq_J, eq_K, eq_Kn, eq_Ln, jones_redexes,
    jones_to_term, knf_redexes, knf_to_term, lnf_redexes, measure_Kn, normalize_K, normalize_Kn,
    normalize_L, rewrite_steps_Kn,
)
from equations import random_rewrite
from ordinals import omega_pow
from samples import (
    exhaustive_k_words, random_arrow, random_ext_word, random_form, random_k_word,
    random_kn_word, random_matrix,
)
from telemetry import SuiteTimer
from terms import (
    C, Circle, Diapsis, K, Kn, L, Ln, Term, embed_diapsides, parse_term, strip_units,
    unfold_circles,
)

logger = logging.getLogger("tlengine.suites")

MAX_EXAMPLES = 5
CATALAN_NUMBERS = (1, 1, 2, 5, 14, 42, 132)

E2_CAP_CUP = [
    [1, 0, 0, 1],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [1, 0, 0, 1],
]

# aynı tipte, K_c içinde farklı ok çiftleri
APART_PAIRS = (
    (kappa(1), Id(1)),
    (Comp(Gamma(0), Phi(0)), Id(2)),
    (Fof(Gamma(0)), Gamma(1)),
    (Comp(kappa(0), kappa(0)), kappa(0)),
)


@dataclass
class _Tally:
    checks: int = 0
    failed: int = 0
    examples: List[str] = field(default_factory=list)

    def check(self, ok: bool, label: str) -> bool:
        self.checks += 1
        if not ok:
            self.fail(label)
        return ok

    def fail(self, label: str):
        self.failed += 1
        if len(self.examples) < MAX_EXAMPLES:
            self.examples.append(label)
        logger.debug("başarısız: %s", label)

    def add(self, checks: int, failures: Iterable[str]):
        self.checks += checks
        for label in failures:
            self.fail(label)

    @property
    def passed(self) -> bool:
        return self.failed == 0


SuiteFn = Callable[[_Tally, random.Random, bool], None]
SUITES: Dict[str, SuiteFn] = {}


def _suite(name: str):
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn
    return register


def _size(pair, quick: bool):
    full, small = pair
    return small if quick else full


def _empty(theory) -> Term:
    return Term((), theory)


# ═══════════════════════════════════════════════════════════════════
#  SAYIM VE KÂHİN
# ═══════════════════════════════════════════════════════════════════

@_suite("catalan")
def suite_catalan(tally: _Tally, rng: random.Random, quick: bool):
    for n in range(SUITE_CATALAN_MAX_N + 1):
        expected = CATALAN_NUMBERS[n]
        tally.check(catalan(n) == expected, f"catalan({n}) = {catalan(n)}, expected {expected}")
        direct = enumerate_Jn(n, "direct")
        jones = enumerate_Jn(n, "jones")
        tally.check(len(direct) == expected, f"n={n}: {len(direct)} matchings")
        tally.check(len(enumerate_jones_nf(n)) == expected, f"n={n}: Jones normal form count")
        tally.check(direct == jones, f"n={n}: direct and Jones enumerations differ")


@_suite("oracle")
def suite_oracle(tally: _Tally, rng: random.Random, quick: bool):
    """K-normal formu ile frieze aynı denklik sınıflarını vermeli (iki yönde)."""
    length = _size(SUITE_ORACLE_LENGTH, quick)
    by_nf = {}
    by_frieze = {}
    for t in exhaustive_k_words(length, SUITE_ORACLE_INDEX):
        nf = normalize_K(t)
        frieze = eval_term(t)
        tally.check(by_nf.setdefault(nf, frieze) == frieze,
                    f"{t}: same K-normal form, different frieze")
        tally.check(by_frieze.setdefault(frieze, nf) == nf,
                    f"{t}: same frieze, different K-normal form")
    for nf, frieze in by_nf.items():
        tally.check(eval_term(knf_to_term(nf)) == frieze, f"normal form {nf} changes the frieze")
    logger.info("oracle: %d sınıf", len(by_nf))


# ═══════════════════════════════════════════════════════════════════
#  MATRİSLER
# ═══════════════════════════════════════════════════════════════════

@_suite("known-matrices")
def suite_known_matrices(tally: _Tally, rng: random.Random, quick: bool):
    expected = {
        "E_2": (e_row(2), from_rows([[1, 0, 0, 1]])),
        "E_3": (e_row(3), from_rows([[1, 0, 0, 0, 1, 0, 0, 0, 1]])),
        "E_2′E_2": (h_mat(2, 2, 1), from_rows(E2_CAP_CUP)),
        "rep h1": (rep_Kn(2, 2, parse_term("h1", Kn(2))), from_rows(E2_CAP_CUP)),
        "φ_1γ_1": (mat_mul(phi_mat(2, 1), gamma_mat(2, 1)), from_rows([[2]])),
    }
    for name, (got, want) in expected.items():
        tally.check(got == want, f"{name} differs")

    for p in (2, 3):
        for n in (2, 3):
            for k in range(1, n):
                h = h_mat(p, n, k)
                tally.check(mat_mul(h, h) == scalar_mul(p, h), f"p={p} n={n}: h{k}² ≠ p·h{k}")
                if k + 1 < n:
                    nxt = h_mat(p, n, k + 1)
                    tally.check(mat_mul(mat_mul(h, nxt), h) == h, f"p={p} n={n}: h{k}h{k + 1}h{k} ≠ h{k}")


@_suite("mat-adjunction")
def suite_mat_adjunction(tally: _Tally, rng: random.Random, quick: bool):
    samples = _size(SUITE_MAT_SAMPLES, quick)
    for p in (2, 3):
        for a in (1, 2, 3):
            for _ in range(samples):
                f = random_matrix(rng, rng.randint(1, 3), a)
                for name, holds in mat_adjunction_identities(p, f).items():
                    tally.check(holds, f"p={p} a={a}: {name}")


@_suite("independence")
def suite_independence(tally: _Tally, rng: random.Random, quick: bool):
    for p, n in ((2, 3), (3, 3), (2, 4), (2, 5)):
        report = independence_report(p, n)
        tally.check(report.independent and report.count == catalan(n),
                    f"p={p} n={n}: rank {report.rank} of {report.count}")

    max_n = 3 if quick else 4
    for p in (2, 3):
        for n in range(1, max_n + 1):
            report = faithfulness_check(p, n)
            tally.check(report.faithful, f"p={p} n={n}: {len(report.collisions)} collisions")

    for p, n in ((2, 3), (3, 3)):
        checks, failures = relation_product_check(p, n)
        tally.add(checks, (f"p={p} n={n}: support of {w}" for w in failures))


@_suite("braid")
def suite_braid(tally: _Tally, rng: random.Random, quick: bool):
    primes = (2, 3) if quick else (2, 3, 5)
    for p in primes:
        for n in (3, 4):
            for branch in ("+", "-"):
                report = check_braid_relations(p, n, 1, branch)
                for rel in report.relations + report.witnesses:
                    tally.check(rel.holds, f"p={p} n={n} {branch}: {rel.name} {rel.lhs} = {rel.rhs}")
                if p == 2:
                    tally.check(bool(report.witnesses), f"p=2 n={n}: no non-faithfulness witness")


# ═══════════════════════════════════════════════════════════════════
#  NORMAL FORMLAR
# ═══════════════════════════════════════════════════════════════════

def _stability(tally: _Tally, t: Term, normal_form, rng: random.Random):
    step = random_rewrite(t, rng)
    if step is None:
        return
    tally.check(normal_form(step.result) == normal_form(t),
                f"{t} —{step.rule}{step.direction}@{step.position}→ {step.result}")


@_suite("nf-stability")
def suite_nf_stability(tally: _Tally, rng: random.Random, quick: bool):
    count = _size(SUITE_RANDOM_WORDS, quick)
    for _ in range(count):
        length = rng.randint(0, SUITE_WORD_LENGTH)
        t = Term(random_ext_word(rng, length, SUITE_MAX_INDEX, SUITE_FORM_DEPTH), L)
        _stability(tally, t, normalize_L, rng)
        redexes = lnf_redexes(normalize_L(t))
        tally.check(not redexes, f"LNF of {t} has redexes {redexes}")

    for _ in range(count):
        t = random_k_word(rng, rng.randint(0, SUITE_WORD_LENGTH), SUITE_MAX_INDEX)
        _stability(tally, t, normalize_K, rng)
        redexes = knf_redexes(normalize_K(t))
        tally.check(not redexes, f"KNF of {t} has redexes {redexes}")

    for _ in range(count):
        t = random_kn_word(rng, SUITE_KN_WIDTH, rng.randint(0, SUITE_WORD_LENGTH))
        _stability(tally, t, normalize_Kn, rng)


@_suite("kn-measure")
def suite_kn_measure(tally: _Tally, rng: random.Random, quick: bool):
    count = _size(SUITE_RANDOM_WORDS, quick)
    for _ in range(count):
        t = random_kn_word(rng, SUITE_KN_WIDTH, rng.randint(0, 2 * SUITE_WORD_LENGTH))
        previous = measure_Kn(block_word(t))
        for rule, word in rewrite_steps_Kn(t):
            current = measure_Kn(word)
            tally.check(current < previous, f"{t}: {rule} took {previous} to {current}")
            previous = current
        redexes = jones_redexes(normalize_Kn(t))
        tally.check(not redexes, f"Jones normal form of {t} has redexes {redexes}")


@_suite("ln-identities")
def suite_ln_identities(tally: _Tally, rng: random.Random, quick: bool):
    n = SUITE_KN_WIDTH
    theory = Ln(n)
    count = max(1, _size(SUITE_RANDOM_WORDS, quick) // 10)
    for _ in range(count):
        alpha = random_form(rng, SUITE_FORM_DEPTH)
        i = rng.randint(1, n - 1)
        k = rng.choice([x for x in range(1, n + 2) if x != i + 1])
        h = Diapsis(i)
        cases = {
            "hc1′": ((h, C(k, alpha)), (C(k, alpha), h)),
            "hc2′": ((h, C(i + 1, alpha), h), (C(i, omega_pow(alpha)), h)),
            "hc3": ((C(i, alpha), h), (C(i + 2, alpha), h)),
        }
        for name, (lhs, rhs) in cases.items():
            t, u = Term(lhs, theory), Term(rhs, theory)
            tally.check(eq_Ln(t, u), f"{name}: {t} ≠ {u}")


# ═══════════════════════════════════════════════════════════════════
#  DİYAGRAM DEĞİŞMEZLERİ
# ═══════════════════════════════════════════════════════════════════

def _between_neighbours(indices: List[int]) -> bool:
    """İki h_i arasında hem h_{i+1} hem h_{i−1} bulunmalı."""
    last = {}
    for q, i in enumerate(indices):
        if i in last:
            between = indices[last[i] + 1:q]
            if i + 1 not in between or i - 1 not in between:
                return False
        last[i] = q
    return True


SIX_EXAMPLE = make_matching(7, 11, [
    (-3, -4), (-2, -5), (-7, -8), (-9, -10),
    (1, 2), (4, 5),
    (-1, 3), (-6, 6), (-11, 7),
])


@_suite("diagram-invariants")
def suite_diagram_invariants(tally: _Tally, rng: random.Random, quick: bool):
    for n in range((4 if quick else SUITE_CATALAN_MAX_N) + 1):
        for nf in enumerate_jones_nf(n):
            t = jones_to_term(nf, Kn(n))
            f = eval_term(t)
            cups, caps = cups_caps(f)
            tally.check(_between_neighbours([g.i for g in t.gens]), f"h_i not between h_{{i±1}}: {t}")
            tally.check(cups == caps, f"{t} has {cups} cups and {caps} caps")
            tally.check(all(threads_covering(f, m) % 2 == 0 for m in range(1, n)), f"odd thread count: {t}")
            tally.check(not cups or bool(span_one_cups(f)), f"no span-one cup: {t}")
            expected = ([a for _, a in nf.blocks], [b for b, _ in nf.blocks])
            tally.check(slope_sequences(f) == expected, f"slope sequences differ from blocks: {t}")

    # aynı J-normal formundaki kelimelerin dengesi 0
    length = _size(SUITE_ORACLE_LENGTH, quick)
    representatives = {}
    for t in exhaustive_k_words(length, SUITE_ORACLE_INDEX):
        nf = normalize_K(t)
        rep = representatives.setdefault((nf.caps, nf.cups), t)
        tally.check(balance(rep, t) == 0, f"balance({rep}, {t}) ≠ 0")

    tally.check(crown_pair(FriezeK(SIX_EXAMPLE)) == (11, 7), "worked example crown pair")

    count = max(1, _size(SUITE_RANDOM_WORDS, quick) // 10)
    for _ in range(count):
        t = random_k_word(rng, rng.randint(0, SUITE_WORD_LENGTH), SUITE_MAX_INDEX)
        u = random_k_word(rng, rng.randint(0, SUITE_WORD_LENGTH), SUITE_MAX_INDEX)
        ft, fu = eval_term(t), eval_term(u)
        tally.check(eval_term(t + u) == compose(fu, ft), f"δ({t} · {u}) ≠ δ({t})δ({u})")
        k, l = crown_pair(ft)
        tally.check(abs(k - l) == 2 * balance(t, _empty(K)), f"crown ({k},{l}) of {t}")


# ═══════════════════════════════════════════════════════════════════
#  GİDİŞ-DÖNÜŞLER
# ═══════════════════════════════════════════════════════════════════

def _padded_pair(f, g):
    """f ve g'yi F-kuvvetleriyle aynı tipe getirir; uyumsuzsa None."""
    (a, b), (s, t) = type_of(f), type_of(g)
    if s - a != t - b:
        return None
    if s >= a:
        return fpow(f, s - a), g
    return f, fpow(g, a - s)


@_suite("round-trips")
def suite_round_trips(tally: _Tally, rng: random.Random, quick: bool):
    max_n = _size(SUITE_ROUNDTRIP_N, quick)
    for n in range(max_n + 1):
        for m in enumerate_Jn(n):
            for loops in (0, 1):
                f = FriezeK(m, loops)
                t = matching_to_term(f, n)
                tally.check(eval_term(t) == f, f"n={n}: {m} → {t}")

    count = max(1, _size(SUITE_RANDOM_WORDS, quick) // 10)
    for _ in range(count):
        t = random_k_word(rng, rng.randint(0, SUITE_WORD_LENGTH), SUITE_MAX_INDEX, circles=False)
        tally.check(strip_units(psi(chi(t), L)) == t, f"ψχ in L: {t}")
        t = random_k_word(rng, rng.randint(0, SUITE_WORD_LENGTH), SUITE_MAX_INDEX)
        tally.check(strip_units(psi(chi(t), K)) == unfold_circles(t), f"ψχ in K: {t}")

    skipped = 0
    for _ in range(_size(SUITE_ARROW_SAMPLES, quick)):
        f = random_arrow(rng, rng.randint(0, 2), rng.randint(1, 4))
        label = format_arrow(f)

        p = rng.choice((2, 3))
        try:
            tally.check(equiv_J(p, H_eval(p, f), eta(p, psi(f))), f"H_{p} vs η_{p}∘ψ: {label}")
        except DimensionError:
            skipped += 1  # boyut sınırını aşan örnek

        pair = _padded_pair(f, chi(psi(f)))
        tally.check(pair is not None and eq_Kc(*pair), f"χψ: {label}")

        a, _ = type_of(f)
        for name, (lhs, rhs) in adjunction_equations(f).items():
            tally.check(eq_Kc(lhs, rhs), f"{name}: {label}")
            tally.check(eq_Kc(Fof(lhs), Fof(rhs)), f"cancellation ({name}): {label}")
        other = Comp(f, kappa(a))
        tally.check(not eq_Kc(f, other), f"f∘κ = f: {label}")
        tally.check(not eq_Kc(Fof(f), Fof(other)), f"cancellation (κ): F(f∘κ) = F(f): {label}")
        g = random_arrow(rng, a, rng.randint(1, 4))
        if type_of(g) == type_of(f):
            tally.check(eq_Kc(Fof(f), Fof(g)) == eq_Kc(f, g),
                        f"cancellation: {label} vs {format_arrow(g)}")

    for f, g in APART_PAIRS:
        tally.check(not eq_Kc(f, g), f"{format_arrow(f)} = {format_arrow(g)} in K_c")
        tally.check(not eq_Kc(Fof(f), Fof(g)),
                    f"cancellation: F identifies {format_arrow(f)} and {format_arrow(g)}")

    h = Comp(Comp(Fof(kappa(3)), Gamma(2)), Gamma(0))
    lhs, rhs = Comp(Phi(2), h), Comp(fpow(Phi(0), 2), h)
    tally.check(eq_Kc(lhs, rhs), "φ_2∘h = F²φ_0∘h in K_c")
    tally.check(not eq_Lc(lhs, rhs), "φ_2∘h ≠ F²φ_0∘h in L_c")
    tally.check(compare_arrows(kappa(0), Id(0), "J").equal, "φ_0∘γ_0 = 1_0 in J_c")
    if skipped:
        logger.info("round-trips: %d ok-terimi boyut sınırı nedeniyle atlandı", skipped)


# ═══════════════════════════════════════════════════════════════════
#  η_p, İZDÜŞÜM VE GÖMME
# ═══════════════════════════════════════════════════════════════════

def _j_twin(rng: random.Random, t: Term) -> Term:
    """t ile J_ω'da eşit kelime: daireler atılır/eklenir, bir K denklemi uygulanır."""
    gens = [g for g in t.gens if not isinstance(g, Circle) or rng.random() < 0.5]
    for _ in range(rng.randint(0, 2)):
        gens.insert(rng.randint(0, len(gens)), Circle())
    u = Term(tuple(gens), t.theory)
    step = random_rewrite(u, rng)
    return u if step is None else step.result


@_suite("eta-soundness")
def suite_eta_soundness(tally: _Tally, rng: random.Random, quick: bool):
    """J_ω'da eşit kelimelerin η_p görüntüleri ≡^J; küçük kelimelerde karşıt yön de."""
    skipped = 0
    for _ in range(max(1, _size(SUITE_RANDOM_WORDS, quick) // 10)):
        t = random_k_word(rng, rng.randint(0, SUITE_ETA_LENGTH), SUITE_ETA_INDEX)
        u = _j_twin(rng, t)
        tally.check(eq_J(t, u), f"{t} and {u} differ in J")
        p = rng.choice((2, 3))
        try:
            a, b = eta(p, t, SUITE_ETA_MAX_DIM), eta(p, u, SUITE_ETA_MAX_DIM)
        except DimensionError:
            skipped += 1
            continue
        tally.check(equiv_J(p, a, b), f"p={p}: η({t}) ≢^J η({u})")

    classes: Dict[tuple, Term] = {}
    for t in exhaustive_k_words(_size(SUITE_ETA_CONVERSE, quick), 2):
        nf = normalize_K(t)
        classes.setdefault((nf.caps, nf.cups), t)
    words = list(classes.values())
    for p in (2, 3):
        images = []
        for t in words:
            try:
                images.append((t, eta(p, t)))
            except DimensionError:
                skipped += 1
        for i, (t, a) in enumerate(images):
            for u, b in images[i + 1:]:
                tally.check(not equiv_J(p, a, b), f"p={p}: η({t}) ≡^J η({u}) across J classes")
    if skipped:
        logger.info("eta-soundness: %d kelime boyut sınırı nedeniyle atlandı", skipped)


@_suite("projection")
def suite_projection(tally: _Tally, rng: random.Random, quick: bool):
    for _ in range(_size(SUITE_RANDOM_WORDS, quick)):
        length = rng.randint(0, SUITE_WORD_LENGTH)
        if rng.random() < 0.5:
            t = Term(random_ext_word(rng, length, SUITE_MAX_INDEX, SUITE_FORM_DEPTH), L)
        else:
            t = random_k_word(rng, length, SUITE_MAX_INDEX, circles=False)
        tally.check(collapse_lnf(normalize_L(t)) == normalize_K(t),
                    f"{t}: collapsed L-normal form ≠ K-normal form")


@_suite("embedding-coherence")
def suite_embedding_coherence(tally: _Tally, rng: random.Random, quick: bool):
    """K_n eşitliği, diapsis gömmesinden sonra K_ω eşitliğiyle aynı."""
    n = SUITE_KN_WIDTH
    theory = Kn(n)
    equal = 0
    for _ in range(_size(SUITE_RANDOM_WORDS, quick)):
        t = random_kn_word(rng, n, rng.randint(0, SUITE_WORD_LENGTH))
        roll = rng.random()
        if roll < 0.35:
            u = jones_to_term(normalize_Kn(t), theory)
        elif roll < 0.7:
            step = random_rewrite(t, rng)
            u = t if step is None else step.result
        else:
            u = random_kn_word(rng, n, rng.randint(0, SUITE_WORD_LENGTH))
        same = eq_Kn(t, u)
        equal += same
        tally.check(same == eq_K(embed_diapsides(t), embed_diapsides(u)),
                    f"{t} vs {u}: K_{n} says {'equal' if same else 'different'}, K_ω disagrees")
    logger.info("embedding-coherence: %d eşit çift", equal)


# ═══════════════════════════════════════════════════════════════════
#  ÖRGÜ ÇEKİRDEĞİ
# ═══════════════════════════════════════════════════════════════════

@_suite("kernel-search")
def suite_kernel_search(tally: _Tally, rng: random.Random, quick: bool):
    length = _size(KERNEL_SEARCH_LENGTH, quick)
    report = braid_kernel_search(2, 3, max_len=length)
    tally.check(bool(report.certified), "p=2: no certified kernel element")
    tally.check("s1 s1" in report.certified, "p=2: s1 s1 is not in the kernel")
    # p = 3 için yalnızca rapor
    report = braid_kernel_search(3, 3, max_len=length)
    logger.info("kernel-search p=3 n=3: %d kelime, %d kesin, %d aday",
                report.words_checked, len(report.certified), len(report.candidates))


# ═══════════════════════════════════════════════════════════════════
#  ÇALIŞTIRICI
# ═══════════════════════════════════════════════════════════════════

def run_suites(names: Optional[Iterable[str]] = None, quick: bool = False,
               seed: int = DEFAULT_SEED) -> Dict[str, dict]:
    selected = list(names) if names else list(SUITES)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")

    results = {}
    for name in selected:
        rng = random.Random(f"{seed}:{name}")
        tally = _Tally()
        with SuiteTimer(name) as timer:
            try:
                SUITES[name](tally, rng, quick)
            except Exception as e:
                logger.exception("%s paketi çöktü", name)
                tally.fail(f"crashed: {type(e).__name__}: {e}")
        summary = timer.summary()
        results[name] = {
            "passed": tally.passed,
            "checks": tally.checks,
            "failures": tally.failed,
            "examples": list(tally.examples),
            "elapsed": summary.pop("elapsed"),
            "resources": summary,
        }
        logger.info("%s: %d kontrol, %d hata", name, tally.checks, tally.failed)
    return results
# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Configuration Module v1.0 (Lokal)
Tüm yollar, limitler, varsayılan parametreler ve doğrulama takımı boyutları.
Sayısal limitlerin hepsi CLI bayraklarıyla ezilebilir; buradakiler güvenli varsayılanlardır.
"""

import os

# ─── META ────────────────────────────────────────────────────────
VERSION   = "1.0-local"
APP_NAME  = "Adjunction Algebra Engine"
PROG_NAME = "tl"

# ─── BASE ────────────────────────────────────────────────────────
BASE_DIR = os.path.abspath(os.path.dirname(os.path.abspath(__file__)))

# ─── LOGLAMA ─────────────────────────────────────────────────────
LOGS_DIR        = os.path.abspath(os.environ.get("TL_LOGS_DIR", os.path.join(BASE_DIR, "logs")))
LOCAL_ERROR_LOG = os.path.abspath(os.path.join(LOGS_DIR, "local_errors.json"))

# ─── MATRİS LİMİTLERİ ───────────────────────────────────────────
MAX_MATRIX_EXPONENT = 11                         # n·log_p ≤ 11
MAX_MATRIX_DIM      = 2 ** MAX_MATRIX_EXPONENT   # 2048 × 2048

# ─── PARSER LİMİTLERİ ───────────────────────────────────────────
MAX_ARROW_DEPTH = 200    # ok-terimi iç içe F(...) derinliği

# ─── VARSAYILANLAR ───────────────────────────────────────────────
DEFAULT_ALPHA  = "1"
DEFAULT_BRANCH = "+"
DEFAULT_FORMAT = "ascii"
DEFAULT_SEED   = 20240229

# ─── DOĞRULAMA TAKIMI (tl verify) ───────────────────────────────
# (tam, --quick)
SUITE_RANDOM_WORDS   = (10_000, 500)   # rastgele kelime sayısı
SUITE_WORD_LENGTH    = 8               # L_ω rastgele kelime uzunluğu
SUITE_MAX_INDEX      = 5               # rastgele kelime indeks üst sınırı
SUITE_FORM_DEPTH     = 2               # dairesel form derinliği
SUITE_KN_WIDTH       = 6               # ölçü testi için K_n genişliği
SUITE_ORACLE_LENGTH  = (5, 3)          # kapsamlı kâhin kelime uzunluğu
SUITE_ORACLE_INDEX   = 4
SUITE_MAT_SAMPLES    = (100, 10)       # şekil başına rastgele matris
SUITE_ARROW_SAMPLES  = (1_000, 100)    # rastgele ok-terimi
SUITE_CATALAN_MAX_N  = 6
SUITE_ROUNDTRIP_N    = (5, 4)
KERNEL_SEARCH_LENGTH = (6, 4)          # örgü çekirdek araması kelime uzunluğu

# ─── KAYNAK TAKİBİ (psutil) ─────────────────────────────────────
RESOURCE_SAMPLE_INTERVAL = 0.5   # CPU/RAM örnekleme aralığı (sn)