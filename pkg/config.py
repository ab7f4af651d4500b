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
SUITE_ETA_LENGTH     = 6               # η_p kelime uzunluğu
SUITE_ETA_INDEX      = 3
SUITE_ETA_MAX_DIM    = 256             # η_p örnekleri için boyut sınırı
SUITE_ETA_CONVERSE   = (3, 2)          # karşıt yön: kapsamlı kelime uzunluğu
KERNEL_SEARCH_LENGTH = (6, 4)          # örgü çekirdek araması kelime uzunluğu

# ─── KAYNAK TAKİBİ (psutil) ─────────────────────────────────────
RESOURCE_SAMPLE_INTERVAL = 0.5   # CPU/RAM örnekleme aralığı (sn)
