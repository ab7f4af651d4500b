# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Error Hierarchy v1.0
Motorun fırlattığı tüm alan hataları. CLI her EngineError'ı çıkış kodu 1'e çevirir.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base error"""


class ParseError(EngineError):
    """Sözdizimi hatası; hatalı girdiyi ve konumu taşır."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.reason = message
        self.text = text
        self.position = position
        super().__init__(f"{message} (position {position})")


class IndexRangeError(EngineError):
    """Diapsis, örgü üreteci veya h_k^n indeksi aralık dışında."""


class TheoryError(EngineError):
    """Üreteç bu teoride kullanılamaz."""


class ArrowTypeError(EngineError):
    """Ok-teriminde tip uyuşmazlığı."""


class DimensionError(EngineError):
    """Matris boyutları uyumsuz ya da yapılandırılmış sınırı aşıyor."""


class ScalarError(EngineError):
    """Geçersiz skaler (α = 0, farklı d değerleri)."""


class EquationHoldsError(EngineError):
    """Denklem J_ω içinde zaten geçerli; çöküş yok."""


class RealizabilityError(EngineError):
    """Frieze verilen genişlikte bir terimle gerçeklenemiyor."""


class MatchingError(EngineError):
    """Eşleşme mükemmel ya da kesişmesiz değil."""
