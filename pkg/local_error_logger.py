# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Local Error Logger v1.0
CLI'nin yakaladığı alan hatalarını (ayrıştırma, indeks, tip, boyut) ve rapor/SVG
yazarken oluşan disk I/O hatalarını yapılandırılmış JSON formatında loglar.
Thread-safe, context manager destekli.
"""

import json
import os
import time
import errno
import threading
import logging
from collections import Counter

from config import LOCAL_ERROR_LOG
from errors import (
    ArrowTypeError, DimensionError, EquationHoldsError, IndexRangeError, ParseError,
    RealizabilityError, ScalarError, TheoryError,
)

logger = logging.getLogger("tlengine.local_error")

ERRNO_MAP = {
    errno.EACCES: "İzin hatası (Permission Denied)",
    errno.ENOENT: "Dosya/dizin bulunamadı",
    errno.EEXIST: "Dosya zaten mevcut",
    errno.ENOSPC: "Disk alanı yetersiz",
    errno.ENAMETOOLONG: "Dosya adı çok uzun",
}

# Sıra önemli: ilk eşleşen sınıfın ipucu kullanılır (PermissionError ⊂ OSError).
_HINTS = (
    (IndexRangeError, "📏 İndeks aralık dışında. --n değerini büyütün ya da indeksleri küçültün."),
    (TheoryError, "🧩 Üreteç bu teoride yok. --theory seçimini kontrol edin."),
    (ArrowTypeError, "🔗 Ok-terimi bileşkesinde tipler uyuşmuyor; sağdaki ok önce uygulanır."),
    (DimensionError, "📐 Matris boyutu sınırı aşıyor ya da uyumsuz. --max-dim ile sınırı yükseltin."),
    (ScalarError, "🔢 Geçersiz skaler: α sıfır olamaz, farklı √d değerleri karıştırılamaz."),
    (EquationHoldsError, "✅ Denklem J_ω içinde zaten geçerli; çöküş modülü tanımsız."),
    (RealizabilityError, "🧵 Frieze bu genişlikte bir K_n terimiyle gerçeklenemiyor. --n değerini kontrol edin."),
    (PermissionError, "🔒 Dosya/dizin üzerinde yazma izni yok. İzinleri kontrol edin."),
    (FileNotFoundError, "📁 Hedef dizin mevcut değil veya yol geçersiz. Dizin yapısını kontrol edin."),
    (OSError, "ℹ️ Genel I/O hatası. Disk durumunu ve izinleri kontrol edin."),
)


class LocalErrorLogger:
    """
    Alan ve I/O hatalarını yakalar ve JSON formatında loglar.

    Kullanım:
        with LocalErrorLogger() as err_logger:
            err_logger.safe_write("diagram.svg", svg)
            # veya
            err_logger.capture(exception, context="eq")

    Attributes:
        errors: Yakalanan hataların listesi
        error_count: Toplam hata sayısı
    """

    def __init__(self, log_file: str = None):
        self._log_file = log_file or LOCAL_ERROR_LOG
        self._errors = []
        self._lock = threading.Lock()
        self._active = False

    def __enter__(self):
        self._active = True
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self._active = False
        self._flush()
        return False  # exception'ları yeniden fırlat

    @property
    def error_count(self) -> int:
        with self._lock:
            return len(self._errors)

    @property
    def errors(self) -> list:
        with self._lock:
            return list(self._errors)

    def capture(self, exc: Exception, filepath: str = "", context: str = ""):
        """
        Bir exception'ı yakalar ve loglar.

        Args:
            exc: Yakalanan exception
            filepath: İlgili dosya yolu (varsa)
            context: Alt komut ya da işlem adı
        """
        with self._lock:
            error_entry = {
                "timestamp": time.time(),
                "time_str": time.strftime("%Y-%m-%d %H:%M:%S"),
                "type": type(exc).__name__,
                "message": str(exc),
                "filepath": filepath,
                "context": context,
                "diagnosis": self._diagnose(exc),
            }

            if isinstance(exc, OSError) and exc.errno is not None:
                error_entry["errno"] = exc.errno
                error_entry["errno_desc"] = ERRNO_MAP.get(exc.errno, "Bilinmeyen errno")

            if isinstance(exc, ParseError):
                error_entry["input"] = exc.text
                error_entry["position"] = exc.position

            self._errors.append(error_entry)
            logger.debug("Hata yakalandı: [%s] %s — %s",
                         error_entry["type"], error_entry["message"],
                         error_entry["diagnosis"])

    def _diagnose(self, exc: Exception) -> str:
        """Hatayı teşhis edip çözüm önerisi döndürür."""
        if isinstance(exc, ParseError):
            return (f"✏️ Girdi {exc.position}. konumda okunamadı. Token'lar boşlukla ayrılmalı "
                    f"(u1 n2 h3 c 1 a2^(()) …).")
        for cls, hint in _HINTS:
            if isinstance(exc, cls):
                return hint
        return "ℹ️ Beklenmeyen hata. Ayrıntılar için log dosyasına bakın."

    def safe_write(self, filepath: str, data: str, encoding: str = "utf-8") -> bool:
        """
        Güvenli dosya yazma wrapper'ı. Hataları otomatik yakalar.

        Returns:
            True başarılı, False hatalı
        """
        abs_path = os.path.abspath(filepath)
        try:
            dir_path = os.path.dirname(abs_path)
            if dir_path:
                os.makedirs(dir_path, exist_ok=True)

            with open(abs_path, "w", encoding=encoding) as f:
                f.write(data)
            return True

        except OSError as exc:
            self.capture(exc, filepath=abs_path, context="safe_write")
            return False

    def _flush(self):
        """Biriken hataları JSON dosyasına yazar."""
        with self._lock:
            if not self._errors:
                return
            try:
                os.makedirs(os.path.dirname(self._log_file), exist_ok=True)
                existing = []
                if os.path.isfile(self._log_file):
                    try:
                        with open(self._log_file, "r", encoding="utf-8") as f:
                            existing = json.load(f)
                    except (json.JSONDecodeError, IOError):
                        existing = []

                existing.extend(self._errors)

                with open(self._log_file, "w", encoding="utf-8") as f:
                    json.dump(existing, f, indent=2, ensure_ascii=False)

                logger.info("LocalErrorLogger: %d hata kaydı yazıldı — %s",
                            len(self._errors), self._log_file)
            except Exception as e:
                logger.error("LocalErrorLogger flush hatası: %s", e)

    def get_summary(self) -> dict:
        """Hata özeti: türe ve alt komuta göre sayımlar."""
        with self._lock:
            by_type = Counter(err["type"] for err in self._errors)
            by_context = Counter(err["context"] for err in self._errors if err["context"])
            return {
                "total_errors": len(self._errors),
                "error_types": dict(by_type),
                "contexts": dict(by_context),
                "errors": list(self._errors),
            }
