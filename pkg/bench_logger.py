# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Logging & Verify Report Module v1.0 (Lokal)
`tl verify` sürecini logs/ altına kaydeder ve paket sonuçlarını JSON raporuna yazar.
Kaynak kullanımı ve lokal hata verileri dahil.
"""

import json
import os
import time
import logging

from config import LOGS_DIR, VERSION

logger = logging.getLogger("tlengine.logger")


def setup_logging() -> str:
    """
    Logging altyapısını kurar. Log dosyası yolunu döndürür.
    """
    os.makedirs(LOGS_DIR, exist_ok=True)

    timestamp = time.strftime("%Y%m%d_%H%M%S")
    log_file = os.path.join(LOGS_DIR, f"tlengine_{timestamp}.log")

    # Root logger
    root = logging.getLogger()
    root.setLevel(logging.DEBUG)

    # Dosya handler
    fh = logging.FileHandler(log_file, encoding="utf-8")
    fh.setLevel(logging.DEBUG)
    fh.setFormatter(logging.Formatter(
        "[%(asctime)s] %(levelname)-8s %(name)-25s │ %(message)s",
        datefmt="%H:%M:%S"
    ))
    root.addHandler(fh)

    # Console handler (sadece WARNING+)
    ch = logging.StreamHandler()
    ch.setLevel(logging.WARNING)
    ch.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    root.addHandler(ch)

    logger.info("tlengine logging başlatıldı — %s", log_file)
    return log_file


def save_verify_report(results: dict, telemetry: dict, log_file: str,
                       error_summary: dict = None, seed: int = None, quick: bool = False) -> str:
    """
    `tl verify` raporunu JSON olarak kaydeder.

    Args:
        results: run_suites çıktısı
        telemetry: tüm koşunun SuiteTimer özeti

    Returns:
        Rapor dosyası yolu (hata olursa "")
    """
    try:
        timestamp = time.strftime("%Y%m%d_%H%M%S")
        report_file = os.path.join(LOGS_DIR, f"verify_{timestamp}.json")

        report = {
            "timestamp": timestamp,
            "version": VERSION,
            "seed": seed,
            "quick": quick,
            "log_file": log_file,
            "telemetry": telemetry,
            "suites": {},
            "local_errors": error_summary or {"total_errors": 0},
        }

        for name, data in results.items():
            report["suites"][name] = {
                "passed": data["passed"],
                "checks": data["checks"],
                "failures": data["failures"],
                "examples": data.get("examples", []),
                "elapsed": data.get("elapsed", 0.0),
                "resource_usage": data.get("resources", {}),
            }

        report["all_passed"] = all(d["passed"] for d in results.values())

        os.makedirs(LOGS_DIR, exist_ok=True)
        with open(report_file, "w", encoding="utf-8") as f:
            json.dump(report, f, indent=2, ensure_ascii=False)

        logger.info("Verify raporu kaydedildi: %s", report_file)
        return report_file

    except Exception as e:
        logger.error("Rapor kaydetme hatası: %s", e)
        return ""
