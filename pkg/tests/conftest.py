# -*- coding: utf-8 -*-
"""Ortak fixture'lar: tohumlanmış rng, küçük kelime listeleri, logs/ yönlendirmesi."""

import logging
import random

import pytest

import bench_logger
import html_report
import local_error_logger
from samples import exhaustive_k_words


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    """Raporlar ve hata günlüğü depo yerine geçici dizine yazılır."""
    logs = tmp_path / "logs"
    monkeypatch.setattr(bench_logger, "LOGS_DIR", str(logs))
    monkeypatch.setattr(html_report, "LOGS_DIR", str(logs))
    monkeypatch.setattr(local_error_logger, "LOCAL_ERROR_LOG", str(logs / "local_errors.json"))

    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield logs
    for h in root.handlers[:]:
        if h not in handlers:
            root.removeHandler(h)
            h.close()
    root.setLevel(level)


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture(scope="session")
def short_k_words():
    # uzunluk ≤ 3, indeks ≤ 2: 5 harfli alfabe → 156 kelime
    return list(exhaustive_k_words(3, 2))
