# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — HTML Report Generator v1.0
`tl verify` bitiminde logs/ altına paket sonuçlarını ve süre grafiğini içeren HTML raporu üretir.
Pure HTML + inline CSS + inline SVG chart — dış bağımlılık yok.
"""

import os
import time
import html
import logging

from config import LOGS_DIR, VERSION, APP_NAME

logger = logging.getLogger("tlengine.html_report")


def _status_color(passed: bool) -> str:
    return "#00e676" if passed else "#ff1744"


def _bar_svg(results: dict, label: str) -> str:
    """Paket başına duvar saati süresi için yatay bar chart SVG'si."""
    items = sorted(results.items(), key=lambda x: x[1].get("elapsed", 0.0), reverse=True)
    bar_height = 24
    gap = 6
    total_height = len(items) * (bar_height + gap) + 40
    width = 640
    longest = max((d.get("elapsed", 0.0) for _, d in items), default=0.0) or 1.0

    svg = f'<svg width="{width}" height="{total_height}" xmlns="http://www.w3.org/2000/svg">\n'
    svg += (f'  <text x="{width // 2}" y="22" text-anchor="middle" fill="#e0e0e0" font-size="14" '
            f'font-weight="bold">{html.escape(label)}</text>\n')

    y = 40
    for name, data in items:
        val = data.get("elapsed", 0.0)
        bar_w = max(2, (val / longest) * (width - 220))
        color = _status_color(data.get("passed", False))

        svg += f'  <rect x="160" y="{y}" width="{bar_w:.1f}" height="{bar_height}" rx="4" fill="{color}" opacity="0.85"/>\n'
        svg += f'  <text x="150" y="{y + 17}" text-anchor="end" fill="#b0b0b0" font-size="12">{html.escape(name)}</text>\n'
        svg += f'  <text x="{160 + bar_w + 8:.1f}" y="{y + 17}" fill="#ffffff" font-size="12">{val:.2f}s</text>\n'
        y += bar_height + gap

    svg += '</svg>'
    return svg


def _suite_row(name: str, data: dict) -> str:
    res = data.get("resources", {})
    passed = data.get("passed", False)
    examples = "".join(f"<li>{html.escape(e)}</li>" for e in data.get("examples", []))
    detail = f"<ul class=\"examples\">{examples}</ul>" if examples else ""
    return f"""
        <tr>
            <td class="suite">{html.escape(name)}{detail}</td>
            <td>{data.get('checks', 0):,}</td>
            <td>{data.get('failures', 0)}</td>
            <td>{data.get('elapsed', 0.0):.3f}s</td>
            <td>{res.get('avg_cpu', 0.0):.1f}% / {res.get('peak_cpu', 0.0):.1f}%</td>
            <td>{res.get('peak_ram_mb', 0.0):.0f}MB</td>
            <td style="color:{_status_color(passed)}; font-weight:700">{'GEÇTİ' if passed else 'KALDI'}</td>
        </tr>"""


def generate_html_report(results: dict, telemetry: dict, out_path: str = None) -> str:
    """
    HTML raporu üretir ve kaydeder.

    Args:
        results: run_suites çıktısı
        telemetry: tüm koşunun SuiteTimer özeti
        out_path: hedef dosya (yoksa logs/verify_<ts>.html)

    Returns:
        HTML dosya yolu (hata olursa "")
    """
    timestamp = time.strftime("%Y%m%d_%H%M%S")
    report_file = out_path or os.path.join(LOGS_DIR, f"verify_{timestamp}.html")

    rows = "".join(_suite_row(name, data) for name, data in results.items())
    chart = _bar_svg(results, "⏱️ PAKET SÜRELERİ")
    all_passed = all(d.get("passed") for d in results.values())
    verdict = "✅ Tüm paketler geçti" if all_passed else "❌ Kalan paketler var"

    html_content = f"""<!DOCTYPE html>
<html lang="tr">
<head>
    <meta charset="UTF-8">
    <title>{html.escape(APP_NAME)} — Doğrulama {timestamp}</title>
    <style>
        * {{ margin: 0; padding: 0; box-sizing: border-box; }}
        body {{
            background: #0a0a0f;
            color: #e0e0e0;
            font-family: 'Segoe UI', 'Inter', system-ui, -apple-system, sans-serif;
            line-height: 1.6;
        }}
        .container {{ max-width: 1100px; margin: 0 auto; padding: 30px 20px; }}
        .header {{
            text-align: center;
            padding: 30px 0 20px;
            border-bottom: 1px solid rgba(255,255,255,0.06);
            margin-bottom: 24px;
        }}
        .header h1 {{ font-size: 2rem; color: #00e5ff; letter-spacing: 2px; }}
        .header .version {{ color: #7c4dff; font-size: 0.9rem; letter-spacing: 3px; }}
        .verdict {{
            text-align: center;
            font-size: 1.3rem;
            font-weight: 800;
            margin-bottom: 24px;
            color: {_status_color(all_passed)};
        }}
        .chart-box {{
            background: rgba(255,255,255,0.02);
            border: 1px solid rgba(255,255,255,0.06);
            border-radius: 12px;
            padding: 20px;
            text-align: center;
            margin-bottom: 24px;
        }}
        table {{ width: 100%; border-collapse: collapse; }}
        th, td {{ padding: 8px 10px; border-bottom: 1px solid rgba(255,255,255,0.06); text-align: right; }}
        th {{ color: #888; font-size: 0.75rem; text-transform: uppercase; letter-spacing: 1px; }}
        td.suite {{ text-align: left; color: #00e5ff; font-weight: 600; }}
        .examples {{ color: #ff8a80; font-weight: 400; font-size: 0.8rem; margin-left: 18px; }}
        .meta {{ color: #666; font-size: 0.85rem; margin-top: 20px; text-align: center; }}
    </style>
</head>
<body>
    <div class="container">
        <div class="header">
            <h1>∪ ∩ {html.escape(APP_NAME)}</h1>
            <div class="version">v{VERSION} — doğrulama raporu</div>
        </div>
        <div class="verdict">{verdict}</div>
        <div class="chart-box">{chart}</div>
        <table>
            <tr><th style="text-align:left">Paket</th><th>Kontrol</th><th>Hata</th><th>Süre</th>
                <th>CPU ort/zirve</th><th>RAM zirve</th><th>Durum</th></tr>
            {rows}
        </table>
        <div class="meta">
            ⏱️ {telemetry.get('elapsed', 0.0):.2f}s •
            🖥️ CPU ort {telemetry.get('avg_cpu', 0.0):.1f}% •
            🧮 RAM zirve {telemetry.get('peak_ram_mb', 0.0):.0f}MB •
            📅 {time.strftime("%Y-%m-%d %H:%M:%S")}
        </div>
    </div>
</body>
</html>"""

    try:
        os.makedirs(os.path.dirname(os.path.abspath(report_file)), exist_ok=True)
        with open(report_file, "w", encoding="utf-8") as f:
            f.write(html_content)
        logger.info("HTML rapor oluşturuldu: %s", report_file)
        return report_file
    except Exception as e:
        logger.error("HTML rapor oluşturma hatası: %s", e)
        return ""
