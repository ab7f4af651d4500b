# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Console Dashboard v1.0 (Lokal)
`tl verify` paket tablosu, `tl braid-check --table` ilişki tablosu ve final paneli.
Sözleşmeli komut çıktıları (normal formlar, equal/not equal, matrisler) buradan geçmez.
"""

from rich.console import Console
from rich.table import Table
from rich.panel import Panel
from rich.text import Text
from rich.align import Align
from rich import box

from config import VERSION, APP_NAME

console = Console()
err_console = Console(stderr=True)


def _fmt(seconds) -> str:
    if seconds is None:
        return "—"
    if seconds < 60:
        return f"{seconds:.2f}s"
    m, s = divmod(seconds, 60)
    return f"{int(m)}m {s:.1f}s"


def _status_text(passed: bool) -> Text:
    if passed:
        return Text("✅ GEÇTİ", style="bold bright_green")
    return Text("❌ KALDI", style="bold bright_red")


# ═══════════════════════════════════════════════════════════════════
#  PAKET TABLOSU
# ═══════════════════════════════════════════════════════════════════

def build_suite_table(results: dict) -> Table:
    table = Table(
        title="🧪 DOĞRULAMA PAKETLERİ",
        box=box.HEAVY_EDGE, show_lines=True,
        title_style="bold bright_yellow",
        border_style="bright_blue",
        header_style="bold bright_white on dark_blue",
        padding=(0, 1),
    )
    table.add_column("📦 PAKET", style="bold", justify="left", min_width=18)
    table.add_column("🔢 KONTROL", justify="right", min_width=10)
    table.add_column("❌ HATA", justify="right", min_width=8)
    table.add_column("⏱️ SÜRE", justify="center", min_width=10)
    table.add_column("🖥️ CPU%", justify="center", min_width=8)
    table.add_column("🧮 RAM", justify="center", min_width=10)
    table.add_column("📊 DURUM", justify="center", min_width=12)

    for name, d in results.items():
        res = d.get("resources", {})
        avg_cpu = res.get("avg_cpu", 0.0)
        peak_ram = res.get("peak_ram_mb", 0.0)
        cpu_style = "bold bright_red" if avg_cpu > 80 else ("bright_yellow" if avg_cpu > 50 else "bright_green")
        cpu_text = Text(f"{avg_cpu:.0f}%", style=cpu_style) if avg_cpu > 0 else Text("—", style="dim")
        ram_text = Text(f"{peak_ram:.0f}MB", style="bright_cyan") if peak_ram > 0 else Text("—", style="dim")
        failures = d.get("failures", 0)

        table.add_row(
            Text(name, style="bright_cyan"),
            Text(f"{d.get('checks', 0):,}"),
            Text(str(failures), style="bold bright_red" if failures else "dim green"),
            Text(_fmt(d.get("elapsed")), style="bright_white"),
            cpu_text, ram_text,
            _status_text(d.get("passed", False)),
        )
    return table


def build_failure_panel(results: dict) -> Panel:
    """Kalan paketlerin ilk örnek hataları."""
    lines = []
    for name, d in results.items():
        if d.get("passed"):
            continue
        lines.append(f"[bold bright_red]{name}[/] — {d.get('failures', 0)} hata")
        for example in d.get("examples", []):
            lines.append(f"  • {example}")
        lines.append("")
    content = "\n".join(lines).rstrip() or "—"
    return Panel(content, title="[bold]🔍 Örnek Hatalar[/]", border_style="bright_red", padding=(1, 2))


# ═══════════════════════════════════════════════════════════════════
#  ÖRGÜ İLİŞKİLERİ
# ═══════════════════════════════════════════════════════════════════

def build_relation_table(report) -> Table:
    """check_braid_relations raporundan ilişki tablosu."""
    table = Table(
        title=f"🪢 ÖRGÜ İLİŞKİLERİ — p={report.p}  n={report.n}  α={report.alpha}  dal {report.branch}",
        box=box.ROUNDED, show_lines=False,
        title_style="bold bright_magenta",
        border_style="bright_magenta",
        header_style="bold bright_white on dark_blue",
    )
    table.add_column("İLİŞKİ", style="bold", justify="center")
    table.add_column("SOL", justify="left")
    table.add_column("SAĞ", justify="left")
    table.add_column("DURUM", justify="center")

    for rel in report.relations:
        table.add_row(rel.name, rel.lhs, rel.rhs, _status_text(rel.holds))
    for rel in report.witnesses:
        table.add_row(Text(rel.name, style="bright_yellow"), rel.lhs, rel.rhs,
                      Text("🔎 tanık" if rel.holds else "— yok", style="bright_yellow"))
    return table


# ═══════════════════════════════════════════════════════════════════
#  BANNER & FİNAL
# ═══════════════════════════════════════════════════════════════════

def print_banner():
    console.print()
    console.print(Align.center(Text(f"∪ ∩  {APP_NAME}  v{VERSION}", style="bold bright_cyan")))
    console.print(Align.center(Text("L_ω · K_ω · J_ω · K_n · J_n  •  kesin aritmetik", style="dim bright_white")))
    console.print()


def print_final(results: dict, report_path: str = "", html_report_path: str = ""):
    console.print()
    console.print(build_suite_table(results))
    console.print()

    failed = [name for name, d in results.items() if not d.get("passed")]
    total_checks = sum(d.get("checks", 0) for d in results.values())
    total_time = sum(d.get("elapsed", 0.0) for d in results.values())
    if failed:
        console.print(build_failure_panel(results))
        console.print()
        console.print(Panel(
            Align.center(Text(f"❌ {len(failed)} paket kaldı: {', '.join(failed)}", style="bold bright_red")),
            border_style="bright_red",
        ))
    else:
        console.print(Panel(
            Align.center(Text(
                f"✅ {len(results)} paket • {total_checks:,} kontrol • ⏱️ {_fmt(total_time)}",
                style="bold bright_green",
            )),
            border_style="bright_green", box=box.DOUBLE,
        ))
    console.print()
    if report_path:
        console.print(f"  📄 JSON Rapor: [dim]{report_path}[/]")
    if html_report_path:
        console.print(f"  🌐 HTML Rapor: [dim]{html_report_path}[/]")
    if report_path or html_report_path:
        console.print()
