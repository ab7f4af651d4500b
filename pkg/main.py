# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Main CLI v1.0 (Lokal)
`tl` komut satırı: normal formlar, eşitlik kararları, frieze çizimi, matris temsilleri,
örgü ilişkileri, sayım, denge, taç çifti, bağımsızlık, çekirdek araması ve doğrulama paketleri.

Çıkış kodları: 0 = başarı / doğru, 2 = iyi biçimli "eşit değil" / yanlış, 1 = hata.
Sözleşmeli çıktılar düz metin olarak stdout'a yazılır; teşhis mesajları stderr'e gider.
"""

import argparse
import sys
import logging

from rich.panel import Panel

from config import (
    APP_NAME, DEFAULT_ALPHA, DEFAULT_BRANCH, DEFAULT_FORMAT, DEFAULT_SEED, KERNEL_SEARCH_LENGTH,
    MAX_MATRIX_DIM, PROG_NAME, VERSION,
)
from adjunction import compare_arrows, parse_arrow
from bench_logger import setup_logging, save_verify_report
from dashboard import build_relation_table, console, err_console, print_banner, print_final
from diagram import balance, collapse_modulus, crown_pair, enumerate_Jn, eval_term
from errors import EngineError, EquationHoldsError, TheoryError
from html_report import generate_html_report
from local_error_logger import LocalErrorLogger
from matrep import (
    H_eval, braid_kernel_search, check_braid_relations, eta, faithfulness_check, format_matrix,
    independence_report, parse_scalar, rep_Kn,
)
from normalize import (
    KNF, LNF, Block, JonesNF, enumerate_jones_nf, eq_J, eq_Jn, equal, format_nf, jones_to_term,
    normalize, rewrite_steps_Kn,
)
from ordinals import describe
from render import render
from suites import SUITES, run_suites
from telemetry import SuiteTimer
from terms import Circle, Kn, Term, parse_term, print_term, theory_from_name

logger = logging.getLogger("tlengine.main")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FALSE = 2

WORD_THEORY_CHOICES = ("L", "K", "J", "Ln", "Kn", "Jn")
ARROW_THEORY_CHOICES = ("Lc", "Kc", "Jc")


class _Parser(argparse.ArgumentParser):
    """Kullanım hatalarında argparse'ın varsayılan 2 yerine 1 ile çıkar."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# ═══════════════════════════════════════════════════════════════════
#  YARDIMCILAR
# ═══════════════════════════════════════════════════════════════════

def _read_text(text: str) -> str:
    """Konumsal argüman "-" ise terim stdin'den okunur."""
    if text == "-":
        return sys.stdin.read().strip()
    return text


def _theory(args):
    name = args.theory or ("Kn" if args.n is not None else "K")
    return theory_from_name(name, args.n)


def _term(args, text: str) -> Term:
    return parse_term(_read_text(text), _theory(args))


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _verdict(value: bool) -> int:
    print("equal" if value else "not equal")
    return EXIT_OK if value else EXIT_FALSE


def _block_text(item) -> str:
    if isinstance(item, Block):
        return f"h{item.i}" if item.i == item.j else f"h[{item.i},{item.j}]"
    return "c" if isinstance(item, Circle) else "1"


def _verbose_lines(nf):
    if isinstance(nf, LNF):
        for letter, part in (("b", nf.b_part), ("C", nf.c_part), ("a", nf.a_part)):
            for k, form in part:
                yield f"{letter}{k}\t{describe(form)}"
    elif isinstance(nf, KNF):
        yield f"caps\t{' '.join(map(str, nf.caps)) or '-'}"
        yield f"circles\t{nf.circles}"
        yield f"cups\t{' '.join(map(str, nf.cups)) or '-'}"
    elif isinstance(nf, JonesNF):
        yield f"circles\t{nf.circles}"
        for b, a in nf.blocks:
            yield f"block\t[{b},{a}]"


# ═══════════════════════════════════════════════════════════════════
#  KOMUTLAR
# ═══════════════════════════════════════════════════════════════════

def cmd_normalize(args) -> int:
    t = _term(args, args.term)
    if args.trace:
        if t.theory.kind not in ("Kn", "Jn"):
            raise TheoryError("--trace needs a Kn or Jn term")
        for rule, word in rewrite_steps_Kn(t):
            print(f"{rule}\t{' '.join(_block_text(x) for x in word) or '1'}")
    nf = normalize(t)
    print(format_nf(nf, t.theory))
    if args.verbose:
        for line in _verbose_lines(nf):
            print(line)
    return EXIT_OK


def cmd_eq(args) -> int:
    left, right = _read_text(args.left), _read_text(args.right)
    if args.theory in ARROW_THEORY_CHOICES:
        result = compare_arrows(parse_arrow(left), parse_arrow(right), args.theory[0])
        if result.caveat:
            err_console.print(f"[yellow]note:[/] {result.caveat}")
        logger.debug("%s", result.reason)
        return _verdict(result.equal)

    theory = _theory(args)
    t, u = parse_term(left, theory), parse_term(right, theory)
    if args.ignore_loops and theory.level == "K":
        return _verdict(eq_Jn(t, u) if theory.finite else eq_J(t, u))
    return _verdict(equal(t, u))


def cmd_render(args) -> int:
    t = _term(args, args.term)
    text = render(t, args.format)
    if not args.output:
        _emit(text)
        return EXIT_OK
    if not args.error_logger.safe_write(args.output, text):
        err_console.print(f"[bold bright_red]⛔ {args.output} yazılamadı[/]")
        return EXIT_ERROR
    return EXIT_OK


def cmd_matrix(args) -> int:
    if args.arrow:
        matrix = H_eval(args.p, parse_arrow(_read_text(args.term)), args.max_dim)
    else:
        t = _term(args, args.term)
        if t.theory.kind in ("Kn", "Jn"):
            matrix = rep_Kn(args.p, t.theory.n, t, args.max_dim)
        else:
            matrix = eta(args.p, t, args.max_dim)
    sys.stdout.write(format_matrix(matrix, args.format))
    return EXIT_OK


def cmd_braid_check(args) -> int:
    alpha = parse_scalar(args.alpha)
    report = check_braid_relations(args.p, args.n, alpha, args.branch, args.max_dim)
    if args.table:
        console.print(build_relation_table(report))
    else:
        for rel in report.relations:
            print(f"{rel.name}\t{rel.lhs} = {rel.rhs}\t{'holds' if rel.holds else 'fails'}")
        for rel in report.witnesses:
            print(f"witness {rel.name}\t{rel.lhs} = {rel.rhs}\t{'holds' if rel.holds else 'fails'}")
    return EXIT_OK if report.all_hold else EXIT_FALSE


def cmd_count(args) -> int:
    if args.jones is not None:
        forms = enumerate_jones_nf(args.jones, args.circles)
        print(len(forms))
        if args.list:
            for nf in forms:
                print(print_term(jones_to_term(nf, Kn(args.jones))))
        return EXIT_OK
    matchings = enumerate_Jn(args.matchings)
    print(len(matchings))
    if args.list:
        for m in matchings:
            print(m)
    return EXIT_OK


def cmd_balance(args) -> int:
    t, u = _term(args, args.left), _term(args, args.right)
    if not args.collapse:
        print(balance(t, u))
        return EXIT_OK
    try:
        print(collapse_modulus(t, u))
    except EquationHoldsError as e:
        print("no collapse")
        logger.debug("%s", e)
        return EXIT_FALSE
    return EXIT_OK


def cmd_crown(args) -> int:
    k, l = crown_pair(eval_term(_term(args, args.term)))
    print(f"{k} {l}")
    return EXIT_OK


def cmd_independent(args) -> int:
    report = independence_report(args.p, args.n, args.max_dim)
    print(f"{'independent' if report.independent else 'dependent'} (rank {report.rank} of {report.count})")
    ok = report.independent
    if args.faithful:
        faith = faithfulness_check(args.p, args.n, args.circles, args.max_dim)
        print(f"{'faithful' if faith.faithful else 'not faithful'}\t{faith.count} forms")
        for a, b in faith.collisions:
            print(f"collision\t{a}\t{b}")
        ok = ok and faith.faithful
    return EXIT_OK if ok else EXIT_FALSE


def cmd_kernel_search(args) -> int:
    alpha = parse_scalar(args.alpha)
    report = braid_kernel_search(args.p, args.n, alpha, args.branch, args.max_len, args.max_dim)
    print(f"words\t{report.words_checked}")
    for w in report.certified:
        print(f"kernel\t{w}")
    for w in report.candidates:
        print(f"candidate\t{w}")
    return EXIT_OK


def cmd_verify(args) -> int:
    log_file = setup_logging()
    print_banner()
    logger.info("%s v%s verify — suites: %s, quick=%s, seed=%d",
                APP_NAME, VERSION, args.suite or "all", args.quick, args.seed)

    with SuiteTimer("verify") as timer:
        results = run_suites(args.suite, quick=args.quick, seed=args.seed)
    telemetry = timer.summary()

    report_path = save_verify_report(results, telemetry, log_file, args.error_logger.get_summary(),
                                     seed=args.seed, quick=args.quick)
    html_path = generate_html_report(results, telemetry) if args.html else ""
    print_final(results, report_path, html_path)

    all_passed = all(d["passed"] for d in results.values())
    return EXIT_OK if all_passed else EXIT_FALSE


# ═══════════════════════════════════════════════════════════════════
#  CLI
# ═══════════════════════════════════════════════════════════════════

def _add_theory(p, choices=WORD_THEORY_CHOICES):
    p.add_argument("--theory", choices=choices, default=None,
                   help="Teori (varsayılan: --n verilirse Kn, değilse K)")
    p.add_argument("--n", type=int, default=None, help="Sonlu teorilerin genişliği")


def _add_max_dim(p):
    p.add_argument("--max-dim", type=int, default=MAX_MATRIX_DIM,
                   help=f"Matris boyutu üst sınırı (varsayılan: {MAX_MATRIX_DIM})")


def _add_braid(p):
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default=DEFAULT_ALPHA, help="Rasyonel α (varsayılan: 1)")
    p.add_argument("--branch", choices=("+", "-"), default=DEFAULT_BRANCH)
    _add_max_dim(p)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog=PROG_NAME,
        description=f"∪ ∩ {APP_NAME} v{VERSION} — L_ω, K_ω, J_ω, K_n, J_n kelime problemi",
    )
    sub = parser.add_subparsers(dest="command", help="Komutlar")

    p = sub.add_parser("normalize", help="Normal form")
    p.add_argument("term", help='Terim ya da stdin için "-"')
    _add_theory(p)
    p.add_argument("--trace", action="store_true", help="K_n yeniden yazma adımları")
    p.add_argument("--verbose", action="store_true", help="Normal formun bileşenleri")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("eq", help="Eşitlik kararı")
    p.add_argument("left")
    p.add_argument("right")
    _add_theory(p, WORD_THEORY_CHOICES + ARROW_THEORY_CHOICES)
    p.add_argument("--ignore-loops", action="store_true", help="Daireleri yok say (J seviyesi)")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("render", help="Frieze çizimi")
    p.add_argument("term")
    _add_theory(p)
    p.add_argument("--format", choices=("ascii", "svg"), default=DEFAULT_FORMAT)
    p.add_argument("--output", default=None, help="Çıktı dosyası")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("matrix", help="Matris temsili")
    p.add_argument("term")
    _add_theory(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--arrow", action="store_true", help="Terimi ok-terimi olarak oku, H_p uygula")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    _add_max_dim(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("braid-check", help="Örgü ilişkileri")
    _add_braid(p)
    p.add_argument("--table", action="store_true", help="rich tablo görünümü")
    p.set_defaults(func=cmd_braid_check)

    p = sub.add_parser("count", help="Jones normal formları ya da eşleşmeler")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--jones", type=int, metavar="N")
    group.add_argument("--matchings", type=int, metavar="N")
    p.add_argument("--circles", type=int, default=0)
    p.add_argument("--list", action="store_true", help="Elemanları da yaz")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("balance", help="Denge β(t,u)")
    p.add_argument("left")
    p.add_argument("right")
    _add_theory(p)
    p.add_argument("--collapse", action="store_true", help="t = u eklenince çöküş modülü")
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("crown", help="Taç çifti")
    p.add_argument("term")
    _add_theory(p)
    p.set_defaults(func=cmd_crown)

    p = sub.add_parser("independent", help="Dairesiz Jones temsillerinin bağımsızlığı")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--faithful", action="store_true", help="Sadakat kontrolü de yap")
    p.add_argument("--circles", type=int, default=2)
    _add_max_dim(p)
    p.set_defaults(func=cmd_independent)

    p = sub.add_parser("kernel-search", help="ρ çekirdeğinde kısa örgü kelimeleri")
    _add_braid(p)
    p.add_argument("--max-len", type=int, default=KERNEL_SEARCH_LENGTH[1])
    p.set_defaults(func=cmd_kernel_search)

    p = sub.add_parser("verify", help="Doğrulama paketleri")
    p.add_argument("--suite", action="append", choices=list(SUITES), default=None)
    p.add_argument("--quick", action="store_true", help="Küçük örneklem boyutları")
    p.add_argument("--html", action="store_true", help="HTML raporu da üret")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_ERROR

    with LocalErrorLogger() as error_logger:
        args.error_logger = error_logger
        try:
            return args.func(args)
        except EngineError as e:
            error_logger.capture(e, context=args.command)
            print(f"{PROG_NAME} {args.command}: error: {e}", file=sys.stderr)
            return EXIT_ERROR
        except Exception as e:
            error_logger.capture(e, context=args.command)
            err_console.print(Panel(f"[bold bright_red]⛔ Kritik hata: {e}[/]", border_style="bright_red"))
            logger.exception("Kritik hata")
            return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
