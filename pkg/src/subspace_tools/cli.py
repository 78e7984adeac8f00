"""Command-line entry point: one subcommand per capability.

Exit codes: 0 success or criterion true, 2 criterion false, 1 error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import automata, data, exactnum, filtration, powersum, surface, transcendence, verify, words
from .errors import (
    IrrationalObstruction,
    NoConvergence,
    ScreenFailed,
    StepLimit,
    ToolkitError,
    UsageError,
)
from .quadratic import QuadraticScalar


@dataclass
class RunReport:
    subcommand: str
    inputsDigest: str
    verdicts: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    table: dict | None = None
    outcome: bool | None = None  # None: plain computation, exit 0

    def add(self, name: str, value: Any) -> None:
        self.verdicts.append((name, render(value)))

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    @property
    def exit_code(self) -> int:
        return 2 if self.outcome is False else 0

    def to_json(self) -> str:
        out = {
            "subcommand": self.subcommand,
            "inputsDigest": self.inputsDigest,
            "verdicts": [[k, v] for k, v in self.verdicts],
            "notes": list(self.notes),
        }
        if self.table is not None:
            out["table"] = self.table
        return json.dumps(out, indent=2, ensure_ascii=False)

    def to_tsv(self) -> str:
        lines = [f"# subcommand\t{self.subcommand}", f"# inputsDigest\t{self.inputsDigest}"]
        for k, v in self.verdicts:
            lines.append(f"{k}\t{_tsv_cell(v)}")
        if self.table is not None:
            lines.append("\t".join(self.table["columns"]))
            lines.extend("\t".join(_tsv_cell(c) for c in row) for row in self.table["rows"])
        lines.extend(f"# note\t{n}" for n in self.notes)
        return "\n".join(lines)


def _tsv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render(value):
    """JSON-safe rendering with exact rationals as "p/q"."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return exactnum.format_rational(value)
    if isinstance(value, QuadraticScalar):
        if value.is_rational:
            return exactnum.format_rational(value.p)
        return f"{value.exact_str()} (approx {float(value):.12g})"
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    return str(value)


# -- argument helpers ---------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return exactnum.parse_rational(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from e


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from e


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(t.strip()) for t in text.split(",") if t.strip()]


def _load_ref(ref: str, files: dict) -> dict:
    label, raw = data.read_ref(ref)
    files[label] = hashlib.sha256(raw).hexdigest()
    return json.loads(raw)


def _power_sum(args, files: dict) -> powersum.PowerSum:
    if getattr(args, "ps_file", None):
        return powersum.PowerSum.from_json(_load_ref(args.ps_file, files))
    if getattr(args, "ps", None):
        return powersum.PowerSum.parse(args.ps)
    raise UsageError("give a power sum with --ps EXPR or --ps-file FILE")


def _word(args, files: dict):
    if args.word is not None:
        return words.Word.from_string(args.word)
    if args.machine is not None:
        m = automata.FiniteAutomaton.from_dict(_load_ref(args.machine, files))
        return automata.automatic_prefix(m, args.length)
    raise UsageError("give --word or --machine with --length")


def _matrix(args, files: dict) -> surface.IntersectionMatrix:
    return surface.IntersectionMatrix.from_json(_load_ref(args.matrix, files))


def _weights(args, M) -> list[int]:
    if args.weights is None:
        return [1] * M.r
    return args.weights


# -- subcommands --------------------------------------------------------------

def cmd_heights(args, rep: RunReport, files):
    S = exactnum.PlaceSet.parse(args.places) if args.places else None
    if not args.value and args.vector is None:
        raise UsageError("give --value and/or --vector")
    for x in args.value or []:
        tag = exactnum.format_rational(x)
        rep.add(f"H({tag})", exactnum.height_rational(x))
        if x != 0:
            up, low = exactnum.height_rational_product_form(x)
            rep.add(f"prod max(1,|{tag}|_v)", up)
            rep.add(f"1/prod min(1,|{tag}|_v)", low)
            rep.add(f"product formula({tag})", exactnum.product_formula_check(x))
            primes = sorted(set(exactnum.prime_support(x)) | set(args.prime or []))
            for p in primes:
                rep.add(f"v_{p}({tag})", exactnum.valuation(x, p))
                rep.add(f"|{tag}|_{p}", exactnum.norm_at(x, exactnum.Place(p)))
            rep.add(f"|{tag}|_inf", exactnum.norm_at(x, exactnum.INFINITE))
        if S is not None:
            rep.add(f"S-integer({tag}; S={S})", exactnum.is_s_integer(x, S))
            rep.add(f"S-unit({tag}; S={S})", exactnum.is_s_unit(x, S))
    if args.vector is not None:
        rep.add("H(" + ",".join(exactnum.format_rational(c) for c in args.vector) + ")",
                exactnum.height_vector(args.vector))


def cmd_complexity(args, rep: RunReport, files):
    w = _word(args, files)
    if args.n is not None:
        rep.add(f"rho({args.n})", words.complexity(w, args.n))
    if args.nmax is not None:
        rep.table = {
            "columns": ["n", "rho(n)"],
            "rows": [[n, rho] for n, rho in enumerate(words.complexity_profile(w, args.nmax), start=1)],
        }
        rep.add("max rho(n)/n", max(Fraction(rho, n) for n, rho in enumerate(words.complexity_profile(w, args.nmax), start=1)))
    if args.n is None and args.nmax is None:
        raise UsageError("give --n or --nmax")


def _rep_value(r):
    return None if r is None else [r.k, r.n, r.length]


def cmd_repetition(args, rep: RunReport, files):
    w = _word(args, files)
    if args.n is not None or args.kappa is not None:
        if args.n is None or args.kappa is None:
            raise UsageError("the low-complexity route needs both --n and --kappa")
        N = words.lemma_prefix_length(args.n, args.kappa)
        r = words.repetition_from_low_complexity(w, args.n, args.kappa)
        rep.add("prefix length", N)
        rep.add("epsilon", words.lemma_epsilon(args.kappa))
        rep.add("repetition (k, n, length)", _rep_value(r))
        rep.add("length >= n/3", 3 * r.length >= args.n)
        rep.outcome = r.is_valid_in(w.prefix(N))
        return
    r = words.find_disjoint_repetition(w, args.min_length)
    rep.add("repetition (k, n, length)", _rep_value(r))
    if args.oracle:
        o = words.brute_force_repetition_oracle(w, args.min_length)
        rep.add("oracle repetition (k, n, length)", _rep_value(o))
        rep.add("oracle agrees on length", (o is None) == (r is None) and (r is None or o.length == r.length))
    rep.outcome = r is not None


def cmd_automaton(args, rep: RunReport, files):
    m = automata.FiniteAutomaton.from_dict(_load_ref(args.machine, files))
    did = False
    if args.word is not None:
        try:
            digits = [int(c, 36) for c in args.word]
        except ValueError as e:
            raise UsageError(f"digit word must use 0-9/a-z: {args.word!r}") from e
        rep.add(f"output({args.word})", m.run(digits))
        did = True
    if args.n is not None:
        rep.add(f"input word for {args.n}", "".join(map(str, automata.base_digits(args.n, m.base)[::-1])))
        rep.add(f"term({args.n})", automata.automatic_term(m, args.n))
        did = True
    if args.terms is not None:
        rep.add(f"terms 0..{args.terms - 1}", str(automata.automatic_prefix(m, args.terms)))
        did = True
    if args.slope is not None:
        N, nmax = args.slope
        rep.add(f"max rho(n)/n, N={N}, n<={nmax}", automata.measured_complexity_slope(m, N, nmax))
        rep.note("measured slope is a finite-prefix sample, not a proof of linear complexity")
        did = True
    if not did:
        raise UsageError("give --word, --n, --terms or --slope")


def cmd_abl(args, rep: RunReport, files):
    b = args.base
    if args.digits is not None:
        try:
            digits = tuple(int(c, 36) for c in args.digits)
        except ValueError as e:
            raise UsageError(f"digit string must use 0-9/a-z: {args.digits!r}") from e
        w = words.Word(digits, transcendence.digit_alphabet(b))
        pat = transcendence.extract_abcb(w, args.eps)
        rep.add("pattern", None if pat is None else pat.describe())
        if pat is not None:
            rep.add("r", pat.r)
            rep.add("s", pat.s)
            rep.add("len(B)", len(pat.B))
            xi, M = transcendence.periodic_value(pat, b)
            rep.add("xi", xi)
            rep.add("M", M)
            if args.alpha is not None:
                g = transcendence.approximation_gap(args.alpha, pat, b)
                rep.add("gap", g.gap)
                rep.add("bound", g.bound)
                rep.add("gap <= bound", g.holds)
                rep.add("product value", transcendence.subspace_product(args.alpha, pat, b).product_value)
        rep.outcome = pat is not None
        return
    if args.alpha is None:
        raise UsageError("give --alpha (and --N) or --digits")
    rows, plane = transcendence.abl_pipeline(args.alpha, b, args.N, args.eps)
    table_rows = []
    for row in rows:
        d = row.datum
        table_rows.append([
            row.N, row.pattern.r, row.pattern.s, len(row.pattern.B),
            render(row.gap.gap), render(row.gap.bound), render(d.product_value),
            max(abs(c) for c in d.x),
        ])
        for n in d.notes:
            rep.note(f"N={row.N}: {n}")
    rep.table = {"columns": ["N", "r", "s", "l(B)", "gap", "bound", "productValue", "|x|"], "rows": table_rows}
    rep.add("patterns found", len(rows))
    if plane is None:
        rep.add("common plane", None)
        rep.outcome = False
        return
    rep.add("plane (lambda, mu, nu)", [plane.lam, plane.mu, plane.nu])
    rep.add("recovered alpha", plane.recovered_alpha)
    rep.outcome = plane.recovered_alpha == args.alpha
    rep.add("plane recovers alpha", rep.outcome)


def cmd_ps_eval(args, rep: RunReport, files):
    u = _power_sum(args, files)
    if args.add:
        u = powersum.add(u, powersum.PowerSum.parse(args.add))
    if args.mul:
        u = powersum.mul(u, powersum.PowerSum.parse(args.mul))
    if args.power is not None:
        u = powersum.power(u, args.power)
    if args.progression is not None:
        Q, R = args.progression
        u = powersum.progression(u, Q, R)
    rep.add("power sum", str(u))
    for n in args.n or []:
        rep.add(f"u({n})", powersum.evaluate(u, n))
    if args.dominance:
        rep.add("nonzero for n >=", powersum.dominance_bound(u))


def cmd_ps_root(args, rep: RunReport, files):
    u = _power_sum(args, files)
    step_limit = args.max_iter or powersum.DEFAULT_STEP_LIMIT
    try:
        v = powersum.qth_root(u, args.q, step_limit=step_limit)
    except IrrationalObstruction as e:
        rep.note(f"irrational obstruction: {e}")
        v = None
    except StepLimit as e:
        rep.note(f"step limit: {e}")
        v = None
    rep.add(f"root of order {args.q}", None if v is None else str(v))
    rep.outcome = v is not None


def cmd_ps_pisot(args, rep: RunReport, files):
    u = _power_sum(args, files)
    dec = powersum.pisot_decompose(u, args.q, args.Q)
    if dec is None:
        rep.add("decomposition", None)
        rep.outcome = False
        return
    rep.add("Q", dec.Q)
    rep.add("R", dec.R)
    rep.add("w", str(dec.w))
    rep.outcome = True


def cmd_ps_uhs(args, rep: RunReport, files):
    if args.roots is not None:
        primes, mat = powersum.exponent_matrix(args.roots)
        rep.add("primes", primes)
        rep.add("exponent matrix", mat)
        ok = powersum.roots_multiplicatively_independent(args.roots)
        rep.add("multiplicatively independent", ok)
        rep.outcome = ok
        return
    u = _power_sum(args, files)
    v = powersum.is_universal_hilbert_candidate(u)
    rep.add("universal Hilbert candidate", v.value)
    rep.note(v.reason)
    rep.outcome = v.value


def cmd_ps_dominant(args, rep: RunReport, files):
    roots = [powersum.GaussianRational.parse(t) for t in args.roots.split(",") if t.strip()]
    ok, witness = powersum.has_dominant_root(roots, args.direction)
    for z in roots:
        rep.add(f"|{z}|^2", z.modulus_squared())
    rep.add(f"{args.direction} dominant root", None if witness is None else str(witness))
    rep.outcome = ok


def _pairing_rows(M, a, rep):
    rep.add("D^2", surface.d_squared(M, a))
    for i in range(1, M.r + 1):
        rep.add(f"D.C_{i}", surface.d_dot(M, a, i))


def cmd_surf_cz(args, rep: RunReport, files):
    M = _matrix(args, files)
    a = _weights(args, M)
    _pairing_rows(M, a, rep)
    verdicts = surface.cz_check(M, a)
    for i, ok in enumerate(verdicts, start=1):
        d = surface.PairingData.of(M, a, i)
        if d.C2 > 0 and d.discriminant >= 0:
            g, gp = surface.gamma_roots(d)
            rep.add(f"gamma_{i}", g)
            rep.add(f"F(gamma_{i})", surface.f_theta_data(d, g))
        rep.add(f"criterion_{i}", ok)
    rep.outcome = all(verdicts)


def cmd_surf_aut(args, rep: RunReport, files):
    M = _matrix(args, files)
    a = _weights(args, M)
    _pairing_rows(M, a, rep)
    verdicts = surface.autissier_check(M, a)
    for i, ok in enumerate(verdicts, start=1):
        rep.add(f"lhs_{i}", surface.autissier_lhs(surface.PairingData.of(M, a, i)))
        rep.add(f"criterion_{i}", ok)
    rep.note("criterion_i is lhs_i > 4 a_i")
    rep.outcome = all(verdicts)


def cmd_surf_levin(args, rep: RunReport, files):
    M = _matrix(args, files)
    try:
        res = surface.levin_check(M, max_iter=args.max_iter or surface.DEFAULT_MAX_ITER)
    except ScreenFailed as e:
        rep.add("screen", False)
        rep.note(str(e))
        rep.outcome = False
        return
    rep.add("screen", True)
    rep.add("weights", list(res.weights))
    rep.add("eps", res.eps)
    rep.add("tau", res.tau)
    rep.add("attempts", res.attempts)
    for i, v in enumerate(res.lhs, start=1):
        rep.add(f"lhs_{i}", v)
    rep.outcome = all(surface.autissier_check(M, res.weights))
    rep.add("certified", rep.outcome)


def cmd_surf_weights(args, rep: RunReport, files):
    M = _matrix(args, files)
    sol = surface.fixed_point_weights(M, args.eps, max_iter=args.max_iter or surface.DEFAULT_MAX_ITER)
    rep.add("weights", list(sol.weights))
    rep.add("iterations", sol.iterations)
    rep.outcome = surface.balance_holds(M, sol.weights, args.eps)
    rep.add("balanced within eps", rep.outcome)


def cmd_surf_filtration(args, rep: RunReport, files):
    raw = _load_ref(args.input, files)
    dim = int(raw["dim"])
    F1 = filtration.Filtration(dim, tuple(tuple(tuple(v) for v in m) for m in raw["first"]))
    F2 = filtration.Filtration(dim, tuple(tuple(tuple(v) for v in m) for m in raw["second"]))
    basis = filtration.common_filtration_basis(F1, F2)
    rep.add("basis", [list(v) for v in basis])
    ok = filtration.certify(basis, F1, F2)
    rep.add("certified", ok)
    oracle = filtration.echelon_oracle(F1, F2)
    rep.add("oracle feasible", oracle is not None)
    rep.outcome = ok


def cmd_curve_budget(args, rep: RunReport, files):
    n0 = surface.minimal_positive_n(args.r, args.g)
    rep.add("minimal n with A > 0", n0)
    n = args.n if args.n is not None else n0
    if n is None:
        rep.note("no n gives A > 0 when r <= 2")
        rep.outcome = False
        return
    cb = surface.curve_budget(args.r, args.g, n)
    rep.add("n", cb.n)
    rep.add("ell", cb.ell)
    rep.add("A", cb.A)
    rep.outcome = cb.A > 0


def cmd_surf_theta(args, rep: RunReport, files):
    d = surface.PairingData(args.D2, args.DC, args.C2)
    g, gp = surface.gamma_roots(d)
    rep.add("gamma", g)
    rep.add("gamma'", gp)
    rep.add("F(gamma)", surface.f_theta_data(d, g))
    bh = surface.beta_half(d)
    rep.add("beta/2", bh)
    rep.add("F(beta/2)", surface.f_theta_data(d, bh))
    theta = args.theta if args.theta is not None else g
    b = surface.etheta_lower_bound(args.D2, args.DC, args.C2, args.n, theta)
    rep.add(f"cubic term at n={args.n}", b.cubic_term)
    rep.add("F(theta)", b.F)
    rep.note(f"{b.tag}: lower-order terms in n are not modelled")
    rep.outcome = surface.f_theta_data(d, g) >= surface.f_theta_data(d, bh)


def cmd_verify_paper(args, rep: RunReport, files):
    results = verify.run_all(seed=args.seed, only=args.only)
    rep.table = {
        "columns": ["criterion", "name", "status", "detail"],
        "rows": [[r.number, r.name, "PASS" if r.ok else "FAIL", r.detail] for r in results],
    }
    rep.outcome = all(r.ok for r in results)
    rep.add("all pass", rep.outcome)
    rep.note("timings are omitted to keep output deterministic")


# -- parser -------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized property runs")
    p.add_argument("--max-iter", type=int, default=None, help="iteration or step cap")
    p.add_argument("--factor-bound", type=int, default=None, help="trial-division bound for factorization")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="subspace-tools", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    sub.required = True

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    def word_source(sp):
        sp.add_argument("--word", help="word over any single-character alphabet")
        sp.add_argument("--machine", help="automaton JSON (path or bundled name) generating the word")
        sp.add_argument("--length", type=int, default=1024, help="prefix length when using --machine")

    sp = add("complexity", cmd_complexity, "subword complexity rho(n)")
    word_source(sp)
    sp.add_argument("--n", type=int)
    sp.add_argument("--nmax", type=int)

    sp = add("repetition", cmd_repetition, "disjoint repetitions in a word")
    word_source(sp)
    sp.add_argument("--min-length", type=int, default=1)
    sp.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    sp.add_argument("--n", type=int, help="window length for the low-complexity route")
    sp.add_argument("--kappa", type=_rational)

    sp = add("automaton", cmd_automaton, "run an automaton with output")
    sp.add_argument("--machine", default="figure1")
    sp.add_argument("--word", help="input digits in reading order, e.g. 00100")
    sp.add_argument("--n", type=int, help="term index")
    sp.add_argument("--terms", type=int, help="number of leading terms")
    sp.add_argument("--slope", type=int, nargs=2, metavar=("N", "NMAX"))

    sp = add("abl", cmd_abl, "digit-pattern approximation pipeline")
    sp.add_argument("--alpha", type=_rational)
    sp.add_argument("--base", type=int, default=10)
    sp.add_argument("--N", type=_int_list, default=[20, 30, 40])
    sp.add_argument("--eps", type=_rational, default=Fraction(1, 10))
    sp.add_argument("--digits", help="extract the pattern from a digit string instead")

    def ps_source(sp):
        sp.add_argument("--ps", help='power sum, e.g. "4^n + 2*2^n + 1"')
        sp.add_argument("--ps-file", help="power sum JSON")

    sp = add("ps-eval", cmd_ps_eval, "evaluate and combine power sums")
    ps_source(sp)
    sp.add_argument("--n", type=_int_list)
    sp.add_argument("--add")
    sp.add_argument("--mul")
    sp.add_argument("--power", type=int)
    sp.add_argument("--progression", type=int, nargs=2, metavar=("Q", "R"))
    sp.add_argument("--dominance", action="store_true", help="report an n0 beyond which u(n) != 0")

    sp = add("ps-root", cmd_ps_root, "q-th root of a power sum")
    ps_source(sp)
    sp.add_argument("--q", type=int, required=True)

    sp = add("ps-pisot", cmd_ps_pisot, "search u(Qn+R) = w(n)^q")
    ps_source(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--Q", type=_int_list, default=None)

    sp = add("ps-uhs", cmd_ps_uhs, "universal Hilbert set candidate test")
    ps_source(sp)
    sp.add_argument("--roots", type=_rational_list, help="test multiplicative independence of these rationals")

    sp = add("ps-dominant", cmd_ps_dominant, "dominant root among Gaussian rationals")
    sp.add_argument("--roots", required=True, help='comma-separated, e.g. "8+i,8-i,2+i,2-i"')
    sp.add_argument("--direction", choices=("upper", "lower"), default="upper")

    def matrix_source(sp, weights=True):
        sp.add_argument("--matrix", required=True, help="intersection matrix JSON (path or bundled name)")
        if weights:
            sp.add_argument("--weights", type=_int_list)

    matrix_source(add("surf-cz", cmd_surf_cz, "Corvaja-Zannier style criterion per index"))
    matrix_source(add("surf-aut", cmd_surf_aut, "Autissier inequality per index"))
    sp = add("surf-levin", cmd_surf_levin, "certified weights for r >= 4 ample divisors")
    matrix_source(sp, weights=False)
    sp = add("surf-weights", cmd_surf_weights, "balanced integer weights by fixed-point iteration")
    matrix_source(sp, weights=False)
    sp.add_argument("--eps", type=_rational, default=Fraction(1, 10))

    sp = add("surf-filtration", cmd_surf_filtration, "common basis for two filtrations")
    sp.add_argument("--input", default="filtration2", help='JSON {"dim", "first", "second"}')

    sp = add("surf-theta", cmd_surf_theta, "gamma, F(theta) and the cubic lower bound")
    sp.add_argument("--D2", type=_rational, required=True)
    sp.add_argument("--DC", type=_rational, required=True)
    sp.add_argument("--C2", type=_rational, required=True)
    sp.add_argument("--theta", type=_rational)
    sp.add_argument("--n", type=int, default=1)

    sp = add("curve-budget", cmd_curve_budget, "Riemann-Roch budget on a curve")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--n", type=int)

    sp = add("heights", cmd_heights, "valuations, norms and heights")
    sp.add_argument("--value", type=_rational, action="append")
    sp.add_argument("--vector", type=_rational_list)
    sp.add_argument("--prime", type=int, action="append")
    sp.add_argument("--places", help='place set, e.g. "inf,2,5"')

    sp = add("verify-paper", cmd_verify_paper, "run every acceptance reproduction")
    sp.add_argument("--only", type=_int_list)
    return parser


def _digest(args, files: dict) -> str:
    skip = {"func", "format"}
    payload = {
        "subcommand": args.subcommand,
        "args": {k: render(v) for k, v in sorted(vars(args).items()) if k not in skip},
        "files": dict(sorted(files.items())),
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def dispatch(argv=None) -> tuple[RunReport | None, int, str]:
    """Parse, run, and render. Returns (report, exit code, rendered text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    old_bound = exactnum.get_factor_bound()
    files: dict = {}
    try:
        if args.factor_bound is not None:
            exactnum.set_factor_bound(args.factor_bound)
        rep = RunReport(args.subcommand, "")
        args.func(args, rep, files)
    finally:
        exactnum.set_factor_bound(old_bound)
    rep.inputsDigest = _digest(args, files)
    text = rep.to_json() if args.format == "json" else rep.to_tsv()
    return rep, rep.exit_code, text


def main(argv=None) -> int:
    try:
        _, code, text = dispatch(argv)
    except SystemExit as e:  # argparse usage errors
        return int(e.code or 0) and 1
    except (ToolkitError, FileNotFoundError, ValueError, KeyError, ZeroDivisionError, NoConvergence) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
