import json
import subprocess
import sys

import pytest

from subspace_tools import cli


def run(argv):
    rep, code, text = cli.dispatch(argv)
    return rep, code, text


def verdicts(rep):
    return dict(rep.verdicts)


# (argv, exit code, {verdict name: expected rendered value})
COVERAGE = [
    # exactnum
    (["heights", "--value", "12", "--prime", "2"], 0, {"v_2(12)": 2, "product formula(12)": "1"}),
    (["heights", "--value", "1/3", "--prime", "3"], 0, {"v_3(1/3)": -1}),
    (["heights", "--value", "2006", "--prime", "59"], 0, {"v_59(2006)": 1, "|2006|_inf": "2006"}),
    (["heights", "--value", "3", "--prime", "3"], 0, {"|3|_3": "1/3"}),
    (["heights", "--value", "3/2", "--value", "0", "--value", "61/495"], 0,
     {"H(3/2)": 3, "H(0)": 1, "H(61/495)": 495, "product formula(61/495)": "1"}),
    (["heights", "--vector", "4,6,10"], 0, {"H(4,6,10)": "5"}),
    (["heights", "--vector", "7"], 0, {"H(7)": "1"}),
    (["heights", "--vector", "1,61/495"], 0, {"H(1,61/495)": "495"}),
    (["heights", "--value", "1/10", "--value", "1/3", "--places", "2,5"], 0,
     {"S-integer(1/10; S={2,5,inf})": True, "S-integer(1/3; S={2,5,inf})": False}),
    (["heights", "--value=-61/495", "--value", "1"], 0,
     {"product formula(-61/495)": "1", "product formula(1)": "1"}),
    # words
    (["complexity", "--word", "aaaaaaaaaa", "--n", "3"], 0, {"rho(3)": 1}),
    (["complexity", "--machine", "thue-morse", "--length", "64", "--n", "3"], 0, {"rho(3)": 6}),
    (["complexity", "--word", "0110", "--n", "2"], 0, {"rho(2)": 3}),
    (["repetition", "--word", "0000000000", "--min-length", "5"], 0, {"repetition (k, n, length)": [1, 6, 5]}),
    (["repetition", "--word", "abcabc", "--min-length", "3"], 0, {"repetition (k, n, length)": [1, 4, 3]}),
    (["repetition", "--word", "abcdef"], 2, {"repetition (k, n, length)": None}),
    (["repetition", "--word", "aa", "--oracle"], 0, {"oracle repetition (k, n, length)": [1, 2, 1]}),
    (["repetition", "--word", "ab", "--oracle"], 2, {"oracle repetition (k, n, length)": None}),
    (["repetition", "--word", "01" * 20, "--n", "4", "--kappa", "2"], 0, {"prefix length": 12, "length >= n/3": True}),
    (["repetition", "--word", "0" * 30, "--n", "6", "--kappa", "1"], 0, {"prefix length": 12}),
    # automata
    (["automaton", "--machine", "examples/figure1.json", "--word", "00100"], 0, {"output(00100)": "b"}),
    (["automaton", "--word", "0"], 0, {"output(0)": "b"}),
    (["automaton", "--word", ""], 0, {"output()": "b"}),
    (["automaton", "--terms", "5"], 0, {"terms 0..4": "babaa"}),
    (["automaton", "--machine", "thue-morse", "--terms", "8", "--n", "0"], 0, {"terms 0..7": "01101001", "term(0)": "0"}),
    (["automaton", "--machine", "thue-morse", "--slope", "4096", "32"], 0, {"max rho(n)/n, N=4096, n<=32": "16/5"}),
    (["automaton", "--machine", "figure1", "--slope", "4096", "32"], 0, {"max rho(n)/n, N=4096, n<=32": "423/32"}),
    (["automaton", "--machine", "constant", "--slope", "256", "8"], 0, {"max rho(n)/n, N=256, n<=8": "1"}),
    # transcendence
    (["abl", "--digits", "1232323", "--eps", "1/4"], 0, {"r": 1, "s": 2, "xi": "61/495", "M": 122}),
    (["abl", "--digits", "2323", "--eps", "1/4"], 0, {"r": 0, "s": 2}),
    (["abl", "--digits", "0123456", "--eps", "1/4"], 2, {"pattern": None}),
    (["abl", "--digits", "1232323", "--alpha", "61/495"], 0, {"gap": "0", "gap <= bound": True, "product value": "0"}),
    (["abl", "--digits", "1232323", "--alpha", "1232324/10000000"], 0, {"gap": "19/247500000", "gap <= bound": True}),
    (["abl", "--alpha", "61/495", "--N", "7,9,11", "--eps", "1/4"], 0,
     {"recovered alpha": "61/495", "plane (lambda, mu, nu)": ["61/495", "-61/495", "1"]}),
    # power sums
    (["ps-eval", "--ps", "4^n + 2*2^n + 1", "--n", "3"], 0, {"u(3)": "81"}),
    (["ps-eval", "--ps", "0", "--n", "5"], 0, {"u(5)": "0"}),
    (["ps-eval", "--ps", "2^n", "--n", "-2"], 0, {"u(-2)": "1/4"}),
    (["ps-eval", "--ps", "2^n + 1", "--power", "2"], 0, {"power sum": "4^n + 2*2^n + 1"}),
    (["ps-eval", "--ps", "2^n + 3", "--power", "0"], 0, {"power sum": "1"}),
    (["ps-eval", "--ps", "2*3^n + 3^n + 0*5^n"], 0, {"power sum": "3*3^n"}),
    (["ps-eval", "--ps", "2^n", "--progression", "2", "0"], 0, {"power sum": "4^n"}),
    (["ps-eval", "--ps", "2^n + 3^n", "--progression", "2", "1"], 0, {"power sum": "3*9^n + 2*4^n"}),
    (["ps-root", "--ps", "4^n + 2*2^n + 1", "--q", "2"], 0, {"root of order 2": "2^n + 1"}),
    (["ps-root", "--ps", "4^n", "--q", "2"], 0, {"root of order 2": "2^n"}),
    (["ps-root", "--ps", "2^n", "--q", "2"], 2, {"root of order 2": None}),
    (["ps-pisot", "--ps", "2^n", "--q", "2"], 0, {"Q": 2, "R": 0, "w": "2^n"}),
    (["ps-pisot", "--ps", "4^n + 2*2^n + 1", "--q", "2"], 0, {"Q": 2, "w": "4^n + 1"}),
    (["ps-pisot", "--ps", "2^n + 3^n", "--q", "2"], 2, {"decomposition": None}),
    (["ps-uhs", "--roots", "2,3"], 0, {"multiplicatively independent": True}),
    (["ps-uhs", "--roots", "2,4"], 2, {"multiplicatively independent": False}),
    (["ps-uhs", "--roots", "6,10,15"], 0, {"multiplicatively independent": True}),
    (["ps-uhs", "--ps", "2^n + 3^n"], 0, {"universal Hilbert candidate": True}),
    (["ps-uhs", "--ps", "2^n + 4^n"], 2, {"universal Hilbert candidate": False}),
    (["ps-uhs", "--ps", "5^n"], 2, {"universal Hilbert candidate": False}),
    (["ps-dominant", "--roots", "8+i,8-i,2+i,2-i"], 2, {"upper dominant root": None}),
    (["ps-dominant", "--roots", "3,2,1"], 0, {"upper dominant root": "3"}),
    (["ps-dominant", "--roots", "2+i,1", "--direction", "lower"], 0, {"lower dominant root": "1"}),
    # surface
    (["surf-aut", "--matrix", "examples/allones4.json", "--weights", "1,1,1,1"], 0, {"D^2": "16", "D.C_1": "4", "lhs_1": "14/3"}),
    (["surf-aut", "--matrix", "allones4", "--weights", "3,3,3,3"], 0, {"criterion_1": True}),
    (["surf-aut", "--matrix", "allones3"], 2, {"D^2": "9", "lhs_1": "7/2", "criterion_1": False}),
    (["surf-cz", "--matrix", "allones4"], 0, {"gamma_1": "4", "F(gamma_1)": "4/3", "criterion_1": True}),
    (["surf-weights", "--matrix", "allones4"], 0, {"weights": [1, 1, 1, 1]}),
    (["surf-levin", "--matrix", "allones4"], 0, {"weights": [1, 1, 1, 1], "certified": True}),
    (["surf-levin", "--matrix", "p1xp1"], 2, {"screen": False}),
    (["surf-theta", "--D2", "3", "--DC", "2", "--C2", "1"], 0, {"gamma": "1", "gamma'": "3", "F(gamma)": "4/9"}),
    (["surf-theta", "--D2", "1", "--DC", "1", "--C2", "1"], 0, {"gamma": "1", "gamma'": "1"}),
    (["surf-theta", "--D2", "3", "--DC", "2", "--C2", "1", "--theta", "0"], 0, {"F(theta)": "0", "cubic term at n=1": "0"}),
    (["surf-theta", "--D2", "3", "--DC", "2", "--C2", "1", "--theta", "1", "--n", "1"], 0, {"cubic term at n=1": "2/3"}),
    (["surf-filtration"], 0, {"basis": [["1", "0"], ["1", "1"]], "certified": True, "oracle feasible": True}),
    (["curve-budget", "--r", "3", "--g", "0", "--n", "1"], 0, {"ell": 4, "A": "2"}),
    (["curve-budget", "--r", "2", "--g", "0", "--n", "5"], 2, {"minimal n with A > 0": None, "A": "0"}),
    (["curve-budget", "--r", "3", "--g", "1", "--n", "1"], 2, {"A": "0", "minimal n with A > 0": 2}),
    (["curve-budget", "--r", "3", "--g", "1"], 0, {"n": 2, "ell": 6, "A": "3"}),
]


@pytest.mark.parametrize("argv,code,expected", COVERAGE, ids=[" ".join(c[0])[:60] for c in COVERAGE])
def test_example_coverage(argv, code, expected):
    rep, got_code, _ = run(argv)
    assert got_code == code
    v = verdicts(rep)
    for k, want in expected.items():
        assert v[k] == want, k


def test_every_subcommand_is_covered():
    covered = {c[0][0] for c in COVERAGE} | {"verify-paper"}
    parser = cli.build_parser()
    names = set(parser._subparsers._group_actions[0].choices)
    assert names <= covered


@pytest.mark.parametrize("fmt", ["json", "tsv"])
def test_output_is_deterministic(fmt):
    argv = ["abl", "--alpha", "61/495", "--format", fmt]
    assert run(argv)[2] == run(argv)[2]


def test_json_shape():
    _, _, text = run(["surf-aut", "--matrix", "allones4", "--weights", "1,1,1,1"])
    out = json.loads(text)
    assert set(out) == {"subcommand", "inputsDigest", "verdicts", "notes"}
    assert out["inputsDigest"].startswith("sha256:")


def test_digest_tracks_inputs():
    a = run(["surf-aut", "--matrix", "allones4"])[0].inputsDigest
    b = run(["surf-aut", "--matrix", "allones3"])[0].inputsDigest
    c = run(["surf-aut", "--matrix", "allones4", "--format", "tsv"])[0].inputsDigest
    assert a != b and a == c


def test_abl_table_columns():
    rep, _, _ = run(["abl", "--alpha", "61/495"])
    assert rep.table["columns"] == ["N", "r", "s", "l(B)", "gap", "bound", "productValue", "|x|"]


def test_quadratic_rendering():
    rep, _, _ = run(["surf-theta", "--D2", "1", "--DC", "2", "--C2", "1"])
    assert verdicts(rep)["gamma"].startswith("2 + -1*sqrt(3) (approx 0.2679")


def test_asymptotic_and_convention_notes():
    rep, _, _ = run(["surf-theta", "--D2", "3", "--DC", "2", "--C2", "1"])
    assert any("asymptotic" in n for n in rep.notes)
    rep, _, _ = run(["ps-root", "--ps", "2^n", "--q", "2"])
    assert any("irrational" in n for n in rep.notes)


@pytest.mark.parametrize("argv", [
    ["surf-theta", "--D2", "3", "--DC", "1", "--C2", "1"],
    ["heights", "--value", "12", "--prime", "4"],
    ["surf-aut", "--matrix", "does-not-exist.json"],
    ["ps-eval"],
    ["heights", "--value", "0.5"],
    ["no-such-command"],
])
def test_errors_exit_one(argv, capsys):
    assert cli.main(argv) == 1
    assert capsys.readouterr().err


def test_factor_bound_flag(capsys):
    assert cli.main(["heights", "--value", str(1000003 * 1000033), "--factor-bound", "100"]) == 1
    assert "FactorizationBound" in capsys.readouterr().err


def test_verify_paper_subset():
    rep, code, _ = run(["verify-paper", "--only", "1,7,10"])
    assert code == 0 and [r[2] for r in rep.table["rows"]] == ["PASS"] * 3


def test_console_entry_from_other_directory(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "subspace_tools", "automaton", "--machine", "examples/figure1.json",
         "--word", "00100", "--format", "tsv"],
        cwd=tmp_path, capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert "output(00100)\tb" in out.stdout
