import json
from fractions import Fraction

import pytest

from besselseries.cli import auto_lmax, build_parser, main, parse_exact
from besselseries.identities import IdentityId

import reference_tables as ref


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_exact():
    assert parse_exact("0.25") == Fraction(1, 4)
    assert parse_exact("2^-20") == Fraction(1, 2**20)
    assert parse_exact("2^20") == Fraction(2**20)
    assert parse_exact("1/3") == Fraction(1, 3)
    assert parse_exact("1e-33") == Fraction(1, 10**33)
    with pytest.raises(Exception):
        parse_exact("abc")


def test_coeffs_clenshaw_first_entry(capsys):
    code, out = run_cli(
        capsys,
        "coeffs", "--kind", "chebyshev", "--nu", "0", "--k", "8",
        "--lmax", "2", "--digits", "34", "--convention", "clenshaw",
    )
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[0].split()[1] == ref.CHEBYSHEV_J0_K8_HALVED_DISPLAY[0]
    assert lines[1].split()[1] == ref.CHEBYSHEV_J0_K8_HALVED_DISPLAY[1]


def test_coeffs_legendre_parity_zeros(capsys):
    code, out = run_cli(
        capsys, "coeffs", "--kind", "legendre", "--N", "0", "--k", "1", "--lmax", "3",
    )
    assert code == 0
    lines = [l.split() for l in out.splitlines() if not l.startswith("#")]
    assert lines[1][1] == "0" and lines[3][1] == "0"


def test_coeffs_gegenbauer_single_entry(capsys):
    code, out = run_cli(
        capsys,
        "coeffs", "--kind", "gegenbauer", "--nu", "1", "--lambda", "0.25",
        "--k", "1", "--lmax", "0", "--digits", "33",
    )
    assert code == 0
    assert out.splitlines()[1].split()[1] == ref.GEGENBAUER_J1_K1_LAMBDA_QUARTER[0]


def test_coeffs_json_round_trip(capsys, tmp_path):
    out_file = tmp_path / "table.json"
    code, out = run_cli(
        capsys,
        "coeffs", "--kind", "chebyshev", "--nu", "0", "--k", "1",
        "--lmax", "4", "--format", "json", "--out", str(out_file),
    )
    assert code == 0
    assert out_file.read_text() == out
    payload = json.loads(out)
    assert set(payload) == {"kind", "nu", "lambda", "k", "convention", "entries"}
    assert payload["kind"] == "chebyshev" and payload["lambda"] is None
    assert [e["L"] for e in payload["entries"]] == [0, 1, 2, 3, 4]
    assert payload["entries"][0]["value"] == ref.CHEBYSHEV_J0_K1[0]
    # re-emitting under the same context reproduces the same bytes
    code2, out2 = run_cli(
        capsys,
        "coeffs", "--kind", "chebyshev", "--nu", "0", "--k", "1",
        "--lmax", "4", "--format", "json",
    )
    assert out2 == out


def test_verify_pass_exit_zero(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--id", "chebyshev-even", "--h", "0..3", "--k", "8",
        "--lmax", "auto", "--tol", "1e-33",
    )
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_verify_fail_exit_one(capsys):
    # an impossible tolerance forces a reported failure
    code, out = run_cli(
        capsys,
        "verify", "--id", "chebyshev-even", "--h", "0", "--k", "8",
        "--lmax", "12", "--tol", "1e-60",
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_unknown_id_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--id", "no-such-identity", "--h", "0", "--k", "1"])
    assert err.value.code == 2


def test_verify_json_schema(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--id", "gegenbauer-nu0", "--h", "1", "--k", "1",
        "--lambda", "2^20", "--lmax", "7", "--tol", "1e-25", "--format", "json",
    )
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    report = reports[0]
    assert set(report) == {"id", "params", "lhs", "rhs", "rel_diff", "terms_used", "pass"}
    assert report["pass"] is True
    assert report["params"]["lambda"] == "1048576"


def test_verify_csv(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--id", "legendre-j1", "--h", "0..1", "--k", "1",
        "--lmax", "auto", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("id,h,k,")
    assert len(lines) == 3


def test_verify_trace_lines(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--id", "gegenbauer-nu0", "--h", "1", "--k", "1",
        "--lambda", "2^-20", "--lmax", "7", "--tol", "1e-15",
        "--trace", "--digits", "33",
    )
    assert code == 0
    assert ref.GEGENBAUER_H1_TERMS_LAMBDA_TINY[0] in out


def test_eval_agreement(capsys):
    code, out = run_cli(
        capsys,
        "eval", "--kind", "chebyshev", "--nu", "0", "--k", "1", "--x", "1",
        "--lmax", "21", "--digits", "33",
    )
    assert code == 0
    assert ref.J0_AT_1 in out
    agreement = int([l for l in out.splitlines() if l.startswith("agreement")][0].split()[1])
    assert agreement >= 33


def test_eval_domain_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["eval", "--kind", "chebyshev", "--nu", "0", "--k", "1", "--x", "2"])
    assert err.value.code == 2


def test_oracle_rows(capsys):
    code, out = run_cli(
        capsys,
        "oracle", "--kind", "legendre", "--N", "0", "--k", "1",
        "--hmax", "1", "--lmax", "44", "--digits", "20",
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert "-0.25000000000000000000" in lines[1]


def test_digits_prefix_consistency(capsys):
    # --digits d output is the rounding of the --digits d+10 output
    from besselseries import format_decimal
    from decimal import Decimal

    _, out34 = run_cli(
        capsys, "coeffs", "--kind", "chebyshev", "--nu", "0", "--k", "1",
        "--lmax", "6", "--digits", "24",
    )
    _, out44 = run_cli(
        capsys, "coeffs", "--kind", "chebyshev", "--nu", "0", "--k", "1",
        "--lmax", "6", "--digits", "34",
    )
    for line24, line44 in zip(out34.splitlines()[1:], out44.splitlines()[1:]):
        v24, v44 = line24.split()[1], line44.split()[1]
        assert format_decimal(Decimal(v44), 24) == v24


def test_missing_required_kind_parameter():
    with pytest.raises(SystemExit) as err:
        main(["coeffs", "--kind", "legendre", "--k", "1"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["coeffs", "--kind", "gegenbauer", "--k", "1"])
    assert err.value.code == 2


def test_auto_lmax_prescriptions():
    assert auto_lmax(IdentityId.LEGENDRE_J0, 0, Fraction(1)) == 44
    assert auto_lmax(IdentityId.LEGENDRE_J0, 10, Fraction(1)) == 84
    assert auto_lmax(IdentityId.CHEBYSHEV_EVEN, 42, Fraction(8)) == 68
    assert auto_lmax(IdentityId.CHEBYSHEV_ODD, 0, Fraction(5)) == 21
    assert auto_lmax(IdentityId.GEGENBAUER_GENERAL, 5, Fraction(1)) == 85


def test_parser_rejects_garbage_numbers():
    parser = build_parser()
    with pytest.raises(SystemExit) as err:
        parser.parse_args(["coeffs", "--kind", "chebyshev", "--k", "eight"])
    assert err.value.code == 2
