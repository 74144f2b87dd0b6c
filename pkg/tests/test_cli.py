import json

from wittkit.cli import main

SERIES_1PZ = '{"order":4,"coeffs":["1","1","0","0","0"]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_necklace_poly(capsys):
    code, out, _ = run(capsys, "necklace", "--alpha", "2", "--n", "6")
    assert code == 0
    assert json.loads(out) == {"value": "9"}


def test_necklace_content_and_vk(capsys):
    code, out, _ = run(capsys, "necklace", "--content", "2,3")
    assert code == 0 and json.loads(out) == {"value": "2"}
    code, out, _ = run(capsys, "necklace", "--content", "2,2", "--vk", "1")
    assert code == 0 and json.loads(out) == {"value": "2"}


def test_words(capsys):
    code, out, _ = run(capsys, "words", "--content", "2,3", "--count")
    assert code == 0 and json.loads(out)["count"] == "2"
    code, out, _ = run(capsys, "words", "--content", "1,2", "--list")
    assert json.loads(out)["words"] == ["122"]


def test_witt(capsys):
    code, out, _ = run(capsys, "witt", "--f", SERIES_1PZ, "--r", "2")
    assert code == 0
    assert json.loads(out)["value"]["coeffs"] == ["0", "1", "0", "0", "0"]


def test_witt_table(capsys):
    code, out, _ = run(capsys, "witt-table", "--f", SERIES_1PZ, "--R", "3")
    data = json.loads(out)
    assert code == 0
    assert data["m"][0] == ["1", "1", "0", "0", "0"]
    assert data["m"][1] == ["0", "1", "0", "0", "0"]
    assert data["m"][2] == ["0", "1", "1", "0", "0"]


def test_verify_pass_and_params(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T3.4", "--f", SERIES_1PZ,
                       "--g", SERIES_1PZ, "--r", "2")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_missing_params_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--id", "T3.4", "--f", SERIES_1PZ)
    assert code == 2
    assert "requires" in err


def test_scan_pass_and_precondition_failure(capsys):
    code, out, _ = run(capsys, "scan", "--family", "T5.1", "--f", SERIES_1PZ,
                       "--kmax", "4", "--rmax", "8")
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, err = run(
        capsys, "scan", "--family", "T5.1",
        "--f", '{"order":4,"coeffs":["0","1","0","0","0"]}', "--kmax", "4",
    )
    assert code == 1
    assert "constant term" in err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand",
                       "--f", '{"order":4,"coeffs":["1","2","4","8","16"]}')
    data = json.loads(out)
    assert code == 0
    assert data["e"] == {"1": "2", "2": "1", "3": "2", "4": "3"}


def test_expand2d(capsys):
    grid = '{"J":1,"K":1,"rows":[["1","0"],["0","-1"]]}'
    code, out, _ = run(capsys, "expand2d", "--F", grid)
    assert code == 0
    assert json.loads(out)["e"] == {"1,1": "1"}


def test_cyclotomic(capsys):
    code, out, _ = run(capsys, "cyclotomic",
                       "--f", '{"order":8,"coeffs":["2"]}', "--J", "4", "--K", "6")
    assert code == 0 and json.loads(out)["passed"] is True


def test_zeta_variants(capsys):
    code, out, _ = run(capsys, "zeta", "--s", "2", "--digits", "12")
    assert code == 0
    assert json.loads(out)["value"].startswith("1.644934066848")
    code, out, _ = run(capsys, "zeta", "--s", "2", "--m", "1", "--digits", "10")
    assert json.loads(out)["value"].startswith("1.2337005501")
    code, out, _ = run(capsys, "zeta", "--s", "2", "--a", "1/4", "--digits", "10")
    assert json.loads(out)["value"].startswith("17.19732915")


def test_lseries(capsys):
    code, out, _ = run(capsys, "lseries", "--s", "2", "--kronecker", "-4",
                       "--digits", "15")
    assert code == 0
    assert json.loads(out)["value"].startswith("0.915965594177219")


def test_constant_artin(capsys):
    code, out, _ = run(capsys, "constant", "--h", '{"num":[1,-1,-1],"den":[1,-1]}',
                       "--m", "0", "--digits", "10")
    assert code == 0
    data = json.loads(out)
    assert data["value"].startswith("0.3739558136")
    assert data["heuristic_tail"] is True


def test_constant_with_direct_cross_check(capsys):
    code, out, _ = run(capsys, "constant", "--h", '{"num":[1,0,-1],"den":[1]}',
                       "--m", "1", "--digits", "8", "--direct-limit", "20000")
    assert code == 0
    data = json.loads(out)
    gap = abs(float(data["value"]) - float(data["direct"]["value"]))
    assert gap < float(data["direct"]["tail_estimate"]) + 1e-8


def test_lseries_from_table(capsys):
    code, out, _ = run(capsys, "lseries", "--s", "2", "--table", "0,1,0,-1",
                       "--digits", "12")
    assert code == 0
    assert json.loads(out)["value"].startswith("0.915965594177")


def test_convergence_series_input(capsys):
    code, out, _ = run(capsys, "convergence",
                       "--f", '{"order":12,"coeffs":["0","1"]}')
    assert code == 0
    assert json.loads(out)["hypotheses_hold"] is True


def test_constant_divergence_exit_code(capsys):
    code, out, err = run(capsys, "constant", "--h", '{"num":[1,-2],"den":[1,-2,1]}',
                         "--m", "0", "--digits", "8")
    assert code == 1
    assert "increase m" in json.loads(out)["error"]


def test_bchi_trivial(capsys):
    from decimal import Decimal

    code, out, _ = run(capsys, "bchi", "--digits", "6")
    assert code == 0
    assert abs(Decimal(json.loads(out)["value"]) - 1) < Decimal("1e-6")


def test_convergence(capsys):
    code, out, _ = run(capsys, "convergence", "--ratfun",
                       '{"num":[0,-1,-1],"den":[1,-1,-1]}')
    data = json.loads(out)
    assert code == 0
    assert data["radius_ok"] is True and data["g_half_ok"] is False


def test_verify_all_empty_budget(capsys):
    code, out, _ = run(capsys, "verify-all", "--scope", "combinatorial",
                       "--budget", "0")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_all_small_budget(capsys):
    code, out, _ = run(capsys, "verify-all", "--scope", "expansion", "--budget", "5")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_unknown_subcommand_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "witt", "--f", "not json", "--r", "2")[0] == 2


def test_determinism(capsys):
    a = run(capsys, "witt-table", "--f", SERIES_1PZ, "--R", "4")
    b = run(capsys, "witt-table", "--f", SERIES_1PZ, "--R", "4")
    assert a == b


def test_round_trip_series_json(capsys):
    code, out, _ = run(capsys, "witt", "--f", SERIES_1PZ, "--r", "2")
    payload = json.dumps(json.loads(out)["value"])
    code2, out2, _ = run(capsys, "witt", "--f", payload, "--r", "1")
    assert code2 == 0
    assert json.loads(out2)["value"] == json.loads(payload)