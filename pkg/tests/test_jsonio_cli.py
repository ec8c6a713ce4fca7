import json
import random

import pytest

from conftest import make_params
from veronese import (
    CyclicAction,
    PrimeField,
    SemigroupGens,
    TypeStarBinomial,
    build_certificate,
    cohomology_orders,
    completely_p_glued,
    exponent_vectors,
    fiber_check,
    full_ideal_point_survey,
    generators_over,
    integer_ring,
    jacobian_rank,
    parametrize,
    point_survey,
    quadratic_generators,
    rewrite,
    verify_char_p,
)
from veronese import jsonio
from veronese.cli import main


def _roundtrip(obj):
    return json.loads(json.dumps(obj))


def test_params_roundtrip(params321):
    obj = _roundtrip(jsonio.params_obj(params321))
    assert jsonio.params_from_obj(obj) == params321
    assert obj["q"] == 2


def test_enumeration_document(params321):
    doc = _roundtrip(jsonio.enumeration_obj(params321))
    assert doc["schema_version"] == 1
    assert doc["cardinality"] == 6
    assert doc["elements"][0] == {"tuple": [1, 1], "exponent": [2, 0, 0]}


def test_binomial_roundtrip_over_integers(params321):
    ring = integer_ring(params321)
    for g in quadratic_generators(params321):
        obj = _roundtrip(jsonio.binomial_obj(g))
        assert jsonio.binomial_from_obj(ring, obj) == g
        assert len(obj["plus"]) == 1 and len(obj["minus"]) == 1
        assert isinstance(obj["text"], str)


def test_binomial_roundtrip_over_prime_fields(params321):
    for r in (2, 3, 5):
        field = PrimeField(r)
        ring = integer_ring(params321).with_field(field)
        for g in generators_over(params321, field):
            obj = _roundtrip(jsonio.binomial_obj(g))
            assert jsonio.binomial_from_obj(ring, obj) == g


def test_rewrite_certificate_roundtrip(params321):
    t = TypeStarBinomial(params321, ((1, 1), (2, 3), (3, 3)), (2, 3, 1, 4, 5, 6))
    cert = rewrite(t)
    obj = _roundtrip(jsonio.rewrite_obj(cert, t.poly()))
    back = jsonio.rewrite_from_obj(obj)
    assert back == cert
    assert back.expansion() == t.poly()


def test_type_star_from_obj(params321):
    obj = {
        "params": {"n": 3, "p": 2, "h": 1},
        "blocks": [[1, 1], [2, 3]],
        "sigma": [2, 3, 1, 4],
    }
    t = jsonio.type_star_from_obj(obj)
    assert t.right_blocks() == ((1, 2), (1, 3))


def test_report_documents_serialize(params321):
    cert = build_certificate(params321)
    docs = [
        jsonio.certificate_obj(cert),
        jsonio.frobenius_obj(verify_char_p(cert)),
        jsonio.points_obj(point_survey(cert, 3)),
        jsonio.points_obj(full_ideal_point_survey(params321, 2)),
        jsonio.jacobian_obj(
            jacobian_rank(
                params321,
                quadratic_generators(params321),
                parametrize(params321, (1, 2, 3), PrimeField(5)),
                5,
            )
        ),
        jsonio.fiber_obj(fiber_check(params321, 5, (1, 2, 3))),
        jsonio.cohomology_obj(cohomology_orders(CyclicAction(2, 1))),
        jsonio.generators_obj(params321, quadratic_generators(params321)),
        jsonio.enumeration_obj(params321),
    ]
    for doc in docs:
        parsed = _roundtrip(doc)
        assert parsed["schema_version"] == 1


def test_gluing_tree_document(params321):
    gens = SemigroupGens.of(exponent_vectors(params321))
    tree = completely_p_glued(gens, 2, 1)
    doc = _roundtrip(jsonio.gluing_obj(params321, tree))
    node = doc["tree"]
    assert node["type"] == "glued"
    seen_free = 0
    stack = [node]
    while stack:
        cur = stack.pop()
        if cur["type"] == "free":
            seen_free += 1
        else:
            assert set(cur["witness"]) == {"alpha", "s", "rep1", "rep2"}
            stack.append(cur["left"])
            stack.append(cur["right"])
    assert seen_free == 4


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_enumerate(capsys):
    code, out = run_cli(capsys, "enumerate", "--n", "3", "--p", "2", "--h", "1")
    assert code == 0
    assert "|T| = 6" in out


def test_cli_generators_json(capsys):
    code, out = run_cli(
        capsys, "--format", "json", "generators", "--n", "3", "--p", "2", "--h", "1"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 6


def test_cli_rewrite_from_file(tmp_path, capsys):
    payload = {"blocks": [[1, 1], [2, 3]], "sigma": [2, 3, 1, 4]}
    path = tmp_path / "binomial.json"
    path.write_text(json.dumps(payload))
    code, out = run_cli(
        capsys, "rewrite", "--n", "3", "--p", "2", "--h", "1",
        "--input", str(path),
    )
    assert code == 0
    assert "1 steps" in out


def test_cli_certificate_and_verify(capsys):
    code, out = run_cli(capsys, "certificate", "--n", "3", "--p", "2", "--h", "1")
    assert code == 0
    assert "3 binomials" in out
    code, out = run_cli(capsys, "verify-sci", "--n", "3", "--p", "2", "--h", "1")
    assert code == 0
    assert "success: True" in out


def test_cli_verify_negative_exit(capsys):
    code, out = run_cli(
        capsys, "verify-sci", "--n", "3", "--p", "2", "--h", "1", "--k-max", "0"
    )
    assert code == 1


def test_cli_points_exit_codes(capsys):
    code, _ = run_cli(
        capsys, "points", "--n", "3", "--p", "2", "--h", "1", "--r", "2"
    )
    assert code == 0
    code, _ = run_cli(
        capsys, "points", "--n", "3", "--p", "2", "--h", "1", "--r", "3"
    )
    assert code == 1
    code, _ = run_cli(
        capsys, "points", "--n", "3", "--p", "2", "--h", "1", "--r", "5",
        "--budget", "10",
    )
    assert code == 3


def test_cli_gluing(capsys):
    code, out = run_cli(
        capsys, "--format", "json", "gluing", "--n", "3", "--p", "2", "--h", "1"
    )
    assert code == 0
    assert json.loads(out)["tree"]["type"] == "glued"


def test_cli_jacobian_and_fibers(capsys):
    code, out = run_cli(
        capsys, "jacobian", "--n", "3", "--p", "2", "--h", "1", "--r", "5",
        "--u", "1,1,1",
    )
    assert code == 0
    assert "rank = 3" in out
    code, _ = run_cli(
        capsys, "jacobian", "--n", "3", "--p", "2", "--h", "1", "--r", "5"
    )
    assert code == 2  # neither --u nor --point
    code, out = run_cli(
        capsys, "fibers", "--n", "3", "--p", "2", "--h", "1", "--r", "5",
        "--u", "1,2,3",
    )
    assert code == 0
    assert "equal: True" in out
    code, _ = run_cli(
        capsys, "fibers", "--n", "3", "--p", "3", "--h", "1", "--r", "5",
        "--u", "1,1,1",
    )
    assert code == 2  # no cube roots of unity in F_5


def test_cli_cohomology(capsys):
    code, out = run_cli(capsys, "cohomology", "--q", "4", "--a", "3")
    assert code == 0
    assert "|H^0| = 2" in out
    code, _ = run_cli(capsys, "cohomology", "--q", "9", "--a", "2")
    assert code == 2


def test_cli_reproduce_subset(capsys):
    code, out = run_cli(
        capsys, "reproduce-paper", "--only", "cardinality", "golden-generators"
    )
    assert code == 0
    assert "cardinality: PASS" in out
    assert "golden-generators: PASS" in out


def test_cli_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generators", "--n", "3"])
    assert exc.value.code == 2


def test_cli_deterministic_output(capsys):
    argv = ["--format", "json", "points", "--n", "3", "--p", "2", "--h", "1",
            "--r", "3"]
    code1, out1 = run_cli(capsys, *argv)
    code2, out2 = run_cli(capsys, *argv)
    assert (code1, out1) == (code2, out2)
