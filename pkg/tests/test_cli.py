import json

import pytest

S3_PAIR = {
    "degree": 3,
    "factors": [{"degree": 3, "cycles": [[1, 2]]}, {"degree": 3, "cycles": [[2, 3]]}],
}


def test_orbifold_classify(atlas):
    run = atlas()
    assert run("orbifold", "classify", "2", "3", "5") == 0
    assert run.stdout.getvalue() == "Elliptic, order 60\n"


def test_orbifold_classify_json(atlas):
    run = atlas()
    assert run("orbifold", "classify", "2", "3", "7", "--format", "json") == 0
    assert json.loads(run.stdout.getvalue()) == {"orders": [2, 3, 7], "type": "hyperbolic"}


def test_perm_compose(atlas):
    run = atlas()
    assert run("perm", "compose", "(1,2)", "(2,3)", "--degree", "3") == 0
    assert run.stdout.getvalue() == "(1,2,3)\n"


def test_perm_closure(atlas):
    run = atlas()
    assert run("perm", "closure", "(1,2)", "(1,2,3,4)", "--degree", "4") == 0
    assert run.stdout.getvalue() == "order 24\n"


def test_braid_equal(atlas):
    run = atlas()
    assert run("braid", "equal", "s1 s2 s1", "s2 s1 s2", "--strands", "3") == 0
    assert run.stdout.getvalue() == "equal\n"


def test_invariants_csv(atlas):
    run = atlas()
    assert run("inv", "abc", "2", "3", "2", "--format", "csv") == 0
    header, row = run.stdout.getvalue().splitlines()
    assert header.startswith("kind,params,chi")
    assert row.startswith("abc,2 3 2,20,")


def test_compare(atlas):
    run = atlas()
    assert run("inv", "compare", "abc 2 3 3", "abc 3 3 2", "--format", "json") == 0
    assert json.loads(run.stdout.getvalue()) == {"homeomorphic": True, "diffeo_obstruction": "no_obstruction"}


def test_hurwitz_orbit_from_stdin(atlas):
    run = atlas(stdin=json.dumps(S3_PAIR))
    assert run("hurwitz", "orbit", "--format", "json") == 0
    report = json.loads(run.stdout.getvalue())
    assert report["size"] == 3
    assert report["exhausted"] is True


def test_hurwitz_equivalent_from_files(atlas, tmp_path):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    first.write_text(json.dumps(S3_PAIR))
    second.write_text(json.dumps({
        "degree": 3,
        "factors": [{"degree": 3, "cycles": [[2, 3]]}, {"degree": 3, "cycles": [[1, 3]]}],
    }))
    run = atlas()
    assert run("hurwitz", "equivalent", "--first", str(first), "--second", str(second)) == 0
    assert run.stdout.getvalue() == "yes: 1b\n"


def test_hurwitz_replay_mismatch_is_a_domain_error(atlas):
    request = {"start": S3_PAIR, "path": [{"i": 1, "dir": "f"}], "end": S3_PAIR}
    run = atlas(stdin=json.dumps(request))
    assert run("hurwitz", "replay") == 2
    assert run.stderr.getvalue().startswith("error: ReplayFailed:")


def test_dynkin_classify_from_stdin(atlas):
    config = {"count": 4, "edges": [[0, 1], [0, 2], [0, 3]]}
    run = atlas(stdin=json.dumps(config))
    assert run("dynkin", "classify") == 0
    assert run.stdout.getvalue() == "D4, fundamental cycle [2, 1, 1, 1]\n"


def test_dynkin_rdp(atlas):
    run = atlas()
    assert run("dynkin", "rdp", "E8", "--format", "json") == 0
    entry = json.loads(run.stdout.getvalue())
    assert entry["equation"] == "z^2 = x^3 + y^5"
    assert entry["binary_group_order"] == 120


def test_beauville_fermat(atlas):
    run = atlas()
    assert run("beauville", "fermat") == 0
    assert run.stdout.getvalue().startswith("Beauville structure in a group of order 25")


def test_beauville_witness(atlas):
    run = atlas()
    assert run("beauville", "witness", "--degree", "3", "--a", "(1,2,3)", "--c", "(1,2,3)") == 0
    assert "witness (2,3)" in run.stdout.getvalue()


def test_domain_error_exit_code(atlas):
    run = atlas()
    assert run("orbifold", "genus", "(0; 2,2,3)", "--order", "5") == 2
    assert run.stderr.getvalue().startswith("error: NotIntegral:")
    assert run.stdout.getvalue() == ""


@pytest.mark.parametrize("first", ["", "   ", "abc 2 3", "quartic 1 2 3", "abc 2 x 2"])
def test_unreadable_surface_is_a_domain_error(atlas, first):
    run = atlas()
    assert run("inv", "compare", first, "abc 2 3 2") == 2
    assert run.stderr.getvalue().startswith("error: OutOfRange:")


def test_invalid_json_is_a_domain_error(atlas):
    run = atlas(stdin="{not json")
    assert run("hurwitz", "orbit") == 2
    assert "JSONDecodeError" in run.stderr.getvalue()


def test_schema_violation_is_a_domain_error(atlas):
    run = atlas(stdin=json.dumps({"count": 0, "edges": []}))
    assert run("dynkin", "classify") == 2
    assert "ValidationError" in run.stderr.getvalue()


@pytest.mark.parametrize("argv", [
    ["nosuch"],
    ["perm", "compose", "(1,2)"],
    ["orbifold", "classify", "2", "x", "5"],
    ["inv", "abc", "2", "3", "2", "--format", "xml"],
])
def test_usage_errors(atlas, argv):
    run = atlas()
    assert run(*argv) == 1
    assert run.stderr.getvalue().startswith("usage error:")


def test_missing_file_is_a_usage_error(atlas, tmp_path):
    run = atlas()
    assert run("dynkin", "classify", "--file", str(tmp_path / "missing.json")) == 1


def test_output_is_deterministic(atlas):
    outputs = []
    for _ in range(2):
        run = atlas()
        assert run("inv", "box", "--h", "2", "--format", "json") == 0
        outputs.append(run.stdout.getvalue())
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["scale"] == 2


def test_zero_box_bound_is_a_domain_error(atlas):
    run = atlas()
    assert run("inv", "box", "--h", "2", "--max-exponent", "0") == 2
    assert run.stderr.getvalue().startswith("error: OutOfRange:")
