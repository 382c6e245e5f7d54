import json

import pytest

from kyfan.cli import main
from kyfan.fileformat import FormatError, dumps, loads
from kyfan.generators import parse_kind

SQUARE_FIXED = """\
[meta]
n = 1
k = 0
[vertices]
p
q
r
s
[involution]
p p
q s
r r
[labels]
p 1
q 2
r -1
s -2
[facets]
p q
q r
r s
s p
"""


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def write(tmp_path):
    def _write(kind):
        path = tmp_path / (kind.replace(":", "_").replace(",", "_") + ".kf")
        assert main(["generate", "--kind", kind, "-o", str(path)]) == 0
        return path
    return _write


@pytest.mark.parametrize("kind", ["crosspoly:2", "trivial:circle3,1", "hopf", "klein:3", "subdivided:2"])
def test_round_trip_is_byte_identical(kind, write):
    path = write(kind)
    text = path.read_text()
    assert dumps(loads(text)) == text
    assert text == dumps(parse_kind(kind))


def test_validate_torus(capsys, write):
    code, out = run(capsys, "validate", str(write("trivial:circle3,1")))
    assert code == 0 and "[fail]" not in out


def test_fixed_point_fails_with_witness(capsys, tmp_path):
    path = tmp_path / "fixed.kf"
    path.write_text(SQUARE_FIXED)
    code, out = run(capsys, "validate", str(path))
    assert code == 1
    assert "[fail] involution-free" in out and "witness: p" in out


def test_truncated_file_is_input_error(capsys, write, tmp_path):
    text = write("crosspoly:2").read_text()
    bad = tmp_path / "cut.kf"
    bad.write_text(text[: text.index("[facets]")])
    assert main(["validate", str(bad)]) == 2
    assert main(["validate", str(tmp_path / "missing.kf")]) == 2
    with pytest.raises(FormatError):
        loads("[meta]\nn = x\n")


def test_bad_arguments(capsys):
    assert main(["generate", "--kind", "moebius:1"]) == 2
    assert main(["sw", "--space", "hp:2"]) == 2
    assert main(["nonsense"]) == 2


def test_alt_stats(capsys, write):
    code, out = run(capsys, "alt-stats", str(write("crosspoly:1")))
    assert code == 0 and "dim 1: Alt 0: 2, Alt 1: 2" in out
    code, out = run(capsys, "alt-stats", str(write("trivial:circle3,1")))
    assert "max Alt = 1" in out
    code, out = run(capsys, "alt-stats", str(write("crosspoly:3")))
    assert "max Alt = 3" in out
    code, out = run(capsys, "alt-stats", "--paired", str(write("crosspoly:1")))
    assert "dim 1: Alt 0: 1, Alt 1: 1" in out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_kyfan_check(capsys, write, n):
    code, out = run(capsys, "kyfan-check", str(write(f"crosspoly:{n}")))
    assert code == 0 and "parity = 1" in out


def test_kyfan_check_dimension_obstruction(capsys, write):
    code, out = run(capsys, "kyfan-check", "--n", "3", str(write("crosspoly:1")))
    assert code == 1 and "[fail] dimension obstruction" in out


def test_zset_torus(capsys, write):
    path = str(write("trivial:circle3,1"))
    code, out = run(capsys, "zset", "--i", "0", path)
    assert code == 0
    assert "[pass] pure of dimension 1" in out
    assert "[pass] pseudomanifold" in out
    assert "[pass] effective simplex count" in out
    assert "[not checked (out of scope)] Z_0 -> B injective in cohomology" in out
    code, out = run(capsys, "zset", "--i", "1", path)
    assert code == 0 and "(empty)" in out and "[not asserted] effective simplex count" in out


def test_zset_hopf(capsys, write):
    code, out = run(capsys, "zset", "--i", "2", str(write("hopf")))
    assert code == 0
    assert "dim 0: 2" in out and "[pass] Z_i nonempty" in out
    assert "[not checked (out of scope)] Z_i represents a nontrivial homology class" in out


def test_zset_height_flag(capsys, write):
    code, out = run(capsys, "zset", "--i", "2", "--t-height", "2", str(write("hopf")))
    assert "[not asserted] effective simplex count" in out


def test_zset_json(capsys, write):
    code, out = run(capsys, "--json", "zset", "--i", "1", str(write("klein:3")))
    data = json.loads(out)
    verdicts = {c["name"]: c["verdict"] for c in data["checks"]}
    assert code == 0 and verdicts["effective simplex count"] == "pass"


def test_sw_rp4(capsys):
    code, out = run(capsys, "sw", "--space", "rp:4")
    assert code == 0
    for line in ["t^4 = at^3 + a^4", "t^5 = a^2t^3 + a^4t", "t^6 = a^3t^3 + a^4t^2", "t^7 = 0",
                 "height of t = 6", "published claims (unverified)"]:
        assert line in out


def test_sw_rp8(capsys):
    code, out = run(capsys, "sw", "--space", "rp:8")
    assert code == 0 and "W[2,6] = a^8" in out and "height of t = 14" in out


def test_sw_cp2_reports_computed_values(capsys):
    # the published t^7 identity does not hold; the report says so with a witness
    code, out = run(capsys, "sw", "--space", "cp:2")
    assert code == 1
    assert "t^6 = 0" in out and "height of t = 5" in out
    assert "witness: computed t^7 = 0" in out


def test_sw_custom_file(capsys, tmp_path):
    path = tmp_path / "ring.json"
    path.write_text(json.dumps({"generators": [["w1", 1, 8], ["w2", 2, 8]], "n": 1,
                                "w": {"1": "w1", "2": "w2"}, "k": 4}))
    code, out = run(capsys, "sw", "--file", str(path), "--powers", "4")
    assert code == 0
    assert "t^3 = (w1^2 + w2)t + w1w2" in out
    assert "t^4 = w1^3t + w1^2w2 + w2^2" in out


def test_reports_are_deterministic(capsys, write):
    path = str(write("klein:3"))
    assert run(capsys, "zset", path) == run(capsys, "zset", path)
