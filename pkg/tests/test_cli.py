import io
import subprocess
import sys

import pytest

from rainfrac.cli import parse_multiplicities, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def odd_cycle(tmp_path):
    path = tmp_path / "oc.txt"
    assert call("generate", "odd_cycle", "--k", "2", "-o", str(path))[0] == 0
    return path


def test_odd_cycle_rainbow_absent(odd_cycle):
    code, out, _ = call("rainbow", str(odd_cycle), "--n", "5/2")
    assert code == 1 and out == "ABSENT\n"


def test_rainbow_certificate_round_trip(tmp_path):
    inst = tmp_path / "oc5.txt"
    call("generate", "odd_cycle", "--k", "2", "--copies", "5", "-o", str(inst))
    code, out, _ = call("rainbow", str(inst), "--n", "5/2")
    assert code == 0 and out.startswith("FOUND\n")
    cert = tmp_path / "cert.txt"
    cert.write_text(out)
    assert call("rainbow", str(inst), "--n", "5/2", "--check", str(cert)) == (0, "VALID\n", "")
    cert.write_text(out.replace("assign 4 4", "assign 3 4"))
    code, out, _ = call("rainbow", str(inst), "--n", "5/2", "--check", str(cert))
    assert code == 1 and "color reused" in out


def test_truncated_plane_solve(tmp_path):
    inst = tmp_path / "tp.txt"
    call("generate", "truncated_plane", "--q", "2", "-o", str(inst))
    code, out, _ = call("solve", str(inst), "--nu")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "nu* 2/1"
    assert [l for l in lines if l.startswith("f ")] == [f"f {e} 1/2" for e in range(4)]


def test_solve_both_and_color(tmp_path):
    inst = tmp_path / "t.txt"
    inst.write_text("r 2\nv 3\ncolor a\ne 0 1\ncolor b\ne 1 2\ne 0 2\n")
    code, out, _ = call("solve", str(inst))
    assert code == 0 and "nu* 3/2" in out and "tau* 3/2" in out
    code, out, _ = call("solve", str(inst), "--color", "0", "--tau")
    assert out.startswith("tau* 1/1")


def test_collapse_then_verify(odd_cycle, tmp_path):
    code, out, _ = call("collapse", str(odd_cycle), "--n", "5/2", "--trace")
    assert code == 0 and "iter 0 nbar" in out
    seq = tmp_path / "seq.txt"
    seq.write_text(out)
    assert call("verify-collapse", str(odd_cycle), "--n", "5/2", "--seq", str(seq)) == (0, "VALID\n", "")
    code, out, _ = call("verify-collapse", str(odd_cycle), "--n", "5/2", "--seq", str(seq), "--d", "1")
    assert code == 1 and out.startswith("INVALID at 0")


def test_complex_and_blow_up(tmp_path):
    inst = tmp_path / "tri.txt"
    inst.write_text("r 2\nv 3\ne 0 1\ne 1 2\ne 0 2\n")
    code, out, _ = call("complex", str(inst), "--n", "3/2")
    assert out == "ground 0,1,2\nfacet 0,1\nfacet 0,2\nfacet 1,2\n"
    cx = tmp_path / "cx.txt"
    cx.write_text(out)
    seq = tmp_path / "seq.txt"
    seq.write_text(call("collapse", str(inst), "--n", "3/2")[1])
    code, out, _ = call("blow-up", "--complex", str(cx), "--mult", "0:2,2:2", "--seq", str(seq))
    assert code == 0 and "facet 0:1,0:2,1:1" in out and "step 2 sigma" in out
    big = tmp_path / "big.txt"
    big.write_text(out)
    assert call("verify-collapse", "--complex", str(big), "--seq", str(big))[0] == 0


def test_km_witness(odd_cycle, tmp_path):
    code, out, _ = call("km-witness", str(odd_cycle), "--n", "5/2")
    assert code == 0 and out.startswith("WITNESS ")
    inst = tmp_path / "oc5.txt"
    call("generate", "odd_cycle", "--k", "2", "--copies", "5", "-o", str(inst))
    code, out, _ = call("km-witness", str(inst), "--n", "5/2")
    assert code == 1 and out.startswith("NOT-CONTAINED 0:0,1:1,2:2,3:3,4:4")


def test_integral(tmp_path):
    inst = tmp_path / "d.txt"
    call("generate", "drisko", "--n", "3", "-o", str(inst))
    assert call("rainbow-integral", str(inst), "--n", "3")[0] == 1
    call("generate", "bgs", "--n", "4", "-o", str(inst))
    assert call("rainbow-integral", str(inst), "--n", "4")[:2] == (1, "ABSENT\n")


@pytest.mark.parametrize(
    "argv",
    [
        ("rainbow", "missing.txt", "--n", "1"),
        ("generate", "drisko"),
        ("generate", "bgs", "--n", "3"),
        ("bogus",),
        ("solve",),
    ],
)
def test_input_errors_exit_two(argv):
    code, out, err = call(*argv)
    assert code == 2


def test_scale_error_exit_two(tmp_path):
    inst = tmp_path / "big.txt"
    call("generate", "odd_cycle", "--k", "3", "--copies", "17", "-o", str(inst))
    code, _, err = call("rainbow", str(inst), "--n", "7/2")
    assert code == 2 and "caps" in err
    code, _, err = call("complex", str(inst), "--n", "7/2", "--max-enum", "5")
    assert code == 2 and "cap" in err


def test_bad_rational_is_an_input_error(odd_cycle):
    code, _, err = call("rainbow", str(odd_cycle), "--n", "2.5")
    assert code == 2 and err


def test_multiplicity_spec():
    assert parse_multiplicities("0:2, 3:3") == {0: 2, 3: 3}
    assert parse_multiplicities("4:1:2") == {(4, 1): 2}


def test_output_is_deterministic(odd_cycle):
    first = call("collapse", str(odd_cycle), "--n", "5/2", "--trace")
    assert call("collapse", str(odd_cycle), "--n", "5/2", "--trace") == first


def test_module_entry_point(odd_cycle):
    proc = subprocess.run(
        [sys.executable, "-m", "rainfrac", "rainbow", str(odd_cycle), "--n", "5/2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1 and proc.stdout == "ABSENT\n"
