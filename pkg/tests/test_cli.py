import io
import json
import xml.etree.ElementTree as ET

import pytest

from ropebound.bounds import BoundsCertificate, verify_certificate
from ropebound.cli import parse_report, run
from ropebound.lattice import fixture_path

from conftest import HOPF_PD, TREFOIL_PD


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def pd_file(tmp_path):
    def make(text, name="d.pd"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def test_bounds_summary():
    code, out, _ = call("bounds", str(fixture_path("trefoil24")))
    assert code == 0
    assert out.startswith("B0=2 s(K')=") and out.rstrip().endswith("L=24 L(K) > 1/7")


def test_bounds_by_fixture_name():
    code, out, _ = call("bounds", "trefoil24.lat")
    assert code == 0 and "L=24" in out


def test_bounds_structured_round_trip():
    code, out, _ = call("bounds", "figure8_30", "--format", "structured", "--workers", "2")
    assert code == 0
    rep = parse_report(out)
    cert = rep["certificate"]
    assert isinstance(cert, BoundsCertificate) and verify_certificate(cert)
    assert cert.B0 == 3 and rep["summary"] == cert.summary()
    again = json.loads(out)
    again["certificate"] = cert.as_dict()
    assert json.dumps(again, indent=2) + "\n" == out


def test_homfly_unknot(pd_file):
    code, out, _ = call("homfly", pd_file("PD[]; loops=1\n"))
    assert (code, out) == (0, "1\n")


def test_homfly_structured(pd_file):
    code, out, _ = call("homfly", pd_file(TREFOIL_PD), "--format", "structured")
    rep = parse_report(out)
    assert rep["kind"] == "homfly" and rep["b0"] == 2 and rep["E"] - rep["e"] == 2


def test_homfly_orientation(pd_file):
    f = pd_file(HOPF_PD)
    _, a, _ = call("homfly", f, "--orientation", "00")
    _, b, _ = call("homfly", f, "--orientation", "01")
    assert a != b
    code, _, err = call("homfly", f, "--orientation", "10")
    assert code == 1 and "first bit" in err
    code, _, err = call("homfly", f, "--orientation", "0")
    assert code == 1


def test_seifert(pd_file):
    code, out, _ = call("seifert", pd_file(TREFOIL_PD))
    assert (code, out) == (0, "s(D)=2\n")


def test_family_torus():
    code, out, _ = call("family", "torus2", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PD[X[") and lines[-1] == "braid_index_formula=3"


def test_family_structured():
    code, out, _ = call("family", "pretzel", "--k", "1", "--m", "1", "--format", "structured")
    rep = parse_report(out)
    assert rep["braid_index_formula"] == rep["B0"] == 4
    assert rep["crossing_number"] == 7


def test_family_svg():
    code, out, _ = call("family", "twist", "--n", "5", "--format", "svg")
    assert code == 0 and ET.fromstring(out).tag.endswith("svg")


def test_family_errors():
    assert call("family", "twist")[0] == 1
    assert call("family", "torus2", "--n", "0")[0] == 1


def test_validate(tmp_path):
    assert call("validate", "knot51_34")[0] == 0
    bad = tmp_path / "bad.lat"
    bad.write_text("0 0 0\n2 0 0\n2 1 0\n0 1 0\n")
    code, out, _ = call("validate", str(bad))
    assert code == 1 and "not a unit lattice step" in out
    bad.write_text("0 0\n")
    code, _, err = call("validate", str(bad))
    assert code == 1 and "line 1" in err


def test_project():
    code, out, _ = call("project", "trefoil24")
    assert code == 0 and out.startswith("PD[X[")
    assert "cord 0 slab" in out and "endpoints" in out
    code, out, _ = call("project", "trefoil24", "--format", "structured")
    rep = parse_report(out)
    cords = sum(line.startswith("cord ") for t in rep["cord_diagrams"] for line in t.splitlines())
    assert rep["sum_n"] == cords == 6


def test_render(tmp_path):
    out = tmp_path / "k.svg"
    code, text, _ = call("render", "trefoil24", "--out", str(out))
    assert code == 0 and text == ""
    root = ET.parse(out).getroot()
    assert root.tag.endswith("svg")


def test_render_random_seeded(monkeypatch):
    a = call("render", "--random-cords", "5", "--seed", "4")[1]
    monkeypatch.setenv("ROPEBOUND_SEED", "4")
    b = call("render", "--random-cords", "5")[1]
    c = call("render", "--random-cords", "5", "--seed", "5")[1]
    assert a == b != c


def test_cap_flag_and_env(monkeypatch):
    code, _, err = call("bounds", "figure8_30", "--cap", "2")
    assert code == 1 and "cap" in err
    monkeypatch.setenv("ROPEBOUND_CAP", "2")
    assert call("bounds", "figure8_30")[0] == 1
    assert call("bounds", "figure8_30", "--cap", "30")[0] == 0  # flag wins


def test_missing_file():
    code, _, err = call("homfly", "no/such.pd")
    assert code == 1 and "no such file" in err


def test_bad_pd(pd_file):
    code, _, err = call("homfly", pd_file("PD[X[1,2,3]]"))
    assert code == 1 and "error" in err


def test_internal_failure_exit_code(tmp_path):
    p = tmp_path / "eight.lat"
    p.write_text("0 2 0\n0 2 -1\n1 2 -1\n1 1 -1\n1 0 -1\n0 0 -1\n0 1 -1\n0 1 0\n")
    code, _, err = call("bounds", str(p))
    assert code == 3 and "(3/2)sum_n" in err


def test_usage_error():
    with pytest.raises(SystemExit) as e:
        run(["frobnicate"])
    assert e.value.code == 2
