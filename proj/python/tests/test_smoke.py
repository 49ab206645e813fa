import pytest

import biamalg as ba


def test_zmod_arithmetic():
    r = ba.zmod(6)
    assert r.size == 6
    assert r.mul("2", "3") == "0"
    assert r.add("5", "4") == "3"
    assert r.is_unit("5") and not r.is_unit("2")


def test_monomial_quotient_not_gaussian():
    a1 = ba.polyquo(2, ["x", "y"], ["x^2", "y^2"])
    assert a1.size == 16
    v = ba.is_gaussian(a1)
    assert v["holds"] is False
    assert v["witness"]["elements"] == ["x", "y"]
    assert ba.is_local(a1)["holds"] is True


def test_chain_ring_properties():
    r = ba.zmod(8)
    assert ba.is_arithmetical(r)["holds"]
    assert ba.is_arithmetical(r, bruteforce=True)["holds"]
    assert ba.is_gaussian(r)["holds"]
    assert ba.is_prufer(r)["holds"]
    assert ba.is_total_quotient_ring(r)["holds"]


def test_duplication_size():
    a = ba.zmod(6)
    d = ba.duplicate(a, ba.span(a, ["2"]))
    # |A| * |I| = 6 * 3
    assert d.size == 18


def test_gaussian_example_configuration():
    cfg = ba.example_config("2.5")
    d = ba.biamalg(cfg)
    assert d.size == 32 == cfg.expected_size
    assert ba.is_gaussian(d)["holds"]
    arith = ba.is_arithmetical(d)
    assert not arith["holds"]
    assert len(arith["witness"]["elements"]) == 2
    report = ba.verify("prop2.4.3", cfg)
    assert report["status"] == "verified"


def test_prufer_example_configuration():
    cfg = ba.example_config("2.7")
    d = ba.biamalg(cfg)
    assert d.size == 256
    assert ba.is_prufer(d)["holds"]
    assert not ba.is_gaussian(d)["holds"]
    assert ba.verify("prop2.6", cfg)["status"] == "verified"


@pytest.mark.parametrize("example", ["2.5", "2.7"])
def test_example_reports_verified(example):
    assert ba.example_report(example)["status"] == "verified"


@pytest.mark.parametrize("example", ["2.5", "2.7"])
def test_example_scripts_run(example):
    report, code = ba.run_script(ba.example_script(example))
    assert code == 0
    assert set(report) >= {"version", "seed", "statements"}
    assert report["version"] == ba.__version__


def test_script_parse_error():
    with pytest.raises(ba.ScriptParseError, match="use-before-definition"):
        ba.run_script("check gaussian X")


def test_library_error():
    with pytest.raises(ba.Error, match="invalid-argument"):
        ba.zmod(4).mul("2", "not-an-element")


def test_random_config_filtered():
    cfg, description = ba.random_config(1, "prop2.4.2")
    assert description
    assert ba.verify("prop2.4.2", cfg)["status"] == "verified"


def test_localization_report():
    cfg = ba.example_config("2.5")
    for p in ba.maximal_ideals(cfg.f.domain):
        assert ba.verify_localization(cfg, p)["status"] == "verified"
