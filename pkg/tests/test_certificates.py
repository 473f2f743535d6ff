import json
import time

import pytest

from cu_lab import catalog
from cu_lab import certificates as certs
from cu_lab.errors import CertificateError, UsageError


def shipped(cid):
    return certs.load_shipped(cid).to_json()


def test_all_shipped_verify():
    ids = certs.shipped_ids()
    assert {"w_omega_interval", "w_cfp_seqcube", "w_o6_seqcube", "w_beta_s1", "w_beta_product",
            "w_o5_open12"} <= set(ids)
    for cid in ids:
        t = certs.verify(certs.load_shipped(cid))
        assert t.ok, t.lines()
        assert t.lines()[-1] == "verified"


def test_paper_witness_values():
    w = shipped("w_omega_interval")
    assert w["elements"] == {"xp": "3/4", "x": "1"}
    assert w["series"] == {"kind": "geometric", "first": "1/4", "ratio": "1/2"}
    c = shipped("w_cfp_seqcube")
    assert c["series"]["kind"] == "indicator" and c["params"]["m"] == 2
    b = shipped("w_beta_product")
    assert b["elements"] == {"x": "(1/2, 1)", "y": "(3/4, inf)"}
    assert shipped("w_o5_open12")["elements"] == {"xp": "9/8", "x": "5/4", "y": "3/2"}


def test_tampered_omega_names_the_leg():
    obj = shipped("w_omega_interval")
    obj["elements"]["xp"] = "1/4"
    t = certs.verify(certs.Certificate.from_json(obj))
    assert not t.ok
    assert t.failed_leg.name == "x' not <= sum y_j"
    assert "x' <= sum y_j holds, not a refutation" in t.failed_leg.detail
    assert t.lines()[-1] == "rejected at leg: x' not <= sum y_j"


def test_tampered_cfp_rejected():
    obj = shipped("w_cfp_seqcube")
    obj["params"]["m"] = 1
    assert not certs.verify(certs.Certificate.from_json(obj)).ok


def test_o6_with_e1_is_not_a_refutation():
    obj = shipped("w_o6_seqcube")
    obj["elements"]["y1"] = "[1;0]"
    assert not certs.verify(certs.Certificate.from_json(obj)).ok


def test_legs_stop_after_first_failure():
    obj = shipped("w_omega_interval")
    obj["elements"]["xp"] = "1"  # 1 << 1 fails in [0,1]
    t = certs.verify(certs.Certificate.from_json(obj))
    assert len(t.legs) == 1 and t.failed_leg.name == "x' << x"


@pytest.mark.parametrize("mutate,msg", [
    (lambda o: o.pop("entry"), "entry"),
    (lambda o: o.update(kind="Nonsense"), "kind"),
    (lambda o: o.update(property="beta"), "cannot refute"),
    (lambda o: o.update(schema="cu-lab/certificate@0"), "schema"),
])
def test_schema_rejections(mutate, msg):
    obj = shipped("w_omega_interval")
    mutate(obj)
    with pytest.raises(CertificateError):
        certs.Certificate.from_json(obj)


def test_unparsable_elements_are_certificate_errors():
    obj = shipped("w_omega_interval")
    obj["elements"]["x"] = "7/2"
    with pytest.raises(CertificateError):
        certs.verify(certs.Certificate.from_json(obj))
    obj = shipped("w_beta_s1")
    del obj["elements"]["y"]
    with pytest.raises(CertificateError):
        certs.verify(certs.Certificate.from_json(obj))


def test_load_from_path(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(certs.load_shipped("w_beta_s1").dumps())
    assert certs.verify(certs.Certificate.load(p)).ok
    p.write_text("{not json")
    with pytest.raises(CertificateError):
        certs.Certificate.load(p)
    with pytest.raises(UsageError):
        certs.load_shipped("w_missing")


def test_dumps_roundtrip():
    for cid in certs.shipped_ids():
        c = certs.load_shipped(cid)
        again = certs.Certificate.from_json(json.loads(c.dumps()))
        assert again == c


def test_make_builds_verifiable_certificate():
    S = catalog.get("interval01")
    c = certs.make(S, "cancellation", "CancellationRefutation",
                   {"x": S.parse("1/2"), "y": S.parse("3/4")})
    assert c.elements == {"x": "1/2", "y": "3/4"}
    assert certs.verify(certs.Certificate.from_json(c.to_json())).ok


def test_shipped_verification_is_fast():
    t0 = time.perf_counter()
    for cid in certs.shipped_ids():
        certs.verify(certs.load_shipped(cid))
    assert time.perf_counter() - t0 < 1.0
