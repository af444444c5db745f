"""Document round trips, schema errors, report stability, and the CLI."""

import json

import pytest

from coquasi import docio, linalg
from coquasi.cli import main
from coquasi.cleft import crossed_to_cleft
from coquasi.errors import DivisionByZero, SchemaError
from coquasi.hopf_modules import free_hopf_module


def test_scalar_codec(field3):
    q = field3.root()
    x = field3.scalar(2) - field3.scalar("3/2") * q
    assert docio.parse_scalar(field3, field3.format(x)) == x
    assert docio.parse_scalar(field3, ["2", "-3/2"]) == x
    assert docio.parse_scalar(field3, 5) == field3.scalar(5)
    with pytest.raises(DivisionByZero):
        docio.parse_scalar(field3, "1/0")
    with pytest.raises(DivisionByZero):
        docio.parse_scalar(field3, ["1/0"])


def _roundtrip(obj, tmp_path, name, host_ref=None):
    path = tmp_path / name
    docio.save_document(obj, str(path), host_ref=host_ref)
    kind, back = docio.load_document(str(path))
    return kind, back


def test_roundtrip_hopf(H3, tmp_path):
    kind, back = _roundtrip(H3, tmp_path, "h3.json")
    assert kind == "coquasi_hopf"
    assert linalg.is_zero(back.mult - H3.mult)
    assert linalg.is_zero(back.omega.values - H3.omega.values)
    assert linalg.is_zero(back.antipode - H3.antipode)
    assert linalg.is_zero(back.twist_f[0].values - H3.twist_f[0].values)


def test_roundtrip_crossed_system(h2_system, tmp_path):
    kind, back = _roundtrip(h2_system, tmp_path, "cs.json", host_ref="builtin:H2")
    assert kind == "crossed_system"
    assert h2_system.tensors_equal(back)
    assert linalg.is_zero(back.sigma_inv.values - h2_system.sigma_inv.values)


def test_roundtrip_comodule_algebra(h2_product, tmp_path):
    kind, back = _roundtrip(h2_product.underlying, tmp_path, "a.json",
                            host_ref="builtin:H2")
    assert kind == "comodule_algebra"
    assert linalg.is_zero(back.mult - h2_product.underlying.mult)
    assert linalg.is_zero(back.coaction - h2_product.underlying.coaction)


def test_roundtrip_cleaving(h2_product, tmp_path):
    clv = crossed_to_cleft(h2_product)
    kind, back = _roundtrip(clv, tmp_path, "clv.json", host_ref="builtin:H2")
    assert kind == "cleaving_system"
    assert linalg.is_zero(back.gamma - clv.gamma)
    assert linalg.is_zero(back.delta - clv.delta)


def test_roundtrip_module(h2_system, tmp_path):
    M = free_hopf_module(h2_system)
    kind, back = _roundtrip(M, tmp_path, "mod.json", host_ref="builtin:H2")
    assert kind == "hopf_module"
    assert linalg.is_zero(back.r_action - M.r_action)
    assert linalg.is_zero(back.h_action - M.h_action)


def test_roundtrip_datum(h3_datum, tmp_path):
    kind, back = _roundtrip(h3_datum, tmp_path, "d3.json")
    assert kind == "h3_datum"
    assert linalg.is_zero(back.F - h3_datum.F)
    assert linalg.is_zero(back.v2 - h3_datum.v2)


def test_shipped_fixtures_all_pass():
    import os
    root = os.path.join(os.path.dirname(__file__), "..", "fixtures")
    names = sorted(os.listdir(root))
    assert len(names) >= 7
    for name in names:
        _, obj = docio.load_document(os.path.join(root, name))
        rep = docio.check_document(obj)
        assert rep.ok, f"{name}: {rep.summary()}"


def test_schema_file_ships_with_package():
    import os
    import coquasi
    path = os.path.join(os.path.dirname(coquasi.__file__), "schema.json")
    with open(path, "r", encoding="utf-8") as fh:
        schema = json.load(fh)
    assert schema["title"] == docio.FORMAT
    assert set(schema["properties"]["kind"]["enum"]) == set(docio.KINDS)


def test_builtin_uris():
    assert docio.load_builtin("builtin:H2").dim == 2
    assert docio.load_builtin("builtin:C3").dim == 3
    assert docio.load_builtin("builtin:group_Cn?n=4").dim == 4
    assert docio.load_builtin("builtin:group_C2n_twisted?n=2").dim == 4


def test_schema_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SchemaError):
        docio.load_document(str(bad))
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"format": "other", "kind": "algebra", "payload": {}}))
    with pytest.raises(SchemaError):
        docio.load_document(str(wrong))


def test_check_document_catches_host_corruption(h2_system, tmp_path):
    doc = docio.to_document(h2_system)   # inline host
    doc["payload"]["host"]["payload"]["omega"][1][1][1] = "2"
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps(doc))
    _, obj = docio.load_document(str(path))
    rep = docio.check_document(obj)
    assert not rep.ok
    assert any(f.identity.startswith("host:") for f in rep.failures)


# -- the command line -------------------------------------------------------------


def test_cli_check_builtin(capsys):
    assert main(["check", "--kind", "coquasi-hopf", "builtin:H3"]) == 0
    out = capsys.readouterr().out
    assert "all identities hold" in out


def test_cli_check_json_stable(capsys):
    assert main(["check", "builtin:H2", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["check", "builtin:H2", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    parsed = json.loads(first)
    assert parsed["ok"] is True


def test_cli_check_failure_exit_code(h2_system, tmp_path, capsys):
    doc = docio.to_document(h2_system, host_ref="builtin:H2")
    doc["payload"]["sigma"][1][1] = ["5", "0"]
    path = tmp_path / "bad_system.json"
    path.write_text(json.dumps(doc))
    assert main(["check", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_cli_parse_error_exit_code(tmp_path, capsys):
    doc = {"format": docio.FORMAT, "kind": "h2_datum",
           "field": {"cyclotomic_order": 1},
           "payload": {"B": {"labels": ["1"], "mult": [[["1/0"]]], "unit": ["1"]},
                       "F": [["1"]], "c": ["1"]}}
    path = tmp_path / "div.json"
    path.write_text(json.dumps(doc))
    rc = main(["check", str(path)])
    assert rc == 2
    err = capsys.readouterr().err
    assert "DivisionByZero" in err


def test_cli_build_pipeline(h2_system, h2_datum, tmp_path, capsys):
    sys_path = tmp_path / "system.json"
    docio.save_document(h2_system, str(sys_path), host_ref="builtin:H2")
    datum_path = tmp_path / "datum.json"
    docio.save_document(h2_datum, str(datum_path))
    prod_path = tmp_path / "product.json"

    assert main(["build", "crossed-product", str(sys_path), "-o", str(prod_path)]) == 0
    capsys.readouterr()
    assert main(["check", str(prod_path)]) == 0
    capsys.readouterr()

    assert main(["build", "heisenberg", "builtin:H2", "-o", str(tmp_path / "hd.json")]) == 0
    capsys.readouterr()

    assert main(["build", "morita", str(prod_path)]) == 0
    out = capsys.readouterr().out
    assert "strictness: Strict" in out

    assert main(["build", "can", str(prod_path)]) == 0
    out = capsys.readouterr().out
    assert "Bijective" in out

    assert main(["build", "tables", "--datum", str(datum_path)]) == 0
    out = capsys.readouterr().out
    assert "t # 1" in out

    cleft_path = tmp_path / "cleft.json"
    assert main(["build", "crossed-to-cleft", str(sys_path), "-o", str(cleft_path)]) == 0
    capsys.readouterr()
    assert main(["check", str(cleft_path)]) == 0
    capsys.readouterr()
    back_path = tmp_path / "back.json"
    assert main(["build", "cleft-to-crossed", str(cleft_path), "-o", str(back_path)]) == 0
    capsys.readouterr()
    assert main(["check", str(back_path)]) == 0


def test_cli_build_twist(h2_system, tmp_path, capsys):
    sys_path = tmp_path / "system.json"
    docio.save_document(h2_system, str(sys_path), host_ref="builtin:H2")
    twist_doc = {"format": docio.FORMAT, "kind": "twist",
                 "field": {"cyclotomic_order": 1},
                 "payload": {"host": "builtin:H2",
                             "tau": [["1", "1"], ["1", "-1"]]}}
    tw_path = tmp_path / "twist.json"
    tw_path.write_text(json.dumps(twist_doc))
    out_path = tmp_path / "twisted.json"
    assert main(["build", "twist", str(sys_path), str(tw_path), "-o", str(out_path)]) == 0
    capsys.readouterr()
    assert main(["check", str(out_path)]) == 0


def test_cli_build_deform(h2_system, tmp_path, capsys):
    sys_path = tmp_path / "system.json"
    docio.save_document(h2_system, str(sys_path), host_ref="builtin:H2")
    amap = {"a_map": [["1", "0"], ["0", "1"]]}
    amap_path = tmp_path / "amap.json"
    amap_path.write_text(json.dumps(amap))
    out_path = tmp_path / "deformed.json"
    assert main(["build", "deform", str(sys_path), str(amap_path),
                 "-o", str(out_path)]) == 0
    capsys.readouterr()
    assert main(["check", str(out_path)]) == 0
