import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from chernlab.cli import run

RINGS = Path(__file__).resolve().parent.parent / "demos" / "rings"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def kv(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line and " " not in line.split("=", 1)[0])


def test_chernrank_cp3():
    code, out, _ = cli("chernrank", RINGS / "cp3.ring", "--bundle", "L")
    assert code == 0 and kv(out)["chernrank"] == "6"


def test_cuplength_and_monolen():
    code, out, _ = cli("cuplength", RINGS / "s2xs4.ring")
    assert code == 0 and kv(out)["cup_length"] == "2"
    code, out, _ = cli("monolen", RINGS / "cp3.ring", "--bundle", "L")
    assert kv(out)["monomial_length"] == "3"


def test_uchrank_report():
    code, out, _ = cli("uchrank", RINGS / "s6.ring")
    d = kv(out)
    assert code == 0 and (d["lower"], d["upper"], d["determined"]) == ("4", "4", "true")
    assert "R4 Bott sphere" in out


def test_bound_formula():
    code, out, _ = cli("bound", "thm12", "--d", 3, "--k", 1, "--rx", 2)
    assert code == 0 and kv(out)["bound"] == "2"
    code, out, _ = cli("bound", "thm12", "--d", 5, "--k", 1, "--rx", 4)
    assert kv(out)["bound"] == "5/2"
    code, _, err = cli("bound", "thm12", "--d", 1, "--k", 1, "--rx", 2)
    assert code == 2 and err.count("\n") == 1


def test_bound_check():
    code, out, _ = cli("bound", "thm12-check", RINGS / "s2xs4.ring", "--bundle", "E", "--k", 1)
    d = kv(out)
    assert code == 0 and d["hypothesis"] == "true" and d["bound"] == "2" and d["holds"] == "true"
    code, out, _ = cli("bound", "thm12-check", RINGS / "cp3.ring", "--bundle", "L", "--k", 1)
    assert kv(out)["hypothesis"] == "false"


def test_json_output_has_same_keys():
    _, plain, _ = cli("uchrank", RINGS / "cp5_cp1.ring")
    _, js, _ = cli("uchrank", RINGS / "cp5_cp1.ring", "--json")
    obj = json.loads(js)
    assert set(obj) == set(kv(plain))
    assert obj["lower"] == obj["upper"] == 4


def test_catalog_verify():
    code, out, _ = cli("catalog", "verify", "--max", 6)
    assert code == 0 and kv(out)["failures"] == "0"
    code, out, _ = cli("catalog", "verify", "--family", "CP")
    assert code == 0 and kv(out)["passes"] == "8"


def test_catalog_verify_override_fails():
    code, out, _ = cli("catalog", "verify", "--override", "CP^3=7")
    d = kv(out)
    assert code == 1 and d["failures"] == "1" and d["failed"] == "CP^3"


def test_catalog_list_show_export():
    code, out, _ = cli("catalog", "list")
    assert code == 0 and int(kv(out)["entries"]) > 100
    code, out, _ = cli("catalog", "show", "S^2xS^4")
    assert code == 0 and kv(out)["status"] == "DETERMINED"
    code, out, _ = cli("catalog", "show", "S^3xS^5")
    assert code == 2


def test_catalog_export_round_trips(tmp_path):
    code, text, _ = cli("catalog", "export", "CP^3")
    assert code == 0 and text.startswith("space CP^3")
    path = tmp_path / "cp3.ring"
    path.write_text(text, encoding="utf-8")
    code, out, _ = cli("chernrank", path, "--bundle", "L")
    assert code == 0 and kv(out)["chernrank"] == "6"


@pytest.mark.parametrize("text,code", [
    ("space X dim 4\ngen a deg 2\nrel a^2 = b\n", 2),
    ("space X dim 4\ngen a deg 2\nbundle L\nc1 = a^2\n", 2),
    ("space X dim 6\ngen x deg 2\ngen y deg 2\nrel x*y = 0\nrel x^2 = y^2\n", 3),
])
def test_error_paths(tmp_path, text, code):
    path = tmp_path / "bad.ring"
    path.write_text(text, encoding="utf-8")
    got, out, err = cli("cuplength", path)
    assert got == code and out == ""
    assert err.count("\n") == 1 and str(path) in err


def test_parse_errors_report_line_and_column(tmp_path):
    path = tmp_path / "bad.ring"
    path.write_text("space X dim 4\ngen a deg 2\nbundle L\nc1 = a^2\n", encoding="utf-8")
    _, _, err = cli("cuplength", path)
    assert err.startswith(f"{path}:4:5:")


def test_missing_file_and_bundle():
    code, _, err = cli("cuplength", "/no/such/file.ring")
    assert code == 2 and err.count("\n") == 1
    code, _, err = cli("chernrank", RINGS / "cp3.ring", "--bundle", "Q")
    assert code == 2 and "Q" in err


def test_usage_error_exit_code():
    code, _, _ = cli("frobnicate")
    assert code == 2


def test_output_is_stable():
    a = cli("catalog", "verify", "--max", 4)
    b = cli("catalog", "verify", "--max", 4, "--jobs", 3)
    assert a == b


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chernlab.cli", "bound", "thm12",
                           "--d", "3", "--k", "1", "--rx", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "bound=2" in proc.stdout
