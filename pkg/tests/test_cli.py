import io
import json
import subprocess
import sys

from tperfect.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_verify_cert_w5():
    code, out = run("verify-cert", "EUZw", "2/5,2/5,2/5,2/5,2/5,1/5")
    assert code == 0
    assert "vertex: yes" in out and "rank: 6 of 6" in out and "refutes t-perfection: yes" in out


def test_verify_cert_not_a_vertex():
    code, out = run("verify-cert", "Dhc", "1/3,1/3,1/3,1/3,1/3")
    assert code == 1 and "vertex: no" in out


def test_verify_cert_bad_vector(capsys):
    assert run("verify-cert", "EUZw", "1/2,1/2")[0] == 2
    assert run("verify-cert", "EUZw", "a,b,c,d,e,f")[0] == 2


def test_color_exact_co_l_w5():
    code, out = run("color", "I?Becw}Yo", "--mode", "exact")
    assert code == 0 and "colors: 4" in out and "proper: yes" in out


def test_color_modes():
    code, out = run("color", "I?Becw}Yo", "--mode", "four")
    assert code == 0 and "colors: 4" in out
    code, out = run("color", "I?Becw}Yo", "--mode", "structured")
    assert code == 1 and "co-L(W5)" in out
    # co-L(C5) is C5 itself
    code, out = run("color", "Dhc", "--mode", "chif")
    assert code == 0 and "colors: 3" in out


def test_parse_single_vertex():
    code, out = run("parse", "@")
    assert code == 0 and "vertices: 1" in out and "edges: 0" in out


def test_parse_from_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("EUZw\n"))
    code, out = run("parse", "-")
    assert code == 0 and "vertices: 6" in out


def test_bad_input_and_unknown_verb():
    assert run("parse", "E!")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_recognize_and_chif():
    code, out = run("recognize", "HErb`yi")
    assert code == 0 and "t-perfect: yes" in out
    code, out = run("chif", "Dhc")
    assert code == 0 and "chi_f: 5/2" in out


def test_corpus_verify_json_and_text():
    code, out = run("corpus", "verify", "--json", "--no-excluded")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[-1]["refutes_t_perfection"] == 77
    code, out = run("corpus", "verify")
    assert code == 0 and "refutes t-perfection: 77/77" in out


def test_corpus_verify_file(tmp_path):
    p = tmp_path / "c.tsv"
    p.write_text("Dhc\t1/3,1/3,1/3,1/3,1/3\n")
    code, out = run("corpus", "verify", str(p), "--no-excluded")
    assert code == 1 and "refutes t-perfection: 0/1" in out
    p.write_text("Dhc\t1/3\n")
    assert run("corpus", "verify", str(p))[0] == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "tperfect", "color", "I?Becw}Yo", "--mode", "four"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout
