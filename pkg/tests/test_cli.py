import json
import subprocess
import sys

import pytest

from hornalg.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lm(capsys, files):
    assert run(capsys, "lm", files("p.hp", "a. b :- a.")) == (0, "a.\nb.\n", "")
    m = files("m.hp", "a. b. c :- a, b. d :- a, b, d.")
    assert run(capsys, "lm", m)[1] == "a.\nb.\nc.\n"
    code, out, _ = run(capsys, "lm", "--json", m)
    assert json.loads(out) == {"alphabet": ["a", "b", "c", "d"], "atoms": ["a", "b", "c"]}


def test_syntax_error_exit_code(capsys, files):
    code, out, err = run(capsys, "lm", files("bad.hp", "a :- b b."))
    assert code == 2 and out == "" and ":1:8:" in err


def test_alphabet_error_exit_code(capsys, files):
    code, _, err = run(capsys, "lm", "--alphabet", "a", files("p.hp", "a :- b."))
    assert code == 3 and "'b'" in err
    assert run(capsys, "lm", "--alphabet", "A", files("q.hp", "a."))[0] == 3
    p = files("p2.hp", "#alphabet a.\na.")
    r = files("r2.hp", "#alphabet a, b.\nb.")
    assert run(capsys, "eval", "compose(P, R)", "--let", f"P={p}", "--let", f"R={r}")[0] == 3


def test_eval(capsys, files):
    p = files("p.hp", "a. b :- a. c :- a, b.")
    r = files("r.hp", "a. b :- a.")
    code, out, _ = run(capsys, "eval", "compose(P, R)", "--let", f"P={p}", "--let", f"R={r}")
    assert code == 0 and out == "#alphabet a, b, c.\na.\nb.\nc :- a.\n"
    q = files("q.hp", "a :- b. a :- c.")
    _, out, _ = run(capsys, "eval", "bunion(P, P)", "--let", f"P={q}")
    assert out.splitlines()[1:] == ["a :- b.", "a :- c.", "a :- b, c."]
    _, out, _ = run(capsys, "eval", "omega(star(P))", "--let", f"P={p}")
    assert out.splitlines()[1:] == ["a.", "b.", "c."]


def test_eval_errors(capsys, files):
    p = files("p.hp", "a.")
    assert run(capsys, "eval", "frob(P)", "--let", f"P={p}")[0] == 2
    assert run(capsys, "eval", "compose(P)", "--let", f"P={p}")[0] == 2
    assert run(capsys, "eval", "compose(P, Q)", "--let", f"P={p}")[0] == 4
    assert run(capsys, "eval", "hred(P, P)", "--let", f"P={files('r.hp', 'a :- a.')}")[0] == 4
    assert run(capsys, "eval", "X", "--let", "P")[0] == 2


def test_eval_blowup_limit(capsys, files, monkeypatch):
    from hornalg import algebra
    monkeypatch.setattr(algebra.compose, "__defaults__", (2,))
    p = files("p.hp", "a :- a, b. b :- a, b. a :- b. b :- a.")
    code, _, err = run(capsys, "eval", "compose(P, P)", "--let", f"P={p}")
    assert code == 4 and "exceeds" in err


def test_decompose(capsys, files):
    m = files("m.hp", "a. b. c :- a, b. d :- a, b, d.")
    code, out, _ = run(capsys, "decompose", m)
    assert code == 0
    assert out.startswith("% K_1\na.\nb.\nc :- a.\nd :- a.\n% K_2\na.\nb.\nc :- b.\nd :- b.\n% K_3\na.\nb.\nc :- b.\nd :- d.\n")
    assert "decomposition (minimalist-exact): PASS" in out
    nm = files("nm.hp", "a :- b. a :- c.")
    assert run(capsys, "decompose", nm)[0] == 5
    code, out, _ = run(capsys, "decompose", "--mode", "general", "--json", nm)
    assert code == 0 and json.loads(out)["mode"] == "general-cover"


def test_check(capsys, files):
    p = files("p.hp", "a :- b. a :- b, c.")
    r = files("r.hp", "a :- b.")
    assert run(capsys, "check", "ss-equiv", p, r) == (0, "true\n", "")
    assert run(capsys, "check", "equal", p, r)[:2] == (1, "false\n")
    assert run(capsys, "check", "subset", r, p)[:2] == (0, "true\n")
    code, out, _ = run(capsys, "check", "ss-leq", files("q.hp", "a."), r, "--json")
    assert code == 1 and json.loads(out)["witness"] == []


def test_analogy(capsys, files):
    a, ab = files("a.hp", "#alphabet a, b, c.\na."), files("ab.hp", "#alphabet a, b, c.\na. b.")
    c, cb = files("c.hp", "#alphabet a, b, c.\nc."), files("cb.hp", "#alphabet a, b, c.\nc. b.")
    b = files("b.hp", "#alphabet a, b, c.\nb.")
    args = ["analogy", "check", a, ab, c, cb, "--forward", "union(X, B)", "--backward", "diff(X, B)",
            "--let", f"B={b}"]
    assert run(capsys, *args)[:2] == (0, "true\n")
    args[-3] = "X"
    assert run(capsys, *args)[:2] == (1, "false\n")
    assert run(capsys, "analogy", "check", a, ab, c, cb, "--forward", "union(X, B)", "--backward", "X")[0] == 4


def test_laws(capsys):
    code, out, _ = run(capsys, "laws", "--trials", "20", "--law", "mdt-exactness", "--law", "dt-cover")
    assert code == 0 and out.endswith("2/2 laws passed\n")
    code, out, _ = run(capsys, "laws", "--trials", "5", "--law", "compose-oracle", "--json")
    assert code == 0 and json.loads(out)[0]["trials"] == 5
    assert run(capsys, "laws", "--law", "nope")[0] == 5
    assert run(capsys, "laws", "--max-atoms", "9")[0] == 5


def test_fmt_and_json_input(capsys, files):
    code, out, _ = run(capsys, "fmt", files("p.hp", "c :- b, a.  b."))
    assert out == "#alphabet a, b, c.\nb.\nc :- a, b.\n"
    j = files("p.json", '{"alphabet": ["a", "b"], "rules": [{"head": "a", "body": ["b"]}]}')
    assert run(capsys, "fmt", j)[1] == "#alphabet a, b.\na :- b.\n"
    assert run(capsys, "fmt", files("bad.json", '{"alphabet": 1}'))[0] == 2
    assert run(capsys, "fmt", "/nonexistent/file.hp")[0] == 2


def test_console_entry_point(files):
    p = files("p.hp", "a. b :- a.")
    done = subprocess.run([sys.executable, "-m", "hornalg.cli", "lm", p], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout == "a.\nb.\n"
