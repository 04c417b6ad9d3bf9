import io
import subprocess
import sys

from monocover.cli import run
from monocover.generators import gen_antihole, gen_p42
from monocover.graph import format_graph, parse_certificate, parse_combined, parse_graph


def invoke(capsys, monkeypatch, argv, stdin_text=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_round_trip(capsys, monkeypatch):
    code, out, err = invoke(capsys, monkeypatch, ["gen", "--family", "antihole", "--k", "3"])
    assert code == 0
    assert parse_graph(out) == gen_antihole(3)


def test_gen_out_file(tmp_path, capsys, monkeypatch):
    target = tmp_path / "g.txt"
    code, out, _ = invoke(
        capsys, monkeypatch, ["gen", "--family", "p42", "--copies", "2", "--out", str(target)]
    )
    assert code == 0 and out == ""
    assert parse_graph(target.read_text()) == gen_p42(2)


def test_gen_seed_is_printed_and_deterministic(capsys, monkeypatch):
    argv = ["gen", "--family", "random-alpha2", "--n", "10", "--p", "0.4", "--seed", "5"]
    code1, out1, err1 = invoke(capsys, monkeypatch, argv)
    code2, out2, _ = invoke(capsys, monkeypatch, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "seed = 5" in err1
    _, out3, err3 = invoke(capsys, monkeypatch, ["gen", "--family", "random-alpha2"])
    assert "seed = 0" in err3


def test_pipeline_gen_cover_verify(capsys, monkeypatch):
    code, graph_text, _ = invoke(capsys, monkeypatch, ["gen", "--family", "antihole", "--k", "3"])
    assert code == 0
    code, combined, err = invoke(
        capsys, monkeypatch, ["cover", "--method", "near-split"], stdin_text=graph_text
    )
    assert code == 0
    assert "components = 2" in err
    G, cert = parse_combined(combined)
    assert G == gen_antihole(3) and len(cert) == 2
    code, out, _ = invoke(capsys, monkeypatch, ["verify"], stdin_text=combined)
    assert code == 0
    assert out.startswith("accepted: 2 components")


def test_every_cover_method_through_cli(capsys, monkeypatch):
    graph_text = format_graph(gen_antihole(3))
    for method in ("alpha2", "near-split", "general", "stars", "cliques"):
        code, combined, _ = invoke(
            capsys, monkeypatch, ["cover", "--method", method], stdin_text=graph_text
        )
        assert code == 0, method
        code, _, _ = invoke(capsys, monkeypatch, ["verify"], stdin_text=combined)
        assert code == 0, method


def test_cover_two_clique_and_out_file(tmp_path, capsys, monkeypatch):
    edges = [(0, 1, 1), (2, 3, 2), (2, 4, 1), (3, 4, 2)]
    text = "5 2\n" + "\n".join(f"{u} {v} {c}" for u, v, c in edges) + "\n"
    cert_file = tmp_path / "cert.txt"
    code, out, err = invoke(
        capsys,
        monkeypatch,
        ["cover", "--method", "two-clique", "--out", str(cert_file)],
        stdin_text=text,
    )
    assert code == 0 and out == ""
    cert = parse_certificate(cert_file.read_text())
    assert len(cert) == 2
    code, _, _ = invoke(
        capsys,
        monkeypatch,
        ["verify", "--cert", str(cert_file)],
        stdin_text=text,
    )
    assert code == 0


def test_verify_rejects_and_names_vertex(capsys, monkeypatch):
    bad = "3 2\n0 1 1\n1 2 1\n---\n1\n1 1: 0 1\n"
    code, _, err = invoke(capsys, monkeypatch, ["verify"], stdin_text=bad)
    assert code == 1
    assert "2" in err  # the uncovered vertex


def test_cover_near_split_without_structure(capsys, monkeypatch):
    code, _, err = invoke(
        capsys, monkeypatch, ["cover", "--method", "near-split"], stdin_text="3 2\n"
    )
    assert code == 2
    assert "error:" in err


def test_cover_cliques_limit_exit_code(capsys, monkeypatch):
    text = "25 2\n"
    code, _, err = invoke(capsys, monkeypatch, ["cover", "--method", "cliques"], stdin_text=text)
    assert code == 3
    assert "error:" in err


def test_classify_output(capsys, monkeypatch):
    code, out, _ = invoke(
        capsys, monkeypatch, ["classify"], stdin_text=format_graph(gen_p42(1))
    )
    assert code == 0
    assert "case = both-three" in out
    assert "base_color1" in out

    from monocover.generators import house_skeleton

    code, out, _ = invoke(
        capsys, monkeypatch, ["classify"], stdin_text=format_graph(house_skeleton())
    )
    assert code == 0
    assert "case = over-three" in out and "house_color = 1" in out


def test_oracle_min_cover_prints_value(capsys, monkeypatch):
    code, out, _ = invoke(
        capsys,
        monkeypatch,
        ["oracle", "--min-cover", "2"],
        stdin_text=format_graph(gen_p42(1)),
    )
    assert code == 0 and out.strip() == "2"


def test_oracle_bounds_exit_codes(capsys, monkeypatch):
    antihole = format_graph(gen_antihole(3))
    code, out, _ = invoke(
        capsys, monkeypatch, ["oracle", "--bounds", "3,3"], stdin_text=antihole
    )
    assert code == 0
    assert len(parse_certificate(out)) == 2
    code, _, err = invoke(
        capsys, monkeypatch, ["oracle", "--bounds", "2,2"], stdin_text=antihole
    )
    assert code == 1
    assert "no cover" in err


def test_search_exit_codes(capsys, monkeypatch):
    host = format_graph(gen_p42(1))
    code, out, _ = invoke(
        capsys,
        monkeypatch,
        ["search", "--colors", "2", "--predicate", "has-bounds-cover:3,3"],
        stdin_text=host,
    )
    assert code == 0
    assert "ok_count = 32" in out

    code, out, _ = invoke(
        capsys,
        monkeypatch,
        ["search", "--colors", "2", "--predicate", "min-cover-atmost:2,1"],
        stdin_text=host,
    )
    assert code == 1  # counterexamples exist

    code, out, _ = invoke(
        capsys,
        monkeypatch,
        ["search", "--colors", "2", "--predicate", "has-bounds-cover:3,3", "--budget", "5"],
        stdin_text=host,
    )
    assert code == 3
    assert "partial = 1" in out

    code, out, _ = invoke(
        capsys,
        monkeypatch,
        ["search", "--colors", "2", "--predicate", "min-cover-distribution:2"],
        stdin_text=host,
    )
    assert code == 0
    assert "histogram = 1:26,2:6" in out


def test_usage_errors(capsys, monkeypatch):
    assert invoke(capsys, monkeypatch, ["bogus"])[0] == 2
    assert invoke(capsys, monkeypatch, ["cover"])[0] == 2  # missing --method
    assert invoke(capsys, monkeypatch, ["gen", "--family", "p42", "--copies", "0"])[0] == 2
    code, _, err = invoke(
        capsys,
        monkeypatch,
        ["search", "--colors", "2", "--predicate", "sorcery:1"],
        stdin_text=format_graph(gen_p42(1)),
    )
    assert code == 2 and "unknown predicate" in err
    # malformed graph input
    assert invoke(capsys, monkeypatch, ["classify"], stdin_text="oops\n")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "monocover", "gen", "--family", "p42"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert parse_graph(proc.stdout) == gen_p42(1)
