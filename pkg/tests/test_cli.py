import json

import pytest

from rauzyveech import cli
from rauzyveech.cache import Cache, cache_key


@pytest.fixture
def run(tmp_path, capsys):
    cache_dir = tmp_path / "cache"

    def _run(*argv):
        code = cli.main([*argv, "--cache-dir", str(cache_dir)])
        out = capsys.readouterr()
        return code, out.out, out.err

    _run.cache_dir = cache_dir
    return _run


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_stratum_from_file(run, tmp_path):
    f = write(tmp_path, "tau6.txt", "1 2 3 4 5 6\n6 3 2 5 4 1\n")
    code, out, _ = run("stratum", f)
    assert code == 0 and out.strip() == "H(4)^odd"


def test_stratum_family_json(run):
    code, out, _ = run("stratum", "--family", "sigma-d", "--n", "8", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["name"] == "H(6)^even" and rep["cached"] is False


def test_parse_errors(run, tmp_path):
    assert run("stratum", write(tmp_path, "one.txt", "A B C\n"))[0] == 2
    assert run("stratum", write(tmp_path, "len.txt", "A B C\nC B\n"))[0] == 2
    assert run("stratum", str(tmp_path / "missing.txt"))[0] == 2
    assert run("stratum")[0] == 2


def test_invalid_input(run, tmp_path):
    code, _, err = run("stratum", write(tmp_path, "red.txt", "A B C\nA C B\n"))
    assert code == 3 and "irreducib" in err
    code, _, err = run("stratum", write(tmp_path, "deg.txt", "A B C\nC B A\n"))
    assert code == 3 and "condition" in err
    assert run("stratum", write(tmp_path, "multi.txt", "A B C\nA B D\n"))[0] == 3


def test_class_and_budget(run, tmp_path):
    f = write(tmp_path, "h4.txt", "A B C D\nD C B A\n")
    code, out, _ = run("class", f, "--json", "--list")
    rep = json.loads(out)
    assert code == 0 and rep["size"] == 7 and len(rep["vertices"]) == 7
    assert run("class", "--family", "tau-d", "--n", "6", "--max-class-size", "10")[0] == 4


def test_closure_tau6(run):
    code, out, _ = run("closure", "--family", "tau-d", "--n", "6", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["size"] == 36
    assert rep["vectors"] == sorted(rep["vectors"], key=lambda s: int(s[::-1], 2))


def test_certificate(run, tmp_path):
    out_file = tmp_path / "cert.txt"
    code, out, _ = run("certificate", "--family", "tau-minimal", "--n", "3",
                       "--target", "0,0,-1,1,0,0", "--out", str(out_file))
    assert code == 0
    assert out_file.read_text().startswith("# omega-closure certificate")
    code, _, _ = run("certificate", "--family", "tau-d", "--n", "6", "--target", "5,0,0,0,0,0")
    assert code == 1
    assert run("certificate", "--family", "tau-d", "--n", "6", "--target", "1,2")[0] == 2


def test_cache_hit_matches_miss(run):
    argv = ("class", "--family", "tau-d", "--n", "7", "--json", "--list")
    c1, miss, _ = run(*argv)
    c2, hit, _ = run(*argv)
    a, b = json.loads(miss), json.loads(hit)
    assert c1 == c2 == 0 and a.pop("cached") is False and b.pop("cached") is True
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_cache_files_are_complete(run):
    run("stratum", "--family", "tau-d", "--n", "6")
    files = list(run.cache_dir.iterdir())
    assert files and all(p.suffix == ".json" for p in files)
    assert all(len(p.stem) == 64 for p in files)
    for p in files:
        json.loads(p.read_text())


def test_cache_ignores_corrupt_entry(tmp_path):
    c = Cache(tmp_path)
    c.put("op", {"x": 1}, {"v": 2})
    assert c.fetch("op", {"x": 1}, lambda: {"v": 3}) == ({"v": 2}, True)
    c.path(cache_key("op", {"x": 1})).write_text("{not json")
    assert c.fetch("op", {"x": 1}, lambda: {"v": 3}) == ({"v": 3}, False)


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("RAUZYVEECH_CACHE", str(tmp_path / "env"))
    assert Cache().root == tmp_path / "env"


def test_verify_listing_suite_reports_the_sigma8_mismatch(run):
    code, out, _ = run("verify", "appendix", "--json")
    rep = json.loads(out)
    status = {c["ref"]: c["status"] for c in rep["claims"]}
    assert status["ns-list-tau6"] == "verified"
    assert status["ns-list-sigma8"] == "failed"
    assert status["ns-list-sigma8-source"] == "verified"
    assert code == 1


def test_verify_extension_passes(run):
    code, out, _ = run("verify", "extension", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["failed"] == 0


def test_deterministic_output(run):
    argv = ("closure", "--family", "sigma-d", "--n", "8", "--json")
    a = json.loads(run(*argv)[1])
    for p in run.cache_dir.iterdir():
        p.unlink()
    b = json.loads(run(*argv)[1])  # recomputed after wiping the cache
    assert a == b
