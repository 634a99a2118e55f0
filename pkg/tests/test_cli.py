import pytest

from szq.cli import main


def _read(path):
    return path.read_text().strip().splitlines()


def test_recognize_csv(tmp_path):
    out = tmp_path / "r.csv"
    rc = main(["recognize", "--m", "1", "--trials", "3", "--seed", "5",
               "--out", str(out)])
    assert rc == 0
    lines = _read(out)
    assert lines[0].startswith("# szq=")
    assert "rng=mt19937" in lines[0] and "seed=5" in lines[0]
    assert lines[1] == "m,q,trial,ok,total_ms,dlog_ms,draws"
    assert len(lines) == 5
    for row in lines[2:]:
        m, q, trial, ok = row.split(",")[:4]
        assert (m, q, ok) == ("1", "8", "1")


def test_recognize_reproducible(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["recognize", "--m", "1", "--trials", "2", "--seed", "9", "--out", str(a)])
    main(["recognize", "--m", "1", "--trials", "2", "--seed", "9", "--out", str(b)])
    strip = lambda p: [",".join(r.split(",")[:4] + r.split(",")[6:]) for r in _read(p)[2:]]
    assert strip(a) == strip(b)  # same draws column, timing columns excluded


def test_recognize_m_range_and_strategy(tmp_path):
    out = tmp_path / "r.csv"
    rc = main(["recognize", "--m-range", "1:2", "--trials", "1",
               "--strategy", "factored", "--out", str(out)])
    assert rc == 0
    lines = _read(out)
    assert "strategy=factored" in lines[0]
    assert [r.split(",")[0] for r in lines[2:]] == ["1", "2"]


def test_membership_csv(tmp_path):
    out = tmp_path / "mb.csv"
    rc = main(["membership", "--m", "1", "--trials", "4", "--seed", "2",
               "--out", str(out)])
    assert rc == 0
    lines = _read(out)
    assert lines[1] == "m,q,trial,ok,express_us,slp_len"
    assert len(lines) == 6
    for row in lines[2:]:
        cols = row.split(",")
        assert cols[3] == "1"
        assert int(cols[5]) > 0


def test_census_csv(tmp_path):
    out = tmp_path / "c.csv"
    rc = main(["census", "--m", "1", "--out", str(out)])
    assert rc == 0
    lines = _read(out)
    assert lines[1] == "m,q,v1,v2,v4,observed,conjectured,match"
    assert len(lines) == 10  # 8 count vectors at q = 8
    assert all(row.endswith(",1") for row in lines[2:])


def test_census_requires_long_for_q32(tmp_path):
    with pytest.raises(SystemExit):
        main(["census", "--m", "2", "--out", str(tmp_path / "c.csv")])


def test_bench_csv_and_gnuplot(tmp_path):
    out = tmp_path / "b.csv"
    rc = main(["bench", "--m", "1,2", "--trials", "2", "--out", str(out)])
    assert rc == 0
    lines = _read(out)
    assert lines[1] == "m,q,recog_mean_ms,dlog_mean_ms,express_mean_us"
    assert len(lines) == 4
    script = (tmp_path / "b.csv.gnuplot").read_text()
    assert "bench_recognition.png" in script
    assert str(out) in script


def test_two_gens_flag(tmp_path):
    out = tmp_path / "r.csv"
    rc = main(["recognize", "--m", "1", "--trials", "2", "--two-gens",
               "--out", str(out)])
    assert rc == 0
    assert all(r.split(",")[3] == "1" for r in _read(out)[2:])


def test_missing_m_errors():
    with pytest.raises(SystemExit):
        main(["recognize", "--trials", "1"])
