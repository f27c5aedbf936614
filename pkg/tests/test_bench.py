import pytest

from primlink.bench import BYTES_PER_POINT, main, memory_budget, run_bench


def test_single_size_within_budget():
    report = run_bench([1000], d=2, seed=42)
    assert len(report.records) == 1
    rec = report.records[0]
    assert rec.n == 1000
    assert 0 < rec.peak_bytes < memory_budget(1000)
    assert rec.weight > 0


def test_quadratic_time_band():
    report = run_bench([1000, 2000], d=2, seed=42, repeats=9)
    ratio = report.records[1].ms / report.records[0].ms
    assert 3.0 <= ratio <= 5.3, f"time ratio {ratio:.2f}"


def test_checksums_are_deterministic():
    a = run_bench([300, 600], d=3, seed=7, repeats=1)
    b = run_bench([300, 600], d=3, seed=7, repeats=1)
    assert [r.weight for r in a.records] == [r.weight for r in b.records]


def test_memory_linear_fit():
    report = run_bench([2000, 4000, 6000, 8000], d=2, seed=42, repeats=1)
    slope, _, r2 = report.memory_fit()
    assert r2 >= 0.9
    assert slope < BYTES_PER_POINT


def test_sizes_validated():
    with pytest.raises(ValueError):
        run_bench([1])
    with pytest.raises(ValueError):
        run_bench([200, 100])


def test_csv_report(capsys):
    assert main(["--sizes", "50", "100", "--repeats", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "n,ms,peak_bytes,weight"
    assert [line.split(",")[0] for line in out[1:]] == ["50", "100"]
