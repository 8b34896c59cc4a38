from sturmpal.bench import BenchRow, doubling_lengths, growth_per_doubling, run_bench, workload


def test_doubling_lengths():
    assert doubling_lengths(10**5, 10**6) == [100000, 200000, 400000, 800000, 1000000]


def test_workload_hits_target():
    lw = workload(50_000)
    assert abs(len(lw.ultimate) - 50_000) < 100


def test_growth_is_relative_to_linear():
    rows = [BenchRow("x", 100, 1.0), BenchRow("x", 400, 4.0), BenchRow("x", 600, 9.0)]
    g = growth_per_doubling(rows, "x")
    assert abs(g[0] - 2.0) < 1e-12
    assert abs(g[1] - 3.0) < 1e-12


def test_run_bench_rows():
    rows = run_bench([20_000, 40_000], repeat=1)
    assert len(rows) == 2 * len({r.backend for r in rows})
    assert all(r.seconds > 0 for r in rows)
