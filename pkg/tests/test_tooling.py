import csv
import io
import sys

import pytest

from vrle import bench, cli
from vrle.bench import BenchConfig, BenchmarkRecord, measure_bytes, measure_file, run_bench
from vrle.container import compress


@pytest.fixture
def corpus(tmp_path):
    root = tmp_path / "corpus"
    root.mkdir()
    (root / "text.txt").write_bytes(b"to be or not to be, that is the question\n" * 40)
    (root / "zeros.bin").write_bytes(bytes(5000))
    (root / "empty").write_bytes(b"")
    return root


def test_record_formulas():
    r = BenchmarkRecord("alice29.txt", "proposed", 1000, 430)
    assert r.relative_pct == pytest.approx(43.0)
    assert r.bps == pytest.approx(3.44)
    same = BenchmarkRecord("x", "baseline", 777, 777)
    assert same.relative_pct == 100.0 and same.bps == 8.0


def test_measure_verifies(tmp_path):
    path = tmp_path / "f.bin"
    path.write_bytes(b"abracadabra" * 10)
    for codec in ("proposed", "baseline"):
        rec = measure_file(path, codec)
        assert rec.verified and rec.original_bytes == 110


def test_measure_flags_mismatch(monkeypatch):
    monkeypatch.setitem(bench.CODECS, "proposed", (compress, lambda blob: b"wrong"))
    rec = measure_bytes("f", b"data", "proposed")
    assert not rec.verified
    assert "(FAILED)" in bench.to_markdown([rec])


def test_measure_empty():
    with pytest.raises(ValueError):
        measure_bytes("f", b"", "proposed")


def test_run_bench_order_and_summary(corpus):
    records = run_bench(BenchConfig(corpus=corpus))
    assert [(r.file, r.codec) for r in records] == [
        ("text.txt", "proposed"), ("text.txt", "baseline"),
        ("zeros.bin", "proposed"), ("zeros.bin", "baseline"),
    ]
    s = bench.summarize(records, "proposed")
    rows = [r for r in records if r.codec == "proposed"]
    assert s.original_bytes == sum(r.original_bytes for r in rows)
    assert s.mean_relative_pct == pytest.approx(sum(r.relative_pct for r in rows) / 2)
    assert s.total_relative_pct == pytest.approx(100 * s.compressed_bytes / s.original_bytes)


def test_parallel_matches_serial(corpus):
    serial = run_bench(BenchConfig(corpus=corpus))
    parallel = run_bench(BenchConfig(corpus=corpus, jobs=2))
    assert serial == parallel


def test_missing_named_files(corpus):
    with pytest.raises(FileNotFoundError):
        BenchConfig(corpus=corpus, files=("ptt5",)).paths()


def test_improvement():
    assert bench.improvement_pct(862_700, 7_046_600) == pytest.approx(87.76, abs=0.01)


def test_markdown_layout(corpus):
    text = bench.to_markdown(run_bench(BenchConfig(corpus=corpus)))
    lines = text.strip().splitlines()
    assert lines[0].startswith("| file | original [kB] | RLE s. [kB]")
    assert lines[0].rstrip().endswith("impr. [%] |")
    assert lines[-2].startswith("| **all files**")
    assert lines[-1].startswith("| **average per file**")
    assert len(lines) == 2 + 2 + 2


def test_csv_columns(corpus):
    text = bench.to_csv(run_bench(BenchConfig(corpus=corpus, codecs=("baseline",))))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == list(bench.CSV_COLUMNS)
    assert {r["codec"] for r in rows} == {"baseline"}
    assert rows[0]["relative_pct"].count(".") == 1 and len(rows[0]["bps"].split(".")[1]) == 2


class TestCli:
    def test_round_trip(self, tmp_path):
        src, packed, out = tmp_path / "f.txt", tmp_path / "f.vrle", tmp_path / "g.txt"
        src.write_bytes(b"hello hello hello world\n" * 50)
        assert cli.main(["compress", str(src), str(packed)]) == 0
        assert cli.main(["decompress", str(packed), str(out)]) == 0
        assert out.read_bytes() == src.read_bytes()

    def test_inspect(self, tmp_path, capsys):
        packed = tmp_path / "f.vrle"
        packed.write_bytes(compress(b"abraca"))
        assert cli.main(["inspect", str(packed)]) == 0
        assert "byte map entries   4" in capsys.readouterr().out
        assert cli.main(["inspect", "--json", str(packed)]) == 0
        assert '"k": 4' in capsys.readouterr().out

    def test_inspect_non_container(self, tmp_path, capsys):
        path = tmp_path / "plain.txt"
        path.write_bytes(b"just text")
        assert cli.main(["inspect", str(path)]) == cli.EXIT_CORRUPT
        assert "FormatError" in capsys.readouterr().err

    def test_corrupt(self, tmp_path, capsys):
        path = tmp_path / "bad.vrle"
        path.write_bytes(compress(b"abraca")[:-1])
        assert cli.main(["decompress", str(path), str(tmp_path / "o")]) == cli.EXIT_CORRUPT

    def test_missing_file(self, tmp_path, capsys):
        assert cli.main(["compress", str(tmp_path / "nope"), str(tmp_path / "o")]) == cli.EXIT_IO
        assert capsys.readouterr().err

    def test_usage(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["compress", "--bogus"])
        assert exc.value.code == cli.EXIT_USAGE
        with pytest.raises(SystemExit) as exc:
            cli.main([])
        assert exc.value.code == cli.EXIT_USAGE

    def test_bench_md(self, corpus, capsys):
        assert cli.main(["bench", "--corpus", str(corpus), "--codec", "both", "--format", "md"]) == 0
        out = capsys.readouterr().out
        assert "| text.txt |" in out and "**average per file**" in out

    def test_bench_csv_to_file(self, corpus, tmp_path):
        out = tmp_path / "bench.csv"
        assert cli.main(["bench", "--corpus", str(corpus), "--codec", "proposed",
                         "--format", "csv", "--output", str(out)]) == 0
        assert out.read_text().startswith(",".join(bench.CSV_COLUMNS))

    def test_bench_missing_corpus(self, tmp_path):
        assert cli.main(["bench", "--corpus", str(tmp_path / "none")]) == cli.EXIT_IO

    def test_bench_integrity_failure(self, corpus, monkeypatch, capsys):
        monkeypatch.setitem(bench.CODECS, "baseline", (bench.CODECS["baseline"][0], lambda b: b""))
        assert cli.main(["bench", "--corpus", str(corpus), "--codec", "baseline"]) == cli.EXIT_INTEGRITY

    def test_module_entry_point(self, tmp_path):
        import subprocess
        src = tmp_path / "a"
        src.write_bytes(b"abc")
        res = subprocess.run([sys.executable, "-m", "vrle", "compress", str(src), str(tmp_path / "a.vrle")],
                             capture_output=True)
        assert res.returncode == 0
