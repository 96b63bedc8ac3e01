import hashlib
import subprocess
import sys

import numpy as np
import pytest

from rswe.cli import main as cli_main
from rswe.codec import CodecParams, decode, encode_systematic
from rswe.errors import (
    BadParamsError,
    CorruptHeaderError,
    HeaderMismatchError,
    NotEnoughShardsError,
)
from rswe.gf import build_field
from rswe.oracle import naive_interpolate_eval
from rswe.shards import HEADER_SIZE, ShardHeader, decode_blobs, encode_bytes


def header_of(blob):
    return ShardHeader.parse(blob[:HEADER_SIZE])


def test_header_roundtrip():
    h = ShardHeader(m=16, k=1024, n=1536, index=7, file_len=12345, stripe_count=7)
    assert len(h.pack()) == HEADER_SIZE == 30
    assert ShardHeader.parse(h.pack()) == h


def test_header_rejects_corruption():
    h = ShardHeader(m=8, k=2, n=4, index=1, file_len=2, stripe_count=1)
    good = bytearray(h.pack())
    for mutate, exc in [
        (lambda b: b.__setitem__(0, ord("X")), CorruptHeaderError),  # magic
        (lambda b: b.__setitem__(4, 2), CorruptHeaderError),         # version
        (lambda b: b.__setitem__(5, 9), CorruptHeaderError),         # m
        (lambda b: b.__setitem__(14, 200), CorruptHeaderError),      # index >= n
        (lambda b: b.__setitem__(26, 99), CorruptHeaderError),       # stripe count
    ]:
        buf = bytearray(good)
        mutate(buf)
        with pytest.raises(exc):
            ShardHeader.parse(bytes(buf))
    with pytest.raises(CorruptHeaderError):
        ShardHeader.parse(good[:10])


def test_empty_file(kernels):
    shards = encode_bytes(b"", 8, 4, 6)
    assert len(shards) == 6
    for blob in shards:
        assert len(blob) == HEADER_SIZE
        assert header_of(blob).stripe_count == 0
    assert decode_blobs(shards[:4]) == b""


def test_single_stripe_systematic(kernels):
    data = bytes(range(1, 9))  # exactly k * (m/8) bytes with k=4, m=16
    shards = encode_bytes(data, 16, 4, 7)
    assert b"".join(blob[HEADER_SIZE:] for blob in shards[:4]) == data


def test_parity_matches_interpolation_oracle(kernels):
    t = build_field(8)
    data = bytes([0x01, 0x03])
    shards = encode_bytes(data, 8, 2, 4)
    payloads = [blob[HEADER_SIZE:] for blob in shards]
    assert payloads[0] == bytes([0x01])
    assert payloads[1] == bytes([0x03])
    expect = [naive_interpolate_eval([0, 1], [1, 3], x, t) for x in (2, 3)]
    assert expect == [5, 7]
    assert payloads[2] == bytes([expect[0]])
    assert payloads[3] == bytes([expect[1]])


@pytest.mark.parametrize("m,k,n,size", [(8, 5, 11, 1000), (16, 7, 12, 4093)])
def test_any_k_subset_roundtrip(kernels, m, k, n, size):
    rng = np.random.default_rng(size)
    data = rng.bytes(size)
    shards = encode_bytes(data, m, k, n)
    for trial in range(8):
        keep = rng.permutation(n)[: k + int(rng.integers(0, n - k + 1))]
        assert decode_blobs([shards[i] for i in keep]) == data


def test_batch_matches_single_stripe_codec(kernels):
    rng = np.random.default_rng(42)
    m, k, n = 8, 3, 7
    data = rng.bytes(3 * 5)  # five stripes
    shards = encode_bytes(data, m, k, n)
    params = CodecParams(m=m, k=k, n=n)
    message = np.frombuffer(data, dtype=np.uint8)
    for s in range(5):
        stripe = message[s * k:(s + 1) * k].tolist()
        codeword = encode_systematic(stripe, params)
        for j in range(n):
            assert shards[j][HEADER_SIZE + s] == codeword[j]
    # and decoding any k shards equals the per-stripe codec decode
    keep = [6, 2, 4]
    rebuilt = decode_blobs([shards[i] for i in keep])
    for s in range(5):
        pairs = [(j, shards[j][HEADER_SIZE + s]) for j in keep]
        assert list(rebuilt[s * k:(s + 1) * k]) == decode(pairs, params).tolist()


def test_decode_blob_errors(kernels):
    shards = encode_bytes(b"hello world", 8, 3, 6)
    with pytest.raises(NotEnoughShardsError):
        decode_blobs(shards[:2])
    with pytest.raises(NotEnoughShardsError):
        decode_blobs([])
    with pytest.raises(HeaderMismatchError):
        decode_blobs([shards[0], shards[1], shards[1]])
    other = encode_bytes(b"hello world!", 8, 3, 6)
    with pytest.raises(HeaderMismatchError):
        decode_blobs([shards[0], shards[1], other[2]])
    truncated = shards[2][:-1]
    with pytest.raises(CorruptHeaderError):
        decode_blobs([shards[0], shards[1], truncated])


def test_encode_bytes_params():
    with pytest.raises(BadParamsError):
        encode_bytes(b"x", 12, 2, 4)
    with pytest.raises(BadParamsError):
        encode_bytes(b"x", 8, 5, 4)
    with pytest.raises(BadParamsError):
        encode_bytes(b"x", 8, 1, 300)


def test_encoding_is_reproducible(kernels):
    data = np.random.default_rng(1).bytes(10000)
    assert encode_bytes(data, 16, 10, 14) == encode_bytes(data, 16, 10, 14)


@pytest.mark.parametrize("size", [0, 1, 13, 4096, 65536 + 3])
def test_fuzz_roundtrip_sizes(size):
    rng = np.random.default_rng(size + 1)
    data = rng.bytes(size)
    shards = encode_bytes(data, 16, 6, 9)
    keep = rng.permutation(9)[:6]
    assert decode_blobs([shards[i] for i in keep]) == data


# ---- CLI ----

def run_cli(*args):
    return cli_main([str(a) for a in args])


def test_cli_roundtrip(tmp_path, capsys):
    rng = np.random.default_rng(2)
    data = rng.bytes(100_000)
    src = tmp_path / "input.bin"
    src.write_bytes(data)
    out = tmp_path / "shards"
    assert run_cli("encode", src, "--m", 16, "--data", 8, "--shards", 12,
                   "--out", out) == 0
    files = sorted(out.glob("shard_*.rswe"))
    assert len(files) == 12
    keep = list(np.random.default_rng(3).permutation(12)[:8])
    dest = tmp_path / "rebuilt.bin"
    assert run_cli("decode", *[out / f"shard_{i}.rswe" for i in keep],
                   "--out", dest) == 0
    assert dest.read_bytes() == data


def test_cli_decode_trusts_headers_not_filenames(tmp_path):
    src = tmp_path / "input.bin"
    src.write_bytes(b"names lie, headers do not")
    out = tmp_path / "shards"
    run_cli("encode", src, "--m", 8, "--data", 2, "--shards", 5, "--out", out)
    renamed = []
    for i, j in [(0, 0), (3, 1)]:
        target = tmp_path / f"whatever_{j}.bin"
        (out / f"shard_{i}.rswe").rename(target)
        renamed.append(target)
    dest = tmp_path / "rebuilt.bin"
    assert run_cli("decode", *renamed, "--out", dest) == 0
    assert dest.read_bytes() == src.read_bytes()


def test_cli_not_enough_shards_leaves_no_output(tmp_path, capsys):
    src = tmp_path / "input.bin"
    src.write_bytes(b"some data to protect")
    out = tmp_path / "shards"
    run_cli("encode", src, "--m", 8, "--data", 4, "--shards", 6, "--out", out)
    dest = tmp_path / "rebuilt.bin"
    rc = run_cli("decode", *[out / f"shard_{i}.rswe" for i in range(3)],
                 "--out", dest)
    assert rc == 1
    assert not dest.exists()
    err = capsys.readouterr().err
    assert err.strip() and len(err.strip().splitlines()) == 1


def test_cli_bench_deterministic(capsys):
    assert run_cli("bench", "--m", 8, "--erasures", 100, "--seed", 42,
                   "--repeat", 2) == 0
    first = capsys.readouterr().out
    assert run_cli("bench", "--m", 8, "--erasures", 100, "--seed", 42,
                   "--repeat", 2) == 0
    second = capsys.readouterr().out
    line = [ln for ln in first.splitlines() if ln.startswith("decoded sha256")]
    assert line and line == [ln for ln in second.splitlines()
                             if ln.startswith("decoded sha256")]
    for phase in ("tables:", "log_pi:", "coefficients:", "evaluation:", "total:"):
        assert any(ln.startswith(phase) for ln in first.splitlines())


def test_cli_bench_zero_erasures(capsys):
    assert run_cli("bench", "--m", 8, "--erasures", 0, "--repeat", 1) == 0
    out = capsys.readouterr().out
    eval_line = [ln for ln in out.splitlines() if ln.startswith("evaluation:")][0]
    assert float(eval_line.split()[1]) < 0.01


def test_cli_bench_bad_params(capsys):
    assert run_cli("bench", "--m", 7) == 1
    assert "rswe:" in capsys.readouterr().err
    assert run_cli("bench", "--m", 8, "--erasures", 256) == 1


def test_cli_subprocess_smoke(tmp_path):
    src = tmp_path / "f.bin"
    src.write_bytes(b"subprocess round trip")
    proc = subprocess.run(
        [sys.executable, "-m", "rswe", "encode", str(src), "--m", "8",
         "--data", "2", "--shards", "4", "--out", str(tmp_path / "sh")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    proc = subprocess.run(
        [sys.executable, "-m", "rswe", "decode",
         str(tmp_path / "sh" / "shard_3.rswe"),
         str(tmp_path / "sh" / "shard_1.rswe"),
         "--out", str(tmp_path / "g.bin")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (tmp_path / "g.bin").read_bytes() == src.read_bytes()
