import subprocess
import sys

import pytest

from orbithop.cli import main
from orbithop.keying import EXAMPLE_KEY_HEX, KeyMaterial, parse_key
from orbithop.keystream import new_generator


@pytest.fixture
def key_file(tmp_path):
    path = tmp_path / "example.key"
    path.write_text(EXAMPLE_KEY_HEX + "\n")
    return path


def test_inspect_key(key_file, capsys):
    assert main(["inspect-key", "--key-file", str(key_file)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("maps: 8")
    assert lines[1].split("\t")[1:6] == ["Seed", "Offset", "#Settles", "#Orbits", "#Samples"]
    rows = [l.split("\t") for l in lines[2:10]]
    assert len(rows) == 8
    assert rows[0][1:6] == ["0.0012391499", "0.00001499", "135", "11", "11"]
    assert rows[7][1:6] == ["0.003265379", "0.000039678", "114", "19", "7"]
    assert lines[-1] == "bytes per round: 866"


def test_keygen(tmp_path):
    out = tmp_path / "k.key"
    assert main(["keygen", "--maps", "3", "--out", str(out)]) == 0
    m, _ = parse_key(KeyMaterial.from_hex(out.read_text()))
    assert m == 3


def test_keygen_bad_map_count():
    with pytest.raises(SystemExit) as exc:
        main(["keygen", "--maps", "9"])
    assert exc.value.code == 2


def test_keystream_raw_and_hex(key_file, tmp_path, capsys):
    raw = tmp_path / "ks.bin"
    assert main(["keystream", "--key-file", str(key_file), "--count", "100", "--out", str(raw)]) == 0
    expected = new_generator(KeyMaterial.from_hex(EXAMPLE_KEY_HEX)).next_bytes(100)
    assert raw.read_bytes() == expected
    assert main(["keystream", "--key-file", str(key_file), "--count", "100", "--hex"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [len(l) for l in lines] == [64, 64, 64, 8]
    assert bytes.fromhex("".join(lines)) == expected
    assert "".join(lines) == "".join(lines).lower()


def test_keystream_hex_across_blocks(key_file, capsys):
    n = (1 << 16) + 40
    assert main(["keystream", "--key-file", str(key_file), "--count", str(n), "--hex"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert all(len(l) == 64 for l in lines[:-1])
    assert len(bytes.fromhex("".join(lines))) == n


def test_keystream_zero(key_file, tmp_path):
    out = tmp_path / "empty"
    assert main(["keystream", "--key-file", str(key_file), "--count", "0", "--out", str(out)]) == 0
    assert out.read_bytes() == b""


def test_encrypt_decrypt_files(key_file, tmp_path):
    plain = tmp_path / "plain.txt"
    plain.write_bytes(b"It was the best of times, it was the worst of times.\n" * 3000)
    ct, back = tmp_path / "ct.bin", tmp_path / "back.txt"
    assert main(["encrypt", "--key-file", str(key_file), "--in", str(plain), "--out", str(ct)]) == 0
    assert ct.read_bytes() != plain.read_bytes()
    assert main(["decrypt", "--key-file", str(key_file), "--in", str(ct), "--out", str(back)]) == 0
    assert back.read_bytes() == plain.read_bytes()


def test_encrypt_via_stdio(key_file):
    data = b"hello, stdin" * 100
    run = lambda d: subprocess.run(
        [sys.executable, "-m", "orbithop", "encrypt", "--key-file", str(key_file), "--in", "-", "--out", "-"],
        input=d, capture_output=True, check=True).stdout
    ct = run(data)
    assert len(ct) == len(data) and ct != data
    assert run(ct) == data


def test_bad_key_file(tmp_path, capsys):
    bad = tmp_path / "bad.key"
    bad.write_text("1B 00")
    assert main(["inspect-key", "--key-file", str(bad)]) == 1
    assert "orbithop inspect-key:" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["inspect-key", "--key-file", "/nonexistent/key"]) == 1


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["keystream", "--count", "5"])
    assert exc.value.code == 2


def test_analyze(tmp_path, capsys):
    data = tmp_path / "d.bin"
    data.write_bytes(bytes(range(256)) * 20)
    csv = tmp_path / "h.csv"
    assert main(["analyze", "--in", str(data), "--csv", str(csv)]) == 0
    out = capsys.readouterr().out
    assert "chi-square: 0.000" in out and "pass" in out
    rows = csv.read_text().splitlines()
    assert rows[0] == "byte,count" and rows[1] == "0,20" and len(rows) == 257


def test_analyze_small_input(tmp_path, capsys):
    data = tmp_path / "d.bin"
    data.write_bytes(b"AAAA")
    assert main(["analyze", "--in", str(data)]) == 0
    out = capsys.readouterr().out
    assert "chi-square: skipped" in out and "monobit/runs: skipped" in out


def test_custom_bank(key_file, tmp_path, capsys):
    bank = tmp_path / "bank.txt"
    bank.write_text("logistic 3.99\nchebyshev-unit 2\n")
    assert main(["inspect-key", "--key-file", str(key_file), "--bank", str(bank)]) == 0
    assert "(no bank entry)" in capsys.readouterr().out
    assert main(["keystream", "--key-file", str(key_file), "--count", "4", "--bank", str(bank)]) == 1


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
