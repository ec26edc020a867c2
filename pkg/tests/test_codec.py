import random

import pytest

from mst3herm import codec
from mst3herm.errors import BadMessage, ParseError, VersionMismatch
from mst3herm.hgroup import S, random_element
from mst3herm.mst3 import encrypt, keygen


def test_key_and_ciphertext_round_trip(toy3, rng):
    pk, sk = keygen(toy3, rng)
    assert codec.parse_public_key(codec.serialize_public_key(pk)) == pk
    assert codec.parse_secret_key(codec.serialize_secret_key(sk)) == sk
    ct = encrypt(pk, random_element(toy3.field, rng, "any"), rng=rng)
    assert codec.parse_ciphertext(codec.serialize_ciphertext(ct)) == ct


def test_paper_key_round_trip(paper_keys):
    pk, sk = paper_keys
    text = codec.serialize_public_key(pk)
    assert text.startswith(codec.HEADER + "\n")
    assert codec.parse_public_key(text) == pk
    assert codec.parse_secret_key(codec.serialize_secret_key(sk)) == sk


def test_serialization_is_deterministic(toy3):
    a = codec.serialize_public_key(keygen(toy3, random.Random(1))[0])
    b = codec.serialize_public_key(keygen(toy3, random.Random(1))[0])
    assert a == b


def test_message_forms(F27):
    x = S(F27.generator, F27.gen_pow(2), F27.gen_pow(3))
    assert codec.parse_message("a^1,a^2,a^3", F27) == x
    assert codec.parse_message("(010000, 001000, 000100)", F27) == x
    assert codec.parse_message(codec.serialize_message(x)) == x
    with pytest.raises(BadMessage):
        codec.parse_message("0,a^2,a^3", F27)
    with pytest.raises(ParseError):
        codec.parse_message("a^1,a^2", F27)
    with pytest.raises(ParseError):
        codec.parse_message("a^1,a^2,a^3")


def test_header_and_garbage(toy3, rng):
    pk, _ = keygen(toy3, rng)
    text = codec.serialize_public_key(pk)
    with pytest.raises(VersionMismatch):
        codec.parse_public_key(text.replace("v1", "v9", 1))
    with pytest.raises(ParseError):
        codec.parse_public_key("")
    lines = text.splitlines()
    lines[5] = "(12,zz,01)"
    with pytest.raises(ParseError) as info:
        codec.parse_public_key("\n".join(lines))
    assert info.value.line is not None


def test_truncated_ciphertext(toy3, rng):
    pk, _ = keygen(toy3, rng)
    ct = encrypt(pk, random_element(toy3.field, rng, "any"), rng=rng)
    text = codec.serialize_ciphertext(ct)
    with pytest.raises(ParseError):
        codec.parse_ciphertext("\n".join(text.splitlines()[:-1]))


def test_selftest_report(paper):
    checks = codec.run_fixture_checks(paper)
    statuses = {c.status for c in checks}
    assert codec.FAILED not in statuses
    labels = {c.label: c.status for c in checks}
    assert labels["table2.w2.w3_nonzero"] == codec.CORRECTED
    assert labels["step18.message"] == codec.CONFIRMED
    report = codec.render_report(checks)
    assert report.splitlines()[-1].startswith("summary ")


def test_missing_sections_are_skipped(tmp_path):
    text = codec.default_fixture_path().read_text(encoding="utf-8")
    kept, skipping = [], False
    for line in text.splitlines():
        if line.startswith("G "):
            skipping = True
        elif skipping and not line[:1] in "(0123456789~" and not line.startswith("S("):
            skipping = False
        if not skipping:
            kept.append(line)
    fs = codec.parse_fixtures("\n".join(kept))
    assert fs.g1_printed is None
    checks = codec.run_fixture_checks(fs)
    assert any(c.status == codec.SKIPPED for c in checks)
    assert not any(c.status == codec.FAILED for c in checks)


def test_broken_fixture_reports_failed_without_raising(paper):
    import dataclasses
    fs = dataclasses.replace(paper, traces={"step17": [("000001", "000000")]})
    checks = codec.run_fixture_checks(fs)
    assert any(c.label == "step17" and c.status == codec.FAILED for c in checks)


def test_fixture_env_override(monkeypatch, tmp_path):
    p = tmp_path / "fx.txt"
    p.write_text(codec.default_fixture_path().read_text(encoding="utf-8"), encoding="utf-8")
    monkeypatch.setenv(codec.FIXTURE_ENV, str(p))
    assert codec.default_fixture_path() == p
