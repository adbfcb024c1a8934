"""Tests for the strict b-file reader."""

import pytest

from carlitz.bfile import BFileEntry, BFileFormatError, parse_bfile_lines, read_bfile


def test_parses_data_and_comments():
    lines = [
        "# A114938: Carlitz words over pairs",
        "0 1",
        "1 0",
        "# interior comment",
        "2 2",
        "  3   30  ",
    ]
    got = parse_bfile_lines(lines)
    assert got == [
        BFileEntry(0, 1),
        BFileEntry(1, 0),
        BFileEntry(2, 2),
        BFileEntry(3, 30),
    ]


def test_tabs_and_negative_numbers_parse():
    got = parse_bfile_lines(["-2\t-7", "5\t1"])
    assert got == [BFileEntry(-2, -7), BFileEntry(5, 1)]


def test_empty_input():
    assert parse_bfile_lines([]) == []
    assert parse_bfile_lines(["# only a comment"]) == []


@pytest.mark.parametrize(
    "bad",
    [
        "oops",
        "12",
        "1 2 3",
        "1 2.5",
        "a 3",
        "",
        "   ",
        "1, 2",
    ],
)
def test_malformed_lines_raise(bad):
    with pytest.raises(BFileFormatError) as exc:
        parse_bfile_lines(["0 1", bad])
    assert "line 2" in str(exc.value)


def test_indices_must_strictly_increase():
    with pytest.raises(BFileFormatError):
        parse_bfile_lines(["0 1", "0 2"])
    with pytest.raises(BFileFormatError):
        parse_bfile_lines(["3 1", "2 5"])


def test_read_bfile_from_disk(tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("# header\n0 1\n1 0\n2 2\n", encoding="utf-8")
    assert read_bfile(path) == [BFileEntry(0, 1), BFileEntry(1, 0), BFileEntry(2, 2)]


def test_read_bfile_large_values(tmp_path):
    big = 16438575600
    path = tmp_path / "b.txt"
    path.write_text(f"6 {big}\n", encoding="utf-8")
    assert read_bfile(path) == [BFileEntry(6, big)]
