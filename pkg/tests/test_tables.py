import pytest

import gordian.tables as tables
from gordian.seifert import KnotInvariants, SeifertMatrix


class TestLoadEntries:
    def test_matrix_entries_re_derived(self):
        entries = tables.load_entries()
        for label in ("3_1", "4_1"):
            entry = entries[label]
            assert entry.matrix is not None
            assert KnotInvariants.from_matrix(entry.matrix) == entry.invariants

    def test_polynomial_only_entry(self):
        entry = tables.load_entries()["9_25"]
        assert entry.matrix is None
        assert entry.note == "no Seifert matrix bundled"

    def test_corrupted_entry_aborts(self, monkeypatch):
        bad = (("3_1", [[-1, 1], [0, -1]], "t-1+t^-1", 0, 3, ""),)
        monkeypatch.setattr(tables, "_RAW", bad)
        with pytest.raises(RuntimeError, match="self-check"):
            tables.load_entries()

    def test_inconsistent_stated_invariants_rejected(self, monkeypatch):
        # a determinant that is not |Delta(-1)| fails validation outright
        bad = (("x", None, "t-1+t^-1", 0, 5, ""),)
        monkeypatch.setattr(tables, "_RAW", bad)
        with pytest.raises(ValueError, match="determinant"):
            tables.load_entries()


class TestCsvImport:
    def test_valid_rows(self):
        rows = tables.parse_table_csv("# comment\n5_2, 2t-3+2t^-1, -2, 7\n\n")
        assert len(rows) == 1
        assert rows[0].label == "5_2"
        assert rows[0].invariants.determinant == 7

    def test_wrong_column_count(self):
        with pytest.raises(ValueError, match="label,polynomial"):
            tables.parse_table_csv("a, b, c\n")

    def test_bad_invariants_named_line(self):
        with pytest.raises(ValueError, match="line 1"):
            tables.parse_table_csv("k, t-1+t^-1, -2, 9\n")
