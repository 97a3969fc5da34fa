import unicodedata

import pytest
from hypothesis import given, strategies as st

from mal2sign.script import (
    GraphemeCluster,
    normalize_text,
    segment_clusters,
    tokenize,
)

VIRAMA = "്"


class TestNormalize:
    def test_nfc_composition(self):
        # KA + EE sign + AA sign composes to KA + OO sign under NFC.
        decomposed = "കോ"
        nt = normalize_text(decomposed)
        assert nt.content == "കോ"
        assert nt.dropped == ()

    def test_whitespace_collapse_and_strip(self):
        nt = normalize_text("  ഞാൻ\t\nഒരു   കുട്ടി ")
        assert nt.content == "ഞാൻ ഒരു കുട്ടി"

    def test_drops_unsupported_and_records_offsets(self):
        nt = normalize_text("ഞാൻ💙X")
        assert nt.content == "ഞാൻX"
        # Offsets index the NFC form before removal: the emoji sits at 3.
        assert nt.dropped == ((3, "💙"),)

    def test_ascii_and_sentence_punctuation_kept(self):
        nt = normalize_text("abc 123 ഞാൻ.?!,")
        assert nt.content == "abc 123 ഞാൻ.?!,"
        assert nt.dropped == ()

    def test_empty_and_space_only(self):
        assert normalize_text("").content == ""
        assert normalize_text(" \t \n ").content == ""

    def test_idempotent(self):
        nt = normalize_text("ക്ഷമ   വേണം!")
        again = normalize_text(nt.content)
        assert again.content == nt.content
        assert again.dropped == ()

    @given(st.text(max_size=80))
    def test_total_and_canonical(self, raw):
        nt = normalize_text(raw)
        content = nt.content
        assert content == unicodedata.normalize("NFC", content)
        assert "  " not in content
        assert content == content.strip()
        for ch in content:
            ok = (
                0x0D00 <= ord(ch) < 0x0D80
                or ch == " "
                or ch in ".,?!"
                or "a" <= ch <= "z"
                or "A" <= ch <= "Z"
                or "0" <= ch <= "9"
            )
            assert ok, f"unexpected {ch!r}"


class TestSegmentClusters:
    def test_conjunct_is_one_cluster(self):
        assert segment_clusters("ക്ക") == [GraphemeCluster("ക്ക", 0, 3)]

    def test_base_plus_marks(self):
        # KU | TTI: the virama glues the two TAs, the vowel signs trail.
        assert [c.text for c in segment_clusters("കുട്ടി")] == ["കു", "ട്ടി"]

    def test_chillu_is_its_own_cluster(self):
        assert [c.text for c in segment_clusters("ഞാൻ")] == ["ഞാ", "ൻ"]

    def test_word_final_virama_stays_attached(self):
        assert [c.text for c in segment_clusters("ആണ്")] == ["ആ", "ണ്"]

    def test_defective_leading_mark(self):
        clusters = segment_clusters("ിക")
        assert [c.text for c in clusters] == ["ി", "ക"]

    def test_empty(self):
        assert segment_clusters("") == []

    def test_triple_conjunct(self):
        # Virama chains keep pulling consonants in: NTAa in one cluster.
        assert [c.text for c in segment_clusters("അവന്റെ")] == ["അ", "വ", "ന്റെ"]

    @given(st.text(max_size=40))
    def test_partition(self, text):
        clusters = segment_clusters(text)
        assert "".join(c.text for c in clusters) == text
        pos = 0
        for c in clusters:
            assert c.text
            assert c.start == pos
            assert text[c.start : c.end] == c.text
            pos = c.end
        assert pos == len(text)


class TestTokenize:
    def test_split_and_strip(self):
        nt = normalize_text("ഞാൻ, നീ!")
        tokens = tokenize(nt)
        assert [t.text for t in tokens] == ["ഞാൻ", "നീ"]
        for t in tokens:
            assert nt.content[t.start : t.end] == t.text

    def test_pure_punctuation_candidate_vanishes(self):
        nt = normalize_text("ഞാൻ ?! നീ")
        assert [t.text for t in tokenize(nt)] == ["ഞാൻ", "നീ"]

    def test_interior_punctuation_survives(self):
        nt = normalize_text("a.b")
        assert [t.text for t in tokenize(nt)] == ["a.b"]

    def test_empty(self):
        assert tokenize(normalize_text("")) == []

    @given(st.text(max_size=80))
    def test_offsets_index_content(self, raw):
        nt = normalize_text(raw)
        last_end = 0
        for t in tokenize(nt):
            assert t.text
            assert " " not in t.text
            assert not t.text.startswith((".", ",", "?", "!"))
            assert not t.text.endswith((".", ",", "?", "!"))
            assert t.start >= last_end
            assert nt.content[t.start : t.end] == t.text
            last_end = t.end
