import json
import random
import unicodedata

import pytest
from hypothesis import given, strategies as st

from mal2sign.errors import DuplicateRuleId, EmptySuffix, MalformedDocument
from mal2sign.morphology import (
    EXCEPTION_MATCH,
    PosTag,
    RuleTable,
    SuffixRule,
    analyze,
    load_rules,
    stem,
)
from mal2sign.script import Token


def tok(text):
    return Token(text, 0, len(text))


def rule_doc(rules, exceptions=None, default_tag=None):
    doc = {"rules": rules}
    if exceptions is not None:
        doc["exceptions"] = exceptions
    if default_tag is not None:
        doc["default_tag"] = default_tag
    return json.dumps(doc, ensure_ascii=False)


def oracle_analyze(word, table):
    """Brute-force reference: scan every rule, longest proper suffix wins,
    equal lengths resolved by smallest rule id; exceptions first."""
    exc = table.exceptions.get(word)
    if exc is not None:
        return exc.tag, EXCEPTION_MATCH
    best = None
    for rule in table.rules:
        if len(rule.suffix) >= len(word) or not word.endswith(rule.suffix):
            continue
        if (
            best is None
            or len(rule.suffix) > len(best.suffix)
            or (len(rule.suffix) == len(best.suffix) and rule.id < best.id)
        ):
            best = rule
    if best is None:
        return table.default_tag, None
    return best.tag, best.id


class TestAnalyze:
    def test_plural_rule(self, rules):
        tt = analyze(tok("കുട്ടികൾ"), rules)
        assert tt.tag is PosTag.NOUN
        assert tt.matched == "R1"
        assert "PLURAL" in tt.features

    def test_present_tense_rule(self, rules):
        tt = analyze(tok("ഓടുന്നു"), rules)
        assert tt.tag is PosTag.VERB
        assert tt.matched == "R4"

    def test_exception_beats_rules(self, rules):
        # The suppletive dative would otherwise hit the R3 dative suffix.
        tt = analyze(tok("എനിക്ക്"), rules)
        assert tt.tag is PosTag.PRONOUN
        assert tt.matched == EXCEPTION_MATCH

    def test_no_match_gets_default(self, rules):
        tt = analyze(tok("കുട്ടി"), rules)
        assert tt.tag is PosTag.UNKNOWN
        assert tt.matched is None

    def test_whole_word_suffix_is_not_proper(self, rules):
        # A word equal to a rule suffix must not match that rule.
        tt = analyze(tok("കൾ"), rules)
        assert tt.matched != "R1"

    def test_tie_break_on_rule_id(self):
        table = load_rules(
            rule_doc(
                [
                    {"id": "X2", "suffix": "os", "replacement": "", "tag": "NOUN"},
                    {"id": "X1", "suffix": "os", "replacement": "o", "tag": "VERB"},
                ]
            )
        )
        tt = analyze(tok("lexos"), table)
        assert tt.matched == "X1"
        assert tt.tag is PosTag.VERB

    def test_longer_suffix_wins_regardless_of_id_order(self):
        table = load_rules(
            rule_doc(
                [
                    {"id": "A", "suffix": "s", "replacement": "", "tag": "NOUN"},
                    {"id": "B", "suffix": "es", "replacement": "", "tag": "VERB"},
                ]
            )
        )
        assert analyze(tok("boxes"), table).matched == "B"


class TestStem:
    def test_strip_and_replace(self, rules):
        tt = analyze(tok("ഓടുന്നു"), rules)
        assert stem(tt, rules).text == "ഓടുക"

    def test_plain_strip(self, rules):
        tt = analyze(tok("കുട്ടികൾ"), rules)
        assert stem(tt, rules).text == "കുട്ടി"

    def test_exception_root(self, rules):
        tt = analyze(tok("വന്നു"), rules)
        assert stem(tt, rules).text == "വരുക"

    def test_unmatched_word_is_its_own_root(self, rules):
        tt = analyze(tok("കുട്ടി"), rules)
        assert stem(tt, rules).text == "കുട്ടി"

    def test_exactly_one_application(self):
        # A recursive stemmer would reduce "baa" to "b"; ours stops after one.
        table = load_rules(
            rule_doc([{"id": "A", "suffix": "a", "replacement": "", "tag": "NOUN"}])
        )
        assert stem(analyze(tok("baa"), table), table).text == "ba"

    def test_length_arithmetic(self, rules):
        for word in ["കുട്ടികൾ", "ഓടുന്നു", "മരത്തിന്", "അവന്റെ"]:
            tt = analyze(tok(word), rules)
            rule = rules.rule_by_id(tt.matched)
            root = stem(tt, rules)
            assert len(root.text) == len(word) - len(rule.suffix) + len(rule.replacement)


MALAYALAM_CPS = [chr(cp) for cp in range(0x0D00, 0x0D80) if unicodedata.name(chr(cp), None)]


class TestLongestMatchOracle:
    def test_oracle_agreement(self, rules):
        rng = random.Random(20260814)
        suffixes = [r.suffix for r in rules.rules]
        for _ in range(1000):
            length = rng.randint(1, 7)
            word = "".join(rng.choice(MALAYALAM_CPS) for _ in range(length))
            if rng.random() < 0.6:
                word += rng.choice(suffixes)
            tt = analyze(tok(word), rules)
            expected_tag, expected_match = oracle_analyze(word, rules)
            assert (tt.tag, tt.matched) == (expected_tag, expected_match), word

    @given(word=st.text(alphabet=st.sampled_from(MALAYALAM_CPS), min_size=1, max_size=10))
    def test_oracle_agreement_property(self, rules, word):
        tt = analyze(tok(word), rules)
        assert (tt.tag, tt.matched) == oracle_analyze(word, rules)


class TestLoadRules:
    def test_bundled_table_loads(self, rules):
        assert len(rules.rules) >= 16
        assert rules.default_tag is PosTag.UNKNOWN
        assert "ഞാൻ" in rules.exceptions

    def test_duplicate_id_rejected(self):
        doc = rule_doc(
            [
                {"id": "R1", "suffix": "a", "replacement": "", "tag": "NOUN"},
                {"id": "R1", "suffix": "b", "replacement": "", "tag": "NOUN"},
            ]
        )
        with pytest.raises(DuplicateRuleId):
            load_rules(doc)

    def test_reserved_exception_id_rejected(self):
        doc = rule_doc([{"id": "exception", "suffix": "a", "replacement": "", "tag": "NOUN"}])
        with pytest.raises(DuplicateRuleId):
            load_rules(doc)

    def test_empty_suffix_rejected(self):
        doc = rule_doc([{"id": "R1", "suffix": "", "replacement": "", "tag": "NOUN"}])
        with pytest.raises(EmptySuffix):
            load_rules(doc)

    @pytest.mark.parametrize(
        "document",
        [
            "not json",
            "[]",
            '{"rules": "nope"}',
            '{"rules": [{"id": "R1", "suffix": "a", "replacement": "", "tag": "NOPE"}]}',
            '{"rules": [{"id": "R1", "suffix": "a", "replacement": "", "tag": "NOUN", "features": "x"}]}',
            '{"rules": [{"suffix": "a", "replacement": "", "tag": "NOUN"}]}',
            '{"rules": [], "exceptions": {"x": {"tag": "NOUN", "root": ""}}}',
            '{"rules": [], "exceptions": {"x": {"tag": "NOUN"}}}',
            '{"rules": [], "exceptions": []}',
        ],
    )
    def test_malformed_documents_rejected(self, document):
        with pytest.raises(MalformedDocument):
            load_rules(document)

    def test_round_trippable_fields(self, rules):
        r1 = rules.rule_by_id("R1")
        assert isinstance(r1, SuffixRule)
        assert r1.suffix == "കൾ"
        assert r1.replacement == ""


class TestTableConstruction:
    def test_match_never_raises_and_agrees_with_oracle_on_ascii(self):
        table = RuleTable(
            rules=(
                SuffixRule("A", "ing", "", PosTag.VERB),
                SuffixRule("B", "ng", "x", PosTag.NOUN),
                SuffixRule("C", "g", "y", PosTag.NOUN),
            )
        )
        assert table.match("sing").id == "A"
        assert table.match("ng").id == "C"  # "ng" itself is not a proper suffix here
        assert table.match("g") is None
        assert table.match("") is None
