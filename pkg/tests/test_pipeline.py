import dataclasses
import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from mal2sign.errors import ResourceError, SkeletonMismatch
from mal2sign.lexicon import lookup
from mal2sign.morphology import PosTag
from mal2sign.optimizer import DropPolicy
from mal2sign.pipeline import (
    SOURCE_FINGERSPELL,
    SOURCE_LEXICON,
    load_resources,
    serialize_translation,
    translate,
    translation_to_doc,
)

BUNDLED = Path(__file__).parent.parent / "src" / "mal2sign" / "data"


class TestGoldenCorpus:
    def test_every_case_matches_all_stages(self, resources, golden):
        assert len(golden) >= 20
        for case in golden:
            result = translate(case["text"], resources)
            assert [t.text for t in result.tokens] == case["tokens"], case["text"]
            assert [tt.tag.value for tt in result.tagged] == case["tags"], case["text"]
            assert list(result.retained) == case["retained"], case["text"]
            assert [r.text for r in result.roots] == case["roots"], case["text"]
            assert [[g.gloss, g.source, g.token_index] for g in result.glosses] == case[
                "glosses"
            ], case["text"]


class TestTranslate:
    def test_empty_input(self, resources):
        result = translate("", resources)
        assert result.tokens == ()
        assert result.glosses == ()
        assert result.timeline.duration == 0.0
        assert result.warnings == ()

    def test_roots_parallel_retained(self, resources, golden):
        for case in golden:
            result = translate(case["text"], resources)
            assert len(result.roots) == len(result.retained)

    def test_gloss_trace_invariant(self, resources, golden):
        for case in golden:
            result = translate(case["text"], resources)
            retained = set(result.retained)
            for gloss in result.glosses:
                assert gloss.token_index in retained

    def test_timeline_glosses_follow_gloss_sequence(self, resources):
        result = translate("കുട്ടികൾ ഓടുന്നു", resources)
        assert [c.marker.gloss for c in result.timeline.clips] == [
            g.gloss for g in result.glosses
        ]

    def test_two_sign_duration_law(self, resources):
        result = translate("കുട്ടികൾ ഓടുന്നു", resources)
        child = lookup("കുട്ടി", resources.lexicon)
        run = lookup("ഓടുക", resources.lexicon)
        want = child.duration + resources.timeline_config.transition + run.duration
        assert result.timeline.duration == pytest.approx(want)

    def test_oov_warning(self, resources):
        result = translate("രാമൻ വന്നു", resources)
        assert any(w.code == "oov" for w in result.warnings)

    def test_dropped_characters_warning(self, resources):
        result = translate("ഞാൻ💙", resources)
        assert any(w.code == "dropped-characters" for w in result.warnings)

    def test_determinism(self, resources, golden):
        for case in golden:
            first = serialize_translation(translate(case["text"], resources))
            second = serialize_translation(translate(case["text"], resources))
            assert first == second

    def test_stage_order_drop_uses_surface_forms(self, resources):
        # Dropping by the inflected surface form only works if optimization
        # runs before stemming; the root form must NOT drop anything.
        by_surface = dataclasses.replace(
            resources, drop_policy=DropPolicy(drop_words=frozenset({"കുട്ടികൾ"}))
        )
        result = translate("കുട്ടികൾ ഓടുന്നു", by_surface)
        assert [g.gloss for g in result.glosses] == ["RUN"]

        by_root = dataclasses.replace(
            resources, drop_policy=DropPolicy(drop_words=frozenset({"കുട്ടി"}))
        )
        result = translate("കുട്ടികൾ ഓടുന്നു", by_root)
        assert [g.gloss for g in result.glosses] == ["CHILD", "RUN"]

    def test_tagging_precedes_optimization(self, resources):
        # Tags assigned to surface forms drive dropping: the copula exception
        # fires on the unstemmed word and the optimizer removes it.
        result = translate("അത് ആണ്", resources)
        assert [tt.tag for tt in result.tagged] == [PosTag.PRONOUN, PosTag.COPULA]
        assert [g.gloss for g in result.glosses] == ["IT"]

    @given(text=st.text(max_size=60))
    def test_totality(self, resources, text):
        result = translate(text, resources)
        assert len(result.roots) == len(result.retained)

    def test_fingerspell_uses_the_stemmed_root(self, resources):
        # The accusative suffix is stripped before fingerspelling: the glosses
        # spell the root, not the inflected surface form.
        result = translate("രാമനെ", resources)
        assert [g.gloss for g in result.glosses] == [
            "FS_0D30",
            "FS_0D3E",
            "FS_0D2E",
            "FS_0D7B",
        ]
        assert all(g.source == SOURCE_FINGERSPELL for g in result.glosses)

    def test_lexicon_source_marked(self, resources):
        result = translate("ഞാൻ", resources)
        assert result.glosses[0].source == SOURCE_LEXICON


class TestTranslationDocument:
    def test_parallel_fields(self, resources):
        doc = translation_to_doc(translate("ഞാൻ ഒരു കുട്ടി ആണ്", resources))
        assert doc["format"] == "mal2sign-translation/1"
        assert len(doc["tokens"]) == len(doc["tagged"])
        assert len(doc["roots"]) == len(doc["retained"])
        for gloss in doc["glosses"]:
            assert gloss["token"] in doc["retained"]

    def test_serialization_is_json(self, resources):
        text = serialize_translation(translate("നീ വന്നു!", resources))
        doc = json.loads(text)
        assert doc["timeline"]["format"] == "mal2sign-timeline/1"


class TestLoadResources:
    def test_bundled_defaults(self, resources):
        assert resources.lexicon.skeleton_id == resources.skeleton.id
        assert resources.timeline_config.transition == 0.3
        assert PosTag.DETERMINER in resources.drop_policy.drop_tags

    def test_file_config(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(
            json.dumps(
                {
                    "rules": "rules.json",
                    "lexicon": "lexicon.json",
                    "drop_policy": {"drop_tags": ["COPULA"], "drop_words": ["ഒരു"]},
                    "timeline": {"transition": 0.5, "frame_rate": 24.0},
                }
            ),
            encoding="utf-8",
        )
        for name in ("rules.json", "lexicon.json"):
            (tmp_path / name).write_text(
                (BUNDLED / name).read_text(encoding="utf-8"), encoding="utf-8"
            )
        res = load_resources(config)
        assert res.timeline_config.transition == 0.5
        assert res.drop_policy.drop_words == frozenset({"ഒരു"})

    def test_missing_rules_file(self, tmp_path):
        with pytest.raises(ResourceError) as err:
            load_resources(rules_path=tmp_path / "nope.json")
        assert any("not found" in p for p in err.value.problems)

    def test_skeleton_mismatch_is_its_own_error(self, tmp_path):
        doc = json.loads((BUNDLED / "lexicon.json").read_text(encoding="utf-8"))
        doc["skeleton"] = "someone-elses-skeleton/9"
        bad = tmp_path / "lex.json"
        bad.write_text(json.dumps(doc, ensure_ascii=False), encoding="utf-8")
        with pytest.raises(SkeletonMismatch) as err:
            load_resources(lexicon_path=bad)
        assert err.value.found == "someone-elses-skeleton/9"

    def test_problems_aggregate(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(
            json.dumps({"rules": "missing-a.json", "lexicon": "missing-b.json"}),
            encoding="utf-8",
        )
        with pytest.raises(ResourceError) as err:
            load_resources(config)
        assert len(err.value.problems) == 2

    def test_bad_config_json(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text("{broken", encoding="utf-8")
        with pytest.raises(ResourceError) as err:
            load_resources(config)
        assert any("not valid JSON" in p for p in err.value.problems)

    def test_unknown_drop_tag(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(
            json.dumps(
                {
                    "rules": "rules.json",
                    "lexicon": "lexicon.json",
                    "drop_policy": {"drop_tags": ["VERBISH"]},
                }
            ),
            encoding="utf-8",
        )
        with pytest.raises(ResourceError) as err:
            load_resources(config)
        assert any("VERBISH" in p for p in err.value.problems)
