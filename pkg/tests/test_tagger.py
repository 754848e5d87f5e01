import re
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homeguard.errors import LexiconFormatError
from homeguard.tagger import (
    TAGS,
    VERB_TAGS,
    Tagger,
    corpus_accuracy,
    default_lexicon,
    load_lexicon,
    load_minicorpus,
    tag_text,
    tokenize,
)
from homeguard.text import split_sentences

from fixtures import GOLDEN_TEXT, GOLDEN_VERBS

GOLDEN = GOLDEN_TEXT


def surfaces(text):
    return [t.surface for t in tokenize(text)]


def tags(text):
    return [t.tag for t in tag_text(text)]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("didn't", ["did", "n't"]),
        ("she'd flip", ["she", "'d", "flip"]),
        ("run me over", ["run", "me", "over"]),
        ("well-known", ["well-known"]),
        ("I'm here", ["I", "'m", "here"]),
    ],
)
def test_tokenize(text, expected):
    assert surfaces(text) == expected


def test_token_offsets():
    text = "He didn't hit   me."
    toks = tokenize(text)
    assert all(text[t.start:t.end] == t.surface for t in toks)
    assert all(a.start < b.start for a, b in zip(toks, toks[1:]))


def test_he_hit_me():
    assert tags("He hit me") == ["PRP", "VBD", "PRP"]


def test_unknown_ing():
    assert "hitting" not in Tagger(load_lexicon_from({"he": "PRP"})).lexicon
    assert Tagger(load_lexicon_from({"he": "PRP"})).tag(tokenize("hitting"))[0].tag == "VBG"


def test_threat_noun_kill_verb():
    toks = {t.surface: t.tag for t in tag_text("My boyfriend gave the threat to kill me")}
    assert toks["threat"] == "NN"
    assert toks["kill"] == "VB"
    assert toks["gave"] == "VBD"


def test_unknown_capitalized_is_proper():
    toks = tag_text("Then Zorblat hit me")
    assert toks[1].tag == "NNP"


def load_lexicon_from(entries):
    from homeguard.tagger import TagLexicon

    return TagLexicon({k: v.split(",") for k, v in entries.items()})


def test_load_lexicon(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("# comment\nhit\tVBD,VB,NN\nme\tPRP\nhe\tPRP\n", encoding="utf-8")
    lex = load_lexicon(p)
    assert len(lex) == 3
    assert lex.tags("HIT") == ("VBD", "VB", "NN")


def test_load_lexicon_merges_duplicates(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("cut\tVBD\ncut\tNN,VBD\n", encoding="utf-8")
    assert load_lexicon(p).tags("cut") == ("VBD", "NN")


def test_load_lexicon_missing_tag(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("hit\tVBD\nme\nhe\tPRP\n", encoding="utf-8")
    with pytest.raises(LexiconFormatError) as err:
        load_lexicon(p)
    assert err.value.line == 2


def test_load_lexicon_unknown_tag(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("hit\tVERB\n", encoding="utf-8")
    with pytest.raises(LexiconFormatError):
        load_lexicon(p)


def test_lexicon_covers_golden_words():
    lex = default_lexicon()
    assert len(lex) > 2500
    for text in GOLDEN.values():
        for tok in tokenize(text):
            if tok.surface.isalpha() and not tok.surface[0].isupper():
                assert tok.norm in lex, tok.surface


@settings(max_examples=150, deadline=None)
@given(st.lists(st.sampled_from(sorted(default_lexicon().entries)[:400] + ["zorp", "Blick", "42", "!"]), min_size=1, max_size=12))
def test_total_and_deterministic(words):
    text = " ".join(words)
    first = tag_text(text)
    assert first == tag_text(text)
    assert all(t.tag in TAGS for t in first)


def test_minicorpus_accuracy():
    corpus = load_minicorpus(resources.files("homeguard").joinpath("data", "minicorpus.txt"))
    assert len(corpus) >= 200
    assert corpus_accuracy(corpus) >= 0.90


@pytest.mark.parametrize("row", sorted(GOLDEN_VERBS))
def test_golden_verb_recall(row):
    found = []
    for s in split_sentences(GOLDEN[row]):
        for tok in s.tokens:
            if tok.surface in set(GOLDEN_VERBS[row]) and re.fullmatch(r"[a-z]+", tok.surface):
                assert tok.tag in VERB_TAGS, (tok.surface, tok.tag, s.raw)
                found.append(tok.surface)
    assert sorted(found) == sorted(GOLDEN_VERBS[row])
