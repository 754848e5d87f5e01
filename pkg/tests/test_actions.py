import pytest

from homeguard.actions import (
    ActionExtractor,
    CatenativePolicy,
    Policy,
    Realization,
    Subject,
    classify_realization,
    default_extractor,
    extract_actions,
    extract_verb_groups,
    resolve_subject,
)
from homeguard.text import analyze_sentence, run_filters
from homeguard.triage import default_taxonomy

from fixtures import GOLDEN_ACTIONS, GOLDEN_TEXT

GOLDEN = GOLDEN_TEXT


def actions(text):
    return extract_actions(run_filters(text))


def lemmas(text):
    return {m.lemma for m in actions(text)}


def taxonomy_lemmas(text):
    return lemmas(text) & set(default_taxonomy().canonicals)


def groups(text):
    s = analyze_sentence(text)
    return [g.surface(s.text) for g in extract_verb_groups(s)]


# --- verb groups --------------------------------------------------------------

def test_group_catenative_run():
    assert groups("He kept attacking me") == ["kept attacking"]


def test_group_particle_after_object():
    assert groups("He tried to run me over") == ["tried", "run … over"]


def test_group_adjacent_particle():
    assert groups("She threw out my clothes") == ["threw out"]


def test_no_verb_no_group():
    assert groups("Nobody here in my home") == []


def test_groups_accept_raw_tokens():
    s = analyze_sentence("He has been hitting me")
    [g] = extract_verb_groups(s.tokens)
    assert [t.surface for t in g.verbs] == ["has", "been", "hitting"]
    assert g.finite and not g.passive


# --- subjects ------------------------------------------------------------------

def subject_of(text, verb):
    s = analyze_sentence(text)
    for clause in s.clauses:
        for g in extract_verb_groups(list(clause.tokens)):
            if any(t.surface == verb for t in g.verbs):
                return resolve_subject(g, clause)
    raise AssertionError(verb)


def test_reporter_subject():
    assert subject_of("I kept trying to push him away", "kept") is Subject.REPORTER


def test_other_subject():
    assert subject_of("He hit me", "hit") is Subject.OTHER


def test_reporter_carries_into_parenthesis():
    text = "I only ever fought back once (punched her in the arm)."
    assert all(m.lemma != "punch" for m in actions(text))
    cands = default_extractor().candidates(run_filters(text))
    punch = [m for m, _ in cands if m.lemma == "punch"]
    assert punch and punch[0].subject is Subject.REPORTER


def test_passive_agent_is_subject():
    assert lemmas("I was hit by my husband.") == {"hit"}
    [m] = [m for m in actions("I was hit by my husband.")]
    assert m.subject is Subject.OTHER


# --- realization ---------------------------------------------------------------------

def realization(text, lemma):
    [s] = run_filters(text)
    return classify_realization(s, lemma)


def test_threat_to_kill():
    text = "My boyfriend gave the threat to kill me."
    assert realization(text, "kill") is Realization.UNREALIZED
    assert realization(text, "threaten") is Realization.REALIZED
    assert lemmas(text) == {"threaten"}


def test_tried_to_run_over_is_attempted():
    assert realization("Once he even tried to run me over.", "run over") is Realization.ATTEMPTED
    assert "run over" in lemmas("Once he even tried to run me over.")


def test_began_hitting_is_realized():
    assert realization("She began hitting me.", "hit") is Realization.REALIZED


def test_block_policy():
    assert "hit" not in lemmas("He wants to hit me.")
    assert "hit" not in lemmas("He stopped hitting me.")


def test_demote_policy():
    assert lemmas("He threatened to kill me.") == {"threaten"}


def test_unlisted_matrix_promotes():
    assert CatenativePolicy().policy("zorble") is Policy.PROMOTE


def test_custom_policy_changes_outcome():
    blocking = ActionExtractor(policy=CatenativePolicy({"begin": Policy.BLOCK}))
    assert "hit" not in {m.lemma for m in blocking.extract(run_filters("She began hitting me."))}


def test_bare_infinitive_unrealized():
    assert "kill" not in lemmas("To kill is wrong.")


def test_light_verb_make_threats():
    assert "threaten" in lemmas("He made threats against my family.")


# --- filters reach the extractor ------------------------------------------------------

@pytest.mark.parametrize(
    "text",
    [
        "Will he kill me?",
        "He will kill me.",
        "He didn't hit me.",
        'She said "I will hit you" and left.',
        "I hit him.",
        "We kicked the door.",
    ],
)
def test_filtered_text_yields_no_taxonomy_action(text):
    assert taxonomy_lemmas(text) == set()


def test_clause_scoped_negation():
    assert lemmas("She doesn't give me food properly and hit me every day.") == {"hit"}


# --- golden corpus ------------------------------------------------------------------------

@pytest.mark.parametrize("row", sorted(GOLDEN_ACTIONS))
def test_golden_actions(row):
    assert taxonomy_lemmas(GOLDEN[row]) == GOLDEN_ACTIONS[row]


def test_row1_is_hit():
    assert taxonomy_lemmas(GOLDEN[1]) == {"hit"}


def test_mentions_carry_positions():
    for m in actions(GOLDEN[13]):
        assert m.lemma == m.lemma.lower()
        assert m.clause_span[0] <= m.clause_span[1]
        assert m.subject is not Subject.REPORTER
        assert m.realization is not Realization.UNREALIZED


def test_deterministic():
    assert actions(GOLDEN[7]) == actions(GOLDEN[7])
