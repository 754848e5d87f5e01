"""Regenerate the shipped tagger lexicon and lemma exception table.

    python tools/build_lexicon.py

Writes ``src/homeguard/data/lexicon.tsv`` and
``src/homeguard/data/lemma_exceptions.tsv`` from ``tools/wordlists.py``.
"""

import re
from pathlib import Path

import wordlists as W

DATA = Path(__file__).resolve().parents[1] / "src" / "homeguard" / "data"
VOWELS = set("aeiou")
VERSION = "2"


def syllables(word):
    return len(re.findall(r"[aeiouy]+", word.rstrip("e"))) or 1


def doubles(verb):
    if verb in W.FORCE_DOUBLE or verb in W.DOUBLING_EXTRA:
        return True
    if verb in W.NO_DOUBLE:
        return False
    if len(verb) < 3 or syllables(verb) != 1:
        return False
    c1, v, c2 = verb[-3], verb[-2], verb[-1]
    return c1 not in VOWELS and v in VOWELS and c2 not in VOWELS | set("wxy")


def third_person(verb):
    if re.search(r"(s|x|z|ch|sh|o)$", verb):
        return verb + "es"
    if re.search(r"[^aeiou]y$", verb):
        return verb[:-1] + "ies"
    return verb + "s"


def past(verb):
    if verb.endswith("e"):
        return verb + "d"
    if re.search(r"[^aeiou]y$", verb):
        return verb[:-1] + "ied"
    if doubles(verb):
        return verb + verb[-1] + "ed"
    return verb + "ed"


def gerund(verb):
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith(("ee", "ye", "oe")) and verb != "be":
        return verb[:-1] + "ing"
    if doubles(verb):
        return verb + verb[-1] + "ing"
    return verb + "ing"


def plural(noun):
    if noun in W.IRREGULAR_PLURALS:
        return W.IRREGULAR_PLURALS[noun]
    if re.search(r"(s|x|z|ch|sh)$", noun):
        return noun + "es"
    if re.search(r"[^aeiou]y$", noun):
        return noun[:-1] + "ies"
    return noun + "s"


def build():
    entries = {}

    def add(word, tag):
        tags = entries.setdefault(word, [])
        if tag not in tags:
            tags.append(tag)

    irregular = [line.split() for line in W.IRREGULAR.strip().splitlines()]
    irregular_bases = {row[0] for row in irregular}
    exceptions = {}
    for base, vbd, vbn in irregular:
        for tag, form in (("VB", base), ("VBP", base), ("VBZ", third_person(base)), ("VBD", vbd),
                          ("VBN", vbn), ("VBG", gerund(base))):
            add(form, tag)
        for form in {vbd, vbn}:
            if form != base:
                exceptions.setdefault(form, base)
    regular = sorted(set(W.REGULAR_VERBS.split()) - irregular_bases)
    for verb in regular:
        for tag, form in (("VB", verb), ("VBP", verb), ("VBZ", third_person(verb)), ("VBD", past(verb)),
                          ("VBN", past(verb)), ("VBG", gerund(verb))):
            add(form, tag)
    for noun in sorted(set(W.NOUNS.split())):
        add(noun, "NN")
        if noun not in W.UNCOUNTABLE:
            add(plural(noun), "NNS")
    for adj in sorted(set(W.ADJECTIVES.split())):
        add(adj, "JJ")
    for adv in sorted(set(W.ADVERBS.split())):
        add(adv, "RB")
    for word, tags in W.EXPLICIT.items():
        entries[word] = tags.split(",")

    # forms that the suffix rules would get wrong
    exceptions.update({
        "am": "be", "is": "be", "are": "be", "was": "be", "were": "be", "been": "be", "being": "be",
        "'m": "be", "'re": "be", "im": "be",
        "has": "have", "had": "have", "having": "have", "'ve": "have",
        "does": "do", "did": "do", "done": "do", "doing": "do",
        "goes": "go", "dying": "die", "lying": "lie", "tying": "tie", "untying": "untie",
        "'s": "be", "'d": "have", "wo": "will", "ca": "can", "cannot": "can", "'ll": "will", "burnt": "burn",
    })
    return entries, exceptions


def main():
    entries, exceptions = build()
    lines = [f"# HomeGuard tagger lexicon v{VERSION}: word<TAB>TAG1,TAG2,... (rank order)",
             "# generated by tools/build_lexicon.py"]
    lines += [f"{w}\t{','.join(tags)}" for w, tags in sorted(entries.items())]
    (DATA / "lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    ex = ["# irregular and suppletive verb forms: surface<TAB>lemma", "# generated by tools/build_lexicon.py"]
    ex += [f"{k}\t{v}" for k, v in sorted(exceptions.items())]
    (DATA / "lemma_exceptions.tsv").write_text("\n".join(ex) + "\n", encoding="utf-8")
    print(f"{len(entries)} lexicon entries, {len(exceptions)} lemma exceptions")


if __name__ == "__main__":
    main()
