"""Hand-audited fixtures shared by the module tests and the acceptance suite.

Everything here was written by reading the texts, not by running the package.
"""

import json
from importlib import resources

GOLDEN = json.loads(resources.files("homeguard").joinpath("data", "table1.json").read_text(encoding="utf-8"))
GOLDEN_TEXT = {r["row"]: r["message"] for r in GOLDEN}

# every verbal use of a taxonomy verb in the golden corpus texts;
# "threat" (row 12) and "fight" are nouns and are deliberately absent
GOLDEN_VERBS = {
    1: ["hit"], 2: ["raped"], 3: ["hit"], 4: ["scream", "hit", "attacked"],
    5: ["threatened", "hit"], 6: ["stabbed"],
    7: ["threatening", "screaming", "attacking"], 8: ["hit"],
    9: ["hit", "spat"], 10: ["hit", "knocking", "push"], 11: ["punched", "hit"],
    12: ["kill"], 13: ["broke", "spat", "pushed", "kicked", "bit", "run"],
    14: ["slap", "hitting", "punched", "hit"], 15: ["hitting"],
    16: ["break", "beating", "hit", "screaming", "threatened", "hit"],
}

# taxonomy actions each row must yield
GOLDEN_ACTIONS = {
    1: {"hit"}, 2: {"rape"}, 3: {"hit"}, 4: {"scream", "hit", "attack"},
    5: {"threaten", "hit"}, 6: {"stab"}, 7: {"attack"}, 8: {"hit"},
    9: {"hit", "spit"}, 10: {"hit", "knock"}, 11: {"punch", "hit"}, 12: {"threaten"},
    13: {"break", "spit", "push", "kick", "bite", "run over"}, 14: {"slap"},
    15: {"hit"}, 16: {"beat", "scream", "threaten", "hit"},
}

LEVELS = {
    1: {"threaten", "scold", "scream", "slap", "insult", "stalk", "blackmail"},
    2: {"hit", "beat", "punch", "kick", "push", "choke", "burn", "attack", "bite", "spit", "knock", "break"},
    3: {"rape", "stab", "kill", "run over", "poison"},
}
LEVEL_OF = {lemma: n for n, lemmas in LEVELS.items() for lemma in lemmas}
SERVICES = {1: {"Police"}, 2: {"Hospital", "Lawyer", "Police"}, 3: {"Hospital", "Lawyer", "Police", "NGO"}}

# (past-tense predicate, base-form predicate) for each taxonomy verb
PREDICATES = {
    "threaten": ("threatened me", "threaten me"),
    "scold": ("scolded me", "scold me"),
    "scream": ("screamed at me", "scream at me"),
    "slap": ("slapped me", "slap me"),
    "insult": ("insulted me", "insult me"),
    "stalk": ("stalked me", "stalk me"),
    "blackmail": ("blackmailed me", "blackmail me"),
    "hit": ("hit me", "hit me"),
    "beat": ("beat me", "beat me"),
    "punch": ("punched me", "punch me"),
    "kick": ("kicked me", "kick me"),
    "push": ("pushed me", "push me"),
    "choke": ("choked me", "choke me"),
    "burn": ("burned me", "burn me"),
    "attack": ("attacked me", "attack me"),
    "bite": ("bit me", "bite me"),
    "spit": ("spat on me", "spit on me"),
    "knock": ("knocked me down", "knock me down"),
    "break": ("broke my arm", "break my arm"),
    "rape": ("raped me", "rape me"),
    "stab": ("stabbed me", "stab me"),
    "kill": ("killed my dog", "kill my dog"),
    "run over": ("ran me over", "run me over"),
    "poison": ("poisoned me", "poison me"),
}
PAST = {k: v[0] for k, v in PREDICATES.items()}
