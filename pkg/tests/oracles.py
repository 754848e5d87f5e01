"""Independent reference implementations used as test oracles.

None of these import the code paths they check.
"""

import itertools
import math
import random

from homeguard.rdf.terms import DOUBLE, Iri, Literal, Triple, Variable

NS = "http://rand.example/"


def naive_match(triples, pattern):
    """Scan every triple; return bindings (as dicts) for one pattern."""
    out = []
    for t in triples:
        row = {}
        ok = True
        for pat, term in zip(pattern, (t.subject, t.predicate, t.object)):
            if isinstance(pat, Variable):
                if pat.name in row and row[pat.name] != term:
                    ok = False
                    break
                row[pat.name] = term
            elif pat != term:
                ok = False
                break
        if ok:
            out.append(row)
    return out


def naive_select(triples, variables, patterns):
    """Nested-loop join over full scans; returns a set of projected tuples."""
    triples = list(triples)
    per_pattern = [naive_match(triples, p) for p in patterns]
    result = set()
    for combo in itertools.product(*per_pattern):
        merged = {}
        ok = True
        for row in combo:
            for k, v in row.items():
                if k in merged and merged[k] != v:
                    ok = False
                    break
                merged[k] = v
            if not ok:
                break
        if ok:
            result.add(tuple(merged[v] for v in variables))
    return result


def random_term(rng, pool_size=8, literals=True):
    if literals and rng.random() < 0.25:
        if rng.random() < 0.5:
            return Literal(str(rng.randint(0, 5)), DOUBLE)
        return Literal(rng.choice(["x", "y", "z w", 'q"t', "back\\slash", "line\nbreak", "ümlaut"]))
    return Iri(f"{NS}n{rng.randrange(pool_size)}")


def random_graph_triples(rng, max_triples=200, pool=8, preds=4):
    n = rng.randint(0, max_triples)
    out = set()
    for _ in range(n):
        s = Iri(f"{NS}n{rng.randrange(pool)}")
        p = Iri(f"{NS}p{rng.randrange(preds)}")
        out.add(Triple(s, p, random_term(rng, pool)))
    return out


def random_query(rng, triples, max_patterns=3, pool=8, preds=4):
    """Random BGP whose patterns share variables from a small pool."""
    names = ["a", "b", "c", "d"]
    k = rng.randint(1, max_patterns)
    patterns = []
    triples = list(triples)
    for _ in range(k):
        slots = []
        seed = rng.choice(triples) if triples and rng.random() < 0.5 else None
        for pos in range(3):
            r = rng.random()
            if r < 0.55:
                slots.append(Variable(rng.choice(names)))
            elif seed is not None:
                slots.append((seed.subject, seed.predicate, seed.object)[pos])
            elif pos == 1:
                slots.append(Iri(f"{NS}p{rng.randrange(preds)}"))
            elif pos == 0:
                slots.append(Iri(f"{NS}n{rng.randrange(pool)}"))
            else:
                slots.append(random_term(rng, pool))
        patterns.append(tuple(slots))
    used = sorted({t.name for p in patterns for t in p if isinstance(t, Variable)})
    if not used:
        patterns[0] = (Variable("a"),) + patterns[0][1:]
        used = ["a"]
    rng.shuffle(used)
    variables = used[: rng.randint(1, len(used))]
    return variables, patterns


def cosine_law_km(lat1, lon1, lat2, lon2, radius=6371.0):
    """Great-circle distance by the spherical law of cosines."""
    p1, p2 = math.radians(lat1), math.radians(lat2)
    dl = math.radians(lon2 - lon1)
    c = math.sin(p1) * math.sin(p2) + math.cos(p1) * math.cos(p2) * math.cos(dl)
    return radius * math.acos(max(-1.0, min(1.0, c)))


def exhaustive_nearest(entries, point, k, distance):
    """entries: (iri, lat, lon). Sort every entry by (distance, iri)."""
    scored = sorted(((distance(point[0], point[1], lat, lon), iri) for iri, lat, lon in entries))
    return [iri for _, iri in scored[:k]]


def seeded(seed):
    return random.Random(seed)
