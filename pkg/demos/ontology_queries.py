"""Ask the shipped ontology a few questions with the SPARQL subset.

Run with:  python3 demos/ontology_queries.py
"""

from homeguard.triage import default_taxonomy

QUERIES = {
    "violence terms and their level": (
        "SELECT ?lemma ?level WHERE { ?t rdfs:subClassOf hg:Violence . ?t hg:lemma ?lemma . "
        "?t hg:hasCrimeLevel ?level }"
    ),
    "services attached to each level": "SELECT ?level ?svc WHERE { ?level hg:hasService ?svc }",
    "NGOs in the directory": "SELECT ?name ?phone WHERE { ?s a hg:NGO . ?s hg:name ?name . ?s hg:phone ?phone }",
    "what does a stabbing call for": (
        "SELECT ?svc WHERE { hg:stab hg:hasCrimeLevel ?l . ?l hg:hasService ?svc }"
    ),
}


def short(term):
    text = getattr(term, "lexical", None) or term.value
    return text.rsplit("#", 1)[-1]


def main():
    taxonomy = default_taxonomy()
    print(f"{len(taxonomy.graph)} triples loaded\n")
    for title, query in QUERIES.items():
        rows = taxonomy.query(query)
        print(f"-- {title} ({len(rows)} rows)")
        for row in sorted(rows, key=lambda r: [short(v) for v in r.values()]):
            print("   " + "  ".join(f"{k}={short(v)}" for k, v in row.items()))
        print()

    print("-- terms per level")
    for n in (1, 2, 3):
        print(f"   Level{n}: {', '.join(taxonomy.lemmas_at(n))}  ->  {sorted(taxonomy.services_for_level(n))}")


if __name__ == "__main__":
    main()
