"""Follow one message through every stage of the pipeline.

Run with:  python3 demos/triage_walkthrough.py ["your message"]
"""

import sys

from homeguard.actions import default_extractor
from homeguard.dispatch import assemble_report
from homeguard.text import RawMessage, run_filters
from homeguard.triage import triage

DEFAULT = (
    "He stabbed me in my hand multiple time by a knife during our fight. "
    "Though he felt sorry about this and asked my forgiveness, I don't think that he won't repeat this. "
    "Will he kill me? Please help!"
)


def main(text: str) -> None:
    message = RawMessage(text)

    print("== sentences and verdicts")
    sentences = run_filters(message)
    for s in sentences:
        print(f"[{s.index}] {s.verdict.status.value:<18} {s.text}")
        for c in s.clauses:
            flags = ",".join(f for f, on in (("negated", c.negated), ("quoted", c.quoted)) if on) or "-"
            print(f"      clause {s.clause_text(c)!r:<60} {flags}")

    print("\n== tagged tokens of the first sentence")
    print(" ".join(f"{t.surface}/{t.tag}" for t in sentences[0].tokens))

    print("\n== verb mentions (kept or dropped)")
    for mention, dropped in default_extractor().candidates(sentences):
        print(f"  {mention.lemma:<10} {mention.surface!r:<24} {mention.subject.value:<8} "
              f"{mention.realization.value:<10} {dropped or 'kept'}")

    print("\n== triage")
    result = triage(message)
    for a in result.actions:
        print(f"  {a.lemma} -> {a.level.name}")
    print(f"  max level: {result.max_level.name if result.max_level else None}")
    print(f"  services:  {sorted(result.service_types)}")

    print("\n== nearest services around Dhaka")
    report = assemble_report(message, result, location=(23.78, 90.41), k=1)
    for kind, services in report.dispatched.items():
        s = services[0]
        print(f"  {kind:<8} {s.name} ({s.phone})")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else DEFAULT)
