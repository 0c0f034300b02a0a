"""Independent reference values for golden_run.txt.

Recomputes the adhoc and context scenarios for topic 001 with exact rational
arithmetic: evidence is counted with a separate tokenizer, consensus is done by
adding evidence counts, and recommendation by direct substitution.
"""
import re
from fractions import Fraction as F
from pathlib import Path

here = Path(__file__).parent
data = here.parent.parent / "data"

stop = {l.strip() for l in (data / "stopwords.txt").read_text().splitlines()
        if l.strip() and not l.startswith("#")}
senses = {}
for l in (data / "ambiguity_lexicon.tsv").read_text().splitlines():
    if l.strip() and not l.startswith("#"):
        term, n = l.split("\t")
        senses[term.strip().lower()] = int(n)

reps = {}
for line in (here / "isearch_001.topic").read_text().splitlines():
    m = re.match(r"Representation (\d):(.*)", line)
    if m:
        reps[int(m.group(1))] = m.group(2)


def evidence(text):
    toks = [t for t in re.findall(r"[A-Za-z0-9\x80-\U0010ffff]+", text.lower()) if t not in stop]
    return len(toks), sum(1 for t in toks if senses.get(t, 0) > 1)


def opinion(r, s):
    k = F(r + s + 2)
    return (r / k, s / k, 2 / k)


def recommend(t, x):
    return (t[0] * x[0], t[0] * x[1], t[1] + t[2] + t[0] * x[2])


half = F(1, 2)
fmt = lambda q: "\t".join(f"{float(v):.6f}" for v in q)
E = lambda q: q[0] + half * q[2]

r1, s1 = evidence(reps[1])
r5, s5 = evidence(reps[5])
adhoc = opinion(r1 + r5, s1 + s5)
print("adhoc", (r1, s1), (r5, s5), fmt(adhoc + (half, E(adhoc))))
context = recommend(opinion(*evidence(reps[2])), opinion(*evidence(reps[4])))
print("context", evidence(reps[2]), evidence(reps[4]), fmt(context + (half, E(context))))
