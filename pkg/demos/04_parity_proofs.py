#!/usr/bin/env python3
"""Kochen-Specker parity proofs: verifying contextual sets of any shape.

A context set proves the theorem when every observable occurs in an even
number of contexts while the number of negative contexts is odd.  The
verifier reports per-context diagnostics instead of raising.
"""

from w52 import ContextSet, Space, analyze, enumerate_pentads, pentad_to_config, wa_symbol

# --- a Mermin pentagram is the smallest example here ---------------------------

edges = [
    ["XII", "IYI", "IIY", "XYY"],
    ["YII", "IXI", "IIY", "YXY"],
    ["YII", "IYI", "IIX", "YYX"],
    ["XII", "IXI", "IIX", "XXX"],
    ["XYY", "YXY", "YYX", "XXX"],
]
cs = ContextSet.from_words(edges)
report = analyze(cs)
print(f"pentagram: verdict {report.verdict}, negative contexts {report.negative_count}, "
      f"symbol {wa_symbol(cs)}")

# --- every pentad configuration is one too -------------------------------------

space = Space()
pentads = enumerate_pentads(space)
config = pentad_to_config(space, pentads[2026])
cs = ContextSet.from_point_ids(config.contexts)
report = analyze(cs)
print(f"config of pentad 2026: verdict {report.verdict}, "
      f"negative contexts {report.negative_count}, symbol {wa_symbol(cs)}")

# --- negative controls: what rejection looks like -------------------------------

for label, contexts in [
    ("anticommuting", [["XII", "YII", "ZII"]]),
    ("not closed", [["XII", "IXI", "IIX"]]),
    ("even negatives", [["XXI", "YYI", "ZZI"], ["XXI", "YYI", "ZZI"]]),
]:
    r = analyze(ContextSet.from_words(contexts))
    detail = [
        f"commuting={c.commuting} closed={c.closed} sign={c.sign}" for c in r.contexts
    ]
    print(f"{label}: verdict {r.verdict} ({'; '.join(detail)})")
