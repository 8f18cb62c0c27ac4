#!/usr/bin/env python3
"""The labeled polar space W(5,2): lines, planes, incidence, classes.

Builds the full incidence structure and prints the sign statistics and the
four-class plane taxonomy.
"""

from collections import Counter

from w52 import Space, affine_part, parse_observable

space = Space()
print(f"points: {len(space.points)}, lines: {len(space.lines)}, planes: {len(space.planes)}")

p = parse_observable("XYZ").point_id
print(f"through XYZ: {len(space.lines_through(p))} lines, {len(space.planes_through(p))} planes")
print(f"planes through line 0: {space.planes_on_line(0)}")

# --- sign statistics (derived; not fixed by the structure alone) -------------

neg_lines = sum(1 for line in space.lines if line.sign < 0)
neg_planes = sum(1 for plane in space.planes if plane.sign < 0)
print(f"negative lines: {neg_lines} of 315, negative planes: {neg_planes} of 135")

classes = Counter(plane.plane_class.value for plane in space.planes)
print(f"plane classes: {dict(sorted(classes.items()))}")

# negative lines per plane, broken down by class (only classes negative/a/b
# have structurally fixed counts; for class c it is an observed statistic)
per_class = {}
for plane in space.planes:
    n = sum(1 for lid in plane.lines if space.lines[lid].sign < 0)
    per_class.setdefault(plane.plane_class.value, Counter())[n] += 1
for cls, counts in sorted(per_class.items()):
    print(f"  negative lines in class-{cls} planes: {dict(sorted(counts.items()))}")

# --- one plane in detail ------------------------------------------------------

pid = space.plane_spanned_by(*(parse_observable(w) for w in ("XXI", "YYI", "IIX")))
plane = space.planes[pid]
words = " ".join(space.points[q - 1].word for q in plane.points)
print(f"\nplane {pid} [{plane.plane_class}] sign {plane.sign:+d}: {words}")

b_line = space.lines[plane.b_line]
print(f"  type-B line: {' '.join(space.points[q - 1].word for q in b_line.points)}")
quad = affine_part(plane, b_line)
print(f"  affine part: {' '.join(space.points[q - 1].word for q in quad)}")
for lid in plane.lines:
    line = space.lines[lid]
    tag = "negative" if line.sign < 0 else "positive"
    print(f"  line {lid}: {' '.join(space.points[q - 1].word for q in line.points)}  {tag}")
