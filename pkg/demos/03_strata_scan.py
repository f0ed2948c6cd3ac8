"""Scan the 3x3 stratification and emit the region data as CSV.

Membership is 0 <= f <= 4 with f = 4 + a1 a2 a3 - (a1^2 + a2^2 + a3^2);
the strata are told apart by f, the four cone points, and the exact
signature of S + S^t.  The CSV is the data behind the region sketch of
the stratification (feed it to any plotting tool).
"""

import collections
import sys
from fractions import Fraction

from spectral_stokes import lowdim
from spectral_stokes.polycore import format_number
from spectral_stokes.seifert import type_label_multiset

step = Fraction(1, 2)
counts = collections.Counter()
rows = ["a1,a2,a3,f,stratum,types"]
for a, f, stratum, types in lowdim.scan3(step=step):
    counts[stratum.value] += 1
    rows.append(",".join([format_number(a[0]), format_number(a[1]),
                          format_number(a[2]), format_number(f),
                          stratum.value, type_label_multiset(types)]))

print(f"grid step {step} over [-4, 4]^3: {sum(counts.values())} member points")
for name, c in counts.most_common():
    print(f"  {name:>20}: {c}")

out = sys.argv[1] if len(sys.argv) > 1 else None
if out:
    with open(out, "w") as fh:
        fh.write("\n".join(rows) + "\n")
    print(f"wrote {len(rows) - 1} rows to {out}")
else:
    print("(pass a filename to write the full CSV)")
