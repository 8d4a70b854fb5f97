"""Drive the bench subcommand programmatically and read the CSV back.

Equivalent shell invocation:

    invcount bench --sizes 2000,20000 --inv-per-n 0,4,64 --csv out.csv
"""

import csv
import tempfile
from pathlib import Path

from invcount import cli

out = Path(tempfile.mkdtemp()) / "bench.csv"
code = cli.main([
    "bench",
    "--sizes", "2000,20000",
    "--inv-per-n", "0,4,64",
    "--seed", "42",
    "--csv", str(out),
])
assert code == 0, "bench reported an invariant violation"

with open(out, newline="") as fh:
    rows = list(csv.DictReader(fh))

print(f"{'n':>6} {'Inv/n':>6} {'final_q':>8} {'comparisons':>12} {'ms':>8}")
for row in rows:
    ratio = int(row["inv"]) / int(row["n"])
    ms = int(row["wall_time_ns"]) / 1e6
    print(f"{row['n']:>6} {ratio:>6.0f} {row['final_q']:>8} "
          f"{row['header_comparisons']:>12} {ms:>8.2f}")

print(f"\nfull CSV at {out}")
print("rerun with --no-timing for byte-identical output across machines")
