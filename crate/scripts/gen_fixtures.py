#!/usr/bin/env python3
"""Regenerate the OEIS fixtures under crates/core/tests/fixtures/oeis.

The b-files are computed here by plain enumeration of compositions, with no
generating functions involved. Before anything is written the same
enumeration is checked cell by cell against the reference grids in
fixtures/golden/, which are committed by hand and never regenerated.
"""

import json
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "crates" / "core" / "tests" / "fixtures"
MAX_N = 16


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def inv(c):
    return sum(1 for i in range(len(c)) for j in range(i + 1, len(c)) if c[i] > c[j])


def des(c):
    return sum(1 for i in range(len(c) - 1) if c[i] > c[i + 1])


def enumerate_counts():
    ic_r, dc_r, ic, ic_k = {}, {}, {}, {}
    for n in range(MAX_N + 1):
        ci, cd, tk = Counter(), Counter(), Counter()
        for c in compositions(n):
            i = inv(c)
            ci[i] += 1
            cd[des(c)] += 1
            tk[len(c)] += i
        ic_r[n], dc_r[n] = ci, cd
        ic[n] = sum(r * m for r, m in ci.items())
        ic_k[n] = tk
    return ic_r, dc_r, ic, ic_k


def check_golden(name, counts):
    lines = (FIX / "golden" / name).read_text().splitlines()
    header, rows = lines[0].split(), lines[1:]
    assert header[0] == "n/r", name
    assert len(rows) == MAX_N + 1, (name, len(rows))
    for pos, line in enumerate(rows):
        n, *vals = (int(x) for x in line.split())
        assert n == pos, (name, n, pos)
        for r, v in enumerate(vals):
            assert counts[n][r] == v, (name, n, r, counts[n][r], v)


def main():
    ic_r, dc_r, ic, ic_k = enumerate_counts()
    check_golden("ic_rn_grid.txt", ic_r)
    check_golden("dc_rn_grid.txt", dc_r)

    seqs = []

    def bfile(seq_id, values, offset, first_n, columns, quantity):
        lines = [f"# {seq_id}: {quantity}, n <= {MAX_N}, computed by scripts/gen_fixtures.py"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
        (FIX / "oeis" / f"b{seq_id[1:]}.txt").write_text("\n".join(lines) + "\n")
        seqs.append(
            {
                "id": seq_id,
                "quantity": quantity,
                "offset": offset,
                "first_n": first_n,
                "columns": columns,
                "provenance": "not downloaded; generated by enumerating compositions",
            }
        )

    bfile("A189052", [ic[n] for n in range(MAX_N + 1)], 0, 0, "scalar", "ic_n")
    bfile(
        "A189073",
        [ic_k[n][k] for n in range(1, MAX_N + 1) for k in range(1, n + 1)],
        1, 1, "one_through_n", "ic_nk",
    )
    bfile(
        "A189074",
        [ic_r[n][r] for n in range(MAX_N + 1) for r in range(max(ic_r[n]) + 1)],
        0, 0, "to_last_nonzero", "ic_r_n",
    )
    bfile(
        "A238343",
        [dc_r[n][r] for n in range(MAX_N + 1) for r in range(n + 1)],
        0, 0, "zero_through_n", "dc_r_n",
    )
    bfile(
        "A238344",
        [dc_r[n][r] for n in range(MAX_N + 1) for r in range(max(dc_r[n]) + 1)],
        0, 0, "to_last_nonzero", "dc_r_n",
    )

    (FIX / "oeis" / "sequences.json").write_text(json.dumps({"sequences": seqs}, indent=2) + "\n")


if __name__ == "__main__":
    main()
