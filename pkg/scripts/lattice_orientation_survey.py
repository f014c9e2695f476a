#!/usr/bin/env python3
"""Survey the polyhex torus lattice against the published transmission
formulas in both parameter orientations.

For each (rows, ring) size this builds the raw hexagonal lattice (rings
of length ``ring``, ``rows`` of them, alternating rungs), measures the
BFS transmission, and compares it with the branch formula evaluated at
(p, q) = (rows, ring) and at the exchange (ring, rows). The survey is
what pinned the generator's orientation: the lattice agrees with the
formulas exactly when its ring direction is read as the q parameter.
"""
from __future__ import annotations

import argparse
import sys

from statusindex import transmission_profile
from statusindex.closed_forms import nanotorus_closed_forms
from statusindex.families import FamilyError, _polyhex_lattice


def formula_sigma(p: int, q: int) -> int:
    return nanotorus_closed_forms(p, q).sigma


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rows", type=int, default=10)
    parser.add_argument("--max-ring", type=int, default=12)
    args = parser.parse_args()

    header = (
        f"{'rows':>5} {'ring':>5} {'3-reg':>6} {'k_bfs':>7} "
        f"{'f(rows,ring)':>13} {'f(ring,rows)':>13} {'agrees with':>12}"
    )
    print(header)
    for rows in range(2, args.max_rows + 1, 2):
        for ring in range(4, args.max_ring + 1, 2):
            try:
                g = _polyhex_lattice(rows=rows, ring=ring)
            except FamilyError as exc:
                print(f"{rows:>5} {ring:>5}  {exc}")
                continue
            tp = transmission_profile(g)
            cubic = set(g.degrees) == {3}
            k = tp.regular_k
            direct = formula_sigma(rows, ring)
            exchanged = formula_sigma(ring, rows)
            if k == direct and k == exchanged:
                verdict = "both"
            elif k == direct:
                verdict = "direct"
            elif k == exchanged:
                verdict = "exchange"
            else:
                verdict = "NEITHER"
            print(
                f"{rows:>5} {ring:>5} {str(cubic):>6} {k!s:>7} "
                f"{direct:>13} {exchanged:>13} {verdict:>12}"
            )
    print(
        "\nreading: 'direct' rows mean sigma(lattice(rows, ring)) equals the\n"
        "branch formula at (p, q) = (rows, ring): the formula's q is the\n"
        "lattice's ring direction, which is how the generator is oriented.\n"
        "A ring of length 2 collapses its doubled bond (no cubic lattice),\n"
        "so the (p, 2) tori are generated transposed and the verifier reports\n"
        "their formula agreement as a parameter exchange."
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
