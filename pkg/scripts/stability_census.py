#!/usr/bin/env python3
"""Tabulate the stability trichotomy and gonality data across (g, d).

Example:
    python3 scripts/stability_census.py --g-max 12
"""

import argparse

from k3lattice import (
    PencilMarker,
    PolarizedLattice,
    clifford_index,
    destabilizer_search,
    format_class,
    gonality_pencil_classes,
    minus_two_classes,
    stability_classify,
    valid_pairs,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--g-max", type=int, default=12)
    args = parser.parse_args()

    header = f"{'g':>3} {'d':>3} {'cliff':>5} {'(-2)':>6} {'pencil-cut bundle':>18}  witnesses / gonality pencils"
    print(header)
    print("-" * len(header))
    for g, d in valid_pairs(args.g_max):
        lat = PolarizedLattice(g, d)
        mt = minus_two_classes(lat)
        verdict = stability_classify(lat, PencilMarker.CUT_BY_F)
        witnesses = ", ".join(format_class(c) for c in destabilizer_search(lat)) or "-"
        pencils = ", ".join(format_class(c) for c in gonality_pencil_classes(lat))
        print(
            f"{g:>3} {d:>3} {clifford_index(lat).cliff:>5} "
            f"{format_class(mt[0]) if mt else '-':>6} "
            f"{verdict.tag.value:>18}  {witnesses}  |  {pencils}"
        )


if __name__ == "__main__":
    main()
