#!/usr/bin/env python3
"""Walk the ample cone of a rank-2 example.

The Picard lattice is spanned by h = e1 + f1 (square 2) and delta
(square -2), with polarization g = 3h - delta.  We enumerate the walls,
test a few divisor classes, then slide along a segment until it leaves
the ample cone at the exact rational threshold.
"""

from fractions import Fraction

from hyperwall import (
    PicardLattice,
    WallQuery,
    basis_vector,
    enumerate_walls,
    is_ample,
    nef_threshold,
    slice_solutions,
    vector_from_labels,
)

H = vector_from_labels({"e1": 1, "f1": 1})
DELTA = basis_vector("delta")


def show_verdict(picard, g, m, label):
    verdict = is_ample(picard, g, m)
    wit = ", ".join(str(w.rho_picard) for w in verdict.witnesses) or "none"
    iso = " [isotropic boundary]" if verdict.isotropic_flag else ""
    print(f"  {label:<12} -> {verdict.status.value:<13} ({verdict.certainty}) witnesses: {wit}{iso}")


def main():
    picard = PicardLattice([H, DELTA])
    g = (3, -1)
    print(f"Picard Gram: {picard.gram}, polarization g = 3h - delta")
    print()

    print("== wall enumeration ==")
    q2 = WallQuery(picard, g, m=(1, 0), targets=((-2, 1), (-2, 2)))
    print("square -2 walls not separated from h:", [w.rho_picard for w in enumerate_walls(q2)])
    q10 = WallQuery(picard, g, targets=((-10, 2),), level_cap=60)
    print("square -10 walls up to level 60    :", [w.rho_picard for w in enumerate_walls(q10)])
    print()

    print("== slices (rho, g) = k are finite ellipsoid problems ==")
    for k in (2, 6, 18):
        print(f"  level {k:>2}, square -10: {slice_solutions(picard, g, k, -10)}")
        print(f"  level {k:>2}, square  -2: {slice_solutions(picard, g, k, -2)}")
    print()

    print("== verdicts ==")
    show_verdict(picard, g, g, "g")
    show_verdict(picard, g, (1, 0), "h")
    show_verdict(picard, g, (2, 1), "2h + delta")
    show_verdict(picard, g, (1, 1), "h + delta")
    print()

    print("== nef threshold along t*(2h+delta) + (1-t)*g ==")
    m = (2, 1)
    tau, walls = nef_threshold(picard, g, m)
    print(f"  tau = {tau}, crossing wall(s): {[w.rho_picard for w in walls]}")
    for num, den in ((1, 4), (3, 8), (1, 2), (5, 8), (3, 4)):
        t = Fraction(num, den)
        cls = tuple(num * mi + (den - num) * gi for mi, gi in zip(m, g))
        verdict = is_ample(picard, g, cls)
        marker = "<- tau" if t == tau else ""
        print(f"  t = {str(t):>4}: class {cls} is {verdict.status.value} {marker}")


if __name__ == "__main__":
    main()
