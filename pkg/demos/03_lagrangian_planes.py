#!/usr/bin/env python3
"""The Lagrangian-plane certificate, worked end to end.

A plane inside the fourfold forces three exact intersection conditions on
its class a*q + b*lambda^2.  Eliminating a and b leaves one integer
quadratic in x = (lambda, lambda); only the even negative root can be the
square of a lattice class.  We rebuild the whole chain and verify it with
the middle-cohomology pairing.
"""

from hyperwall import (
    classify_wall,
    lagrangian_eliminant,
    lagrangian_solver,
    line_class_of_plane,
    middle_pair,
    q_dual,
    square_class,
    vector_from_labels,
)


def main():
    qa, qb, qc = lagrangian_eliminant()
    print(f"eliminant quadratic: {qa} x^2 + {qb} x + {qc} = 0")
    print()

    for sol in lagrangian_solver():
        tag = "admissible" if sol.admissible else "rejected"
        print(f"root x = {sol.lambda_square}  ->  a = {sol.a}, b = {sol.b}  [{tag}]")
        print(f"  residuals of the three defining equations: {sol.residuals()}")
    print()

    sol = lagrangian_solver()[0]
    lam = vector_from_labels({"e1": 2, "f1": 2, "delta": 3})
    print("concrete witness: lambda = 2(e1+f1) + 3 delta")
    print(f"  classified as: {classify_wall(lam).kind.value}")

    plane = square_class(lam, coeff=sol.b, qdual_coeff=sol.a)
    lam_sq = square_class(lam)
    print(f"  [plane].[plane]      = {middle_pair(plane, plane)}   (normal bundle check: 3)")
    print(f"  lambda^2 . [plane]   = {middle_pair(lam_sq, plane)}  (equals (lambda,lambda)^2 / 4)")
    print(f"  q . q                = {middle_pair(q_dual(), q_dual())}")

    line = line_class_of_plane(lam)
    print(f"  line class lambda/2 has square {line.square}")


if __name__ == "__main__":
    main()
