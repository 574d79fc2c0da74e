"""Ideals shared by the property suites: (ring, generators)."""

from gvdkit.ideals import Ideal
from gvdkit.toric import enumerate_connected_graphs, toric_ideal_of_graph

I_TEXT = "b*(c*f - a^2), b*d*e, d*e*(c^2+a*c+d*e+f^2)"
J_TEXT = "b*(c*f-a^2), b*d*e, d*e*(a^2+f^2+d*e)"
CYCLE5 = "a*b, b*c, c*d, d*e, e*a"
I_G = "a*d^2*f*g - b*c*e^2*h"
I_H_EXPECTED = "f*g - e*i, b*c*e*f - a*d^2*g"
I_H_LABELED = "f*h - e*i, b*c*e*f - a*d^2*g"

TEXT_CORPUS = [
    ("a..f", I_TEXT),
    ("a..f", J_TEXT),
    ("a..e", CYCLE5),
    ("a..h", I_G),
    ("a..i", I_H_EXPECTED),
    ("a..i", I_H_LABELED),
    ("x,y,z", "x*y, x*z"),
    ("x,y", "x^2, x*y"),
    ("x,y,z", "x, y, z"),
    ("x,y", "x - y"),
    ("x,y", "x*y - 1, y^2 - 1"),
    ("x,y,z,w", "x*z - y^2, x*w - y*z, y*w - z^2"),
    ("x,y,z", "x^2, y^2"),
    ("a..d", "a*c - b*d"),
    ("x,y,z", "x*y*z"),
    ("x,y,z", "x^2*y - z, y*z"),
    ("x,y,z", "x*y, y*z, x*z"),
    ("a..d", "a*b, c*d"),
    ("a..d", "a*b, a*c, a*d"),
    ("x,y,z", "x^2 + y^2 + z^2"),
]


def corpus(include_toric: bool = True) -> list[Ideal]:
    out = [Ideal.parse(r, g) for r, g in TEXT_CORPUS]
    if include_toric:
        for e in (4, 5, 6):
            for g in enumerate_connected_graphs(e):
                ideal = toric_ideal_of_graph(g)
                if not ideal.is_zero():
                    out.append(ideal)
    return out

