"""Reference values for the q=3 worked example, kept in one place."""

X1_LISTED = [(1, -1), (1, 1), (1, 3), (3, 1), (1, -3), (1, -2), (2, -1), (3, -1), (5, -2),
             (4, -1), (3, -4), (2, -3), (6, -5), (1, 0), (1, -4), (2, -5), (3, -2), (4, -3),
             (0, 1), (5, -6)]
X2_LISTED = [(3, 2), (2, 3), (3, 4), (4, 3), (2, -3), (3, -2), (5, -1), (1, -5)]

G2 = [[1, 2, 2, 0, 0, 0, 0], [1, 1, 1, 2, 2, 2, 2]]
V_C2 = [(1, 2, 4), (2, 1, 4), (3, 4, 0), (4, 3, 0), (0, 5, 2), (5, 0, 2), (6, 0, 1), (0, 6, 1)]
V_C2R = [(8, 13, 28), (13, 8, 28), (22, 27, 0), (27, 22, 0), (5, 30, 14), (30, 5, 14),
         (36, 6, 7), (6, 36, 7)]
W_C3 = [21, 35, 42, 49, 63, 69, 72, 77, 86, 91, 93, 94, 99]
PLANE_CHARS = [1, 2, 4, 5, 6, 8, 10, 11, 12, 13, 16, 18, 22]


def primitive(v):
    """Scale an integer vector to coprime entries with a positive leading entry."""
    from math import gcd
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    v = tuple(x // g for x in v)
    lead = next(x for x in v if x)
    return tuple(-x for x in v) if lead < 0 else v
