"""Reference facet lists from pycddlib, used to generate tests/data/*_facets.txt.

Enumerates the extreme rays of the polymatroid cone with cdd, projects them onto
the scenario's coordinates and converts back to a minimal H-representation.
Needs pycddlib 2.x:  python3 cdd_projection.py mzy > ../data/mzy_facets.txt
"""
import itertools
import math
import sys
from fractions import Fraction

import cdd


def nonempty_subsets(n):
    out = []
    for k in range(1, n + 1):
        out.extend(frozenset(c) for c in itertools.combinations(range(1, n + 1), k))
    return out


def elemental_rows(n):
    coords = nonempty_subsets(n)
    index = {s: i for i, s in enumerate(coords)}
    full = frozenset(range(1, n + 1))
    rows = []

    def add(terms):
        row = [0] * len(coords)
        for s, c in terms:
            if s:
                row[index[s]] += c
        rows.append(row)

    for i in range(1, n + 1):
        add([(full, 1), (full - {i}, -1)])
    for i, j in itertools.combinations(range(1, n + 1), 2):
        rest = sorted(full - {i, j})
        for k in range(len(rest) + 1):
            for r in itertools.combinations(rest, k):
                r = frozenset(r)
                add([(r | {i}, 1), (r | {j}, 1), (r, -1), (r | {i, j}, -1)])
    return coords, rows


def project(n, keep):
    coords, rows = elemental_rows(n)
    m = cdd.Matrix([[0] + r for r in rows], number_type="fraction")
    m.rep_type = cdd.RepType.INEQUALITY
    gens = cdd.Polyhedron(m).get_generators()
    positions = [coords.index(s) for s in keep]
    rays = [[0] + [gens[i][1 + k] for k in positions] for i in range(gens.row_size)]
    g = cdd.Matrix(rays, number_type="fraction")
    g.rep_type = cdd.RepType.GENERATOR
    g.lin_set = frozenset(gens.lin_set)
    h = cdd.Polyhedron(g).get_inequalities()
    h.canonicalize()
    return h


def label(s):
    return "".join(f"A{e}" for e in sorted(s))


def integer_row(values):
    fracs = [Fraction(v) for v in values]
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*ints) or 1
    return [v // g for v in ints]


def main():
    which = sys.argv[1]
    if which == "mzy":
        n, generators = 4, [{1, 3, 4}, {2, 3, 4}, {1, 2}]
    else:
        n = int(which[1:])
        generators = [{i, i % n + 1} for i in range(1, n + 1)]
    keep = [s for s in nonempty_subsets(n) if any(s <= g for g in generators)]
    h = project(n, keep)
    print(f"# n: {n}")
    print("# labels: " + " ".join(f"A{i}" for i in range(1, n + 1)))
    print("# coordinates: " + " ".join(label(s) for s in keep))
    print(f"# rows: {h.row_size}")
    print("# reference facets from cdd (double description, exact fractions)")
    for i in range(h.row_size):
        coeffs = integer_row(h[i][1:])
        terms = [(c, s) for c, s in zip(coeffs, keep) if c != 0]
        text = ""
        for k, (c, s) in enumerate(terms):
            sign = "-" if c < 0 else ("+" if k else "")
            text += (f" {sign} " if k else sign) + f"{abs(c)}*H({label(s)})"
        op = "==" if i in h.lin_set else ">="
        print(f"{text} {op} 0")


if __name__ == "__main__":
    main()
