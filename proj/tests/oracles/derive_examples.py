#!/usr/bin/env python3
"""Brute-force derivation of the expected values frozen into the unit tests.

Everything here is computed from first principles (reachability by explicit
search, knots by pairwise mutual reachability, minimality by trying every
subset) and shares no code with the C++ library.
"""

from itertools import combinations


def reach(vertices, arcs, src):
    seen = {src}
    stack = [src]
    while stack:
        u = stack.pop()
        for a, b in arcs:
            if a == u and b in vertices and b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


def induced(vertices, arcs, removed):
    vs = set(vertices) - set(removed)
    return vs, [(a, b) for a, b in arcs if a in vs and b in vs]


def knots(vertices, arcs):
    found = []
    for v in sorted(vertices):
        comp = {u for u in vertices if u in reach(vertices, arcs, v) and v in reach(vertices, arcs, u)}
        if len(comp) < 2 or comp in found:
            continue
        if all(b in comp for a, b in arcs if a in comp):
            found.append(comp)
    return found


def knot_free(vertices, arcs, removed=()):
    vs, es = induced(vertices, arcs, removed)
    return not knots(vs, es)


def out_nb(arcs, v):
    return {b for a, b in arcs if a == v}


def in_nb(arcs, v):
    return {a for a, b in arcs if b == v}


def in_reach(vertices, arcs, v):
    vs, es = induced(vertices, arcs, out_nb(arcs, v))
    return {u for u in vs if v in reach(vs, es, u)}


def out_reach(vertices, arcs, undecided, v):
    return {u for u in vertices if u in undecided and v in in_reach(vertices, arcs, u)}


def closed_reach(vertices, arcs, v):
    return out_nb(arcs, v) | in_reach(vertices, arcs, v)


def psi(vertices, arcs, undecided, x):
    r = closed_reach(vertices, arcs, x)
    phi = sum(4 if u in undecided else 1 for u in r)
    return phi + 3 * len(out_reach(vertices, arcs, undecided, x) - r)


def surviving(arcs, undecided, x):
    return {u for u in out_nb(arcs, x) if in_nb(arcs, u) & undecided == {x}}


def candidates(vertices, arcs, undecided, x):
    out = set()
    for y in out_nb(arcs, x):
        out |= out_reach(vertices, arcs, undecided, y)
    return out


def minimal_family(vertices, arcs):
    vs = sorted(vertices)
    good = [set(c) for k in range(len(vs) + 1) for c in combinations(vs, k)
            if knot_free(vertices, arcs, c)]
    return [s for s in good if not any(t < s for t in good)]


def one_minimal(vertices, arcs, s):
    return all(not knot_free(vertices, arcs, set(s) - {v}) for v in s)


def triangles(k):
    vs = set(range(1, 3 * k + 1))
    es = []
    for i in range(1, k + 1):
        a, b, c = 3 * i - 2, 3 * i - 1, 3 * i
        es += [(a, b), (b, c), (c, a)]
    return vs, es


def main():
    tri = ({1, 2, 3}, [(1, 2), (2, 3), (3, 1)])
    cyc = ({1, 2}, [(1, 2), (2, 1)])
    t2 = triangles(2)
    print("knots(tri+3->4)", knots({1, 2, 3, 4}, tri[1] + [(3, 4)]))
    print("knot_free(t2 - {3})", knot_free(*t2, {3}))
    print("verify(cyc,{1})", knot_free(*cyc, {1}), one_minimal(*cyc, {1}))
    print("verify(cyc,{1,2})", knot_free(*cyc, {1, 2}), one_minimal(*cyc, {1, 2}))
    print("verify(t2,{3,6})", knot_free(*t2, {3, 6}), one_minimal(*t2, {3, 6}))
    print("verify(tri,{1,2})", knot_free(*tri, {1, 2}), one_minimal(*tri, {1, 2}))
    print("R-(tri,1)", in_reach(*tri, 1), "R-(cyc,1)", in_reach(*cyc, 1))
    print("R+(tri,1)", out_reach(*tri, {1, 2, 3}, 1), "R+(tri,2)", out_reach(*tri, {1, 2, 3}, 2))
    print("R+(tri,1 | phi2=.25)", out_reach(*tri, {1, 3}, 1))
    print("R(tri,1)", closed_reach(*tri, 1), "R(cyc,1)", closed_reach(*cyc, 1))
    print("psi tri 1", psi(*tri, {1, 2, 3}, 1), "psi cyc 1", psi(*cyc, {1, 2}, 1),
          "psi tri 1 | phi3=.25", psi(*tri, {1, 2}, 1))
    g3 = ({1, 2, 3}, [(1, 3), (2, 3), (3, 1), (3, 2)])
    print("S tri 1", surviving(tri[1], {1, 2, 3}, 1), "S cyc 1", surviving(cyc[1], {1, 2}, 1),
          "S g3 1", surviving(g3[1], {1, 2, 3}, 1))
    print("C tri 1", candidates(*tri, {1, 2, 3}, 1), "C cyc 1", candidates(*cyc, {1, 2}, 1))
    print("R(t2,1)", closed_reach(*t2, 1))
    print("R-(path,2)", in_reach({1, 2}, [(1, 2)], 2))
    print("family cyc", minimal_family(*cyc))
    print("family tri", minimal_family(*tri))
    print("family t2 size", len(minimal_family(*t2)))
    fam_t3 = minimal_family(*triangles(3))
    print("oracle_min t3", min(len(s) for s in fam_t3))
    print("family path", minimal_family({1, 2}, [(1, 2)]))


if __name__ == "__main__":
    main()
