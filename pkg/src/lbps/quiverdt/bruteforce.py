"""Brute-force stable-representation counts over a prime field F_p.

Every representation is enumerated, every subrepresentation is found by
checking all tuples of subspaces, and stable isomorphism classes are
counted by orbit-stabilizer: a stable representation has stabilizer F_p^*,
so #classes = #stable * (p - 1) / |G_d(F_p)|.  Nothing here uses the HN
recursion; it is the independent oracle for the HN counts.
"""

from fractions import Fraction
from itertools import product

from .quiver import Stability


def _span(vectors, p, dim):
    """All vectors in the F_p-span of ``vectors``."""
    out = {(0,) * dim}
    for v in vectors:
        new = set()
        for w in out:
            for c in range(p):
                new.add(tuple((a + c * b) % p for a, b in zip(w, v)))
        out = new
    return frozenset(out)


def subspaces(dim, p):
    """All subspaces of F_p^dim as frozensets of vectors, with their dimensions."""
    if dim == 0:
        return [(0, frozenset({()}))]
    vecs = list(product(range(p), repeat=dim))
    seen = {}
    frontier = {_span([], p, dim): 0}
    seen.update(frontier)
    while frontier:
        nxt = {}
        for sp, k in frontier.items():
            for v in vecs:
                if v not in sp:
                    bigger = _span(list(_basis(sp, p, dim)) + [v], p, dim)
                    if bigger not in seen:
                        seen[bigger] = k + 1
                        nxt[bigger] = k + 1
        frontier = nxt
    return sorted(((k, sp) for sp, k in seen.items()), key=lambda t: t[0])


def _basis(space, p, dim):
    basis = []
    span = {(0,) * dim}
    for v in sorted(space):
        if v not in span:
            basis.append(v)
            span = _span(basis, p, dim)
    return basis


def _apply(mat, vec, p):
    return tuple(sum(mat[r][c] * vec[c] for c in range(len(vec))) % p for r in range(len(mat)))


def _matrices(rows, cols, p):
    for flat in product(range(p), repeat=rows * cols):
        yield tuple(tuple(flat[r * cols:(r + 1) * cols]) for r in range(rows))


def gl_order(n, p):
    out = 1
    for k in range(n):
        out *= p ** n - p ** k
    return out


def count_stable(Q, d, theta, p):
    """(number of theta-stable representations, number of iso classes) over F_p."""
    theta = Stability(theta)
    n = len(Q)
    arrows = []
    for i, j, m in Q.arrow_list():
        arrows += [(i, j)] * m
    subs = [subspaces(d[v], p) for v in range(n)]
    bases = [[(k, sp, _basis(sp, p, d[v])) for k, sp in subs[v]] for v in range(n)]
    tot = sum(d)
    th_tot = theta(d)
    # candidate proper nonzero sub-dimension tuples violating stability (slope >= slope(d))
    bad = []
    for choice in product(*[range(len(b)) for b in bases]):
        dims = [bases[v][c][0] for v, c in enumerate(choice)]
        s = sum(dims)
        if s == 0 or s == tot:
            continue
        if theta(dims) * tot >= th_tot * s:
            bad.append(choice)
    stable = 0
    for mats in product(*[list(_matrices(d[j], d[i], p)) for i, j in arrows]):
        ok = True
        for choice in bad:
            closed = True
            for (i, j), mat in zip(arrows, mats):
                _, _, basis_i = bases[i][choice[i]]
                target = bases[j][choice[j]][1]
                for b in basis_i:
                    if _apply(mat, b, p) not in target:
                        closed = False
                        break
                if not closed:
                    break
            if closed:
                ok = False
                break
        if ok:
            stable += 1
    group = 1
    for x in d:
        group *= gl_order(x, p)
    classes = Fraction(stable * (p - 1), group)
    return stable, classes


def representation_space_size(Q, d, p):
    return p ** sum(m * d[i] * d[j] for i, j, m in Q.arrow_list())
