"""Acyclic quivers, dimension vectors, stability weights and the Euler form."""

import json
from fractions import Fraction
from itertools import product

from ..errors import NotSinkOrSource, ZeroVector


class DimVector(tuple):
    def __new__(cls, values):
        vals = tuple(int(v) for v in values)
        if any(v < 0 for v in vals):
            raise ValueError("dimension vectors are non-negative")
        return super().__new__(cls, vals)

    def total(self):
        return sum(self)

    def __add__(self, other):
        return DimVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return tuple(a - b for a, b in zip(self, other))


class Stability(tuple):
    def __new__(cls, values):
        return super().__new__(cls, tuple(int(v) for v in values))

    def __call__(self, d):
        return sum(t * x for t, x in zip(self, d))


class Quiver:
    """Vertices plus arrow multiplicities a[i][j] (arrows i -> j); must be acyclic."""

    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(v) for v in vertices)
        index = {v: k for k, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        n = len(self.vertices)
        a = [[0] * n for _ in range(n)]
        for i, j, m in arrows:
            i = index[i] if not isinstance(i, int) else i
            j = index[j] if not isinstance(j, int) else j
            if m < 0:
                raise ValueError("arrow multiplicities are non-negative")
            a[i][j] += int(m)
        self.a = tuple(tuple(row) for row in a)
        self.index = index
        if self._topological_order() is None:
            raise ValueError("quiver has an oriented cycle")

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, Quiver) and (self.vertices, self.a) == (other.vertices, other.a)

    def __hash__(self):
        return hash((self.vertices, self.a))

    def __repr__(self):
        arrows = [(self.vertices[i], self.vertices[j], m) for i, j, m in self.arrow_list()]
        return f"Quiver({list(self.vertices)}, {arrows})"

    def arrow_list(self):
        n = len(self.vertices)
        return [(i, j, self.a[i][j]) for i in range(n) for j in range(n) if self.a[i][j]]

    def _topological_order(self):
        n = len(self.vertices)
        indeg = [sum(1 for i in range(n) if self.a[i][j]) for j in range(n)]
        ready = [j for j in range(n) if indeg[j] == 0]
        order = []
        while ready:
            i = ready.pop()
            order.append(i)
            for j in range(n):
                if self.a[i][j]:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        ready.append(j)
        return order if len(order) == n else None

    def is_sink(self, i):
        return not any(self.a[i])

    def is_source(self, i):
        return not any(row[i] for row in self.a)

    def check(self, d):
        if len(d) != len(self.vertices):
            raise ValueError(f"vector of length {len(d)} does not match {len(self.vertices)} vertices")

    # JSON -----------------------------------------------------------------
    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "arrows": [[self.vertices[i], self.vertices[j], m] for i, j, m in self.arrow_list()],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["vertices"], [tuple(a) for a in obj["arrows"]])


def euler_form(Q, a, b):
    Q.check(a)
    Q.check(b)
    val = sum(x * y for x, y in zip(a, b))
    for i, j, m in Q.arrow_list():
        val -= m * a[i] * b[j]
    return val


def sym_form(Q, a, b):
    return euler_form(Q, a, b) + euler_form(Q, b, a)


def antisym_form(Q, a, b):
    return euler_form(Q, a, b) - euler_form(Q, b, a)


def antiattractor(Q, d):
    """theta = {d, -}: theta(e_v) = sum_{v->w} d_w - sum_{u->v} d_u."""
    Q.check(d)
    n = len(Q)
    unit = [[1 if k == v else 0 for k in range(n)] for v in range(n)]
    return Stability(antisym_form(Q, d, unit[v]) for v in range(n))


def slope(theta, d):
    tot = sum(d)
    if tot == 0:
        raise ZeroVector("slope of the zero vector")
    return Fraction(theta(d), tot)


def same_slope(theta, a, b):
    """Cross-multiplied comparison mu(a) == mu(b)."""
    return theta(a) * sum(b) == theta(b) * sum(a)


def sub_vectors(d):
    return product(*(range(x + 1) for x in d))


def is_coprime(theta, d):
    """No proper nonzero d' <= d with the slope of d."""
    full = tuple(d)
    for e in sub_vectors(d):
        if any(e) and e != full and same_slope(theta, e, d):
            return False
    return True


def reflect_dim(Q, d, i):
    """r_i(d) = d - (d, e_i) e_i at a sink or source i."""
    Q.check(d)
    if not (Q.is_sink(i) or Q.is_source(i)):
        raise NotSinkOrSource(f"vertex {Q.vertices[i]} is neither a sink nor a source")
    e = [0] * len(Q)
    e[i] = 1
    c = sym_form(Q, d, e)
    out = list(d)
    out[i] -= c
    return tuple(out)


def framed(Q, n):
    """Hat quiver: new vertex i0 (index 0) with n_i arrows i0 -> i.

    Returns (Qhat, extend) where extend(d, theta) gives (d_hat, theta_hat);
    theta must already satisfy theta(d) = 0.
    """
    Q.check(n)
    name = "i0"
    while name in Q.index:
        name += "'"
    verts = (name,) + Q.vertices
    arrows = [(i + 1, j + 1, m) for i, j, m in Q.arrow_list()]
    arrows += [(0, k + 1, m) for k, m in enumerate(n) if m]
    Qhat = Quiver(verts, arrows)

    def extend(d, theta):
        if theta(d) != 0:
            raise ValueError("framing needs a stability normalised to theta(d) = 0")
        return DimVector((1,) + tuple(d)), Stability((1,) + tuple(theta))

    return Qhat, extend


def parse_vector(text):
    return tuple(int(x) for x in text.replace(";", ",").split(",") if x.strip())
