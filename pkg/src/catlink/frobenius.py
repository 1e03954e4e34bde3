"""Commutative Frobenius pairs (R, A) and the induced 2d TQFT.

A pair is the base ring R together with a free R-algebra A carrying a
nondegenerate trace; the comultiplication is always *derived* as the
trace-dual of the multiplication, never entered by hand.  Registered
pairs are checked against the full Frobenius axiom list on construction,
and user pairs go through the same gate.

The two pairs that drive the link theories:

* Khovanov: R = Z, A = Z[X]/(X^2), deg 1 = -1, deg X = +1, eps(X) = 1.
* Lee (equivariant): R = Q[t], A = Q[X] with X^2 = t, deg t = 4.

Setting t = 0 in the Lee pair recovers the Khovanov pair over Q.
"""

from __future__ import annotations

import itertools

from .graded import GradedFreeModule
from .linalg import ExactMatrix, solve
from .rings import QQ, QT, ZZ


class FrobeniusError(ValueError):
    pass


class FrobeniusPair:
    """Free R-algebra with basis, multiplication table and trace.

    mult[(i, j)] is a dict {k: coeff} giving m(e_i (x) e_j); counit is a
    tuple of trace values eps(e_i).  Basis element 0 must be the unit.
    """

    def __init__(self, ring, basis_labels, degrees, mult, counit, name="pair"):
        self.ring = ring
        self.labels = tuple(basis_labels)
        self.degrees = tuple(degrees)
        self.rank = len(self.labels)
        self.mult = {k: dict(v) for k, v in mult.items()}
        self.counit = tuple(counit)
        self.name = name
        self.comult = self._derive_comult()
        self.verify()

    # -- structure maps ----------------------------------------------------

    def m(self, i, j):
        return self.mult.get((i, j), {})

    def m_elem(self, a, b):
        """Multiply two elements given as {index: coeff} dicts."""
        R = self.ring
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, c in self.m(i, j).items():
                    v = R.add(out.get(k, R.zero), R.mul(R.mul(ca, cb), c))
                    if R.is_zero(v):
                        out.pop(k, None)
                    else:
                        out[k] = v
        return out

    def delta(self, i):
        """Comultiplication on basis element i: {(j, k): coeff}."""
        return self.comult[i]

    def eps(self, i):
        return self.counit[i]

    def unit_element(self):
        return {0: self.ring.one}

    def gram(self):
        R = self.ring
        g = [[R.zero] * self.rank for _ in range(self.rank)]
        for i in range(self.rank):
            for j in range(self.rank):
                acc = R.zero
                for k, c in self.m(i, j).items():
                    acc = R.add(acc, R.mul(c, self.counit[k]))
                g[i][j] = acc
        return g

    def _derive_comult(self):
        """Delta as the eps-dual of m: Delta(a) = sum_i (a e_i) (x) e^i."""
        R = self.ring
        g = self.gram()
        G = ExactMatrix.from_rows(R, g)
        dual = []
        for k in range(self.rank):
            col = solve(G, {k: R.one})
            if col is None:
                raise FrobeniusError("trace pairing is degenerate")
            dual.append(col)
        comult = []
        for a in range(self.rank):
            out = {}
            for i in range(self.rank):
                prod = self.m(a, i)
                for j, cj in prod.items():
                    for k, ck in dual[i].items():
                        v = R.add(out.get((j, k), R.zero), R.mul(cj, ck))
                        if R.is_zero(v):
                            out.pop((j, k), None)
                        else:
                            out[(j, k)] = v
            comult.append(out)
        return comult

    # -- axioms -------------------------------------------------------------

    def verify(self):
        R = self.ring
        rk = self.rank
        for i in range(rk):
            if self.m(0, i) != {i: R.one} or self.m(i, 0) != {i: R.one}:
                raise FrobeniusError("basis element 0 is not a unit")
        for i in range(rk):
            for j in range(rk):
                if self._neq(self.m(i, j), self.m(j, i)):
                    raise FrobeniusError("multiplication not commutative")
        for i, j, k in itertools.product(range(rk), repeat=3):
            left = self._m_then(self.m(i, j), k, right=True)
            right = self._m_then(self.m(j, k), i, right=False)
            if self._neq(left, right):
                raise FrobeniusError("multiplication not associative")
        # counit property of the derived comultiplication
        for a in range(rk):
            acc = {}
            for (j, k), c in self.comult[a].items():
                v = R.add(acc.get(j, R.zero), R.mul(c, self.counit[k]))
                if R.is_zero(v):
                    acc.pop(j, None)
                else:
                    acc[j] = v
            if self._neq(acc, {a: R.one}):
                raise FrobeniusError("(id x eps) . Delta != id")
        # Frobenius relation: Delta . m = (m x id) . (id x Delta)
        for a, b in itertools.product(range(rk), repeat=2):
            lhs = {}
            for k, c in self.m(a, b).items():
                for (u, v), d in self.comult[k].items():
                    self._acc(lhs, (u, v), R.mul(c, d))
            rhs = {}
            for (u, v), d in self.comult[b].items():
                for w, c in self.m(a, u).items():
                    self._acc(rhs, (w, v), R.mul(d, c))
            if self._neq(lhs, rhs):
                raise FrobeniusError("Frobenius compatibility fails")
        if self.degrees and self.degrees[0] != -self.degrees[1]:
            # graded rank-two pairs use the symmetric grading (-1, +1)
            if self.rank == 2:
                raise FrobeniusError("rank-two grading must be (-1, +1)")

    def _acc(self, d, key, v):
        R = self.ring
        w = R.add(d.get(key, R.zero), v)
        if R.is_zero(w):
            d.pop(key, None)
        else:
            d[key] = w

    def _m_then(self, partial, other, right):
        R = self.ring
        out = {}
        for k, c in partial.items():
            prod = self.m(k, other) if right else self.m(other, k)
            for l, d in prod.items():
                self._acc(out, l, R.mul(c, d))
        return out

    def _neq(self, a, b):
        R = self.ring
        keys = set(a) | set(b)
        return any(not R.is_zero(R.sub(a.get(k, R.zero), b.get(k, R.zero)))
                   for k in keys)

    def __repr__(self):
        return f"FrobeniusPair({self.name}, rank {self.rank} over {self.ring.name})"


def khovanov_pair(ring=ZZ):
    """Z[X]/(X^2) with eps(X) = 1, eps(1) = 0."""
    return FrobeniusPair(
        ring, ("1", "X"), (-1, 1),
        {(0, 0): {0: ring.one}, (0, 1): {1: ring.one},
         (1, 0): {1: ring.one}, (1, 1): {}},
        (ring.zero, ring.one),
        name=f"khovanov/{ring.name}")


def lee_pair():
    """Q[X] over Q[t] with X^2 = t; the SU(2)-equivariant deformation."""
    t = QT.t
    return FrobeniusPair(
        QT, ("1", "X"), (-1, 1),
        {(0, 0): {0: QT.one}, (0, 1): {1: QT.one},
         (1, 0): {1: QT.one}, (1, 1): {0: t}},
        (QT.zero, QT.one),
        name="lee/Q[t]")


KHOVANOV = khovanov_pair(ZZ)
KHOVANOV_Q = khovanov_pair(QQ)
LEE = lee_pair()


# -- the TQFT on unions of circles ---------------------------------------

def circle_value(k, pair):
    """A^{(x)k} as a graded free module; k = 0 gives the ground ring."""
    if k < 0:
        raise ValueError("circle count must be nonnegative")
    gens = []
    for labels in itertools.product(range(pair.rank), repeat=k):
        deg = sum(pair.degrees[i] for i in labels)
        gens.append((labels, deg))
    return GradedFreeModule(tuple(gens))


def elementary_map(kind, pair, k, which):
    """The TQFT value of one elementary cobordism on A^{(x)k}.

    kind: 'merge' (which = (i, j), j removed, result at i), 'split'
    (which = i, output i, i+1), 'birth' (insert at which), 'death'
    (remove which).  Returns {in_labels: {out_labels: coeff}}.
    """
    R = pair.ring
    out = {}
    if kind == "merge":
        i, j = which
        if not (0 <= i < j < k):
            raise IndexError("merge circle indices out of range")
        for labels in itertools.product(range(pair.rank), repeat=k):
            img = {}
            for c, coeff in pair.m(labels[i], labels[j]).items():
                new = list(labels)
                new[i] = c
                del new[j]
                img[tuple(new)] = coeff
            out[labels] = img
    elif kind == "split":
        i = which
        if not (0 <= i < k):
            raise IndexError("split circle index out of range")
        for labels in itertools.product(range(pair.rank), repeat=k):
            img = {}
            for (c1, c2), coeff in pair.delta(labels[i]).items():
                new = list(labels)
                new[i] = c1
                new.insert(i + 1, c2)
                img[tuple(new)] = coeff
            out[labels] = img
    elif kind == "birth":
        p = which
        if not (0 <= p <= k):
            raise IndexError("birth position out of range")
        for labels in itertools.product(range(pair.rank), repeat=k):
            new = list(labels)
            new.insert(p, 0)
            out[labels] = {tuple(new): R.one}
    elif kind == "death":
        p = which
        if not (0 <= p < k):
            raise IndexError("death circle index out of range")
        for labels in itertools.product(range(pair.rank), repeat=k):
            coeff = pair.eps(labels[p])
            new = list(labels)
            del new[p]
            out[labels] = {} if R.is_zero(coeff) else {tuple(new): coeff}
    else:
        raise ValueError(f"unknown elementary cobordism {kind!r}")
    return out


def closed_surface_value(genus, pair):
    """eps . (m Delta)^genus . iota evaluated in R."""
    R = pair.ring
    state = pair.unit_element()
    for _ in range(genus):
        nxt = {}
        for i, c in state.items():
            for (u, v), d in pair.delta(i).items():
                for w, e in pair.m(u, v).items():
                    val = R.add(nxt.get(w, R.zero), R.mul(R.mul(c, d), e))
                    if R.is_zero(val):
                        nxt.pop(w, None)
                    else:
                        nxt[w] = val
        state = nxt
    acc = R.zero
    for i, c in state.items():
        acc = R.add(acc, R.mul(c, pair.eps(i)))
    return acc
