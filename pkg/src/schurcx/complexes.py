"""Bounded complexes of finitely generated free modules, with JSON files.

A complex is stored as its minimum homological degree, a list of term ranks
in ascending degree, and one polynomial matrix per adjacent pair of degrees.
The matrix for degree k has shape rank(k-1) x rank(k): columns are indexed by
the source basis, rows by the target basis, i.e. d sends degree k to k-1.
"""

import json

from .ring import (CoefficientField, PolyRing, PolyMatrix, RATIONALS,
                   format_polynomial, mat_mul, scalar_rank)


class FreeComplex:
    """A bounded complex of free modules over a polynomial ring."""

    def __init__(self, ring, min_degree, ranks, differentials):
        ranks = tuple(int(r) for r in ranks)
        differentials = tuple(differentials)
        if not ranks:
            raise ValueError("a complex needs at least one term")
        if any(r < 0 for r in ranks):
            raise ValueError("negative rank")
        if len(differentials) != len(ranks) - 1:
            raise ValueError("expected %d differentials, got %d"
                             % (len(ranks) - 1, len(differentials)))
        for d in differentials:
            if d.ring != ring:
                raise ValueError("differential over wrong ring")
        self.ring = ring
        self.min_degree = int(min_degree)
        self.ranks = ranks
        self.differentials = differentials

    @property
    def max_degree(self):
        return self.min_degree + len(self.ranks) - 1

    def degrees(self):
        return range(self.min_degree, self.max_degree + 1)

    def rank_at(self, k):
        if self.min_degree <= k <= self.max_degree:
            return self.ranks[k - self.min_degree]
        return 0

    def differential_from(self, k):
        """The matrix of d: degree k -> degree k-1, or None off the range."""
        i = k - self.min_degree - 1
        if 0 <= i < len(self.differentials):
            return self.differentials[i]
        return None

    def __eq__(self, other):
        return (isinstance(other, FreeComplex) and self.ring == other.ring
                and self.min_degree == other.min_degree
                and self.ranks == other.ranks
                and list(self.differentials) == list(other.differentials))

    def __repr__(self):
        return "FreeComplex(degrees %d..%d, ranks %s)" % (
            self.min_degree, self.max_degree, list(self.ranks))


class ParityBasis:
    """Basis bookkeeping for the odd/even split of a complex.

    Basis vectors of odd homological degree are labeled -m..-1 and the even
    ones 1..n, ascending label order matching ascending (degree, index)
    order within each parity.  That way single-box tableaux in canonical
    order list the original basis vectors in their original order.
    """

    def __init__(self, odd, even):
        self.odd = tuple(odd)        # (degree, index) pairs, degree odd
        self.even = tuple(even)
        self.m = len(self.odd)
        self.n = len(self.even)
        self._by_position = {}
        for i, pos in enumerate(self.odd):
            self._by_position[pos] = i - self.m
        for j, pos in enumerate(self.even):
            self._by_position[pos] = j + 1

    def info(self, label):
        """(degree, index within degree) of an entry label."""
        if label < 0:
            return self.odd[label + self.m]
        if label > 0:
            return self.even[label - 1]
        raise ValueError("zero is not a valid entry")

    def degree_of(self, label):
        return self.info(label)[0]

    def label_of(self, degree, index):
        return self._by_position[(degree, index)]

    def __repr__(self):
        return "ParityBasis(m=%d, n=%d)" % (self.m, self.n)


def parity_split(f):
    """Split the terms of a complex into odd and even basis lists."""
    odd, even = [], []
    for k in f.degrees():
        target = odd if k % 2 else even
        for i in range(f.rank_at(k)):
            target.append((k, i))
    return ParityBasis(odd, even)


def validate_complex(f):
    """Return a list of violations; empty means the complex is valid.

    Reports every shape mismatch against the rank list and every adjacent
    pair of differentials whose composition is nonzero.
    """
    problems = []
    n = len(f.ranks)
    for i, d in enumerate(f.differentials):
        k = f.min_degree + i + 1
        want = (f.ranks[i], f.ranks[i + 1])
        if (d.rows, d.cols) != want:
            problems.append("d_%d has shape %dx%d, expected %dx%d"
                            % (k, d.rows, d.cols, want[0], want[1]))
    for i in range(len(f.differentials) - 1):
        a, b = f.differentials[i], f.differentials[i + 1]
        if a.cols != b.rows:
            continue  # already reported as a shape mismatch
        if not mat_mul(a, b).is_zero():
            k = f.min_degree + i + 1
            problems.append("d_%d . d_%d != 0" % (k, k + 1))
    return problems


def koszul_complex(elements):
    """Koszul complex on a list of ring elements.

    Degree j has one basis vector per sorted j-subset S of the elements, in
    lexicographic order, and d(e_S) = sum_l (-1)^(l-1) p_(S_l) e_(S minus S_l).
    For two elements this gives d1 = (p1 p2) and d2 = (-p2, p1)^T.
    """
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element")
    ring = elements[0].ring
    for p in elements:
        if p.ring != ring:
            raise ValueError("elements from different rings")
    n = len(elements)
    import itertools
    levels = [list(itertools.combinations(range(n), j)) for j in range(n + 1)]
    index = [{s: i for i, s in enumerate(lvl)} for lvl in levels]
    diffs = []
    for j in range(1, n + 1):
        mat = PolyMatrix.zero(ring, len(levels[j - 1]), len(levels[j]))
        for col, subset in enumerate(levels[j]):
            for l, elem in enumerate(subset):
                rest = subset[:l] + subset[l + 1:]
                row = index[j - 1][rest]
                sign = 1 if l % 2 == 0 else -1
                mat.entries[row][col] = mat.entries[row][col] + elements[elem] * sign
        diffs.append(mat)
    return FreeComplex(ring, 0, [len(lvl) for lvl in levels], diffs)


def homology_ranks_at_point(f, point):
    """Homology ranks of the complex specialized at a point, low degree first."""
    field = f.ring.field
    d_rank = {}
    for i, d in enumerate(f.differentials):
        k = f.min_degree + i + 1
        d_rank[k] = scalar_rank(field, d.evaluate(point)) if d.rows and d.cols else 0
    out = []
    for k in f.degrees():
        h = f.rank_at(k) - d_rank.get(k, 0) - d_rank.get(k + 1, 0)
        out.append(h)
    return out


# -- files -------------------------------------------------------------------

def ring_to_dict(ring):
    coeff = "QQ" if ring.field.is_rational else {"p": ring.field.p}
    return {"coefficients": coeff, "variables": list(ring.variables)}


def ring_from_dict(data):
    coeff = data["coefficients"]
    if coeff == "QQ":
        field = RATIONALS
    elif isinstance(coeff, dict) and "p" in coeff:
        field = CoefficientField(coeff["p"])
    else:
        raise ValueError("unknown coefficient field %r" % (coeff,))
    return PolyRing(field, data["variables"])


def complex_to_dict(f):
    return {
        "ring": ring_to_dict(f.ring),
        "min_degree": f.min_degree,
        "ranks": list(f.ranks),
        "differentials": [d.to_strings() for d in f.differentials],
    }


def complex_from_dict(data):
    ring = ring_from_dict(data["ring"])
    ranks = data["ranks"]
    diffs = []
    for i, rows in enumerate(data["differentials"]):
        if len(rows) != ranks[i] or any(len(r) != ranks[i + 1] for r in rows):
            raise ValueError("differential %d has wrong shape" % (i + 1,))
        parsed = [[ring.parse(s) for s in row] for row in rows]
        diffs.append(PolyMatrix(ring, parsed, shape=(ranks[i], ranks[i + 1])))
    return FreeComplex(ring, data["min_degree"], ranks, diffs)


def save_complex(f, path):
    with open(path, "w") as fh:
        json.dump(complex_to_dict(f), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_complex(path):
    with open(path) as fh:
        return complex_from_dict(json.load(fh))
