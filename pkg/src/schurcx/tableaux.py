"""Z/2-graded Young tableaux, column normalization, and straightening.

Entries are nonzero integers: -i refers to the i-th odd basis vector (a
divided power generator, allowed to repeat inside a column) and +j to the
j-th even basis vector (an exterior generator, never repeated inside a
column).  Entries are ordered as integers, so every negative entry precedes
every positive one.

A tableau of shape lambda is stored by columns: column i is the tuple of
entries of the i-th column of the Young diagram, read top to bottom, and
stands for a vector in the c_i-th exterior power of the underlying complex
(c = conjugate shape).  A tableau is standard when

  (A) every column weakly increases top to bottom, repeats only negative, and
  (B) every row weakly increases left to right, repeats only positive.

Non-standard tableaux are rewritten into standard ones by `straighten`,
which repeatedly eliminates the topmost, leftmost row violation using the
quadratic relations between adjacent columns (`theta_expand`).

Sign conventions: swapping two adjacent entries multiplies by -1 unless both
are negative (two odd letters commute; any pair involving an even letter
anticommutes), and moving a block of s odd letters across t even letters
costs (-1)^(s*t).  These rules make the column spaces divided powers on the
odd part and exterior powers on the even part; `tensor_embed` realizes them
inside the tensor algebra and is used as an independent test oracle.
"""

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import NamedTuple


class Partition:
    """A weakly decreasing tuple of positive row lengths."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("partition parts must weakly decrease")
        self.parts = parts

    @property
    def size(self):
        return sum(self.parts)

    def column_lengths(self):
        """Lengths of the columns of the Young diagram."""
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= i)
                     for i in range(1, self.parts[0] + 1))

    def conjugate(self):
        return Partition(self.column_lengths())

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return self.parts == tuple(other)

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%s)" % (list(self.parts),)


def conjugate_partition(shape):
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    return shape.conjugate()


class Tableau:
    """A filling of a Young diagram, stored column by column."""

    __slots__ = ("columns",)

    def __init__(self, columns):
        columns = tuple(tuple(int(v) for v in col) for col in columns)
        if not columns or any(not col for col in columns):
            raise ValueError("empty column")
        lengths = [len(c) for c in columns]
        if any(a > b for a, b in zip(lengths[1:], lengths[:-1])):
            raise ValueError("column lengths must weakly decrease")
        if any(v == 0 for col in columns for v in col):
            raise ValueError("zero is not a valid entry")
        self.columns = columns

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0])
        cols = [[] for _ in range(ncols)]
        for row in rows:
            for i, v in enumerate(row):
                cols[i].append(v)
        return cls(cols)

    @classmethod
    def from_entries(cls, shape, entries):
        """Build from a shape (row lengths) and [column, row, value] records."""
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        lengths = shape.column_lengths()
        cols = [[None] * c for c in lengths]
        for i, j, v in entries:
            if not (1 <= i <= len(lengths)) or not (1 <= j <= lengths[i - 1]):
                raise ValueError("entry outside the diagram at (%d, %d)" % (i, j))
            if cols[i - 1][j - 1] is not None:
                raise ValueError("box (%d, %d) filled twice" % (i, j))
            cols[i - 1][j - 1] = v
        for i, col in enumerate(cols):
            if any(v is None for v in col):
                raise ValueError("column %d has an empty box" % (i + 1,))
        return cls(cols)

    @property
    def shape(self):
        """Row lengths, as a Partition."""
        return Partition([len(c) for c in self.columns]).conjugate()

    @property
    def size(self):
        return sum(len(c) for c in self.columns)

    def entry(self, i, j):
        """Entry in column i, row j (both 1-based)."""
        return self.columns[i - 1][j - 1]

    def to_entries(self):
        out = []
        for i, col in enumerate(self.columns, start=1):
            for j, v in enumerate(col, start=1):
                out.append([i, j, v])
        return out

    def reading_word(self):
        return tuple(v for col in self.columns for v in col)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def __repr__(self):
        return "Tableau(%s)" % (list(list(c) for c in self.columns),)


def check_entry_range(t, m, n):
    """Raise if some entry of t falls outside {-m..-1, 1..n}."""
    for col in t.columns:
        for v in col:
            if not (-m <= v <= -1 or 1 <= v <= n):
                raise ValueError("entry %d outside range m=%d, n=%d" % (v, m, n))


def normalize_column(entries):
    """Sort a column into canonical order, tracking the sign.

    Returns (canonical tuple, sign) or None when the column vanishes
    (a repeated positive entry).  Canonical order is weakly increasing:
    negatives first with repeats kept, then distinct positives.
    """
    work = list(entries)
    sign = 1
    for i in range(len(work)):
        for j in range(len(work) - 1 - i):
            x, y = work[j], work[j + 1]
            if x > y:
                work[j], work[j + 1] = y, x
                if x > 0 or y > 0:
                    sign = -sign
    for a, b in zip(work, work[1:]):
        if a == b and a > 0:
            return None
    return tuple(work), sign


def column_is_canonical(entries):
    return all(a <= b and (a != b or a < 0) for a, b in zip(entries, entries[1:]))


def is_standard(t):
    """Columns weakly increase (repeats negative), rows too (repeats positive)."""
    for col in t.columns:
        if not column_is_canonical(col):
            return False
    for a in range(len(t.columns) - 1):
        left, right = t.columns[a], t.columns[a + 1]
        for w in range(len(right)):
            x, y = left[w], right[w]
            if x > y or (x == y and x < 0):
                return False
    return True


class Violation(NamedTuple):
    """Location data for the topmost, leftmost row violation.

    row, col: the offending box pair is (col, row) and (col+1, row).
    split_row: the last row of the right column pulled into the middle
    exchange block.  u and v are the untouched head of the left column and
    tail of the right column.
    """
    row: int
    col: int
    split_row: int
    u: int
    v: int


def find_violation(t):
    """Find the first row-order violation of a column-sorted tableau.

    Returns None when rows are fine (the tableau is standard).  Columns must
    already be weakly increasing; entry parity is not checked here, so a
    column with repeated positives is acceptable input.
    """
    for col in t.columns:
        if any(a > b for a, b in zip(col, col[1:])):
            raise ValueError("column not sorted: %s" % (col,))
    ncols = len(t.columns)
    nrows = len(t.columns[0]) if ncols else 0
    for w in range(1, nrows + 1):
        for a in range(1, ncols):
            right = t.columns[a]
            if w > len(right):
                continue
            x, y = t.columns[a - 1][w - 1], right[w - 1]
            if x > y or (x == y and x < 0):
                cb = len(right)
                split = cb
                for wp in range(w, cb):
                    if y < right[wp]:
                        split = wp
                        break
                return Violation(row=w, col=a, split_row=split,
                                 u=w - 1, v=cb - split)
    return None


# -- column algebra ----------------------------------------------------------

def _split_column(col):
    """(list of (negative value, multiplicity), tuple of positives)."""
    negs = []
    poss = []
    for v in col:
        if v < 0:
            if negs and negs[-1][0] == v:
                negs[-1][1] += 1
            else:
                negs.append([v, 1])
        else:
            poss.append(v)
    return negs, tuple(poss)


def _merge_negatives(n1, n2):
    """Merge two divided-power multisets; coefficient is a binomial product."""
    counts = {}
    for v, k in n1:
        counts[v] = counts.get(v, 0) + k
    coeff = 1
    for v, k in n2:
        old = counts.get(v, 0)
        coeff *= comb(old + k, k)
        counts[v] = old + k
    merged = []
    for v in sorted(counts):
        merged.extend([v] * counts[v])
    return merged, coeff


def _merge_positives(p1, p2):
    """Concatenate exterior letters and sort with anticommutation signs."""
    if set(p1) & set(p2):
        return None
    merged = list(p1) + list(p2)
    sign = 1
    for i in range(len(merged)):
        for j in range(len(merged) - 1 - i):
            if merged[j] > merged[j + 1]:
                merged[j], merged[j + 1] = merged[j + 1], merged[j]
                sign = -sign
    return merged, sign


def column_product(x, y):
    """Multiply two canonical columns; None when the product vanishes.

    Returns (canonical column, integer coefficient).  Divided powers merge
    with binomial coefficients, exterior letters anticommute, and moving the
    odd letters of y across the even letters of x costs a sign.
    """
    nx, px = _split_column(x)
    ny, py = _split_column(y)
    sign = -1 if (sum(k for _, k in ny) * len(px)) % 2 else 1
    merged_p = _merge_positives(px, py)
    if merged_p is None:
        return None
    poss, psign = merged_p
    negs, coeff = _merge_negatives(nx, ny)
    return tuple(negs) + tuple(poss), sign * psign * coeff


def wedge_product(x, y):
    """Product of two canonical columns as a single-term combination."""
    result = column_product(tuple(x), tuple(y))
    if result is None:
        return {}
    col, coeff = result
    return {col: coeff}


def _unshuffle_sign(positions, total):
    """Sign of pulling the listed positions to the front, orders kept."""
    inversions = 0
    chosen = set(positions)
    for s in positions:
        inversions += sum(1 for t in range(s) if t not in chosen)
    return -1 if inversions % 2 else 1


def wedge_coproduct(x, split):
    """Split a canonical column into two, summing over all ways.

    Returns {(left column, right column): integer coefficient} for the
    component of the comultiplication landing in box counts `split`.
    Divided powers split with unit coefficients, exterior parts with the
    unshuffle sign, and swapping the inner odd/even blocks costs
    (-1)^(odd letters going right * even letters going left).
    """
    p, q = split
    x = tuple(x)
    if p + q != len(x) or p < 0 or q < 0:
        raise ValueError("split %r does not match column size %d" % (split, len(x)))
    negs, poss = _split_column(x)
    out = {}
    for left_counts in itertools.product(*[range(k + 1) for _, k in negs]):
        nleft = sum(left_counts)
        wanted = p - nleft
        if wanted < 0 or wanted > len(poss):
            continue
        left_negs = []
        right_negs = []
        for (v, k), b in zip(negs, left_counts):
            left_negs.extend([v] * b)
            right_negs.extend([v] * (k - b))
        tau = -1 if (len(right_negs) * wanted) % 2 else 1
        for subset in itertools.combinations(range(len(poss)), wanted):
            sign = _unshuffle_sign(subset, len(poss)) * tau
            chosen = set(subset)
            left = tuple(left_negs) + tuple(poss[i] for i in subset)
            right = tuple(right_negs) + tuple(poss[i] for i in range(len(poss))
                                              if i not in chosen)
            out[(left, right)] = sign
    return out


def theta_image(v1, v2, v3, ca, cb):
    """Expand one quadratic relation generator into column pairs.

    v1, v2, v3 are canonical columns with len(v1) + len(v2) + len(v3) equal
    to ca + cb; v2 is split into a (ca - len(v1), cb - len(v3)) piece, the
    left part multiplies v1 and the right part multiplies into v3.  Returns
    {(column of length ca, column of length cb): integer coefficient}.
    """
    u, v = len(v1), len(v3)
    out = {}
    for (left, right), sign in wedge_coproduct(v2, (ca - u, cb - v)).items():
        a = column_product(tuple(v1), left)
        if a is None:
            continue
        b = column_product(right, tuple(v3))
        if b is None:
            continue
        col_a, ka = a
        col_b, kb = b
        key = (col_a, col_b)
        c = out.get(key, 0) + sign * ka * kb
        if c:
            out[key] = c
        else:
            out.pop(key, None)
    return out


def theta_expand(t, violation):
    """The relation used to remove a violation, expanded over tableaux.

    The middle block joins the tail of the violating column and the head of
    its right neighbour; the relation is its image under split-and-remultiply
    and always contains t itself with coefficient +1 or -1.  Returns
    {Tableau: integer coefficient}, keeping the untouched columns.
    """
    a = violation.col
    left = t.columns[a - 1]
    right = t.columns[a]
    ca, cb = len(left), len(right)
    u, v = violation.u, violation.v
    if u + v >= cb:
        raise ValueError("inadmissible relation: u + v must stay below %d" % cb)
    v1 = left[:u]
    v3 = right[violation.split_row:]
    middle = normalize_column(left[u:] + right[:violation.split_row])
    if middle is None:
        raise ValueError("exchange block vanished; tableau was zero")
    v2 = middle[0]
    out = {}
    for (col_a, col_b), coeff in theta_image(v1, v2, v3, ca, cb).items():
        cols = t.columns[:a - 1] + (col_a, col_b) + t.columns[a + 1:]
        key = Tableau(cols)
        c = out.get(key, 0) + coeff
        if c:
            out[key] = c
        else:
            out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _straighten_columns(columns):
    """Straighten a column tuple; returns ((Tableau, coeff), ...)."""
    sign = 1
    canon = []
    for col in columns:
        norm = normalize_column(col)
        if norm is None:
            return ()
        canon.append(norm[0])
        sign *= norm[1]
    result = {}
    pending = {Tableau(canon): sign}
    while pending:
        t, coeff = pending.popitem()
        violation = find_violation(t)
        if violation is None:
            c = result.get(t, 0) + coeff
            if c:
                result[t] = c
            else:
                result.pop(t, None)
            continue
        relation = theta_expand(t, violation)
        lead = relation.pop(t)
        if lead not in (1, -1):
            raise AssertionError("leading coefficient %d is not a unit" % lead)
        # t = t - lead^(-1) * relation modulo the relation submodule, and the
        # t term itself cancels, leaving strictly earlier tableaux.
        for other, k in relation.items():
            c = pending.get(other, 0) - coeff * lead * k
            if c:
                pending[other] = c
            else:
                pending.pop(other, None)
    return tuple(sorted(result.items(), key=lambda item: item[0].columns))


def straighten(t, m=None, n=None):
    """Rewrite a tableau as a combination of standard tableaux.

    Returns {standard Tableau: integer coefficient}; the empty map when the
    tableau is zero (some column repeats a positive entry).  When m and n
    are given the entries are range-checked first.
    """
    if m is not None or n is not None:
        check_entry_range(t, m or 0, n or 0)
    return dict(_straighten_columns(t.columns))


# -- enumeration -------------------------------------------------------------

def tableau_sort_key(t, entry_degree=None):
    """Canonical order: ascending total degree, then the column reading word."""
    if entry_degree is None:
        return (0, t.reading_word())
    return (sum(entry_degree(v) for v in t.reading_word()), t.reading_word())


def enumerate_standard(shape, m, n, entry_degree=None, degree=None):
    """All standard tableaux of the shape with entries in {-m..-1, 1..n}.

    Sorted by ascending total degree under entry_degree (taken as zero when
    absent), ties broken by the column reading word.  When degree is given
    only tableaux of that total degree are returned.
    """
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    lengths = shape.column_lengths()
    values = list(range(-m, 0)) + list(range(1, n + 1))
    if not values:
        return []
    cols = [[None] * c for c in lengths]
    found = []

    def fill(ci, ri):
        if ci == len(lengths):
            found.append(Tableau([tuple(c) for c in cols]))
            return
        nci, nri = (ci, ri + 1) if ri + 1 < lengths[ci] else (ci + 1, 0)
        for v in values:
            if ri > 0:
                above = cols[ci][ri - 1]
                if v < above or (v == above and v > 0):
                    continue
            if ci > 0 and ri < lengths[ci - 1]:
                before = cols[ci - 1][ri]
                if v < before or (v == before and v < 0):
                    continue
            cols[ci][ri] = v
            fill(nci, nri)
        cols[ci][ri] = None

    fill(0, 0)
    found.sort(key=lambda t: tableau_sort_key(t, entry_degree))
    if degree is not None:
        if entry_degree is None:
            raise ValueError("degree filter needs an entry_degree map")
        found = [t for t in found
                 if sum(entry_degree(v) for v in t.reading_word()) == degree]
    return found


def column_basis(length, m, n):
    """All canonical columns of a length, sorted; divided entries may repeat."""
    out = []
    for k in range(length + 1):
        for negs in itertools.combinations_with_replacement(range(-m, 0), k):
            for poss in itertools.combinations(range(1, n + 1), length - k):
                out.append(tuple(negs) + tuple(poss))
    out.sort()
    return out


# -- tensor algebra oracle ---------------------------------------------------

def _pair_sign(x, y):
    """Sign for transposing adjacent letters: odd pairs commute."""
    return 1 if (x < 0 and y < 0) else -1


def tensor_embed(x):
    """Expand a canonical column or tableau in tensor coordinates.

    Returns {tuple of entry labels: integer coefficient}.  A column becomes
    the sum over interleavings of its divided word with each signed
    permutation of its exterior word; a tableau is the product of its
    columns, concatenating words.
    """
    if isinstance(x, Tableau):
        total = {(): 1}
        for col in x.columns:
            piece = tensor_embed(col)
            nxt = {}
            for w1, c1 in total.items():
                for w2, c2 in piece.items():
                    nxt[w1 + w2] = nxt.get(w1 + w2, 0) + c1 * c2
            total = nxt
        return total
    col = tuple(x)
    negs = [v for v in col if v < 0]
    poss = [v for v in col if v > 0]
    r = len(col)
    out = {}
    # divided block: unsigned shuffle of repeated letters, so every distinct
    # rearrangement of the negative multiset appears once
    for word_neg in set(itertools.permutations(negs)):
        for perm in itertools.permutations(range(len(poss))):
            psign = 1
            for i in range(len(perm)):
                for j in range(i + 1, len(perm)):
                    if perm[i] > perm[j]:
                        psign = -psign
            word_pos = [poss[i] for i in perm]
            for slots in itertools.combinations(range(r), len(negs)):
                word = [None] * r
                chosen = set(slots)
                ni = iter(word_neg)
                pi = iter(word_pos)
                for k in range(r):
                    word[k] = next(ni) if k in chosen else next(pi)
                crossings = 0
                for k, s in enumerate(slots):
                    crossings += sum(1 for t in range(s) if t not in chosen)
                sign = psign * (-1 if crossings % 2 else 1)
                key = tuple(word)
                c = out.get(key, 0) + sign
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
    return out


def shuffle_mul(u, v):
    """Shuffle product on tensor coordinates with the letter sign rule."""
    out = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            p, q = len(w1), len(w2)
            for slots in itertools.combinations(range(p + q), p):
                chosen = set(slots)
                word = [None] * (p + q)
                i1 = iter(w1)
                i2 = iter(w2)
                for k in range(p + q):
                    word[k] = next(i1) if k in chosen else next(i2)
                # sign: one factor per crossed pair, i.e. per letter of w2
                # that ends up before a letter of w1
                sign = 1
                for a, s in enumerate(slots):
                    for t in range(s):
                        if t not in chosen:
                            sign *= _pair_sign(w1[a], word[t])
                key = tuple(word)
                c = out.get(key, 0) + c1 * c2 * sign
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
    return out


def deconcatenate(u, p):
    """Split every tensor word after the first p letters."""
    out = {}
    for w, c in u.items():
        key = (w[:p], w[p:])
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


# -- relation span oracle ----------------------------------------------------

class SparseIntEchelon:
    """Incremental echelon form over the rationals with integer rows."""

    def __init__(self):
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    @staticmethod
    def _normalize(vec):
        g = 0
        for c in vec.values():
            g = gcd(g, c)
        if g > 1:
            for k in vec:
                vec[k] //= g
        return vec

    def reduce(self, vec):
        """Reduce a {index: int} vector; the residual is equivalent up to scale."""
        vec = dict(vec)
        while vec:
            piv = min(vec)
            row = self.rows.get(piv)
            if row is None:
                return vec
            a = vec.pop(piv)
            b = row[piv]
            # vec <- b*vec - a*row, which zeroes the pivot slot
            for k in vec:
                vec[k] *= b
            for k, c in row.items():
                if k == piv:
                    continue
                s = vec.get(k, 0) - c * a
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
            self._normalize(vec)
        return vec

    def insert(self, vec):
        """Reduce and install; returns True when the rank grew."""
        res = self.reduce(vec)
        if not res:
            return False
        self._normalize(res)
        self.rows[min(res)] = res
        return True

    def contains(self, vec):
        return not self.reduce(vec)


@lru_cache(maxsize=None)
def _theta_pair_rows(ca, cb, m, n):
    """Independent relation rows between one adjacent column pair.

    Rows are sparse vectors over pairs (left column, right column), one per
    independent relation generator, already in echelon form.
    """
    ech = SparseIntEchelon()
    for u in range(ca + 1):
        for v in range(cb - u):
            basis_u = column_basis(u, m, n)
            basis_mid = column_basis(ca - u + cb - v, m, n)
            basis_v = column_basis(v, m, n)
            for v1 in basis_u:
                for v3 in basis_v:
                    for v2 in basis_mid:
                        image = theta_image(v1, v2, v3, ca, cb)
                        if image:
                            ech.insert(image)
    # the echelon rows themselves are an independent generating set
    return tuple(tuple(sorted(row.items())) for _, row in sorted(ech.rows.items()))


class RelationSpan:
    """Echelon basis of the quadratic relation span for one shape and range.

    Coordinates run over tuples of canonical columns of the shape's column
    lengths ('all fillings with sorted columns').  The quotient by this span
    is the Schur space, whose dimension must match the standard tableau count.
    """

    def __init__(self, shape, m, n):
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        self.shape = shape
        self.m = m
        self.n = n
        lengths = shape.column_lengths()
        self.lengths = lengths
        self.bases = [column_basis(c, m, n) for c in lengths]
        self.index = {}
        for i, combo in enumerate(itertools.product(*self.bases)):
            self.index[combo] = i
        self.dimension = len(self.index)
        self.echelon = SparseIntEchelon()
        self._build()

    def _build(self):
        lengths = self.lengths
        t = len(lengths)
        for a in range(t - 1):
            pair_rows = _theta_pair_rows(lengths[a], lengths[a + 1], self.m, self.n)
            if not pair_rows:
                continue
            sides = [self.bases[k] for k in range(t) if k not in (a, a + 1)]
            for bystander in itertools.product(*sides):
                pre = bystander[:a]
                post = bystander[a:]
                for row in pair_rows:
                    vec = {}
                    for (col_a, col_b), coeff in row:
                        combo = pre + (col_a, col_b) + post
                        vec[self.index[combo]] = coeff
                    self.echelon.insert(vec)

    @property
    def rank(self):
        return self.echelon.rank

    @property
    def quotient_dimension(self):
        return self.dimension - self.rank

    def vector_of(self, combination):
        """Coordinates of {Tableau: coefficient} over the spanning fillings.

        Columns are normalized first; rational coefficients are cleared to
        integers, which leaves membership in the span unchanged.
        """
        vec = {}
        for t, coeff in combination.items():
            sign = 1
            cols = []
            for col in t.columns:
                norm = normalize_column(col)
                if norm is None:
                    break
                cols.append(norm[0])
                sign *= norm[1]
            else:
                idx = self.index[tuple(cols)]
                vec[idx] = vec.get(idx, 0) + Fraction(coeff) * sign
        denom = 1
        for c in vec.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        out = {}
        for k, c in vec.items():
            val = int(c * denom)
            if val:
                out[k] = val
        return out

    def contains(self, combination):
        return self.echelon.contains(self.vector_of(combination))


def relation_membership(combination, m=None, n=None):
    """True when a tableau combination lies in the quadratic relation span.

    All tableaux must share one shape.  The entry range defaults to the
    smallest range covering the entries.  Guarded to small shapes: the
    spanning set is exponential in the number of boxes.
    """
    if not combination:
        return True
    shapes = {t.shape for t in combination}
    if len(shapes) > 1:
        raise ValueError("mixed shapes in combination")
    shape = shapes.pop()
    if shape.size > 8:
        raise ValueError("size guard: shapes above 8 boxes are not supported")
    entries = [v for t in combination for v in t.reading_word()]
    if m is None:
        m = max((-v for v in entries if v < 0), default=0)
    if n is None:
        n = max((v for v in entries if v > 0), default=0)
    span = RelationSpan(shape, m, n)
    return span.contains(combination)
