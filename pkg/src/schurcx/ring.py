"""Exact sparse multivariate polynomial arithmetic over QQ or GF(p).

Polynomials are maps from exponent tuples to nonzero field scalars; the
variable order is fixed by the ring and every operation is exact (Fraction
arithmetic over the rationals, modular integers over a prime field).  No
floating point is used anywhere.

    >>> R = PolyRing(RATIONALS, ("x", "y"))
    >>> x, y = R.gens()
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
"""

from fractions import Fraction
import random

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid for every n below 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % p == 0 for p in small):
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CoefficientField:
    """The rationals (p is None) or the prime field GF(p).

    Scalars are Fraction instances over the rationals and plain ints in
    [0, p) over a prime field.
    """

    def __init__(self, p=None):
        if p is not None:
            if not isinstance(p, int) or not is_prime(p):
                raise ValueError("field characteristic must be prime, got %r" % (p,))
        self.p = p

    @property
    def is_rational(self):
        return self.p is None

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, v):
        """Map an int or Fraction into the field."""
        if self.p is None:
            return Fraction(v)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ValueError("denominator divisible by %d" % self.p)
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        return v % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def invert(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.invert(b))

    def from_quotient(self, num, den):
        if den == 0:
            raise ValueError("zero denominator")
        if self.p is None:
            return Fraction(num, den)
        return self.coerce(Fraction(num, den))

    def format(self, a):
        if self.p is None:
            return str(a)
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and self.p == other.p

    def __hash__(self):
        return hash(("CoefficientField", self.p))

    def __repr__(self):
        return "RATIONALS" if self.p is None else "GF(%d)" % self.p


RATIONALS = CoefficientField()


def GF(p):
    return CoefficientField(p)


class PolyRing:
    """A polynomial ring over a coefficient field with a fixed variable order."""

    def __init__(self, field, variables):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for name in variables:
            if not name or not (name[0].isalpha() or name[0] == "_"):
                raise ValueError("bad variable name %r" % (name,))
        self.field = field
        self.variables = variables

    @property
    def nvars(self):
        return len(self.variables)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.coerce(c)
        if c == self.field.zero():
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name):
        i = self.variables.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one()})

    def gens(self):
        return tuple(self.variable(v) for v in self.variables)

    def polynomial(self, terms):
        """Build a polynomial from {exponent tuple: scalar}, dropping zeros."""
        clean = {}
        zero = self.field.zero()
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValueError("bad exponent tuple %r" % (exps,))
            c = self.field.coerce(c)
            if c != zero:
                clean[exps] = c
        return Polynomial(self, clean)

    def parse(self, text):
        return parse_polynomial(self, text)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.variables == other.variables)

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return "PolyRing(%r, %r)" % (self.field, list(self.variables))


class Polynomial:
    """Immutable sparse polynomial; term map never stores a zero scalar."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check_ring(other)
        field = self.ring.field
        zero = field.zero()
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = field.add(out.get(exps, zero), c)
            if s == zero:
                out.pop(exps, None)
            else:
                out[exps] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {e: field.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.__neg__().__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field.coerce(other)
            if c == self.ring.field.zero():
                return self.ring.zero()
            field = self.ring.field
            return Polynomial(self.ring,
                              {e: field.mul(v, c) for e, v in self.terms.items()})
        self._check_ring(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        field = self.ring.field
        zero = field.zero()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = field.add(out.get(e, zero), field.mul(c1, c2))
                if s == zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def evaluate(self, point):
        """Evaluate at a point (one scalar per ring variable), exactly."""
        if len(point) != self.ring.nvars:
            raise ValueError("point has %d coordinates, ring has %d variables"
                             % (len(point), self.ring.nvars))
        field = self.ring.field
        point = [field.coerce(v) for v in point]
        total = field.zero()
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                for _ in range(e):
                    v = field.mul(v, x)
            total = field.add(total, v)
        return total

    def leading(self):
        """Leading (exponents, scalar) under descending lex; None for zero."""
        if not self.terms:
            return None
        e = max(self.terms)
        return e, self.terms[e]

    def exact_divide(self, divisor):
        """Return q with self == q * divisor, or raise if no exact quotient."""
        self._check_ring(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        field = self.ring.field
        lead_e, lead_c = divisor.leading()
        rem = self
        q = {}
        while not rem.is_zero():
            re, rc = rem.leading()
            diff = tuple(a - b for a, b in zip(re, lead_e))
            if any(d < 0 for d in diff):
                raise ValueError("inexact polynomial division")
            qc = field.div(rc, lead_c)
            q[diff] = qc
            rem = rem - Polynomial(self.ring, {diff: qc}) * divisor
        return Polynomial(self.ring, q)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return "Polynomial(%s)" % format_polynomial(self)


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_eval(p, point):
    return p.evaluate(point)


# -- text grammar ------------------------------------------------------------
#
# poly   := [sign] term { ('+' | '-') term }
# term   := atom { '*' atom }
# atom   := INT [ '/' INT ] | NAME [ '^' INT ]
#
# Whitespace is insignificant.  format_polynomial always emits parseable text
# and parse/format round-trip exactly.

def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError("unexpected character %r in polynomial" % ch)
    return tokens


def parse_polynomial(ring, text):
    """Parse polynomial text in the ring's variables."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take(kind):
        nonlocal pos
        if peek() != kind:
            raise ValueError("expected %s at token %d of %r" % (kind, pos, text))
        tok = tokens[pos]
        pos += 1
        return tok[1]

    def parse_atom():
        nonlocal pos
        if peek() == "int":
            num = int(take("int"))
            if peek() == "/":
                take("/")
                den = int(take("int"))
                return ring.constant(ring.field.from_quotient(num, den))
            return ring.constant(num)
        if peek() == "name":
            name = take("name")
            if name not in ring.variables:
                raise ValueError("unknown variable %r" % name)
            v = ring.variable(name)
            if peek() == "^":
                take("^")
                return v ** int(take("int"))
            return v
        raise ValueError("expected a coefficient or variable in %r" % text)

    def parse_term():
        p = parse_atom()
        while peek() == "*":
            take("*")
            p = p * parse_atom()
        return p

    if not tokens:
        raise ValueError("empty polynomial text")
    sign = 1
    if peek() in ("+", "-"):
        sign = -1 if take(peek()) == "-" else 1
    result = parse_term() * sign
    while peek() in ("+", "-"):
        sign = -1 if take(peek()) == "-" else 1
        result = result + parse_term() * sign
    if pos != len(tokens):
        raise ValueError("trailing tokens in %r" % text)
    return result


def _format_monomial(ring, exps):
    factors = []
    for name, e in zip(ring.variables, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append("%s^%d" % (name, e))
    return "*".join(factors)


def format_polynomial(p):
    """Canonical text form: terms in descending lex order of exponents."""
    if not p.terms:
        return "0"
    field = p.ring.field
    pieces = []
    for exps in sorted(p.terms, reverse=True):
        c = p.terms[exps]
        mono = _format_monomial(p.ring, exps)
        if field.is_rational:
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = "%s*%s" % (mag, mono)
            else:
                body = str(mag)
            pieces.append(("-" if neg else "+", body))
        else:
            body = "%d*%s" % (c, mono) if mono and c != 1 else (mono or str(c))
            pieces.append(("+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


# -- matrices ----------------------------------------------------------------

class PolyMatrix:
    """Dense matrix of polynomials from one ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, entries, shape=None):
        entries = [list(row) for row in entries]
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if shape is not None:
            if rows != shape[0] or (rows and cols != shape[1]):
                raise ValueError("entries do not match shape %r" % (shape,))
            rows, cols = shape  # keep column count of an empty matrix
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for p in row:
                if not isinstance(p, Polynomial) or p.ring != ring:
                    raise ValueError("entry from wrong ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def zero(cls, ring, rows, cols):
        z = ring.zero()
        return cls(ring, [[z] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, ring, n):
        z, one = ring.zero(), ring.one()
        return cls(ring, [[one if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_strings(cls, ring, rows):
        return cls(ring, [[ring.parse(s) for s in row] for row in rows])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.ring == other.ring
                and self.shape == other.shape
                and self.entries == other.entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        return all(p.is_zero() for row in self.entries for p in row)

    def transpose(self):
        return PolyMatrix(self.ring,
                          [[self.entries[i][j] for i in range(self.rows)]
                           for j in range(self.cols)],
                          shape=(self.cols, self.rows))

    def evaluate(self, point):
        return [[p.evaluate(point) for p in row] for row in self.entries]

    def to_strings(self):
        return [[format_polynomial(p) for p in row] for row in self.entries]

    def __repr__(self):
        return "PolyMatrix(%dx%d over %r)" % (self.rows, self.cols, self.ring.field)


def mat_mul(a, b):
    """Exact matrix product; raises on shape or ring mismatch."""
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    if a.cols != b.rows:
        raise ValueError("shape mismatch: %dx%d times %dx%d"
                         % (a.rows, a.cols, b.rows, b.cols))
    zero = a.ring.zero()
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = zero
            for k in range(a.cols):
                p, q = a.entries[i][k], b.entries[k][j]
                if p.terms and q.terms:
                    acc = acc + p * q
            row.append(acc)
        out.append(row)
    return PolyMatrix(a.ring, out, shape=(a.rows, b.cols))


def scalar_rank(field, rows):
    """Rank of a scalar matrix by exact Gaussian elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    zero = field.zero()
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if m[i][col] != zero:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = field.invert(m[rank][col])
        for i in range(rank + 1, nrows):
            c = m[i][col]
            if c == zero:
                continue
            factor = field.mul(c, inv)
            m[i] = [field.add(a, field.neg(field.mul(factor, b)))
                    for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_rank_at_point(a, point):
    """Rank of the matrix specialized at a point, by exact elimination."""
    return scalar_rank(a.ring.field, a.evaluate(point))


def mat_generic_rank(a, trials=3, seed=0):
    """Monte Carlo generic rank: max rank over random integer specializations.

    Coordinates are drawn uniformly from [1, 2^20] with a seeded RNG, so the
    result is reproducible.  The returned value is a lower bound on the true
    generic rank that is correct with high probability (Schwartz-Zippel).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        point = [rng.randint(1, 1 << 20) for _ in range(a.ring.nvars)]
        best = max(best, mat_rank_at_point(a, point))
    return best


def mat_rank_exact(a, max_dim=64):
    """Symbolic rank by fraction-free (Bareiss) elimination.

    Entry growth makes this expensive on large matrices, so the dimension is
    guarded; raise the guard deliberately if a bigger certificate is wanted.
    """
    if max(a.rows, a.cols) > max_dim:
        raise ValueError("matrix exceeds Bareiss size guard (%d)" % max_dim)
    m = [row[:] for row in a.entries]
    nrows, ncols = a.rows, a.cols
    prev = a.ring.one()
    rank = 0
    for k in range(min(nrows, ncols)):
        pivot = None
        for i in range(rank, nrows):
            for j in range(rank, ncols):
                if not m[i][j].is_zero():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        m[rank], m[pi] = m[pi], m[rank]
        if pj != rank:
            for row in m:
                row[rank], row[pj] = row[pj], row[rank]
        piv = m[rank][rank]
        for i in range(rank + 1, nrows):
            for j in range(rank + 1, ncols):
                num = m[i][j] * piv - m[i][rank] * m[rank][j]
                m[i][j] = num.exact_divide(prev)
            m[i][rank] = a.ring.zero()
        prev = piv
        rank += 1
    return rank
