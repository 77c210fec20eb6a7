"""Exact arithmetic substrate: Gaussian rationals, dense multivariate
polynomials over them, and linear algebra over both.

Everything downstream computes in Q(i). The monomial order is graded
reverse lexicographic, fixed once here; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class GaussianRational:
    """Element a + bi of Q(i), with exact Fraction parts."""

    __slots__ = ("real", "imag")

    def __init__(self, real=0, imag=0):
        self.real = Fraction(real)
        self.imag = Fraction(imag)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.real * o.real + o.imag * o.imag
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.real * o.real + self.imag * o.imag) / n,
            (self.imag * o.real - self.real * o.imag) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self):
        return hash((self.real, self.imag))

    def __bool__(self):
        return self.real != 0 or self.imag != 0

    def is_zero(self):
        return self.real == 0 and self.imag == 0

    def conjugate(self):
        return GaussianRational(self.real, -self.imag)

    def sort_key(self):
        return (self.real, self.imag)

    def __repr__(self):
        return f"Qi({self.real!s}, {self.imag!s})"


Qi = GaussianRational

QI_ZERO = Qi(0)
QI_ONE = Qi(1)
QI_I = Qi(0, 1)


def render_scalar(s: GaussianRational) -> str:
    if s.imag == 0:
        return str(s.real)
    if s.real == 0:
        return f"{s.imag}i"
    if s.imag < 0:
        return f"{s.real} - {-s.imag}i"
    return f"{s.real} + {s.imag}i"


def parse_scalar(text: str) -> GaussianRational:
    """Parse "p/q", "p/q+r/si", "i", "-2i" and friends."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    terms = []
    start = 0
    for k in range(1, len(s)):
        if s[k] in "+-" and s[k - 1] not in "+-/":
            terms.append(s[start:k])
            start = k
    terms.append(s[start:])
    real = Fraction(0)
    imag = Fraction(0)
    for t in terms:
        if not t or t in "+-":
            raise ValueError(f"bad scalar {text!r}")
        if t.endswith("i"):
            body = t[:-1]
            if body in ("", "+"):
                imag += 1
            elif body == "-":
                imag -= 1
            else:
                imag += Fraction(body)
        else:
            real += Fraction(t)
    return GaussianRational(real, imag)


# ------------------------------------------------------------------ polynomials

def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


class MultiPoly:
    """Dense-in-support polynomial: exponent tuple -> nonzero Q(i) coefficient."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars, terms=None):
        self.num_vars = num_vars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != num_vars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for {num_vars} variables")
            if not isinstance(c, GaussianRational):
                c = GaussianRational(c)
            if not c.is_zero():
                clean[e] = c
        self.terms = clean

    # -- constructors

    @staticmethod
    def zero(num_vars):
        return MultiPoly(num_vars, {})

    @staticmethod
    def one(num_vars):
        return MultiPoly.constant(num_vars, QI_ONE)

    @staticmethod
    def constant(num_vars, c):
        return MultiPoly(num_vars, {(0,) * num_vars: c})

    @staticmethod
    def variable(num_vars, i):
        e = [0] * num_vars
        e[i] = 1
        return MultiPoly(num_vars, {tuple(e): QI_ONE})

    @staticmethod
    def linear_form(coeffs):
        """The linear polynomial sum_i coeffs[i] * x_i."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return MultiPoly(n, terms)

    # -- basic queries

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self):
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: MultiPoly(self.num_vars, t) for d, t in sorted(parts.items())}

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grevlex_key)
        return e, self.terms[e]

    def constant_term(self):
        return self.terms.get((0,) * self.num_vars, QI_ZERO)

    def coefficient_vector(self, monomials):
        return [self.terms.get(e, QI_ZERO) for e in monomials]

    # -- arithmetic

    def _check(self, other):
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.num_vars, GaussianRational._coerce(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, QI_ZERO) + c
        return MultiPoly(self.num_vars, t)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MultiPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational._coerce(other)
            return MultiPoly(self.num_vars, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, QI_ZERO) + c1 * c2
        return MultiPoly(self.num_vars, t)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = MultiPoly.one(self.num_vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    # -- calculus and substitution

    def partial(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            t[tuple(e2)] = c * e[i]
        return MultiPoly(self.num_vars, t)

    def evaluate(self, point):
        if len(point) != self.num_vars:
            raise ValueError("point dimension mismatch")
        point = [GaussianRational._coerce(p) for p in point]
        acc = QI_ZERO
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = v * point[i] ** k
            acc = acc + v
        return acc

    def compose(self, subs):
        """Substitute subs[i] for variable i; subs share one variable count."""
        if len(subs) != self.num_vars:
            raise ValueError("need one substitution per variable")
        n = subs[0].num_vars
        powers = [{0: MultiPoly.one(n)} for _ in subs]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * subs[i]
            return cache[k]

        acc = MultiPoly.zero(n)
        for e, c in self.terms.items():
            term = MultiPoly.constant(n, c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            acc = acc + term
        return acc

    def compose_linear(self, M):
        """f(Mx): substitute row i of M (as a linear form) for variable i."""
        return self.compose([MultiPoly.linear_form(row) for row in M])

    def shift(self, point):
        """f(x + point), exact re-expansion."""
        subs = [
            MultiPoly.variable(self.num_vars, i)
            + MultiPoly.constant(self.num_vars, GaussianRational._coerce(point[i]))
            for i in range(self.num_vars)
        ]
        return self.compose(subs)

    # -- division

    def divmod_by(self, p: "MultiPoly"):
        """Quotient and remainder for the single divisor p under grevlex."""
        self._check(p)
        if p.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        n = self.num_vars
        pe, pc = p.leading_term()
        q: dict = {}
        r: dict = {}
        work = dict(self.terms)
        while work:
            e = max(work, key=_grevlex_key)
            c = work.pop(e)
            if all(e[k] >= pe[k] for k in range(n)):
                d = tuple(e[k] - pe[k] for k in range(n))
                f = c / pc
                q[d] = q.get(d, QI_ZERO) + f
                for e2, c2 in p.terms.items():
                    if e2 == pe:
                        continue
                    tgt = tuple(e2[k] + d[k] for k in range(n))
                    nc = work.get(tgt, QI_ZERO) - f * c2
                    if nc.is_zero():
                        work.pop(tgt, None)
                    else:
                        work[tgt] = nc
            else:
                r[e] = c
        return MultiPoly(n, q), MultiPoly(n, r)

    # -- rendering

    def render(self, names=None):
        if not self.terms:
            return "(0)"
        if names is None:
            names = [f"x{i}" for i in range(self.num_vars)]
        pieces = []
        for e in sorted(self.terms, key=_grevlex_key, reverse=True):
            c = self.terms[e]
            factors = [f"({render_scalar(c)})"]
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{k}")
            pieces.append("*".join(factors))
        return " + ".join(pieces)

    @staticmethod
    def parse(text: str, num_vars: int) -> "MultiPoly":
        return _parse_poly(text, num_vars)

    def __repr__(self):
        return f"MultiPoly({self.num_vars}, {self.render()})"


def _parse_poly(text: str, num_vars: int) -> MultiPoly:
    """Parse sums of '*'-joined factors; factors are (scalar), bare scalars,
    or xN / xN^k powers.  Accepts everything render() produces."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    # split into signed terms at top parenthesis level
    terms = []
    depth = 0
    cur = ""
    sign = 1
    k = 0
    while k < len(s):
        ch = s[k]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses")
        if depth == 0 and ch in "+-" and cur.strip():
            prev = cur.rstrip()[-1:]
            if prev not in ("*", "^", "/"):
                terms.append((sign, cur.strip()))
                sign = 1 if ch == "+" else -1
                cur = ""
                k += 1
                continue
        if depth == 0 and ch in "+-" and not cur.strip():
            sign = sign * (1 if ch == "+" else -1)
            k += 1
            continue
        cur += ch
        k += 1
    if depth != 0:
        raise ValueError("unbalanced parentheses")
    if cur.strip():
        terms.append((sign, cur.strip()))
    if not terms:
        raise ValueError(f"cannot parse polynomial {text!r}")

    acc = MultiPoly.zero(num_vars)
    for sgn, body in terms:
        factors = []
        depth = 0
        cur = ""
        for ch in body:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "*" and depth == 0:
                factors.append(cur.strip())
                cur = ""
            else:
                cur += ch
        if cur.strip():
            factors.append(cur.strip())
        poly = MultiPoly.constant(num_vars, Qi(sgn))
        for f in factors:
            if not f:
                raise ValueError(f"cannot parse term {body!r}")
            if f.startswith("("):
                if not f.endswith(")"):
                    raise ValueError(f"cannot parse factor {f!r}")
                poly = poly * MultiPoly.constant(num_vars, parse_scalar(f[1:-1]))
            elif f[0] == "x":
                var, _, exp = f.partition("^")
                idx = int(var[1:])
                if idx >= num_vars:
                    raise ValueError(f"variable {var} out of range")
                k = int(exp) if exp else 1
                poly = poly * MultiPoly.variable(num_vars, idx) ** k
            else:
                poly = poly * MultiPoly.constant(num_vars, parse_scalar(f))
        acc = acc + poly
    return acc


def poly_divides(f: MultiPoly, p: MultiPoly):
    """Quotient q with f = p*q, or None when f is not in the ideal (p).

    A single polynomial is a Groebner basis of the ideal it generates, so a
    zero remainder under division is equivalent to membership.
    """
    q, r = f.divmod_by(p)
    return q if r.is_zero() else None


# ------------------------------------------------------------------ matrices

def _det_cofactor(M, zero):
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return M[0][0]
    acc = zero
    sign = 1
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * _det_cofactor(minor, zero)
        acc = acc + term if sign > 0 else acc - term
        sign = -sign
    return acc


def det_adjugate(M):
    """Determinant and adjugate of a square MultiPoly matrix.

    M * adj = det * identity as an exact polynomial identity.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    nv = M[0][0].num_vars
    zero = MultiPoly.zero(nv)
    one = MultiPoly.one(nv)
    det = _det_cofactor(M, zero)
    if n == 1:
        return det, [[one]]
    adj = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [M[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            cof = _det_cofactor(minor, zero)
            if (i + j) % 2:
                cof = -cof
            adj[i][j] = cof
    return det, adj


@dataclass
class LinearSolution:
    rank: int
    particular: list | None
    kernel: list


def _rref(A, b=None):
    """Row-reduce A (and b alongside); returns rows, rhs, pivot columns."""
    rows = [list(r) for r in A]
    rhs = list(b) if b is not None else [QI_ZERO] * len(rows)
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if not rows[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rhs[r], rhs[piv] = rhs[piv], rhs[r]
        inv = QI_ONE / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        rhs[r] = rhs[r] * inv
        for i in range(m):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * c for a, c in zip(rows[i], rows[r])]
                rhs[i] = rhs[i] - f * rhs[r]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, rhs, pivots


def solve_exact(A, b) -> LinearSolution:
    """Exact Gaussian elimination over Q(i): rank, one solution, kernel basis.

    Inconsistency is reported (particular = None), never raised.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows, rhs, pivots = _rref(A, b)
    rank = len(pivots)
    for i in range(rank, m):
        if not rhs[i].is_zero():
            return LinearSolution(rank, None, _kernel_from_rref(rows, pivots, n))
    particular = [QI_ZERO] * n
    for r, col in enumerate(pivots):
        particular[col] = rhs[r]
    return LinearSolution(rank, particular, _kernel_from_rref(rows, pivots, n))


def _kernel_from_rref(rows, pivots, n):
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [QI_ZERO] * n
        v[f] = QI_ONE
        for r, col in enumerate(pivots):
            v[col] = -rows[r][f]
        basis.append(v)
    return basis


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0])
    return [
        [sum((A[i][t] * B[t][j] for t in range(k)), QI_ZERO) for j in range(m)]
        for i in range(n)
    ]


def mat_vec(A, v):
    return [sum((A[i][j] * v[j] for j in range(len(v))), QI_ZERO) for i in range(len(A))]


def mat_identity(n):
    return [[QI_ONE if i == j else QI_ZERO for j in range(n)] for i in range(n)]


def mat_transpose(A):
    return [list(col) for col in zip(*A)]


def mat_det(A):
    if any(len(row) != len(A) for row in A):
        raise ValueError("matrix is not square")
    return _det_cofactor(A, QI_ZERO)


def mat_inverse(A):
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    aug = [list(A[i]) + [QI_ONE if j == i else QI_ZERO for j in range(n)] for i in range(n)]
    rows, _, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows[:n]]


def mat_rank(A):
    _, _, pivots = _rref(A)
    return len(pivots)


def kernel_basis(A):
    rows, _, pivots = _rref(A)
    n = len(A[0]) if A else 0
    return _kernel_from_rref(rows, pivots, n)


class LinearSpan:
    """Incrementally built row space in reduced echelon form."""

    def __init__(self, length):
        self.length = length
        self.rows = []  # (pivot index, normalized vector), sorted by pivot

    def reduce(self, vec):
        v = [GaussianRational._coerce(x) for x in vec]
        for piv, row in self.rows:
            if not v[piv].is_zero():
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec):
        return all(x.is_zero() for x in self.reduce(vec))

    def add(self, vec) -> bool:
        v = self.reduce(vec)
        piv = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if piv is None:
            return False
        inv = QI_ONE / v[piv]
        v = [x * inv for x in v]
        for k, (p2, row) in enumerate(self.rows):
            if not row[piv].is_zero():
                f = row[piv]
                self.rows[k] = (p2, [a - f * b for a, b in zip(row, v)])
        self.rows.append((piv, v))
        self.rows.sort(key=lambda t: t[0])
        return True

    @property
    def dim(self):
        return len(self.rows)

    @property
    def basis(self):
        return [row for _, row in self.rows]


# ------------------------------------------------------------------ univariate

def univ_trim(c):
    c = list(c)
    while c and c[-1].is_zero():
        c.pop()
    return c


def univ_degree(c):
    c = univ_trim(c)
    return len(c) - 1


def univ_eval(c, x):
    acc = QI_ZERO
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def univ_derivative(c):
    return univ_trim([c[k] * k for k in range(1, len(c))])


def univ_divmod(f, g):
    f = univ_trim(f)
    g = univ_trim(g)
    if not g:
        raise ZeroDivisionError("univariate division by zero")
    q = [QI_ZERO] * max(0, len(f) - len(g) + 1)
    r = list(f)
    while len(r) >= len(g) and univ_trim(r):
        r = univ_trim(r)
        if len(r) < len(g):
            break
        k = len(r) - len(g)
        coef = r[-1] / g[-1]
        q[k] = coef
        for i in range(len(g)):
            r[i + k] = r[i + k] - coef * g[i]
        r.pop()
    return univ_trim(q), univ_trim(r)


def univ_gcd(f, g):
    a, b = univ_trim(f), univ_trim(g)
    while b:
        _, r = univ_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def univ_is_squarefree(f):
    f = univ_trim(f)
    if len(f) <= 1:
        return True
    return len(univ_gcd(f, univ_derivative(f))) == 1


def matrix_min_poly(A):
    """Monic minimal polynomial of a square Q(i) matrix, ascending coeffs."""
    n = len(A)
    power = mat_identity(n)
    flats = []
    span = LinearSpan(n * n)
    for k in range(n * n + 1):
        flat = [x for row in power for x in row]
        if not span.add(flat):
            cols = [[flats[j][i] for j in range(k)] for i in range(n * n)]
            sol = solve_exact(cols, flat)
            assert sol.particular is not None
            coeffs = [-c for c in sol.particular] + [QI_ONE]
            return univ_trim(coeffs)
        flats.append(flat)
        power = mat_mul(power, A)
    raise AssertionError("minimal polynomial search exceeded the dimension bound")


def _int_divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _gaussian_int_divisors(a, b):
    """All Gaussian integers x + yi dividing a + bi (which must be nonzero)."""
    norm = a * a + b * b
    out = set()
    for d in _int_divisors(norm):
        x = 0
        while x * x <= d:
            y2 = d - x * x
            y = isqrt(y2)
            if y * y == y2:
                for sx in (x, -x):
                    for sy in (y, -y):
                        if sx == 0 and sy == 0:
                            continue
                        # (a+bi)/(sx+syi) integral iff d divides both parts below
                        if (a * sx + b * sy) % d == 0 and (b * sx - a * sy) % d == 0:
                            out.add((sx, sy))
            x += 1
    return out


def gaussian_rational_roots(f):
    """Distinct roots of f in Q(i) plus a flag: does f split completely?

    Candidate roots p/q come from Gaussian-integer divisors of the (cleared)
    constant and leading coefficients; each is verified by exact evaluation
    and removed by deflation, so the flag is honest.
    """
    f = univ_trim(f)
    if len(f) <= 1:
        return [], True
    work = list(f)
    roots = []
    # strip roots at zero first
    while work[0].is_zero():
        if Qi(0) not in roots:
            roots.append(Qi(0))
        work = work[1:]
    if len(work) <= 1:
        return roots, True
    # clear denominators to Gaussian-integer coefficients
    den = 1
    for c in work:
        den = den * c.real.denominator // _gcd(den, c.real.denominator)
        den = den * c.imag.denominator // _gcd(den, c.imag.denominator)
    cleared = [c * den for c in work]
    c0 = cleared[0]
    ck = cleared[-1]
    candidates = set()
    for p in _gaussian_int_divisors(int(c0.real), int(c0.imag)):
        for q in _gaussian_int_divisors(int(ck.real), int(ck.imag)):
            candidates.add(Qi(p[0], p[1]) / Qi(q[0], q[1]))
    for r in sorted(candidates, key=lambda s: s.sort_key()):
        while univ_degree(work) >= 1 and univ_eval(work, r).is_zero():
            if r not in roots:
                roots.append(r)
            work = _deflate(work, r)
    return roots, univ_degree(work) == 0


def _deflate(f, r):
    # synthetic division of f by (x - r); remainder is known to vanish
    out = [QI_ZERO] * (len(f) - 1)
    carry = QI_ZERO
    for k in range(len(f) - 1, 0, -1):
        carry = f[k] + carry * r
        out[k - 1] = carry
    return univ_trim(out)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a) if a else 1
