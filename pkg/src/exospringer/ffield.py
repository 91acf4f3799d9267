"""Exact arithmetic and linear algebra over prime fields F_p, p an odd prime.

Everything here is pure and exact: field elements are plain ints in
[0, p), matrices are immutable tuples of tuples, and all eliminations
are integer arithmetic mod p.  Subspaces are kept in reduced row
echelon form so that equal subspaces compare equal.
"""

from math import isqrt


class NonSquareError(ValueError):
    pass


class NotNilpotentError(ValueError):
    pass


class NotStableError(ValueError):
    pass


def is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d <= isqrt(p):
        if p % d == 0:
            return False
        d += 2
    return True


def check_modulus(p):
    if not is_odd_prime(p):
        raise ValueError("modulus must be an odd prime, got %r" % (p,))
    if p > 2**31:
        raise ValueError("modulus too large: %d" % p)
    return p


def inv_mod(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 mod %d" % p)
    return pow(a, -1, p)


def field_arith(a, b, op, p):
    """Field operation on representatives a, b in [0, p)."""
    if op == "add":
        return (a + b) % p
    if op == "sub":
        return (a - b) % p
    if op == "mul":
        return (a * b) % p
    if op == "inv":
        return inv_mod(b, p)
    if op == "div":
        return (a * inv_mod(b, p)) % p
    raise ValueError("unknown op %r" % (op,))


class FpMatrix:
    """Immutable dense matrix over F_p (row-major tuple of tuples)."""

    __slots__ = ("p", "rows", "cols", "entries")

    def __init__(self, entries, p):
        check_modulus(p)
        rows = tuple(tuple(int(x) % p for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *a):
        raise AttributeError("FpMatrix is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols, p):
        return cls(((0,) * cols,) * rows, p)

    @classmethod
    def identity(cls, n, p):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)), p)

    @classmethod
    def from_json(cls, obj):
        m = cls(_unflatten(obj["entries"], obj["rows"], obj["cols"]), obj["p"])
        return m

    def to_json(self):
        return {"p": self.p, "rows": self.rows, "cols": self.cols,
                "entries": [x for row in self.entries for x in row]}

    # -- basic algebra -----------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FpMatrix) and self.p == other.p
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.p, self.entries))

    def __repr__(self):
        return "FpMatrix(%r, p=%d)" % ([list(r) for r in self.entries], self.p)

    def __add__(self, other):
        self._compat(other)
        p = self.p
        return FpMatrix(tuple(tuple((a + b) % p for a, b in zip(r1, r2))
                              for r1, r2 in zip(self.entries, other.entries)), p)

    def __sub__(self, other):
        self._compat(other)
        p = self.p
        return FpMatrix(tuple(tuple((a - b) % p for a, b in zip(r1, r2))
                              for r1, r2 in zip(self.entries, other.entries)), p)

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.p
            return FpMatrix(tuple(tuple((other * a) % p for a in row)
                                  for row in self.entries), p)
        if self.cols != other.rows or self.p != other.p:
            raise ValueError("shape/modulus mismatch in matmul")
        p = self.p
        bt = tuple(zip(*other.entries))
        return FpMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) % p
                                    for col in bt)
                              for row in self.entries), p)

    __rmul__ = __mul__

    def __neg__(self):
        return self * (self.p - 1)

    def _compat(self, other):
        if (self.rows, self.cols, self.p) != (other.rows, other.cols, other.p):
            raise ValueError("shape/modulus mismatch")

    def transpose(self):
        return FpMatrix(tuple(zip(*self.entries)), self.p)

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def is_square(self):
        return self.rows == self.cols

    def apply(self, vec):
        """Matrix times column vector (a tuple of ints)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        p = self.p
        return tuple(sum(a * x for a, x in zip(row, vec)) % p
                     for row in self.entries)

    def power(self, k):
        assert k >= 0
        if not self.is_square():
            raise NonSquareError("power of non-square matrix")
        result = FpMatrix.identity(self.rows, self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- elimination --------------------------------------------------

    def rref(self):
        """(reduced echelon form, pivot column indices)."""
        p = self.p
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = inv_mod(m[r][c], p)
            m[r] = [(x * inv) % p for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return FpMatrix(m, p), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Canonical Subspace {v : Mv = 0} of the column space F_p^cols."""
        red, pivots = self.rref()
        p = self.p
        free = [c for c in range(self.cols) if c not in pivots]
        vecs = []
        for c in free:
            v = [0] * self.cols
            v[c] = 1
            for i, pc in enumerate(pivots):
                v[pc] = (-red.entries[i][c]) % p
            vecs.append(tuple(v))
        return Subspace(self.cols, vecs, p)

    def inverse(self):
        if not self.is_square():
            raise NonSquareError("inverse of non-square matrix")
        n = self.rows
        p = self.p
        aug = FpMatrix(tuple(tuple(row) + tuple(1 if i == j else 0 for j in range(n))
                             for i, row in enumerate(self.entries)), p)
        red, pivots = aug.rref()
        if len(pivots) < n or pivots[:n] != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return FpMatrix(tuple(row[n:] for row in red.entries), p)

    def is_invertible(self):
        return self.is_square() and self.rank() == self.rows


def _unflatten(flat, rows, cols):
    if len(flat) != rows * cols:
        raise ValueError("entries length != rows*cols")
    return tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))


class Subspace:
    """Subspace of F_p^n, stored as a canonical reduced-echelon basis.

    Basis vectors are rows of an rref matrix, so two equal subspaces
    always produce identical objects.
    """

    __slots__ = ("ambient_dim", "basis", "p", "_pivots")

    def __init__(self, ambient_dim, vectors, p):
        check_modulus(p)
        vecs = [tuple(int(x) % p for x in v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("vector length != ambient dim")
        vecs = [v for v in vecs if any(v)]
        if vecs:
            red, pivots = FpMatrix(vecs, p).rref()
            rows = red.entries[: len(pivots)]
        else:
            rows, pivots = (), ()
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(rows))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.p == other.p
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.p, self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d of %d, p=%d)" % (self.dim, self.ambient_dim, self.p)

    def contains(self, vec):
        return self.coordinates(vec) is not None

    def coordinates(self, vec):
        """Coefficients of vec in the echelon basis, or None."""
        p = self.p
        v = [int(x) % p for x in vec]
        coeffs = []
        for row, pc in zip(self.basis, self._pivots):
            c = v[pc]
            coeffs.append(c)
            if c:
                v = [(a - c * b) % p for a, b in zip(v, row)]
        if any(v):
            return None
        return tuple(coeffs)


def commutant_basis(y):
    """Basis of {Z : ZY = YZ} inside End(F_p^m).

    The commutant is the kernel of Z |-> ZY - YZ seen as a linear map
    on the m^2-dimensional space of matrices.
    """
    if not y.is_square():
        raise NonSquareError("commutant of non-square matrix")
    m, p = y.rows, y.p
    # row (i,j) of the big system = entry (i,j) of E_kl*Y - Y*E_kl summed
    cols = []
    for k in range(m):
        for l in range(m):
            # image of the unit matrix E_kl under Z -> ZY - YZ
            img = [[0] * m for _ in range(m)]
            for j in range(m):
                img[k][j] = (img[k][j] + y.entries[l][j]) % p
            for i in range(m):
                img[i][l] = (img[i][l] - y.entries[i][k]) % p
            cols.append([img[i][j] for i in range(m) for j in range(m)])
    big = FpMatrix(tuple(zip(*cols)), p)  # m^2 x m^2, columns indexed by (k,l)
    ker = big.kernel_basis()
    basis = []
    for v in ker.basis:
        basis.append(FpMatrix(_unflatten(v, m, m), p))
    return basis


def nilpotent_jordan_type(n_mat):
    """Jordan type (a partition of m) of a nilpotent m x m matrix.

    The multiplicity of parts >= j is rank(N^(j-1)) - rank(N^j).
    """
    if not n_mat.is_square():
        raise NonSquareError("jordan type of non-square matrix")
    m = n_mat.rows
    # repeated squaring up to a power >= m
    power = n_mat
    k = 1
    while k < m:
        power = power * power
        k *= 2
    if not power.is_zero():
        raise NotNilpotentError("matrix is not nilpotent")
    ranks = [m]
    cur = FpMatrix.identity(m, n_mat.p)
    while ranks[-1] > 0:
        cur = cur * n_mat
        ranks.append(cur.rank())
    # number of parts >= j is ranks[j-1] - ranks[j]
    parts = []
    for j in range(1, len(ranks)):
        count_ge_j = ranks[j - 1] - ranks[j]
        parts.append(count_ge_j)
    # parts[j-1] = #parts >= j; convert to the partition itself
    out = []
    for j in range(len(parts), 0, -1):
        out.extend([j] * (parts[j - 1] - (parts[j] if j < len(parts) else 0)))
    out.sort(reverse=True)
    assert sum(out) == m
    return tuple(out)


def induced_action(m_mat, w, mode):
    """Matrix of m_mat on a stable subspace W or on ambient/W.

    restrict: the matrix in W's echelon basis.
    quotient: the matrix on a fixed complement of W (coset representatives
    given by the non-pivot coordinates), well defined up to conjugacy.
    """
    if m_mat.cols != w.ambient_dim or m_mat.p != w.p:
        raise ValueError("ambient mismatch")
    p = m_mat.p
    for b in w.basis:
        if not w.contains(m_mat.apply(b)):
            raise NotStableError("subspace is not stable under the matrix")
    if mode == "restrict":
        if w.dim == 0:
            raise ValueError("restriction to the zero subspace")
        cols = [w.coordinates(m_mat.apply(b)) for b in w.basis]
        return FpMatrix(tuple(zip(*cols)), p)
    if mode == "quotient":
        pivots = set(w._pivots)
        rest = [c for c in range(w.ambient_dim) if c not in pivots]
        if not rest:
            raise ValueError("quotient by the full space")
        # reduce a vector mod W, then read off the non-pivot coordinates
        def reduce_mod_w(vec):
            v = list(vec)
            for row, pc in zip(w.basis, w._pivots):
                c = v[pc]
                if c:
                    v = [(a - c * b) % p for a, b in zip(v, row)]
            return v
        cols = []
        for c in rest:
            e = [0] * w.ambient_dim
            e[c] = 1
            img = reduce_mod_w(m_mat.apply(tuple(e)))
            cols.append([img[j] for j in rest])
        return FpMatrix(tuple(zip(*cols)), p)
    raise ValueError("mode must be 'restrict' or 'quotient'")


def span_of(vectors, ambient_dim, p):
    return Subspace(ambient_dim, vectors, p)
