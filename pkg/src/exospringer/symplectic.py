"""Symplectic structure on F_p^(2n) and the self-adjoint geometry built on it.

The form is <u, v> = u^T J v with J = [[0, 1_n], [-1_n, 0]] in the fixed
basis order e_1..e_n, f_1..f_n.  The involution g -> J^-1 g^-T J has the
symplectic group as fixed points; its "anti-fixed" locus is the set of
self-adjoint matrices, whose unipotent/nilpotent pairs (x, v) this
module builds representatives for.
"""

from . import bicomb
from .ffield import FpMatrix, check_modulus


class SingularError(ZeroDivisionError):
    pass


class NotInGIotaThetaError(ValueError):
    pass


class NotInAError(ValueError):
    pass


class SizeMismatchError(ValueError):
    pass


class SymplecticSpace:
    """Dimension-2n symplectic space over F_p with the block form J."""

    __slots__ = ("n", "p", "J", "J_inv")

    def __init__(self, n, p):
        if n < 1:
            raise ValueError("n must be >= 1")
        check_modulus(p)
        entries = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            entries[i][n + i] = 1
            entries[n + i][i] = p - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "J", FpMatrix(entries, p))
        object.__setattr__(self, "J_inv", FpMatrix(entries, p).inverse())

    def __setattr__(self, *a):
        raise AttributeError("SymplecticSpace is immutable")

    def __eq__(self, other):
        return (isinstance(other, SymplecticSpace)
                and (self.n, self.p) == (other.n, other.p))

    def __hash__(self):
        return hash((self.n, self.p))

    def __repr__(self):
        return "SymplecticSpace(n=%d, p=%d)" % (self.n, self.p)

    @property
    def dim(self):
        return 2 * self.n

    def pairing(self, u, v):
        """<u, v> = u^T J v."""
        ju = self.J.apply(v)
        return sum(a * b for a, b in zip(u, ju)) % self.p

    def e(self, i):
        """Basis vector e_i, 1-based."""
        v = [0] * self.dim
        v[i - 1] = 1
        return tuple(v)

    def f(self, i):
        v = [0] * self.dim
        v[self.n + i - 1] = 1
        return tuple(v)

    # -- the involution and adjoint ------------------------------------

    def theta_group(self, g):
        """theta(g) = J^-1 g^-T J; involutive automorphism with Sp fixed."""
        self._check_size(g)
        if not g.is_invertible():
            raise SingularError("theta of a singular matrix")
        return self.J_inv * g.inverse().transpose() * self.J

    def adjoint(self, x):
        """x* = J^-1 x^T J, so <x u, v> = <u, x* v>."""
        self._check_size(x)
        return self.J_inv * x.transpose() * self.J

    def membership(self, x, which):
        """Membership predicates for the theta-loci.

        g_minus_theta: self-adjoint matrices (x* = x)
        G_iota_theta:  invertible self-adjoint matrices
        sp_lie:        the symplectic Lie algebra (x* = -x)
        H_group:       the symplectic group (x^T J x = J)
        """
        self._check_size(x)
        if which == "g_minus_theta":
            return self.adjoint(x) == x
        if which == "G_iota_theta":
            return self.adjoint(x) == x and x.is_invertible()
        if which == "sp_lie":
            return self.adjoint(x) == -x
        if which == "H_group":
            return x.transpose() * self.J * x == self.J
        raise ValueError("unknown membership predicate %r" % (which,))

    def log_map(self, x):
        """Project x - 1 onto the self-adjoint summand: ((x-1) + (x-1)*)/2.

        On invertible self-adjoint x this is just x - 1; restricted to
        unipotent x it is a bijection onto nilpotent self-adjoint
        matrices (census-verified).
        """
        if not self.membership(x, "G_iota_theta"):
            raise NotInGIotaThetaError("log is defined on invertible self-adjoint matrices")
        z = x - FpMatrix.identity(self.dim, self.p)
        half = pow(2, -1, self.p)
        out = half * (z + self.adjoint(z))
        assert self.adjoint(out) == out
        return out

    def klyachko_embed(self, a):
        """diag(x, 1) -> a theta(a)^-1 = diag(x, x^T)."""
        self._check_size(a)
        n, p = self.n, self.p
        x = FpMatrix(tuple(row[:n] for row in a.entries[:n]), p)
        if self.embed_gl(x) != a:
            raise NotInAError("expected a block matrix diag(x, 1_n)")
        if not x.is_invertible():
            raise NotInAError("upper-left block must be invertible")
        return self.pair_block(x, x.transpose())

    def embed_gl(self, x):
        """diag(x, 1_n) for x in GL_n."""
        return self.pair_block(x, FpMatrix.identity(self.n, self.p))

    def pair_block(self, top, bottom):
        n, p = self.n, self.p
        entries = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                entries[i][j] = top.entries[i][j]
                entries[n + i][n + j] = bottom.entries[i][j]
        return FpMatrix(entries, p)

    def _check_size(self, x):
        if x.rows != self.dim or x.cols != self.dim or x.p != self.p:
            raise ValueError("expected a %dx%d matrix over F_%d"
                             % (self.dim, self.dim, self.p))


class ExoticPair:
    """A self-adjoint matrix together with a vector.

    flavor 'lie':   x nilpotent self-adjoint (a point of the exotic cone)
    flavor 'group': x unipotent self-adjoint
    """

    __slots__ = ("space", "x", "v", "flavor")

    def __init__(self, space, x, v, flavor, validate=True):
        if flavor not in ("lie", "group"):
            raise ValueError("flavor must be 'lie' or 'group'")
        v = tuple(int(c) % space.p for c in v)
        if len(v) != space.dim:
            raise ValueError("vector length != 2n")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "flavor", flavor)
        if validate:
            self.validate()

    def __setattr__(self, *a):
        raise AttributeError("ExoticPair is immutable")

    def validate(self):
        sp = self.space
        if not sp.membership(self.x, "g_minus_theta"):
            raise ValueError("x is not self-adjoint")
        one = FpMatrix.identity(sp.dim, sp.p)
        if self.flavor == "lie":
            if not self.x.power(sp.dim).is_zero():
                raise ValueError("lie flavor requires nilpotent x")
        else:
            if not (self.x - one).power(sp.dim).is_zero():
                raise ValueError("group flavor requires unipotent x")
            if not self.x.is_invertible():
                raise ValueError("group flavor requires invertible x")

    def nilpotent_part(self):
        """The nilpotent matrix driving classification (x itself or log x)."""
        if self.flavor == "lie":
            return self.x
        return self.space.log_map(self.x)

    def __eq__(self, other):
        return (isinstance(other, ExoticPair) and self.space == other.space
                and self.x == other.x and self.v == other.v
                and self.flavor == other.flavor)

    def __hash__(self):
        return hash((self.space, self.x, self.v, self.flavor))

    def __repr__(self):
        return "ExoticPair(n=%d, p=%d, flavor=%s)" % (
            self.space.n, self.space.p, self.flavor)

    def to_json(self):
        return {"p": self.space.p, "n": self.space.n, "flavor": self.flavor,
                "x": self.x.to_json(), "v": list(self.v)}

    @classmethod
    def from_json(cls, obj):
        space = SymplecticSpace(obj["n"], obj["p"])
        return cls(space, FpMatrix.from_json(obj["x"]), tuple(obj["v"]),
                   obj["flavor"])


class NormalFormData:
    """Normal-form pair for a bipartition label, with its Jordan frame.

    jordan_basis[(i, j)] (1 <= i <= a, 1 <= j <= nu_i) is a Jordan basis
    of y - 1 on the e-span; dual_basis[(i, j)] lives in the f-span and
    pairs to 1 against jordan_basis[(i, j)] and to 0 against everything
    else.  Blocks record the repeated values of nu: block k has a_k
    rows of size nu_[k], constant first-component part mu1_[k], first
    row p_k and last row q_k.
    """

    __slots__ = ("pair", "label", "nu", "jordan_basis", "dual_basis",
                 "block_sizes", "nu_values", "mu1_values",
                 "p_rows", "q_rows")

    def __init__(self, pair, label, nu, jordan_basis, dual_basis,
                 block_sizes, nu_values, mu1_values, p_rows, q_rows):
        self.pair = pair
        self.label = label
        self.nu = nu
        self.jordan_basis = jordan_basis
        self.dual_basis = dual_basis
        self.block_sizes = block_sizes
        self.nu_values = nu_values
        self.mu1_values = mu1_values
        self.p_rows = p_rows
        self.q_rows = q_rows

    @property
    def num_blocks(self):
        return len(self.block_sizes)


def nu_blocks(nu):
    """Split nu into blocks of equal parts: (sizes, values, p_rows, q_rows)."""
    sizes, values = [], []
    for part in nu:
        if values and values[-1] == part:
            sizes[-1] += 1
        else:
            values.append(part)
            sizes.append(1)
    p_rows, q_rows = [], []
    offset = 0
    for s in sizes:
        p_rows.append(offset + 1)
        q_rows.append(offset + s)
        offset += s
    return sizes, values, p_rows, q_rows


def normal_form_pair(label, space):
    """Representative (x, v) of the orbit labelled by a bipartition.

    y is the unipotent with Jordan type nu = mu1 + mu2 on the standard
    e-basis reindexed as v_{i,j}; x = y theta(y)^-1; v is the sum of the
    v_{p_i, mu1_[i]} over blocks (terms with mu1_[i] = 0 are omitted:
    the column index 0 does not exist).
    """
    if label.n != space.n:
        raise SizeMismatchError("|label| = %d but n = %d" % (label.n, space.n))
    n, p = space.n, space.p
    nu = bicomb.partition_sum(label.first, label.second)
    sizes, values, p_rows, q_rows = nu_blocks(nu)
    mu1 = label.first
    mu1_values = []
    for start, size in zip(p_rows, sizes):
        vals = {mu1[r - 1] if r - 1 < len(mu1) else 0
                for r in range(start, start + size)}
        assert len(vals) == 1  # mu1 is constant on each nu-block
        mu1_values.append(vals.pop())

    # index map (i, j) -> position in the e-basis, row-major over rows of nu
    index = {}
    pos = 0
    for i, part in enumerate(nu, start=1):
        for j in range(1, part + 1):
            index[(i, j)] = pos
            pos += 1
    assert pos == n

    # unipotent y = 1 + N on M_n, identity on the f-span
    y_top = [[0] * n for _ in range(n)]
    for i in range(n):
        y_top[i][i] = 1
    for (i, j), col in index.items():
        if j > 1:
            y_top[index[(i, j - 1)]][col] = 1
    y_small = FpMatrix(y_top, p)
    y = space.embed_gl(y_small)
    x = y * space.theta_group(y).inverse()
    assert x == space.pair_block(y_small, y_small.transpose())

    jordan_basis = {}
    for (i, j), col in index.items():
        vec = [0] * (2 * n)
        vec[col] = 1
        jordan_basis[(i, j)] = tuple(vec)

    dual_basis = _solve_dual_basis(space, index, jordan_basis)

    v = [0] * (2 * n)
    for blk in range(len(sizes)):
        jcol = mu1_values[blk]
        if jcol == 0:
            continue
        w = jordan_basis[(p_rows[blk], jcol)]
        v = [(a + b) % p for a, b in zip(v, w)]

    pair = ExoticPair(space, x, tuple(v), "group")
    nf = NormalFormData(pair, label, nu, jordan_basis, dual_basis,
                        tuple(sizes), tuple(values), tuple(mu1_values),
                        tuple(p_rows), tuple(q_rows))
    _check_normal_form(space, nf, y)
    return nf


def _solve_dual_basis(space, index, jordan_basis):
    """Solve <v_{i,j}, w> = delta for each (i,j), w in the f-span."""
    n, p = space.n, space.p
    # pairing of jordan basis vectors against the f-basis
    pair_rows = []
    keys = sorted(index, key=lambda k: index[k])
    for key in keys:
        u = jordan_basis[key]
        pair_rows.append([space.pairing(u, space.f(c + 1)) for c in range(n)])
    pmat = FpMatrix(pair_rows, p)
    pinv = pmat.inverse()
    dual = {}
    for target in keys:
        rhs = [1 if k == target else 0 for k in keys]
        coeffs = pinv.apply(tuple(rhs))
        vec = [0] * (2 * n)
        for c in range(n):
            vec[n + c] = coeffs[c]
        dual[target] = tuple(vec)
    return dual


def _check_normal_form(space, nf, y):
    p = space.p
    one = FpMatrix.identity(space.dim, p)
    shift = y - one
    yprime = space.theta_group(y).inverse()
    shift_dual = yprime - one
    for (i, j), vec in nf.jordan_basis.items():
        expect = nf.jordan_basis.get((i, j - 1), (0,) * space.dim)
        assert shift.apply(vec) == tuple(expect)
    for (i, j), vec in nf.dual_basis.items():
        nu_i = nf.nu[i - 1]
        expect = nf.dual_basis.get((i, j + 1)) if j < nu_i else (0,) * space.dim
        assert shift_dual.apply(vec) == tuple(expect)
    for ka, va in nf.jordan_basis.items():
        for kb, vb in nf.dual_basis.items():
            want = 1 if ka == kb else 0
            assert space.pairing(va, vb) == want
