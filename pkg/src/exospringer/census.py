"""Brute-force verification over small prime fields.

Everything here enumerates honestly: the symplectic group by closure
from transvection generators, the exotic cone point by point, orbits
by union-find under the generator action.  Hard size gates (n <= 2,
p in {3, 5}) keep the combinatorial explosion out; anything bigger
raises SizeGateError instead of silently grinding.

The census is a map over contiguous chunks of the self-adjoint
coordinate space with an exact-sum merge, so chunk order and worker
count never change the result; chunk results can be checkpointed to
JSON and resumed.
"""

import json
import multiprocessing
import os
import random

from . import classify
from .bicomb import format_bipartition
from .ffield import FpMatrix
from .symplectic import ExoticPair, SymplecticSpace

CENSUS_MAX_N = 2
CENSUS_PRIMES = (3, 5)


class SizeGateError(ValueError):
    pass


def _gate(n, p):
    if n > CENSUS_MAX_N:
        raise SizeGateError("census is gated to n <= %d (got n=%d)" % (CENSUS_MAX_N, n))
    if p not in CENSUS_PRIMES:
        raise SizeGateError("census is gated to p in %r (got p=%d)" % (CENSUS_PRIMES, p))


def sp_group_order(n, q):
    """|Sp_2n(F_q)| = q^(n^2) prod_{i=1}^{n} (q^(2i) - 1)."""
    order = q ** (n * n)
    for i in range(1, n + 1):
        order *= q ** (2 * i) - 1
    return order


def gl_group_order(n, q):
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    return order


def gl_class_count(n, p):
    """Number of conjugacy classes of GL_n(F_p), n <= 2."""
    if n == 1:
        return p - 1
    if n == 2:
        return p * p - 1
    raise SizeGateError("class count implemented for n <= 2 only")


def transvection(space, u, c=1):
    """x -> x + c <x, u> u; symplectic for every u and c."""
    dim, p = space.dim, space.p
    cols = []
    for k in range(dim):
        e = [0] * dim
        e[k] = 1
        coeff = (c * space.pairing(tuple(e), u)) % p
        col = [(e[i] + coeff * u[i]) % p for i in range(dim)]
        cols.append(col)
    mat = FpMatrix(tuple(zip(*cols)), p)
    assert space.membership(mat, "H_group")
    return mat


def sp_generators(space):
    """Transvections along e_i, f_i and e_i + f_j; generate Sp_2n(F_p)."""
    n = space.n
    gens = []
    frame = [space.e(i) for i in range(1, n + 1)]
    frame += [space.f(i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ei, fj = space.e(i), space.f(j)
            frame.append(tuple((a + b) % space.p for a, b in zip(ei, fj)))
    for u in frame:
        gens.append(transvection(space, u))
    return gens


def sp_group_elements(n, p):
    """All of Sp_2n(F_p) by breadth-first closure from the generators."""
    _gate(n, p)
    space = SymplecticSpace(n, p)
    gens = sp_generators(space)
    start = FpMatrix.identity(2 * n, p)
    seen = {start.entries: start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for t in gens:
                h = g * t
                if h.entries not in seen:
                    seen[h.entries] = h
                    nxt.append(h)
        frontier = nxt
    elements = list(seen.values())
    assert len(elements) == sp_group_order(n, p)
    return elements


def self_adjoint_basis(space):
    """Basis of {x : x* = x}, of dimension 2n^2 - n."""
    dim, p = space.dim, space.p
    rows = []
    units = []
    for i in range(dim):
        for j in range(dim):
            m = [[0] * dim for _ in range(dim)]
            m[i][j] = 1
            units.append(FpMatrix(m, p))
    images = [space.adjoint(u) - u for u in units]
    for i in range(dim):
        for j in range(dim):
            rows.append([img.entries[i][j] for img in images])
    ker = FpMatrix(rows, p).kernel_basis()
    basis = []
    for coeffs in ker.basis:
        m = [[0] * dim for _ in range(dim)]
        for val, unit in zip(coeffs, units):
            if val:
                for a in range(dim):
                    for b in range(dim):
                        m[a][b] = (m[a][b] + val * unit.entries[a][b]) % p
        basis.append(FpMatrix(m, p))
    assert len(basis) == 2 * space.n * space.n - space.n
    return basis


def _decode_matrix(code, basis, space):
    dim, p = space.dim, space.p
    m = [[0] * dim for _ in range(dim)]
    for b in basis:
        code, digit = divmod(code, p)
        if digit:
            for i in range(dim):
                row = b.entries[i]
                mi = m[i]
                for j in range(dim):
                    if row[j]:
                        mi[j] = (mi[j] + digit * row[j]) % p
    return FpMatrix(m, p)


def self_adjoint_count(space):
    return space.p ** (2 * space.n * space.n - space.n)


def iter_self_adjoint(space, lo=0, hi=None):
    """Self-adjoint matrices number lo..hi-1 in the fixed coordinate order."""
    basis = self_adjoint_basis(space)
    total = self_adjoint_count(space)
    if hi is None:
        hi = total
    for code in range(lo, min(hi, total)):
        yield _decode_matrix(code, basis, space)


def _is_nilpotent(x):
    power = x
    k = 1
    while k < x.rows:
        power = power * power
        k *= 2
    return power.is_zero()


def _is_unipotent(x):
    return _is_nilpotent(x - FpMatrix.identity(x.rows, x.p))


def iter_vectors(space):
    dim, p = space.dim, space.p
    for code in range(p ** dim):
        v = []
        c = code
        for _ in range(dim):
            c, digit = divmod(c, p)
            v.append(digit)
        yield tuple(v)


def enumerate_exotic_nilcone(n, p, flavor="lie", lo=0, hi=None):
    """Stream of exotic pairs (x self-adjoint nilpotent/unipotent, v).

    Pairs come in a fixed deterministic order; lo/hi restrict to a
    contiguous chunk of the x coordinate space for parallel use.
    """
    _gate(n, p)
    space = SymplecticSpace(n, p)
    keep = _is_nilpotent if flavor == "lie" else _is_unipotent
    for x in iter_self_adjoint(space, lo, hi):
        if not keep(x):
            continue
        for v in iter_vectors(space):
            yield ExoticPair(space, x, v, flavor, validate=False)


def seeded_basis_change(space, seed):
    """A reproducible symplectic element: a seeded word in the generators."""
    rng = random.Random(seed)
    gens = sp_generators(space)
    g = FpMatrix.identity(space.dim, space.p)
    for _ in range(12):
        g = g * rng.choice(gens)
    return g


def _census_chunk(args):
    """Label counts over one chunk of the x coordinate space."""
    n, p, flavor, lo, hi, basis_seed = args
    space = SymplecticSpace(n, p)
    keep = _is_nilpotent if flavor == "lie" else _is_unipotent
    move = None
    if basis_seed:
        g = seeded_basis_change(space, basis_seed)
        gi = g.inverse()
        move = (g, gi)
    counts = {}
    reps = {}
    for x in iter_self_adjoint(space, lo, hi):
        if not keep(x):
            continue
        if move is not None:
            x = move[0] * x * move[1]
        n_mat = x if flavor == "lie" else space.log_map(x)
        labeler = classify.exotic_labeler(n_mat)
        for v in iter_vectors(space):
            if move is not None:
                v = move[0].apply(v)
            label = format_bipartition(labeler(v))
            counts[label] = counts.get(label, 0) + 1
            if label not in reps:
                reps[label] = (x.to_json(), list(v))
    return counts, reps


class CensusResult:
    def __init__(self, n, p, flavor, label_counts, total_points, reps,
                 orbit_checks=None):
        self.n = n
        self.p = p
        self.flavor = flavor
        self.label_counts = label_counts
        self.total_points = total_points
        self.reps = reps
        self.orbit_checks = orbit_checks or []

    def to_json(self):
        return {"n": self.n, "p": self.p, "flavor": self.flavor,
                "labels": dict(sorted(self.label_counts.items())),
                "total_points": self.total_points,
                "orbit_checks": self.orbit_checks}


def orbit_census(n, p, flavor="lie", jobs=1, checkpoint=None,
                 num_chunks=None, check_orbits=False, basis_seed=0):
    """Count cone points per label; optionally verify orbit structure.

    check_orbits runs the union-find transitivity test under the
    generator action and the exact orbit-stabilizer comparison (this
    needs the full group, so it is the slow part).  A nonzero
    basis_seed classifies through a seeded symplectic change of basis;
    the counts must not change (conjugation invariance).
    """
    _gate(n, p)
    space = SymplecticSpace(n, p)
    total_x = self_adjoint_count(space)
    if num_chunks is None:
        num_chunks = min(p, total_x)
    bounds = _chunk_bounds(total_x, num_chunks)

    done, counts, reps = _load_checkpoint(checkpoint, n, p, flavor, num_chunks)
    todo = [(n, p, flavor, lo, hi, basis_seed)
            for idx, (lo, hi) in enumerate(bounds) if idx not in done]
    todo_ids = [idx for idx in range(num_chunks) if idx not in done]

    if jobs > 1 and len(todo) > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_census_chunk, todo)
    else:
        results = [_census_chunk(args) for args in todo]

    for idx, (chunk_counts, chunk_reps) in zip(todo_ids, results):
        for label, cnt in chunk_counts.items():
            counts[label] = counts.get(label, 0) + cnt
        for label, rep in chunk_reps.items():
            reps.setdefault(label, rep)
        done.add(idx)
        if checkpoint:
            _save_checkpoint(checkpoint, n, p, flavor, num_chunks, done,
                             counts, reps)

    total = sum(counts.values())
    result = CensusResult(n, p, flavor, counts, total, reps)
    if check_orbits:
        result.orbit_checks = _orbit_checks(space, result)
    return result


def _chunk_bounds(total, num_chunks):
    num_chunks = max(1, min(num_chunks, total))
    step = -(-total // num_chunks)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _load_checkpoint(path, n, p, flavor, num_chunks):
    if not path or not os.path.exists(path):
        return set(), {}, {}
    with open(path) as fh:
        data = json.load(fh)
    if (data["n"], data["p"], data["flavor"], data["num_chunks"]) != \
            (n, p, flavor, num_chunks):
        raise ValueError("checkpoint %s does not match this census" % path)
    return set(data["done"]), dict(data["labels"]), dict(data["reps"])


def _save_checkpoint(path, n, p, flavor, num_chunks, done, counts, reps):
    data = {"n": n, "p": p, "flavor": flavor, "num_chunks": num_chunks,
            "done": sorted(done), "labels": counts, "reps": reps}
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


class UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def class_count(self):
        return len({self.find(x) for x in self.parent})


def _orbit_checks(space, result):
    """Union-find transitivity plus orbit-stabilizer arithmetic per label."""
    n, p = space.n, space.p
    flavor = result.flavor
    gens = sp_generators(space)
    points = {}
    labeler = None
    current_x = None
    for pair in enumerate_exotic_nilcone(n, p, flavor):
        if pair.x is not current_x:
            current_x = pair.x
            n_mat = pair.x if flavor == "lie" else space.log_map(pair.x)
            labeler = classify.exotic_labeler(n_mat)
        points[(pair.x.entries, pair.v)] = format_bipartition(labeler(pair.v))
    uf = UnionFind()
    for key in points:
        uf.add(key)
    gen_invs = [g.inverse() for g in gens]
    for (xe, v) in list(points):
        x = FpMatrix(xe, p)
        for g, gi in zip(gens, gen_invs):
            moved = ((g * x * gi).entries, g.apply(v))
            assert moved in points
            uf.union((xe, v), moved)
    roots_per_label = {}
    for key, label in points.items():
        roots_per_label.setdefault(label, set()).add(uf.find(key))

    group = sp_group_elements(n, p)
    order = sp_group_order(n, p)
    checks = []
    for label, count in sorted(result.label_counts.items()):
        xj, vj = result.reps[label]
        x = FpMatrix.from_json(xj)
        v = tuple(vj)
        stab = _stabilizer_order(group, x, v)
        checks.append({
            "label": label,
            "count": count,
            "stabilizer_order": stab,
            "orbit_stabilizer_ok": stab * count == order,
            "transitive": len(roots_per_label[label]) == 1,
        })
    return checks


def _stabilizer_order(group, x, v):
    count = 0
    for g in group:
        if g.apply(v) == v and g * x == x * g:
            count += 1
    return count


def stabilizer_census(pair):
    """|{g in Sp : g x g^-1 = x, g v = v}| by enumeration (n <= 2)."""
    space = pair.space
    _gate(space.n, space.p)
    group = sp_group_elements(space.n, space.p)
    return _stabilizer_order(group, pair.x, pair.v)


def klyachko_census(n, p):
    """Count H-orbits on the invertible self-adjoint locus.

    The orbit count must equal the number of GL_n(F_p) conjugacy
    classes, and every orbit must contain an embedded diag(x, x^T).
    """
    _gate(n, p)
    space = SymplecticSpace(n, p)
    gens = sp_generators(space)
    gen_invs = [g.inverse() for g in gens]
    points = []
    for x in iter_self_adjoint(space):
        if x.is_invertible():
            points.append(x)
    point_set = {x.entries for x in points}
    uf = UnionFind()
    for x in points:
        uf.add(x.entries)
    for x in points:
        for g, gi in zip(gens, gen_invs):
            moved = (g * x * gi).entries
            assert moved in point_set
            uf.union(x.entries, moved)
    orbit_count = uf.class_count()
    expected = gl_class_count(n, p)

    covered = set()
    for g in _iter_gl(n, p):
        embedded = space.klyachko_embed(space.embed_gl(g))
        covered.add(uf.find(embedded.entries))
    all_roots = {uf.find(x.entries) for x in points}

    return {
        "n": n, "p": p,
        "points": len(points),
        "orbit_count": orbit_count,
        "gl_class_count": expected,
        "count_matches": orbit_count == expected,
        "every_orbit_hit_by_embedding": covered == all_roots,
    }


def _iter_gl(n, p):
    for code in range(p ** (n * n)):
        c = code
        entries = []
        for _ in range(n):
            row = []
            for _ in range(n):
                c, digit = divmod(c, p)
                row.append(digit)
            entries.append(row)
        m = FpMatrix(entries, p)
        if m.is_invertible():
            yield m
