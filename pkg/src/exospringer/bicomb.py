"""Partition and bipartition combinatorics.

Partitions are tuples of positive ints in weakly decreasing order.
A bipartition is an ordered pair of partitions; with total size n it
labels at once an orbit of the 2n-dimensional cone, a hyperoctahedral
conjugacy class and a hyperoctahedral irreducible.

String grammar: "2,1|1" means ((2,1),(1)); an empty component is "-".
"""

import functools


class RankMismatchError(ValueError):
    pass


class UnequalTotalsError(ValueError):
    pass


def check_partition(parts):
    parts = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in parts):
        raise ValueError("negative part in %r" % (parts,))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts not weakly decreasing: %r" % (parts,))
    return parts


@functools.lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, largest-first lexicographic."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(maxpart, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partition_count(n):
    return len(partitions_of(n))


def n_invariant(parts):
    """The statistic sum (i-1)*parts[i-1] controlling orbit dimensions."""
    return sum(i * part for i, part in enumerate(parts))


def hook_lengths(parts):
    conj = conjugate(parts)
    return [[parts[i] - j + conj[j] - i - 1 for j in range(parts[i])]
            for i in range(len(parts))]


def conjugate(parts):
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def standard_tableau_count(parts):
    """f^lambda by the hook length formula (exact integer)."""
    n = sum(parts)
    num = 1
    for k in range(2, n + 1):
        num *= k
    den = 1
    for row in hook_lengths(parts):
        for h in row:
            den *= h
    assert num % den == 0
    return num // den


class Bipartition:
    """Ordered pair of partitions; the universal label of this package."""

    __slots__ = ("first", "second")

    def __init__(self, first, second):
        object.__setattr__(self, "first", check_partition(first))
        object.__setattr__(self, "second", check_partition(second))

    def __setattr__(self, *a):
        raise AttributeError("Bipartition is immutable")

    @property
    def n(self):
        return sum(self.first) + sum(self.second)

    def __eq__(self, other):
        return (isinstance(other, Bipartition)
                and self.first == other.first and self.second == other.second)

    def __hash__(self):
        return hash((self.first, self.second))

    def __repr__(self):
        return "Bipartition(%r, %r)" % (self.first, self.second)

    def __str__(self):
        return format_bipartition(self)

    def sort_key(self):
        # descending lex on the interleaved composition: a linear
        # extension of the closure order with the open orbit first
        c = interleave_c(self)
        padded = c + (0,) * (2 * self.n - len(c))
        return tuple(-x for x in padded)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def parse_bipartition(text):
    parts = text.strip().split("|")
    if len(parts) != 2:
        raise ValueError("bipartition must look like '2,1|1', got %r" % (text,))

    def one(s):
        s = s.strip()
        if s in ("-", ""):
            return ()
        return tuple(int(x) for x in s.split(","))

    return Bipartition(one(parts[0]), one(parts[1]))


def format_bipartition(bp):
    def one(parts):
        return ",".join(str(x) for x in parts) if parts else "-"

    return "%s|%s" % (one(bp.first), one(bp.second))


@functools.lru_cache(maxsize=None)
def bipartitions_of(n):
    """All bipartitions of n in the canonical total order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    for m in range(n + 1):
        for mu in partitions_of(m):
            for nu in partitions_of(n - m):
                out.append(Bipartition(mu, nu))
    out.sort(key=Bipartition.sort_key)
    return tuple(out)


def interleave_c(bp):
    """The interleaved composition (mu_1, nu_1, mu_2, nu_2, ...)."""
    mu, nu = bp.first, bp.second
    length = max(len(mu), len(nu))
    c = []
    for i in range(length):
        c.append(mu[i] if i < len(mu) else 0)
        c.append(nu[i] if i < len(nu) else 0)
    return tuple(c)


def dominance_leq(c, cprime):
    """Dominance order on compositions of equal total (after 0-padding)."""
    if sum(c) != sum(cprime):
        raise UnequalTotalsError("totals differ: %r vs %r" % (c, cprime))
    length = max(len(c), len(cprime))
    s1 = s2 = 0
    for i in range(length):
        s1 += c[i] if i < len(c) else 0
        s2 += cprime[i] if i < len(cprime) else 0
        if s1 > s2:
            return False
    return True


def closure_leq(bmu, bla):
    """Orbit closure order: bmu <= bla iff c(bmu) <= c(bla) in dominance."""
    if bmu.n != bla.n:
        raise RankMismatchError("ranks differ: %d vs %d" % (bmu.n, bla.n))
    return dominance_leq(interleave_c(bmu), interleave_c(bla))


def partition_sum(mu, nu):
    """Componentwise sum (mu_i + nu_i) of two partitions."""
    length = max(len(mu), len(nu))
    return tuple((mu[i] if i < len(mu) else 0) + (nu[i] if i < len(nu) else 0)
                 for i in range(length))


def orbit_dim(bla, n):
    """dim of the orbit labelled bla: 2n^2 - 2n - 4 n(nu) + 2|mu^(1)|."""
    if bla.n != n:
        raise RankMismatchError("|label| = %d but n = %d" % (bla.n, n))
    nu = partition_sum(bla.first, bla.second)
    d = 2 * n * n - 2 * n - 4 * n_invariant(nu) + 2 * sum(bla.first)
    assert d >= 0 and d % 2 == 0
    return d


def fiber_dim_d(bla, n):
    """Springer fibre dimension d = 2 n(nu) + n - |mu^(1)|."""
    if bla.n != n:
        raise RankMismatchError("|label| = %d but n = %d" % (bla.n, n))
    nu = partition_sum(bla.first, bla.second)
    d = 2 * n_invariant(nu) + n - sum(bla.first)
    # cross identity with the orbit dimension: dim + 2d = 2n^2
    assert orbit_dim(bla, n) + 2 * d == 2 * n * n
    return d


def removable_nodes(bla):
    """All corner removals: list of (component, row, resulting bipartition).

    component is 1 or 2, row is 1-based in the component's own indexing.
    """
    if bla.n < 1:
        raise ValueError("nothing to remove from the empty bipartition")
    out = []
    for comp, parts in ((1, bla.first), (2, bla.second)):
        for i, part in enumerate(parts):
            nxt = parts[i + 1] if i + 1 < len(parts) else 0
            if part > nxt:
                shrunk = parts[:i] + ((part - 1,) if part > 1 else ()) + parts[i + 1:]
                if comp == 1:
                    out.append((comp, i + 1, Bipartition(shrunk, bla.second)))
                else:
                    out.append((comp, i + 1, Bipartition(bla.first, shrunk)))
    return out


@functools.lru_cache(maxsize=None)
def hasse_covers(n):
    """Covering pairs (lower, upper) of the closure order on rank n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    labels = bipartitions_of(n)
    below = {b: [a for a in labels if a != b and closure_leq(a, b)] for b in labels}
    covers = []
    for upper in labels:
        under = below[upper]
        for lower in under:
            if not any(lower != mid and closure_leq(lower, mid) for mid in under):
                covers.append((lower, upper))
    return tuple(covers)


def hasse_dot(n):
    """DOT source for the closure-order Hasse diagram of rank n."""
    lines = ["digraph hasse {"]
    for b in bipartitions_of(n):
        lines.append('  "%s" [rank=%d];' % (format_bipartition(b), orbit_dim(b, n)))
    for lower, upper in hasse_covers(n):
        lines.append('  "%s" -> "%s";'
                     % (format_bipartition(upper), format_bipartition(lower)))
    lines.append("}")
    return "\n".join(lines) + "\n"
