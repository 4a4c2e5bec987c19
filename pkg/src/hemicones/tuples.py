"""Index arithmetic for k-element subsets ("tuples") of {1..n}.

Every vector handled by this package lives in R^{C(n,k)} with coordinates
indexed by the k-subsets of {1..n} in lexicographic order of their sorted
element lists.  Points are 1-based in all public interfaces; coordinate
positions are 0-based.
"""

from itertools import combinations
from math import comb

from .errors import InvalidDimension, InvalidTuple, MismatchedArity, InvalidPermutation

# ranking dictionaries are cheap to keep around for the sizes this package
# works at; key is (n, k)
_INDEX_CACHE = {}


def validate_tuple(n, t):
    """Check that t is a strictly increasing tuple of points inside 1..n."""
    t = tuple(t)
    if len(t) == 0:
        raise InvalidTuple("empty tuple")
    for x in t:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InvalidTuple(f"point {x!r} is not an int")
        if not 1 <= x <= n:
            raise InvalidTuple(f"point {x} outside 1..{n}")
    if any(a >= b for a, b in zip(t, t[1:])):
        raise InvalidTuple(f"{t} is not strictly increasing")
    return t


def enumerate_tuples(n, k):
    """All k-subsets of {1..n} as sorted tuples, in lexicographic order."""
    if not isinstance(n, int) or not isinstance(k, int):
        raise InvalidDimension("n and k must be ints")
    if k < 1:
        raise InvalidDimension(f"k = {k} < 1")
    if k > n:
        raise InvalidDimension(f"k = {k} > n = {n}")
    return list(combinations(range(1, n + 1), k))


class TupleIndex:
    """Bijection between k-subsets of {1..n} and positions 0..C(n,k)-1."""

    __slots__ = ("n", "k", "size", "tuples", "_rank")

    def __init__(self, n, k):
        if not isinstance(n, int) or not isinstance(k, int):
            raise InvalidDimension("n and k must be ints")
        if n < 2 or k < 2 or k > n:
            raise InvalidDimension(f"need 2 <= k <= n, got n={n} k={k}")
        self.n = n
        self.k = k
        self.tuples = enumerate_tuples(n, k)
        self.size = len(self.tuples)
        assert self.size == comb(n, k)
        self._rank = {t: i for i, t in enumerate(self.tuples)}

    def rank(self, t):
        t = validate_tuple(self.n, t)
        if len(t) != self.k:
            raise MismatchedArity(f"tuple {t} has arity {len(t)}, index wants {self.k}")
        return self._rank[t]

    def unrank(self, i):
        return self.tuples[i]

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.tuples)

    def __eq__(self, other):
        return isinstance(other, TupleIndex) and (self.n, self.k) == (other.n, other.k)

    def __hash__(self):
        return hash((TupleIndex, self.n, self.k))

    def __repr__(self):
        return f"TupleIndex(n={self.n}, k={self.k})"


def tuple_index(n, k):
    """Shared TupleIndex instance for (n, k)."""
    key = (n, k)
    idx = _INDEX_CACHE.get(key)
    if idx is None:
        idx = _INDEX_CACHE[key] = TupleIndex(n, k)
    return idx


def rank_tuple(n, k, t):
    return tuple_index(n, k).rank(t)


def unrank_tuple(n, k, i):
    return tuple_index(n, k).unrank(i)


def johnson_adjacent(t1, t2):
    """True iff the two equal-arity tuples share all but one element."""
    t1, t2 = tuple(t1), tuple(t2)
    if len(t1) != len(t2):
        raise MismatchedArity(f"arities {len(t1)} and {len(t2)} differ")
    return len(set(t1) & set(t2)) == len(t1) - 1


def complement_tuple(n, t):
    """The (n-k)-subset {1..n} \\ t, sorted."""
    s = set(validate_tuple(n, t))
    return tuple(x for x in range(1, n + 1) if x not in s)


def render_tuple(n, t):
    """Compact display form of a tuple.

    Concatenated digits ("123") when points fit in one digit; when
    k = n - 2 and k >= 4 the complement is shorter and unambiguous, so the
    tuple prints as "~ij" via its complementary pair.  Falls back to a
    comma-separated form for n > 9.
    """
    t = validate_tuple(n, t)
    k = len(t)
    if n <= 9:
        if k == n - 2 and k >= 4:
            return "~" + "".join(str(x) for x in complement_tuple(n, t))
        return "".join(str(x) for x in t)
    return ",".join(str(x) for x in t)


def check_permutation(n, perm):
    """Validate that perm is a bijection of 1..n given as images of 1..n."""
    perm = tuple(perm)
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{perm} is not a permutation of 1..{n}")
    return perm


def permutation_source_map(index, perm):
    """Coordinate gather map for a point permutation.

    Returns src with out[i] = v[src[i]]: the coordinate of tuple t in the
    permuted vector is the input coordinate of the preimage tuple
    perm^{-1}(t).
    """
    perm = check_permutation(index.n, perm)
    inv = [0] * (index.n + 1)
    for x, y in enumerate(perm, start=1):
        inv[y] = x
    src = [0] * index.size
    for i, t in enumerate(index.tuples):
        pre = tuple(sorted(inv[y] for y in t))
        src[i] = index._rank[pre]
    return src
