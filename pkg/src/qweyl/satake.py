"""Diagram data for the two families of algebras.

A Variant fixes the kind ("jmath": n = 2r even, "imath": n = 2r+1 odd) and
the rank r >= 1.  Everything here is small combinatorics: the node
involution rho, the weight kappa of each oscillator index, which K-letters
exist, and the index set for the braid operators.
"""

VARIANT_KINDS = ("jmath", "imath")


class Variant:
    __slots__ = ("kind", "rank", "n")

    def __init__(self, kind, rank):
        if kind not in VARIANT_KINDS:
            raise ValueError("unknown variant kind %r" % (kind,))
        if not isinstance(rank, int) or rank < 1:
            raise ValueError("rank must be a positive integer")
        self.kind = kind
        self.rank = rank
        self.n = 2 * rank if kind == "jmath" else 2 * rank + 1

    def rho(self, i):
        """The diagram involution i -> n + 1 - i on nodes 1..n."""
        return self.n + 1 - i

    def kappa(self, i):
        """Weight of oscillator index i: 2 only at i = r+1 in kind jmath."""
        if self.kind == "jmath" and i == self.rank + 1:
            return 2
        return 1

    @property
    def weyl_indices(self):
        # oscillator indices 1..r+1
        return range(1, self.rank + 2)

    @property
    def node_indices(self):
        # diagram nodes 1..n
        return range(1, self.n + 1)

    @property
    def braid_indices(self):
        # 1..floor((n+1)/2): r for jmath, r+1 for imath
        return range(1, (self.n + 1) // 2 + 1)

    def k_legal(self, i):
        """Whether the letter K_i exists: rho must move node i."""
        return 1 <= i <= self.n and self.rho(i) != i

    def __eq__(self, other):
        return (
            isinstance(other, Variant)
            and self.kind == other.kind
            and self.rank == other.rank
        )

    def __hash__(self):
        return hash((self.kind, self.rank))

    def __repr__(self):
        return "Variant(%r, %d)" % (self.kind, self.rank)


def cartan(i, j):
    """Type-A pairing: 2 on the diagonal, -1 for neighbors, else 0."""
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0
