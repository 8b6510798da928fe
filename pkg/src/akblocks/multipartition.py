"""Multipartitions, their nodes, residues, and the orders used on them.

A partition is a tuple of weakly decreasing positive ints (no trailing
zeros); a multipartition with r components is a tuple of r partitions.
Nodes are (row, col, comp) triples, all 1-based, with comp indexing the
component.  Residues live in Z/eZ and depend on a multicharge.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InputError

__all__ = [
    "Partition",
    "Multipartition",
    "Node",
    "Multicharge",
    "as_partition",
    "as_multipartition",
    "multipartition_from_json",
    "multipartition_to_json",
    "size",
    "nodes",
    "removable_nodes",
    "addable_nodes",
    "remove_node",
    "add_node",
    "residue",
    "residue_multiset",
    "dominates",
    "lex_cmp",
    "node_above",
    "partitions_of",
    "multipartitions_of",
]

Partition = tuple  # tuple[int, ...]
Multipartition = tuple  # tuple[Partition, ...]


class Node(NamedTuple):
    """A box of a multipartition: row ``b``, column ``c``, component ``comp``."""

    row: int
    col: int
    comp: int


@dataclass(frozen=True)
class Multicharge:
    """Quantum characteristic ``e`` plus an integer charge per component.

    Only the residues ``entries[j] mod e`` affect residue combinatorics;
    the actual integers shift abacus bead positions.
    """

    e: int
    entries: tuple

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 2:
            raise InputError(f"e must be an integer >= 2, got {self.e!r}")
        ent = tuple(self.entries)
        if not ent or not all(isinstance(a, int) for a in ent):
            raise InputError(f"charge must be a nonempty tuple of integers, got {self.entries!r}")
        object.__setattr__(self, "entries", ent)

    @property
    def r(self) -> int:
        return len(self.entries)

    @property
    def kappa(self) -> tuple:
        """Charges reduced mod e -- the only data residues see."""
        return tuple(a % self.e for a in self.entries)

    def to_json(self) -> dict:
        return {"e": self.e, "charge": list(self.entries)}

    @classmethod
    def from_json(cls, obj) -> "Multicharge":
        if not isinstance(obj, dict) or "e" not in obj or "charge" not in obj:
            raise InputError(f"multicharge JSON needs keys 'e' and 'charge', got {obj!r}")
        charge = obj["charge"]
        if not isinstance(charge, (list, tuple)):
            raise InputError(f"'charge' must be a list, got {charge!r}")
        return cls(obj["e"], tuple(charge))


def as_partition(parts: Iterable) -> Partition:
    """Validate and canonicalise a partition (strip trailing zeros).

    >>> as_partition([4, 3, 3, 0, 0])
    (4, 3, 3)
    """
    seq = tuple(parts)
    for x in seq:
        if not isinstance(x, int) or x < 0:
            raise InputError(f"partition parts must be nonnegative integers, got {x!r}")
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        raise InputError(f"partition parts must be weakly decreasing, got {seq!r}")
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def as_multipartition(components: Iterable) -> Multipartition:
    """Validate a multipartition given as an iterable of part-lists."""
    comps = tuple(components)
    if not comps:
        raise InputError("a multipartition needs at least one component")
    return tuple(as_partition(c) for c in comps)


def multipartition_from_json(obj) -> Multipartition:
    """Accept ``{"components": [[4,3,1], []]}`` or a bare list of lists."""
    if isinstance(obj, dict):
        if "components" not in obj:
            raise InputError(f"multipartition JSON needs key 'components', got {obj!r}")
        obj = obj["components"]
    if not isinstance(obj, (list, tuple)):
        raise InputError(f"multipartition JSON must be a list of components, got {obj!r}")
    return as_multipartition(obj)


def multipartition_to_json(mp: Multipartition) -> dict:
    return {"components": [list(c) for c in mp]}


def size(mp: Multipartition) -> int:
    return sum(sum(c) for c in mp)


def nodes(mp: Multipartition):
    """All nodes, row-major inside each component, components in order."""
    out = []
    for j, comp in enumerate(mp, start=1):
        for b, width in enumerate(comp, start=1):
            for c in range(1, width + 1):
                out.append(Node(b, c, j))
    return out


def removable_nodes(mp: Multipartition):
    """Nodes whose removal leaves a multipartition: row ends that stick out."""
    out = []
    for j, comp in enumerate(mp, start=1):
        for b, width in enumerate(comp, start=1):
            below = comp[b] if b < len(comp) else 0
            if width > below:
                out.append(Node(b, width, j))
    return out


def addable_nodes(mp: Multipartition):
    """Positions where a node can be added leaving a multipartition.

    A component whose partition takes k distinct part values has k removable
    and k+1 addable nodes.
    """
    out = []
    for j, comp in enumerate(mp, start=1):
        for b in range(1, len(comp) + 2):
            width = comp[b - 1] if b <= len(comp) else 0
            above = comp[b - 2] if b >= 2 else None
            if above is None or above > width:
                out.append(Node(b, width + 1, j))
    return out


def remove_node(mp: Multipartition, nd: Node) -> Multipartition:
    """Remove a removable node; InputError if it is not removable."""
    if nd not in removable_nodes(mp):
        raise InputError(f"{nd} is not a removable node of {mp}")
    comp = list(mp[nd.comp - 1])
    comp[nd.row - 1] -= 1
    return mp[: nd.comp - 1] + (as_partition(comp),) + mp[nd.comp :]


def add_node(mp: Multipartition, nd: Node) -> Multipartition:
    """Add an addable node; InputError if the position is not addable."""
    if nd not in addable_nodes(mp):
        raise InputError(f"{nd} is not an addable node of {mp}")
    comp = list(mp[nd.comp - 1])
    if nd.row == len(comp) + 1:
        comp.append(1)
    else:
        comp[nd.row - 1] += 1
    return mp[: nd.comp - 1] + (as_partition(comp),) + mp[nd.comp :]


def residue(nd: Node, charge: Multicharge) -> int:
    """Residue of a node: (a_comp + col - row) mod e."""
    if not 1 <= nd.comp <= charge.r:
        raise InputError(f"node component {nd.comp} out of range for r={charge.r}")
    return (charge.entries[nd.comp - 1] + nd.col - nd.row) % charge.e


def residue_multiset(mp: Multipartition, charge: Multicharge) -> tuple:
    """Sorted tuple of the residues of all nodes.

    Two multipartitions of the same size lie in the same block exactly when
    these multisets agree.
    """
    _check_level(mp, charge)
    return tuple(sorted(residue(nd, charge) for nd in nodes(mp)))


def _check_level(mp: Multipartition, charge: Multicharge) -> None:
    if len(mp) != charge.r:
        raise InputError(f"multipartition has {len(mp)} components but charge has {charge.r}")


def dominates(lam: Multipartition, mu: Multipartition) -> bool:
    """Dominance order on multipartitions of equal size and level.

    lam dominates mu when every prefix sum (running through components in
    order, rows inside each component) is at least as large for lam.
    """
    if len(lam) != len(mu):
        raise InputError("dominance needs equal numbers of components")
    if size(lam) != size(mu):
        raise InputError("dominance is only defined between multipartitions of the same size")
    acc_l = acc_m = 0
    for lj, mj in zip(lam, mu):
        run_l, run_m = acc_l, acc_m
        for b in range(max(len(lj), len(mj))):
            run_l += lj[b] if b < len(lj) else 0
            run_m += mj[b] if b < len(mj) else 0
            if run_l < run_m:
                return False
        acc_l, acc_m = run_l, run_m
    return True


def lex_cmp(lam: Multipartition, mu: Multipartition) -> int:
    """Lexicographic comparison: -1, 0, or +1.

    The first differing component decides, within it the first differing
    part; a missing part counts as 0.  On canonical (zero-stripped) tuples
    this is exactly Python's tuple comparison.
    """
    if len(lam) != len(mu):
        raise InputError("lex order needs equal numbers of components")
    return (lam > mu) - (lam < mu)


def node_above(x: Node, y: Node) -> bool:
    """Whether node x is strictly above node y.

    Earlier components sit above later ones; within a component smaller
    rows sit above.  Columns never matter.
    """
    return (x.comp, x.row) < (y.comp, y.row)


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n, largest part first, in lex-descending order.

    >>> list(partitions_of(3))
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise InputError("partitions of a negative integer requested")
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def multipartitions_of(n: int, r: int):
    """Yield all r-component multipartitions of n, deterministically ordered."""
    if r < 1:
        raise InputError("need at least one component")
    if r == 1:
        for p in partitions_of(n):
            yield (p,)
        return
    for head in range(n, -1, -1):
        for p in partitions_of(head):
            for rest in multipartitions_of(n - head, r - 1):
                yield (p,) + rest


def _residue_counter(mp: Multipartition, charge: Multicharge) -> Counter:
    return Counter(residue(nd, charge) for nd in nodes(mp))
