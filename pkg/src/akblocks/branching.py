"""Graded branching: restriction/induction factors and degree polynomials.

Restricting a Specht-type module along one step splits, up to filtration,
into one factor per removable node; inducing splits into one factor per
addable node.  Each factor is shifted by an integer degree counted from
the addable/removable nodes of the same residue below (restriction) or
above (induction) the node in question.

When the runner-swap condition holds at residue i and the block has
delta_i >= 0 removable i-nodes and none addable, iterating single-step
restriction delta_i times and projecting to the target block yields the
image multipartition once per removal order, shifted by ell - 2*inv(sigma)
where ell = delta*(delta-1)/2.  Summing v^degree over all orders gives the
branching polynomial, whose coefficients form the Mahonian distribution.
"""

from itertools import permutations

from .abacus import phi
from .caps import Caps, default_caps
from .errors import InputError, LemmaViolation
from .multipartition import (
    Multicharge,
    Multipartition,
    Node,
    addable_nodes,
    node_above,
    remove_node,
    add_node,
    removable_nodes,
    residue,
)
from .blocks import scopes_condition

__all__ = [
    "LaurentPolynomial",
    "inversions",
    "mahonian",
    "degree_spectrum",
    "n_below",
    "n_above",
    "restriction_factors",
    "induction_factors",
    "order_degree",
    "induction_order_degree",
    "branching_polynomial",
]

MAHONIAN_CAP = 9


class LaurentPolynomial:
    """A Laurent polynomial in v with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for d, x in (coeffs or {}).items():
            if not isinstance(x, int):
                raise InputError(f"coefficients must be integers, got {x!r}")
            d = int(d)
            if x:
                c[d] = c.get(d, 0) + x
        self._c = {d: c[d] for d in sorted(c) if c[d]}

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({degree: coeff})

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    def coefficient(self, degree: int) -> int:
        return self._c.get(degree, 0)

    def degrees(self):
        return tuple(self._c)

    def items(self):
        return tuple(self._c.items())

    def __add__(self, other):
        c = dict(self._c)
        for d, x in other._c.items():
            c[d] = c.get(d, 0) + x
        return LaurentPolynomial(c)

    def __mul__(self, other):
        c = {}
        for d1, x1 in self._c.items():
            for d2, x2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, 0) + x1 * x2
        return LaurentPolynomial(c)

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def is_palindromic(self) -> bool:
        """Invariant under v -> 1/v."""
        return all(self.coefficient(-d) == x for d, x in self._c.items())

    def __repr__(self):
        if not self._c:
            return "0"
        bits = []
        for d in sorted(self._c, reverse=True):
            x = self._c[d]
            if d == 0:
                bits.append(str(x))
            else:
                head = "" if x == 1 else ("-" if x == -1 else str(x))
                power = "v" if d == 1 else f"v^{d}"
                bits.append(f"{head}{power}")
        return " + ".join(bits).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {str(d): x for d, x in self._c.items()}

    @classmethod
    def from_json(cls, obj) -> "LaurentPolynomial":
        if not isinstance(obj, dict):
            raise InputError(f"polynomial JSON must be an object, got {obj!r}")
        try:
            return cls({int(d): x for d, x in obj.items()})
        except ValueError as exc:
            raise InputError(f"polynomial JSON keys must be integer strings: {obj!r}") from exc


def inversions(seq) -> int:
    """Number of out-of-order pairs."""
    seq = tuple(seq)
    return sum(
        1
        for a in range(len(seq))
        for b in range(a + 1, len(seq))
        if seq[a] > seq[b]
    )


def mahonian(delta: int, cap: int = MAHONIAN_CAP) -> tuple:
    """Permutations of delta letters counted by inversion number.

    Computed by direct enumeration -- this is the reference distribution
    the branching spectra are compared against, so it deliberately avoids
    the generating-function shortcut.

    >>> mahonian(3)
    (1, 2, 2, 1)
    """
    if delta < 0:
        raise InputError("mahonian needs delta >= 0")
    if delta > cap:
        raise InputError(f"mahonian enumeration capped at delta <= {cap}, got {delta}")
    out = [0] * (delta * (delta - 1) // 2 + 1)
    for sigma in permutations(range(delta)):
        out[inversions(sigma)] += 1
    return tuple(out)


def degree_spectrum(delta: int) -> LaurentPolynomial:
    """sum_k mahonian(delta)[k] * v^(ell - 2k) with ell = delta*(delta-1)/2."""
    ell = delta * (delta - 1) // 2
    counts = mahonian(delta)
    return LaurentPolynomial({ell - 2 * k: counts[k] for k in range(len(counts))})


def _node_of_residue(mp: Multipartition, charge: Multicharge, nd: Node, kind: str) -> int:
    pool = removable_nodes(mp) if kind == "removable" else addable_nodes(mp)
    if nd not in pool:
        raise InputError(f"{nd} is not a {kind} node of {mp}")
    return residue(nd, charge)


def n_below(mp: Multipartition, charge: Multicharge, nd: Node) -> int:
    """Degree of the restriction factor at a removable node.

    Counts addable minus removable nodes of the same residue strictly
    below the node.
    """
    i = _node_of_residue(mp, charge, nd, "removable")
    add = sum(
        1
        for x in addable_nodes(mp)
        if residue(x, charge) == i and node_above(nd, x)
    )
    rem = sum(
        1
        for x in removable_nodes(mp)
        if residue(x, charge) == i and node_above(nd, x)
    )
    return add - rem


def n_above(mp: Multipartition, charge: Multicharge, nd: Node) -> int:
    """Degree of the induction factor at an addable node.

    Counts addable minus removable nodes of the same residue strictly
    above the node.
    """
    i = _node_of_residue(mp, charge, nd, "addable")
    add = sum(
        1
        for x in addable_nodes(mp)
        if residue(x, charge) == i and node_above(x, nd)
    )
    rem = sum(
        1
        for x in removable_nodes(mp)
        if residue(x, charge) == i and node_above(x, nd)
    )
    return add - rem


def restriction_factors(mp: Multipartition, charge: Multicharge) -> tuple:
    """(smaller multipartition, degree) per removable node, lowest node first."""
    if len(mp) != charge.r:
        raise InputError(f"multipartition has {len(mp)} components but charge has {charge.r}")
    nds = sorted(removable_nodes(mp), key=lambda nd: (nd.comp, nd.row), reverse=True)
    return tuple((remove_node(mp, nd), n_below(mp, charge, nd)) for nd in nds)


def induction_factors(mp: Multipartition, charge: Multicharge) -> tuple:
    """(larger multipartition, degree) per addable node, highest node first."""
    if len(mp) != charge.r:
        raise InputError(f"multipartition has {len(mp)} components but charge has {charge.r}")
    nds = sorted(addable_nodes(mp), key=lambda nd: (nd.comp, nd.row))
    return tuple((add_node(mp, nd), n_above(mp, charge, nd)) for nd in nds)


def _removal_context(mp: Multipartition, charge: Multicharge, i: int, caps: Caps):
    """Validate the branching hypotheses and return the ascending i-node list.

    Input conditions: the block condition holds at residue i and
    delta_i >= 0.  Having no addable i-node then follows from the theory;
    violating it would be a genuine counterexample, so it raises
    LemmaViolation, not InputError.
    """
    report = scopes_condition(mp, charge, i)
    if report.delta < 0:
        raise InputError(
            f"branching needs delta_i >= 0, got delta_{i} = {report.delta}"
        )
    if not report.holds:
        raise InputError(
            f"the weight condition fails at residue {i}: "
            f"w(B)={report.w_b} > w(C)+K*r={report.w_c}+{report.k}*{charge.r}"
        )
    stray = [nd for nd in addable_nodes(mp) if residue(nd, charge) == i]
    if stray:
        raise LemmaViolation(
            "no_addable_under_condition",
            f"{mp} with charge {charge.entries} has addable {i}-nodes {stray} "
            "despite the weight condition",
        )
    rems = sorted(
        (nd for nd in removable_nodes(mp) if residue(nd, charge) == i),
        key=lambda nd: (nd.comp, nd.row),
        reverse=True,
    )
    assert len(rems) == report.delta, "with no addable i-nodes, delta_i counts the removable ones"
    caps.check_delta(len(rems))
    return rems


def order_degree(
    mp: Multipartition,
    charge: Multicharge,
    i: int,
    sigma,
    caps: Caps | None = None,
) -> int:
    """Accumulated degree of one removal order.

    sigma is a permutation of 1..delta indexing the ascending list of
    removable i-nodes; nodes are stripped in the order A_sigma(1),
    A_sigma(2), ... with each step contributing the current n_below.
    Every order stays removable and ends at the runner-swap image; both
    facts are checked and a failure raises LemmaViolation.
    """
    caps = caps or default_caps()
    ascending = _removal_context(mp, charge, i, caps)
    delta = len(ascending)
    if sorted(sigma) != list(range(1, delta + 1)):
        raise InputError(f"sigma must be a permutation of 1..{delta}, got {sigma!r}")
    cur = mp
    total = 0
    for t in sigma:
        nd = ascending[t - 1]
        if nd not in removable_nodes(cur):
            raise LemmaViolation(
                "branching_well_defined",
                f"node {nd} stopped being removable while stripping {mp} in order {sigma}",
            )
        total += n_below(cur, charge, nd)
        cur = remove_node(cur, nd)
    target = phi(mp, charge, i)
    if cur != target:
        raise LemmaViolation(
            "branching_well_defined",
            f"stripping {mp} in order {sigma} ended at {cur}, not at the runner-swap image {target}",
        )
    return total


def induction_order_degree(
    mp: Multipartition,
    charge: Multicharge,
    i: int,
    sigma,
    caps: Caps | None = None,
) -> int:
    """Accumulated degree of one addition order on the runner-swap image.

    The image's addable i-nodes are exactly the stripped ones; sigma
    permutes their descending list (highest first) and each step
    contributes the current n_above.  Ends back at mp.
    """
    caps = caps or default_caps()
    _removal_context(mp, charge, i, caps)
    image = phi(mp, charge, i)
    adds = sorted(
        (nd for nd in addable_nodes(image) if residue(nd, charge) == i),
        key=lambda nd: (nd.comp, nd.row),
    )
    delta = len(adds)
    if sorted(sigma) != list(range(1, delta + 1)):
        raise InputError(f"sigma must be a permutation of 1..{delta}, got {sigma!r}")
    cur = image
    total = 0
    for t in sigma:
        nd = adds[t - 1]
        if nd not in addable_nodes(cur):
            raise LemmaViolation(
                "branching_well_defined",
                f"node {nd} stopped being addable while rebuilding {mp} in order {sigma}",
            )
        total += n_above(cur, charge, nd)
        cur = add_node(cur, nd)
    if cur != mp:
        raise LemmaViolation(
            "branching_well_defined",
            f"adding back in order {sigma} ended at {cur}, not at {mp}",
        )
    return total


def branching_polynomial(
    mp: Multipartition,
    charge: Multicharge,
    i: int,
    caps: Caps | None = None,
) -> LaurentPolynomial:
    """Sum of v^degree over all removal orders of the i-nodes of mp.

    Under the branching hypotheses this equals the Mahonian spectrum
    sum_k mahonian(delta)[k] v^(ell-2k); the equality is what the
    verification sweeps certify, so this function computes the sum by
    direct enumeration and never takes the shortcut.
    """
    caps = caps or default_caps()
    ascending = _removal_context(mp, charge, i, caps)
    delta = len(ascending)
    poly = LaurentPolynomial.zero()
    for sigma in permutations(range(1, delta + 1)):
        poly = poly + LaurentPolynomial.monomial(order_degree(mp, charge, i, sigma, caps))
    return poly
