"""Blocks: residue counts, weight, hub, core blocks, and the K invariant.

Two multipartitions of the same size lie in the same block exactly when
their residue multisets agree; the pair (hub, size) carries the same
information.  Every block has a nonnegative integer weight; blocks of
minimal weight among all blocks with their hub are the *core blocks*, and
every block reaches one along hub-preserving bead exchanges.  Core blocks
carry the K invariant that feeds the runner-swap condition.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .abacus import Multicore, gamma_diff, s_move, to_multicore
from .caps import Caps, default_caps
from .errors import InputError, LemmaViolation
from .multipartition import (
    Multicharge,
    Multipartition,
    addable_nodes,
    multipartitions_of,
    removable_nodes,
    residue,
    residue_multiset,
    size,
)

__all__ = [
    "BlockDescriptor",
    "Block",
    "SMoveStep",
    "CoreBlockResult",
    "ScopesReport",
    "residue_counts",
    "weight",
    "delta_ij",
    "hub",
    "level_hub",
    "block_of",
    "same_block",
    "enumerate_blocks",
    "block_containing",
    "witness_offsets",
    "is_core_block",
    "base_tuples",
    "k_value",
    "d_min",
    "core_block_of",
    "scopes_condition",
]


# ---------------------------------------------------------------------------
# residue counts, weight, hub


@lru_cache(maxsize=None)
def _counts(mp: Multipartition, e: int, kappa: tuple) -> tuple:
    charge = Multicharge(e, kappa)
    out = [0] * e
    for res in residue_multiset(mp, charge):
        out[res] += 1
    return tuple(out)


def residue_counts(mp: Multipartition, charge: Multicharge) -> tuple:
    """Number of nodes of each residue, as a tuple indexed by Z/eZ."""
    if len(mp) != charge.r:
        raise InputError(f"multipartition has {len(mp)} components but charge has {charge.r}")
    return _counts(mp, charge.e, charge.kappa)


def weight(mp: Multipartition, charge: Multicharge) -> int:
    """Block weight: sum_j c_{kappa_j} - (1/2) sum_i (c_i - c_{i+1})^2.

    Computed in integer arithmetic; the difference is provably even and
    the result nonnegative, both asserted.
    """
    c = residue_counts(mp, charge)
    e = charge.e
    lin = sum(c[k] for k in charge.kappa)
    quad = sum((c[i] - c[(i + 1) % e]) ** 2 for i in range(e))
    assert (2 * lin - quad) % 2 == 0, "weight parity"
    w = (2 * lin - quad) // 2
    assert w >= 0, f"negative weight {w} for {mp}"
    return w


def delta_ij(mp: Multipartition, charge: Multicharge, i: int, j: int) -> int:
    """Removable minus addable i-nodes of component j (1-based)."""
    if not 1 <= j <= len(mp):
        raise InputError(f"component index {j} out of range 1..{len(mp)}")
    if not 0 <= i < charge.e:
        raise InputError(f"residue {i} out of range 0..{charge.e - 1}")
    rem = sum(
        1 for nd in removable_nodes(mp) if nd.comp == j and residue(nd, charge) == i
    )
    add = sum(
        1 for nd in addable_nodes(mp) if nd.comp == j and residue(nd, charge) == i
    )
    return rem - add


@lru_cache(maxsize=None)
def _hub(mp: Multipartition, e: int, kappa: tuple) -> tuple:
    charge = Multicharge(e, kappa)
    out = [0] * e
    for nd in removable_nodes(mp):
        out[residue(nd, charge)] += 1
    for nd in addable_nodes(mp):
        out[residue(nd, charge)] -= 1
    return tuple(out)


def hub(mp: Multipartition, charge: Multicharge) -> tuple:
    """The hub: for each residue i, removable minus addable i-nodes.

    Entries sum to -r; together with the size it determines the block.
    """
    if len(mp) != charge.r:
        raise InputError(f"multipartition has {len(mp)} components but charge has {charge.r}")
    return _hub(mp, charge.e, charge.kappa)


def level_hub(m: Multicore) -> tuple:
    """Hub of a multicore read off its level matrix.

    Per component, delta_i = l_i - l_{i-1} for i != 0 and
    delta_0 = l_0 - l_{e-1} - 1.  This bridge is specific to multicores;
    it fails for general multipartitions.
    """
    e = m.e
    out = [0] * e
    for row in m.levels:
        for i in range(e):
            out[i] += row[i] - row[i - 1] - (1 if i == 0 else 0)
    return tuple(out)


# ---------------------------------------------------------------------------
# block descriptors and enumeration


@dataclass(frozen=True)
class BlockDescriptor:
    """Invariants that pin down a block: size, level, e, charges mod e, hub, weights."""

    n: int
    r: int
    e: int
    kappa: tuple
    hub: tuple
    weight: int
    core_weight: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "e": self.e,
            "kappa": list(self.kappa),
            "hub": list(self.hub),
            "weight": self.weight,
            "core_weight": self.core_weight,
        }

    @classmethod
    def from_json(cls, obj) -> "BlockDescriptor":
        try:
            return cls(
                n=obj["n"],
                r=obj["r"],
                e=obj["e"],
                kappa=tuple(obj["kappa"]),
                hub=tuple(obj["hub"]),
                weight=obj["weight"],
                core_weight=obj["core_weight"],
            )
        except (TypeError, KeyError) as exc:
            raise InputError(f"bad block descriptor JSON: {obj!r}") from exc

    @property
    def is_core(self) -> bool:
        return self.weight == self.core_weight


@dataclass(frozen=True)
class Block:
    """A block together with its full membership list, lex-descending."""

    descriptor: BlockDescriptor
    charge: Multicharge
    members: tuple

    @property
    def lex_least(self) -> Multipartition:
        return self.members[-1]


def block_of(mp: Multipartition, charge: Multicharge) -> BlockDescriptor:
    """Descriptor of the block containing mp."""
    core = core_block_of(mp, charge)
    return BlockDescriptor(
        n=size(mp),
        r=charge.r,
        e=charge.e,
        kappa=charge.kappa,
        hub=hub(mp, charge),
        weight=weight(mp, charge),
        core_weight=core.core.weight,
    )


def same_block(lam: Multipartition, mu: Multipartition, charge: Multicharge) -> bool:
    """Same-block test via residue multisets; sizes must agree."""
    if size(lam) != size(mu):
        raise InputError("same_block compares multipartitions of equal size")
    return residue_multiset(lam, charge) == residue_multiset(mu, charge)


@lru_cache(maxsize=None)
def _blocks_grouped(n: int, e: int, kappa: tuple) -> tuple:
    """Group all multipartitions of n by residue-count vector (lex-descending members)."""
    charge = Multicharge(e, kappa)
    groups: dict = {}
    for mp in multipartitions_of(n, len(kappa)):
        groups.setdefault(residue_counts(mp, charge), []).append(mp)
    out = []
    for key in groups:
        members = tuple(sorted(groups[key], reverse=True))
        out.append((key, members))
    out.sort(key=lambda item: item[1][-1])
    return tuple(out)


def enumerate_blocks(n: int, charge: Multicharge, caps: Caps | None = None) -> tuple:
    """All blocks of size n, sorted by lexicographically least member."""
    caps = caps or default_caps()
    if n < 0:
        raise InputError("block enumeration needs n >= 0")
    caps.check_n(n)
    caps.check_r(charge.r)
    caps.check_e(charge.e)
    blocks = []
    for _key, members in _blocks_grouped(n, charge.e, charge.kappa):
        rep = members[-1]
        blocks.append(
            Block(descriptor=block_of(rep, charge), charge=charge, members=members)
        )
    return tuple(blocks)


def block_containing(mp: Multipartition, charge: Multicharge, caps: Caps | None = None) -> Block:
    """The full block (with members) containing mp."""
    caps = caps or default_caps()
    caps.check_n(size(mp))
    caps.check_r(charge.r)
    caps.check_e(charge.e)
    key = residue_counts(mp, charge)
    for gkey, members in _blocks_grouped(size(mp), charge.e, charge.kappa):
        if gkey == key:
            return Block(descriptor=block_of(members[-1], charge), charge=charge, members=members)
    raise AssertionError("unreachable: every multipartition lies in a block")


# ---------------------------------------------------------------------------
# core blocks: witnesses, base tuples, K


@lru_cache(maxsize=None)
def witness_offsets(m: Multicore) -> tuple:
    """All offset vectors t (t_1 = 0) adjusting component charges by t_j * e
    so that every runner's levels pairwise differ by at most 1.

    Nonempty exactly when m belongs to a core block.  Each component's
    offset is confined to a window of at most three integers, so the
    search is exact and cheap.
    """
    lv = m.levels
    e, r = m.e, m.r
    if r == 1:
        return ((0,),)
    windows = []
    for j in range(1, r):
        d = [lv[0][i] - lv[j][i] for i in range(e)]
        lo, hi = max(d) - 1, min(d) + 1
        if lo > hi:
            return ()
        windows.append(range(lo, hi + 1))
    out = []
    for tail in product(*windows):
        t = (0,) + tail
        if all(
            abs(lv[j][i] + t[j] - lv[k][i] - t[k]) <= 1
            for j in range(r)
            for k in range(j + 1, r)
            for i in range(e)
        ):
            out.append(t)
    return tuple(out)


def _coerce_multicore(obj, charge: Multicharge | None) -> Multicore | None:
    """Accept a Multicore directly, or a multipartition plus charge.

    Returns None when the multipartition is not a multicore (and therefore
    cannot belong to a core block).
    """
    if isinstance(obj, Multicore):
        return obj
    if charge is None:
        raise InputError("a multipartition needs an accompanying multicharge")
    core, hooks = to_multicore(obj, charge)
    return core if hooks == 0 else None


def is_core_block(obj, charge: Multicharge | None = None) -> bool:
    """Whether the block of the given multicore/multipartition is a core block.

    A non-multicore multipartition never lies in a core block, so it
    answers False rather than erroring.
    """
    m = _coerce_multicore(obj, charge)
    return m is not None and bool(witness_offsets(m))


def _canonical_witness(m: Multicore) -> tuple:
    """Most runners forced to a single level, ties broken lex-least."""
    ws = witness_offsets(m)
    if not ws:
        raise InputError("not a member of a core block")
    lv = m.levels

    def singletons(t):
        return sum(
            1 for i in range(m.e) if len({lv[j][i] + t[j] for j in range(m.r)}) == 1
        )

    return min(ws, key=lambda t: (-singletons(t), t))


def base_tuples(m: Multicore) -> tuple:
    """All base tuples of the core block, for the canonical witness.

    Under a witness, runner i's levels occupy {b_i, b_i + 1} for the base
    values b_i: a two-level runner forces b_i, a flat runner allows two
    choices.  Tuples are returned sorted; only differences b_i - b_l are
    meaningful, and all arise from the same witness normalisation.
    """
    t = _canonical_witness(m)
    lv = m.levels
    choices = []
    for i in range(m.e):
        vals = sorted({lv[j][i] + t[j] for j in range(m.r)})
        if len(vals) == 2:
            assert vals[1] == vals[0] + 1, "witness bounds level spread by one"
            choices.append((vals[0],))
        else:
            assert len(vals) == 1
            choices.append((vals[0] - 1, vals[0]))
    return tuple(sorted(product(*choices)))


def k_value(m: Multicore, i: int) -> int:
    """The K invariant of a core block at residue i.

    For one witness, the extreme base-tuple choice gives
    K_i = min_j l'_ij - max_j l'_(i-1)j - [i = 0]; the invariant is the
    maximum over all witnesses (distinct witnesses can disagree).
    """
    if not 0 <= i < m.e:
        raise InputError(f"residue {i} out of range 0..{m.e - 1}")
    ws = witness_offsets(m)
    if not ws:
        raise InputError("K is only defined on core blocks")
    lv = m.levels
    prev = (i - 1) % m.e
    best = None
    for t in ws:
        lo_i = min(lv[j][i] + t[j] for j in range(m.r))
        hi_prev = max(lv[j][prev] + t[j] for j in range(m.r))
        k = lo_i - hi_prev - (1 if i == 0 else 0)
        if best is None or k > best:
            best = k
    return best


def d_min(mp: Multipartition, charge: Multicharge, i: int) -> int:
    """Smallest per-component hub entry: min_j delta_i^j."""
    return min(delta_ij(mp, charge, i, j) for j in range(1, len(mp) + 1))


# ---------------------------------------------------------------------------
# reaching the core block


@dataclass(frozen=True)
class SMoveStep:
    """One recorded bead exchange along a core-block chain."""

    i: int
    l: int
    j: int
    k: int
    gamma_difference: int
    weight_before: int
    weight_after: int

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "l": self.l,
            "j": self.j,
            "k": self.k,
            "gamma": self.gamma_difference,
            "weight_before": self.weight_before,
            "weight_after": self.weight_after,
        }


@dataclass(frozen=True)
class CoreBlockResult:
    """Where a block's weight goes when all of it is stripped away."""

    core: BlockDescriptor
    chain: tuple
    core_multicore: Multicore
    hooks_removed: int


def _moves(m: Multicore, minimum: int):
    """All genuine exchanges with gamma difference >= minimum, in fixed order."""
    for j in range(1, m.r + 1):
        for k in range(j + 1, m.r + 1):
            for i in range(m.e):
                for l in range(m.e):
                    if l == i:
                        continue
                    if gamma_diff(m, i, l, j, k) >= minimum:
                        yield (i, l, j, k)


@lru_cache(maxsize=None)
def _core_search(m: Multicore) -> tuple:
    """A hub-preserving, weight-non-increasing move sequence into a core block.

    Phase one greedily takes any exchange with gamma difference >= 3
    (each strictly lowers the weight).  If the result is not yet in a
    core block, phase two breadth-first searches all non-increasing
    exchanges; same hub plus bounded weight keeps the state space finite,
    and a path always exists.
    """
    moves = []
    cur = m
    while True:
        mv = next(_moves(cur, 3), None)
        if mv is None:
            break
        moves.append(mv)
        cur = s_move(cur, *mv)
    if witness_offsets(cur):
        return tuple(moves)
    prev = {cur: None}
    queue = deque([cur])
    while queue:
        node = queue.popleft()
        for mv in _moves(node, 2):
            nxt = s_move(node, *mv)
            if nxt in prev:
                continue
            prev[nxt] = (node, mv)
            if witness_offsets(nxt):
                back = []
                walk = nxt
                while prev[walk] is not None:
                    parent, step = prev[walk]
                    back.append(step)
                    walk = parent
                return tuple(moves) + tuple(reversed(back))
            queue.append(nxt)
    raise LemmaViolation(
        "core_block_reachability",
        f"no weight-non-increasing exchange path from levels {m.levels} reaches a core block",
    )


@lru_cache(maxsize=None)
def core_block_of(mp: Multipartition, charge: Multicharge) -> CoreBlockResult:
    """Strip rim hooks, then walk bead exchanges down to the core block.

    The recorded chain keeps the hub constant and never increases the
    weight; both facts are asserted step by step, along with the exchange
    weight law w(next) = w(cur) - r*(gamma_difference - 2).
    """
    m0, hooks = to_multicore(mp, charge)
    h0 = hub(mp, charge)
    r = charge.r
    path = _core_search(m0)
    cur = m0
    cur_mp = cur.to_multipartition()
    cur_w = weight(cur_mp, charge)
    assert cur_w == weight(mp, charge) - r * hooks, "each rim hook carries weight r"
    chain = []
    for mv in path:
        g = gamma_diff(cur, *mv)
        nxt = s_move(cur, *mv)
        nxt_mp = nxt.to_multipartition()
        nxt_w = weight(nxt_mp, charge)
        assert hub(nxt_mp, charge) == h0, "bead exchanges preserve the hub"
        assert nxt_w == cur_w - r * (g - 2), "exchange weight law"
        chain.append(
            SMoveStep(
                i=mv[0], l=mv[1], j=mv[2], k=mv[3],
                gamma_difference=g, weight_before=cur_w, weight_after=nxt_w,
            )
        )
        cur, cur_mp, cur_w = nxt, nxt_mp, nxt_w
    assert witness_offsets(cur), "search post-condition: a core block was reached"
    descriptor = BlockDescriptor(
        n=size(cur_mp),
        r=r,
        e=charge.e,
        kappa=charge.kappa,
        hub=h0,
        weight=cur_w,
        core_weight=cur_w,
    )
    return CoreBlockResult(
        core=descriptor, chain=tuple(chain), core_multicore=cur, hooks_removed=hooks
    )


# ---------------------------------------------------------------------------
# the runner-swap condition


@dataclass(frozen=True)
class ScopesReport:
    """Verdict of the weight-versus-K condition for one block and residue."""

    holds: bool
    w_b: int
    w_c: int
    k: int
    delta: int

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "wB": self.w_b,
            "wC": self.w_c,
            "K": self.k,
            "delta": self.delta,
        }


@lru_cache(maxsize=None)
def scopes_condition(mp: Multipartition, charge: Multicharge, i: int) -> ScopesReport:
    """Evaluate w(B) <= w(C) + K_i * r for the block of mp.

    Evaluated literally, including K_i < 0 (where it can fail even for the
    core block itself); holds=False is a report, not an error.
    """
    res = core_block_of(mp, charge)
    w_b = weight(mp, charge)
    k = k_value(res.core_multicore, i)
    return ScopesReport(
        holds=w_b <= res.core.weight + k * charge.r,
        w_b=w_b,
        w_c=res.core.weight,
        k=k,
        delta=hub(mp, charge)[i],
    )
