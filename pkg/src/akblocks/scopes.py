"""Pairing a block with its runner-swap image and certifying the laws.

When the weight condition holds at residue i with delta_i >= 0, the swap
lambda -> Phi_i(lambda) maps the block bijectively onto a same-weight
block of size n - delta_i, preserves the lexicographic order of members,
and preserves being Kleshchev.  ``certificate`` re-runs every one of
those checks on a concrete block and stamps the result.
"""

from dataclasses import dataclass
from functools import lru_cache

from .abacus import has_forbidden_config, phi
from .blocks import (
    Block,
    BlockDescriptor,
    ScopesReport,
    block_containing,
    block_of,
    scopes_condition,
    weight,
)
from .branching import LaurentPolynomial, branching_polynomial, degree_spectrum
from .caps import Caps, default_caps
from .errors import InputError, LemmaViolation
from .multipartition import (
    Multicharge,
    Multipartition,
    addable_nodes,
    multipartition_from_json,
    multipartition_to_json,
    remove_node,
    removable_nodes,
    residue,
    size,
)

__all__ = [
    "phi_block",
    "scopes_pairing",
    "LexReport",
    "verify_lex_preserved",
    "good_nodes",
    "is_kleshchev",
    "KleshchevReport",
    "verify_kleshchev_preserved",
    "ScopesCertificate",
    "certificate",
]


def phi_block(block: Block, i: int) -> BlockDescriptor:
    """Descriptor of the block the runner swap sends this block into."""
    image = phi(block.lex_least, block.charge, i)
    return block_of(image, block.charge)


def scopes_pairing(block: Block, i: int) -> tuple:
    """(member, image) pairs, members lex-descending."""
    return tuple((mp, phi(mp, block.charge, i)) for mp in block.members)


@dataclass(frozen=True)
class LexReport:
    """Whether the swap preserves lexicographic order on a block."""

    condition: ScopesReport
    holds: bool
    violations: tuple


def verify_lex_preserved(block: Block, i: int) -> LexReport:
    """Check images of lex-descending members stay strictly lex-descending.

    Outside the weight condition the preservation may genuinely fail;
    the report records the condition verdict alongside.
    """
    cond = scopes_condition(block.lex_least, block.charge, i)
    pairs = scopes_pairing(block, i)
    violations = []
    for (src_a, img_a), (src_b, img_b) in zip(pairs, pairs[1:]):
        if not img_a > img_b:
            violations.append(
                f"{src_a} > {src_b} but images order as {img_a} vs {img_b}"
            )
    return LexReport(condition=cond, holds=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# good nodes and Kleshchev multipartitions


def good_nodes(mp: Multipartition, charge: Multicharge) -> tuple:
    """The good node of each residue, where one exists, ordered by residue.

    Per residue: list addable and removable nodes from highest to lowest,
    cancel each removable immediately followed (in the surviving word) by
    an addable, and take the highest surviving removable.
    """
    out = []
    for i in range(charge.e):
        tagged = [(nd, "R") for nd in removable_nodes(mp) if residue(nd, charge) == i]
        tagged += [(nd, "A") for nd in addable_nodes(mp) if residue(nd, charge) == i]
        tagged.sort(key=lambda item: (item[0].comp, item[0].row))
        stack = []
        for nd, kind in tagged:
            if kind == "A" and stack and stack[-1][1] == "R":
                stack.pop()
            else:
                stack.append((nd, kind))
        for nd, kind in stack:
            if kind == "R":
                out.append(nd)
                break
    return tuple(out)


@lru_cache(maxsize=None)
def _kleshchev(mp: Multipartition, e: int, kappa: tuple) -> bool:
    if size(mp) == 0:
        return True
    charge = Multicharge(e, kappa)
    good = good_nodes(mp, charge)
    if not good:
        return False
    # any good node works; removing the one of smallest residue is a
    # deterministic choice
    return _kleshchev(remove_node(mp, good[0]), e, kappa)


def is_kleshchev(mp: Multipartition, charge: Multicharge) -> bool:
    """Whether mp is reachable from the empty multipartition by good nodes."""
    if len(mp) != charge.r:
        raise InputError(f"multipartition has {len(mp)} components but charge has {charge.r}")
    return _kleshchev(mp, charge.e, charge.kappa)


@dataclass(frozen=True)
class KleshchevReport:
    """Whether the swap preserves the Kleshchev property on a block."""

    condition: ScopesReport
    holds: bool
    mismatches: tuple


def verify_kleshchev_preserved(block: Block, i: int) -> KleshchevReport:
    cond = scopes_condition(block.lex_least, block.charge, i)
    mismatches = []
    for src, img in scopes_pairing(block, i):
        fs, fi = is_kleshchev(src, block.charge), is_kleshchev(img, block.charge)
        if fs != fi:
            mismatches.append(f"{src} kleshchev={fs} but image {img} kleshchev={fi}")
    return KleshchevReport(condition=cond, holds=not mismatches, mismatches=tuple(mismatches))


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class ScopesCertificate:
    """A fully re-checked record of one block/residue swap instance."""

    schema: int
    block: BlockDescriptor
    image_block: BlockDescriptor
    i: int
    condition: ScopesReport
    pairs: tuple  # ((source, image, (bool, bool)), ...)
    polynomial: LaurentPolynomial
    checks: tuple  # (anchor, ...) all stamped "ok"

    def to_json(self) -> dict:
        return {
            "schema": self.schema,
            "block": self.block.to_json(),
            "image_block": self.image_block.to_json(),
            "i": self.i,
            "condition": self.condition.to_json(),
            "pairs": [
                {
                    "source": multipartition_to_json(src),
                    "image": multipartition_to_json(img),
                    "kleshchev": list(flags),
                }
                for src, img, flags in self.pairs
            ],
            "polynomial": self.polynomial.to_json(),
            "checks": {anchor: "ok" for anchor in self.checks},
        }

    @classmethod
    def from_json(cls, obj) -> "ScopesCertificate":
        try:
            if obj["schema"] != 1:
                raise InputError(f"unsupported certificate schema {obj['schema']!r}")
            cond = obj["condition"]
            return cls(
                schema=obj["schema"],
                block=BlockDescriptor.from_json(obj["block"]),
                image_block=BlockDescriptor.from_json(obj["image_block"]),
                i=obj["i"],
                condition=ScopesReport(
                    holds=cond["holds"],
                    w_b=cond["wB"],
                    w_c=cond["wC"],
                    k=cond["K"],
                    delta=cond["delta"],
                ),
                pairs=tuple(
                    (
                        multipartition_from_json(p["source"]),
                        multipartition_from_json(p["image"]),
                        tuple(p["kleshchev"]),
                    )
                    for p in obj["pairs"]
                ),
                polynomial=LaurentPolynomial.from_json(obj["polynomial"]),
                checks=tuple(sorted(obj["checks"])),
            )
        except (TypeError, KeyError) as exc:
            raise InputError(f"bad certificate JSON: {exc!r}") from exc


def certificate(block: Block, i: int, caps: Caps | None = None) -> ScopesCertificate:
    """Re-run every preservation law on one block and stamp the results.

    Input: a block satisfying the weight condition at residue i with
    delta_i >= 0 (anything else is an InputError).  Any law failing on the
    concrete instance raises LemmaViolation naming the anchor.
    """
    caps = caps or default_caps()
    charge = block.charge
    cond = scopes_condition(block.lex_least, charge, i)
    if cond.delta < 0:
        raise InputError(f"certificate needs delta_i >= 0, got {cond.delta}")
    if not cond.holds:
        raise InputError(
            f"certificate needs the weight condition; w(B)={cond.w_b} exceeds "
            f"w(C)+K*r={cond.w_c}+{cond.k}*{charge.r}"
        )
    checks = []

    def stamp(anchor: str, ok: bool, detail: str):
        if not ok:
            raise LemmaViolation(anchor, detail)
        if anchor not in checks:
            checks.append(anchor)

    for mp in block.members:
        stamp(
            "no_forbidden_config",
            not has_forbidden_config(mp, charge, i),
            f"{mp} carries the forbidden runner configuration at residue {i}",
        )
        stamp(
            "no_addable_under_condition",
            not any(residue(nd, charge) == i for nd in addable_nodes(mp)),
            f"{mp} has an addable {i}-node despite the weight condition",
        )

    pairs = scopes_pairing(block, i)
    images = [img for _, img in pairs]
    stamp(
        "block_bijection",
        len(set(images)) == len(images),
        "two members share a runner-swap image",
    )
    image_block = block_containing(images[0], charge, caps)
    stamp(
        "block_bijection",
        set(images) == set(image_block.members),
        "images do not exhaust one block of the smaller algebra",
    )
    stamp(
        "weight_preserved",
        all(weight(img, charge) == weight(src, charge) for src, img in pairs),
        "the swap changed a block weight",
    )
    lex = verify_lex_preserved(block, i)
    stamp("lex_order_preserved", lex.holds, "; ".join(lex.violations))
    kle = verify_kleshchev_preserved(block, i)
    stamp("kleshchev_preserved", kle.holds, "; ".join(kle.mismatches))

    expected = degree_spectrum(cond.delta)
    for mp in block.members:
        got = branching_polynomial(mp, charge, i, caps)
        stamp(
            "branching_spectrum",
            got == expected,
            f"branching polynomial of {mp} is {got!r}, expected {expected!r}",
        )

    flagged = tuple(
        (src, img, (is_kleshchev(src, charge), is_kleshchev(img, charge)))
        for src, img in pairs
    )
    return ScopesCertificate(
        schema=1,
        block=block.descriptor,
        image_block=image_block.descriptor,
        i=i,
        condition=cond,
        pairs=flagged,
        polynomial=expected,
        checks=tuple(sorted(checks)),
    )
