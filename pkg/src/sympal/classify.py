"""The transvection trichotomy: reducible / induced / huge.

The classifier mirrors the structure of the underlying proof: test
reducibility of G first; otherwise form H = <transvections of G> and
either recognize it (irreducible case, order matching against
|Sp_n(ell^d)|) or build the orthogonal block decomposition from an
irreducible H-submodule and the generator orbit of its conjugates.
Witnesses are verified, never trusted: a failed witness check signals an
enumeration bug, not a mathematical possibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import linalg
from .errors import (
    CharTooSmall,
    NoOrderMatch,
    NoTransvection,
    WitnessCheckFailed,
)
from .groupkit import (
    DEFAULT_CAP,
    MatrixGroup,
    group_order,
    harvest_transvections,
    is_irreducible,
    sp_order,
    spin,
)
from .linalg import Mat
from .symplectic import (
    SqMatrix,
    Subspace,
    is_nonsingular_subspace,
    is_similitude,
    stabilizes,
)


@dataclass(frozen=True)
class Reducible:
    witness: Subspace

    case = "reducible"


@dataclass(frozen=True)
class Induced:
    blocks: tuple[Subspace, ...]
    block_dim: int
    block_count: int
    action: tuple[tuple[int, ...], ...]   # per generator, the block permutation

    case = "induced"


@dataclass(frozen=True)
class Huge:
    subfield_degree: int
    transvection_subgroup_order: int

    case = "huge"


Classification = Union[Reducible, Induced, Huge]


def _check_preconditions(g: MatrixGroup):
    if g.space.field.ell < 5:
        raise CharTooSmall(f"characteristic {g.space.field.ell} < 5")
    for m in g.generators:
        if not is_similitude(m):
            raise WitnessCheckFailed("generator outside GSp(V)")


def _dedupe_directions(transvections) -> list[SqMatrix]:
    """One transvection per direction line; enough for generation and
    stabilization questions (T_v[c*lam] is a power of T_v[lam])."""
    seen = set()
    out = []
    for m, data in transvections:
        if data.direction not in seen:
            seen.add(data.direction)
            out.append(m)
    return out


def recognize_sp_over_subfield(h: MatrixGroup, cap: int = DEFAULT_CAP) -> int:
    """The divisor d of the ambient degree with |H| = |Sp_n(ell^d)|.

    H must be irreducible and generated by transvections in characteristic
    at least 5; under those hypotheses the match exists.  NoOrderMatch
    signals violated preconditions or cap artifacts.
    """
    if h.space.field.ell < 5:
        raise CharTooSmall(f"characteristic {h.space.field.ell} < 5")
    if not is_irreducible(h):
        raise NoOrderMatch("subgroup is not irreducible")
    order = group_order(h, cap)
    n = h.space.n
    r = h.space.field.degree
    for d in range(1, r + 1):
        if r % d == 0 and order == sp_order(n, h.space.field.ell ** d):
            return d
    raise NoOrderMatch(f"order {order} matches no |Sp_{n}({h.space.field.ell}^d)|")


def classify(g: MatrixGroup, cap: int = DEFAULT_CAP) -> Classification:
    """Trichotomy verdict with verified witnesses.

    Case precedence follows the proof order: reducible, then induced,
    then huge.  Requires characteristic >= 5 and a nontrivial transvection
    in G (both checked).
    """
    _check_preconditions(g)
    harvested = harvest_transvections(g, cap)
    if not harvested:
        raise NoTransvection("no nontrivial transvection found within the cap")

    red = is_irreducible(g)
    if not red.irreducible:
        w = red.witness
        if not (0 < w.dim < g.space.n) or not all(stabilizes(m, w) for m in g.generators):
            raise WitnessCheckFailed("invalid reducibility witness")
        return Reducible(w)

    h_gens = _dedupe_directions(harvested)
    h = MatrixGroup(g.space, tuple(h_gens))
    h_red = is_irreducible(h)
    if h_red.irreducible:
        d = recognize_sp_over_subfield(h, cap)
        return Huge(d, group_order(h, cap))

    return _build_induced(g, h_gens, harvested[0][1].direction)


def _build_induced(g: MatrixGroup, h_gens, seed) -> Induced:
    """Blocks = generator orbit of the spin of a transvection direction."""
    space = g.space
    w = spin(space, h_gens, seed)
    blocks = [w]
    index = {w.basis: 0}
    frontier = [w]
    while frontier:
        new = []
        for b in frontier:
            for a in g.generators:
                img = b.transform(a)
                if img.basis not in index:
                    index[img.basis] = len(blocks)
                    blocks.append(img)
                    new.append(img)
        frontier = new
    h = len(blocks)
    m = w.dim
    if h * m != space.n:
        raise WitnessCheckFailed("block orbit does not tile the space")
    # verify: equal dims, pairwise orthogonal, nonsingular, direct sum
    all_rows: list = []
    for i, b in enumerate(blocks):
        if b.dim != m:
            raise WitnessCheckFailed("unequal block dimensions")
        if not is_nonsingular_subspace(b):
            raise WitnessCheckFailed("singular block")
        for j in range(i):
            for u in blocks[i].basis:
                for v in blocks[j].basis:
                    if space.pair(u, v) != 0:
                        raise WitnessCheckFailed("blocks not orthogonal")
        all_rows.extend(b.basis)
    if linalg.rank(space.field, all_rows) != space.n:
        raise WitnessCheckFailed("blocks do not span")
    action = []
    for a in g.generators:
        perm = []
        for b in blocks:
            img = b.transform(a)
            k = index.get(img.basis)
            if k is None:
                raise WitnessCheckFailed("generator image leaves the block set")
            perm.append(k)
        if sorted(perm) != list(range(h)):
            raise WitnessCheckFailed("generator action is not a permutation")
        action.append(tuple(perm))
    return Induced(tuple(blocks), m, h, tuple(action))


def is_huge(g: MatrixGroup, cap: int = DEFAULT_CAP) -> bool:
    """True iff the classifier lands in the huge case.

    Equivalently G contains a conjugate of Sp_n over the prime field; on
    fixtures the order bound |H| >= |Sp_n(ell)| is cross-checked.
    """
    verdict = classify(g, cap)
    if isinstance(verdict, Huge):
        assert verdict.transvection_subgroup_order >= sp_order(g.space.n, g.space.field.ell)
        return True
    return False


@dataclass(frozen=True)
class InducedExtraction:
    stabilizer: tuple[SqMatrix, ...]          # all elements of the block-1 stabilizer
    index: int
    block_action: tuple[Mat, ...]             # m x m matrices of stabilizer elements on S_1


def extract_induction(g: MatrixGroup, verdict: Induced,
                      cap: int = DEFAULT_CAP) -> InducedExtraction:
    """Stabilizer of the first block with its block representation.

    Verifies the index equals the block count and that the induced
    character of the block action matches the character of G on V
    pointwise over the enumerated group.
    """
    space = g.space
    spec = space.field
    ctx = spec.ctx
    elems = g.elements(cap)
    blocks = verdict.blocks
    first = blocks[0]

    def coords_on(block: Subspace, a: SqMatrix) -> Optional[Mat]:
        """Matrix of a restricted to the block, or None if not stabilized."""
        cols = []
        bbt = linalg.transpose(block.basis)
        for v in block.basis:
            img = a.apply(v)
            if not block.contains(img):
                return None
            cols.append(linalg.solve(spec, bbt, img))
        return linalg.transpose(tuple(cols))

    stab = []
    action = []
    block_index = {b.basis: i for i, b in enumerate(blocks)}
    for a in elems:
        # induced-character check: sum of block traces over fixed blocks
        # must equal the full trace
        tr_sum = 0
        fixes_first = False
        for b in blocks:
            img = b.transform(a)
            k = block_index.get(img.basis)
            if k is None:
                raise WitnessCheckFailed("element moves a block off the orbit")
            if k == block_index[b.basis]:
                restr = coords_on(b, a)
                t = 0
                for i in range(verdict.block_dim):
                    t = ctx.add(t, restr[i][i])
                tr_sum = ctx.add(tr_sum, t)
                if b is first:
                    fixes_first = True
        if tr_sum != a.trace():
            raise WitnessCheckFailed("induced character mismatch")
        if fixes_first:
            stab.append(a)
            action.append(coords_on(first, a))
    if len(stab) * verdict.block_count != len(elems):
        raise WitnessCheckFailed("stabilizer index does not equal block count")
    return InducedExtraction(tuple(stab), verdict.block_count, tuple(action))


def serialize_verdict(v: Classification) -> dict:
    if isinstance(v, Reducible):
        return {"case": "reducible", "witness": v.witness.serialize()}
    if isinstance(v, Induced):
        return {
            "case": "induced",
            "block_dim": v.block_dim,
            "block_count": v.block_count,
            "blocks": [b.serialize() for b in v.blocks],
            "action": [list(p) for p in v.action],
        }
    return {
        "case": "huge",
        "subfield_degree": v.subfield_degree,
        "transvection_subgroup_order": v.transvection_subgroup_order,
    }
