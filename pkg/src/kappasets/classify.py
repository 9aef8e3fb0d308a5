"""Exact, witness-producing classifiers for the subset size notions.

Largeness is decided by minimal-cover search (greedy upper bound, then
exhaustive by size with a counting prune); thickness by enumerating the
inclusion-maximal test sets F. For the any-translate thickness variant the
two routes are cross-checked against each other on every call: A is left
thick exactly when its complement is not left large, and likewise per side.

All searches are deterministic; witnesses are minimal in (size, lex) order
and re-verified against the raw definitions before they are returned.
"""

from __future__ import annotations

import itertools
import os
import weakref
from dataclasses import dataclass

from .groups import (
    GroupTable,
    Subset,
    bits,
    check_kappa,
    check_subset,
    left_translate_mask,
    mask_of,
    product_set,
    right_translate_mask,
)
from .words import Ball, Word, WordSetPredicate, concat, inverse

SIDES = ("left", "right", "two-sided")
VARIANTS = ("witness-in-A", "witness-in-G")

DEFAULT_NODE_BUDGET = 10**8
_BUDGET_ENV = "KAPPASETS_NODE_BUDGET"


class BudgetExceeded(Exception):
    """Internal: a search ran out of its node budget."""


class NodeCounter:
    __slots__ = ("spent", "budget")

    def __init__(self, budget: int):
        self.spent = 0
        self.budget = budget

    def spend(self, k: int = 1) -> None:
        self.spent += k
        if self.spent > self.budget:
            raise BudgetExceeded


def effective_node_budget(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(_BUDGET_ENV)
    return int(env) if env else DEFAULT_NODE_BUDGET


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


@dataclass(frozen=True)
class SizeVerdict:
    """Outcome of a size classification.

    verdict None means the node budget ran out (inconclusive, never a
    guess). The witness depends on the notion: the minimal cover F for
    large=True; the per-F translation map ((F, x), ...) for thick=True; the
    minimal failing F for thick=False; the failing large L for small=False.
    """

    notion: str
    side: str
    kappa: int
    verdict: bool | None
    variant: str | None = None
    witness: object = None
    method: str = "exhaustive"
    nodes: int = 0


# -- per-group memoization -----------------------------------------------------

_caches: "weakref.WeakKeyDictionary[GroupTable, dict]" = weakref.WeakKeyDictionary()


def _cache(G: GroupTable) -> dict:
    c = _caches.get(G)
    if c is None:
        c = {"cover": {}, "profile": {}, "paircover": {}, "pairthick": {}}
        _caches[G] = c
    return c


# -- largeness: minimal covers -------------------------------------------------


def _cover_masks(G: GroupTable, amask: int, side: str) -> list[int]:
    if side == "left":
        return [left_translate_mask(G, f, amask) for f in range(G.order)]
    return [right_translate_mask(G, amask, f) for f in range(G.order)]


def _greedy_cover_size(n: int, covers: list[int], full: int) -> int:
    got = 0
    size = 0
    while got != full:
        best_f = -1
        best_new = 0
        for f in range(n):
            new = (covers[f] & ~got).bit_count()
            if new > best_new:
                best_new = new
                best_f = f
        if best_f < 0:  # pragma: no cover - impossible for nonempty A
            raise RuntimeError("greedy cover stalled")
        got |= covers[best_f]
        size += 1
    return size


def _pair_cover_table(G: GroupTable, amask: int) -> list[int]:
    """P[g] has bit f1*n+f2 set when f1*a*f2 = g for some a in A."""
    cache = _cache(G)["paircover"]
    got = cache.get(amask)
    if got is None:
        n = G.order
        mul = G.mul
        got = [0] * n
        a_list = list(bits(amask))
        for f1 in range(n):
            row = mul[f1]
            base = f1 * n
            for a in a_list:
                t = mul[row[a]]
                for f2 in range(n):
                    got[t[f2]] |= 1 << (base + f2)
        cache[amask] = got
    return got


def _min_cover(
    G: GroupTable, amask: int, side: str, counter: NodeCounter
) -> tuple[int, tuple[int, ...]] | None:
    """Minimal (size, lex) F with F*A = G (left), A*F = G (right) or
    F*A*F = G (two-sided); None when A is empty."""
    cache = _cache(G)["cover"]
    key = (side, amask)
    if key in cache:
        return cache[key]
    if amask == 0:
        cache[key] = None
        return None
    n = G.order
    full = G.full_mask
    asize = amask.bit_count()
    result: tuple[int, tuple[int, ...]] | None = None
    if side == "two-sided":
        pair = _pair_cover_table(G, amask)
        smin = 1
        while smin * smin * asize < n:
            smin += 1
        for s in range(smin, n + 1):
            for combo in itertools.combinations(range(n), s):
                counter.spend()
                fmask = mask_of(combo)
                pm = 0
                for f in combo:
                    pm |= fmask << (n * f)
                if all(pm & p for p in pair):
                    result = (s, combo)
                    break
            if result:
                break
    else:
        covers = _cover_masks(G, amask, side)
        gsize = _greedy_cover_size(n, covers, full)
        smin = -(-n // asize)  # ceil: |F| * |A| >= n is necessary
        for s in range(max(1, smin), gsize + 1):
            for combo in itertools.combinations(range(n), s):
                counter.spend()
                u = 0
                for f in combo:
                    u |= covers[f]
                if u == full:
                    result = (s, combo)
                    break
            if result:
                break
    if result is None:  # pragma: no cover - a cover always exists for A != {}
        raise RuntimeError("cover search failed to terminate")
    cache[key] = result
    return result


def min_cover_size(G: GroupTable, amask: int, side: str, counter: NodeCounter) -> int | None:
    got = _min_cover(G, amask, side, counter)
    return None if got is None else got[0]


# -- thickness: maximal-F profiles ----------------------------------------------


def _dom_masks(G: GroupTable, amask: int, side: str, candidates: list[int]) -> list[int]:
    """Per candidate x, the set of f with f*x in A (left) / x*f in A (right)."""
    inv = G.inv
    if side == "left":
        # F*x <= A iff F <= A*x^-1
        return [right_translate_mask(G, amask, inv[x]) for x in candidates]
    return [left_translate_mask(G, inv[x], amask) for x in candidates]


def _pair_thick_table(G: GroupTable, amask: int) -> list[int]:
    """Q[x] has bit f1*n+f2 set when f1*x*f2 lands in A."""
    cache = _cache(G)["pairthick"]
    got = cache.get(amask)
    if got is None:
        n = G.order
        mul = G.mul
        got = [0] * n
        for x in range(n):
            q = 0
            for f1 in range(n):
                t = mul[mul[f1][x]]
                base = f1 * n
                for f2 in range(n):
                    if amask >> t[f2] & 1:
                        q |= 1 << (base + f2)
            got[x] = q
        cache[amask] = got
    return got


def _thick_profile(
    G: GroupTable, amask: int, side: str, variant: str, counter: NodeCounter
) -> tuple[int, tuple[int, ...] | None]:
    """Return (lmax, fail_F): thickness holds at kappa iff kappa-1 <= lmax.

    fail_F is the (size, lex)-minimal F admitting no translating element;
    it has size lmax+1, or is None when every F up to size n-1 passes.
    Thickness is monotone in |F|, so scanning sizes upward is exact.
    """
    cache = _cache(G)["profile"]
    key = (side, variant, amask)
    if key in cache:
        return cache[key]
    n = G.order
    if variant == "witness-in-A" and amask == 0:
        # even the empty test set has no translating element to pick
        cache[key] = (-1, ())
        return cache[key]
    candidates = list(bits(amask)) if variant == "witness-in-A" else list(range(n))
    if side == "two-sided":
        table = _pair_thick_table(G, amask)
        negs = [~table[x] for x in candidates]
        result = None
        for size in range(1, n):
            for combo in itertools.combinations(range(n), size):
                counter.spend()
                fmask = mask_of(combo)
                pm = 0
                for f in combo:
                    pm |= fmask << (n * f)
                if not any(pm & neg == 0 for neg in negs):
                    result = (size - 1, combo)
                    break
            if result:
                break
        if result is None:
            result = (n - 1, None)
    else:
        doms = _dom_masks(G, amask, side, candidates)
        negs = [~d for d in doms]
        capacity = max((d.bit_count() for d in doms), default=0)
        result = None
        for size in range(1, n):
            if size > capacity:
                result = (size - 1, tuple(range(size)))
                break
            for combo in itertools.combinations(range(n), size):
                counter.spend()
                fmask = mask_of(combo)
                if not any(fmask & neg == 0 for neg in negs):
                    result = (size - 1, combo)
                    break
            if result:
                break
        if result is None:
            result = (n - 1, None)
    cache[key] = result
    return result


def _translate_into(G: GroupTable, fmask: int, x: int, amask: int, side: str) -> bool:
    """Raw-definition check that x translates F into A."""
    mul = G.mul
    if side == "left":
        return all(amask >> mul[f][x] & 1 for f in bits(fmask))
    if side == "right":
        return all(amask >> mul[x][f] & 1 for f in bits(fmask))
    return all(
        amask >> mul[mul[f1][x]][f2] & 1 for f1 in bits(fmask) for f2 in bits(fmask)
    )


# -- public classifiers ----------------------------------------------------------


def is_large(
    G: GroupTable, A: Subset, kappa: int, side: str = "left", *, node_budget: int | None = None
) -> SizeVerdict:
    """Exact decision of left/right/two-sided kappa-largeness with minimal witness."""
    check_subset(G, A)
    check_kappa(G, kappa)
    _check_side(side)
    counter = NodeCounter(effective_node_budget(node_budget))
    method = "exhaustive" if side == "two-sided" else "greedy-then-exact"
    try:
        got = _min_cover(G, A.mask, side, counter)
    except BudgetExceeded:
        return SizeVerdict("large", side, kappa, None, method="budget-exhausted", nodes=counter.spent)
    if got is None:
        return SizeVerdict("large", side, kappa, False, method=method, nodes=counter.spent)
    size, combo = got
    if size > kappa - 1:
        return SizeVerdict("large", side, kappa, False, method=method, nodes=counter.spent)
    F = Subset.from_indices(G.order, combo)
    shape = {"left": "FA", "right": "AF", "two-sided": "FAF"}[side]
    if product_set(G, F, A, shape).mask != G.full_mask:  # pragma: no cover
        raise RuntimeError("large witness failed re-verification")
    return SizeVerdict("large", side, kappa, True, witness=F, method=method, nodes=counter.spent)


def is_thick(
    G: GroupTable,
    A: Subset,
    kappa: int,
    side: str = "left",
    variant: str = "witness-in-G",
    *,
    node_budget: int | None = None,
) -> SizeVerdict:
    """Exact decision of kappa-thickness.

    witness-in-A demands the translating element a in A; witness-in-G lets
    it range over G. For witness-in-G the verdict is additionally computed
    through the complement's largeness and the two answers are required to
    agree.
    """
    check_subset(G, A)
    check_kappa(G, kappa)
    _check_side(side)
    _check_variant(variant)
    counter = NodeCounter(effective_node_budget(node_budget))
    try:
        lmax, fail = _thick_profile(G, A.mask, side, variant, counter)
        verdict = kappa - 1 <= lmax
        if variant == "witness-in-G":
            comp_cover = min_cover_size(G, A.mask ^ G.full_mask, side, counter)
            comp_large = comp_cover is not None and comp_cover <= kappa - 1
            if verdict == comp_large:  # pragma: no cover - internal duality check
                raise RuntimeError("thickness/largeness duality cross-check failed")
        if verdict:
            witness = _thick_witness_map(G, A.mask, kappa - 1, side, variant, counter)
        else:
            assert fail is not None and len(fail) <= kappa - 1
            F = Subset.from_indices(G.order, fail)
            candidates = A.indices() if variant == "witness-in-A" else range(G.order)
            if any(_translate_into(G, F.mask, x, A.mask, side) for x in candidates):
                raise RuntimeError("thick counterexample failed re-verification")  # pragma: no cover
            witness = F
    except BudgetExceeded:
        return SizeVerdict(
            "thick", side, kappa, None, variant=variant, method="budget-exhausted", nodes=counter.spent
        )
    return SizeVerdict(
        "thick", side, kappa, verdict, variant=variant, witness=witness, nodes=counter.spent
    )


def _thick_witness_map(
    G: GroupTable, amask: int, fsize: int, side: str, variant: str, counter: NodeCounter
) -> tuple[tuple[Subset, int], ...]:
    """For every maximal F, the least translating element, re-verified raw."""
    n = G.order
    candidates = list(bits(amask)) if variant == "witness-in-A" else list(range(n))
    entries = []
    for combo in itertools.combinations(range(n), fsize):
        counter.spend()
        fmask = mask_of(combo)
        for x in candidates:
            if _translate_into(G, fmask, x, amask, side):
                entries.append((Subset(n, fmask), x))
                break
        else:  # pragma: no cover - contradicts the profile
            raise RuntimeError("thick witness map failed re-verification")
    return tuple(entries)


def is_small(
    G: GroupTable, A: Subset, kappa: int, side: str = "left", *, node_budget: int | None = None
) -> SizeVerdict:
    """A is kappa-small when removing it keeps every kappa-large set large.

    Decided by enumerating all large L on the given side; two-sided means
    left and right small. The failing L, if any, is (size, lex)-minimal.
    """
    check_subset(G, A)
    check_kappa(G, kappa)
    _check_side(side)
    if side == "two-sided":
        for part in ("left", "right"):
            got = is_small(G, A, kappa, part, node_budget=node_budget)
            if got.verdict is not True:
                return SizeVerdict(
                    "small", side, kappa, got.verdict, witness=got.witness,
                    method=got.method, nodes=got.nodes,
                )
        return SizeVerdict("small", side, kappa, True)
    counter = NodeCounter(effective_node_budget(node_budget))
    n = G.order
    limit = kappa - 1
    try:
        for size in range(1, n + 1):
            for combo in itertools.combinations(range(n), size):
                counter.spend()
                lmask = mask_of(combo)
                csize = min_cover_size(G, lmask, side, counter)
                if csize is None or csize > limit:
                    continue
                rest = lmask & ~A.mask
                rsize = min_cover_size(G, rest, side, counter)
                if rsize is None or rsize > limit:
                    L = Subset(n, lmask)
                    shape = "FA" if side == "left" else "AF"
                    cover = _min_cover(G, lmask, side, counter)
                    F = Subset.from_indices(n, cover[1])
                    if product_set(G, F, L, shape).mask != G.full_mask:  # pragma: no cover
                        raise RuntimeError("small counterexample failed re-verification")
                    return SizeVerdict(
                        "small", side, kappa, False, witness=L, nodes=counter.spent
                    )
    except BudgetExceeded:
        return SizeVerdict("small", side, kappa, None, method="budget-exhausted", nodes=counter.spent)
    return SizeVerdict("small", side, kappa, True, nodes=counter.spent)


# -- the thick-to-large witness construction ------------------------------------


@dataclass(frozen=True)
class CoverDecomposition:
    """Disjoint cover of G by cells of size <= kappa-1 (a finite stand-in
    for writing G as a small-piece union)."""

    cells: tuple[Subset, ...]

    @classmethod
    def blocks(cls, G: GroupTable, block_size: int) -> "CoverDecomposition":
        """Consecutive index blocks: {0..b-1}, {b..2b-1}, ..."""
        if block_size < 1:
            raise ValueError("block size must be >= 1")
        n = G.order
        cells = [
            Subset.from_indices(n, range(lo, min(lo + block_size, n)))
            for lo in range(0, n, block_size)
        ]
        return cls(tuple(cells))

    def validate(self, G: GroupTable, kappa: int) -> None:
        total = 0
        union = 0
        for cell in self.cells:
            check_subset(G, cell)
            if cell.size > kappa - 1:
                raise ValueError(f"cover cell {cell} larger than kappa-1 = {kappa - 1}")
            total += cell.size
            union |= cell.mask
        if union != G.full_mask or total != G.order:
            raise ValueError("cover cells must disjointly cover the group")


class CoverCellError(ValueError):
    """A cover cell admits no translating element into A."""

    def __init__(self, cell_index: int, cell: Subset):
        super().__init__(f"cover cell {cell_index} = {cell} admits no translate into A")
        self.cell_index = cell_index
        self.cell = cell


def thick_to_large_witness(
    G: GroupTable, A: Subset, kappa: int, cover: CoverDecomposition
) -> Subset:
    """Constructive route from left thickness to right largeness.

    For each cover cell H pick the least g with H*g <= A; then
    F = {g^-1 : g picked} satisfies A*F = G with |F| <= number of cells.
    """
    check_subset(G, A)
    check_kappa(G, kappa)
    cover.validate(G, kappa)
    n = G.order
    picks = []
    for i, cell in enumerate(cover.cells):
        for g in range(n):
            if _translate_into(G, cell.mask, g, A.mask, "left"):
                picks.append(g)
                break
        else:
            raise CoverCellError(i, cell)
    F = Subset.from_indices(n, (G.inv[g] for g in picks))
    if product_set(G, A, F, "AF").mask != G.full_mask:  # pragma: no cover
        raise RuntimeError("thick-to-large witness failed re-verification")
    return F


def find_large_cell(G: GroupTable, cells, kappa: int):
    """Least index whose cell is two-sided kappa-large, with minimal witness.

    cells may be a constructions.Partition or any sequence of Subsets that
    partitions G; returns (index, witness F) or None when no cell
    qualifies (possible at finite scale).
    """
    check_kappa(G, kappa)
    cells = getattr(cells, "cells", cells)
    union = 0
    total = 0
    for cell in cells:
        check_subset(G, cell)
        union |= cell.mask
        total += cell.size
    if union != G.full_mask or total != G.order:
        raise ValueError("cells do not partition the group")
    for i, cell in enumerate(cells):
        got = is_large(G, cell, kappa, "two-sided")
        if got.verdict:
            return i, got.witness
    return None


# -- predicate-level verification on balls ---------------------------------------


def ball_uncovered_witness(
    ball: Ball, H: "list[Word] | tuple[Word, ...]", A: WordSetPredicate
) -> Word | None:
    """First ball word g (in index order) outside H*A, i.e. with h^-1 g
    outside A for every h in H; products are exact, never truncated."""
    inv_h = [inverse(h) for h in H]
    for g in ball.words:
        if all(not A(concat(hi, g)) for hi in inv_h):
            return g
    return None
