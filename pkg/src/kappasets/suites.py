"""Claim-level verification suites, shared by the CLI and the acceptance tests.

Each suite returns ClaimRecords whose checks are deterministic sweeps:
exhaustive over small-group grids, or exact-product sweeps over free-group
balls. A failing sweep reports its first counterexample.
"""

from __future__ import annotations

import time
from functools import lru_cache
from typing import Callable, Iterator

from . import classify as cl
from .classify import (
    BudgetExceeded,
    CoverDecomposition,
    NodeCounter,
    ball_uncovered_witness,
    is_thick,
    effective_node_budget,
    thick_to_large_witness,
)
from .constructions import (
    Partition,
    comment2_bset,
    meet_partition,
    rank1_cell_of_int,
    rank1_partition,
    rank2_partition,
    s_set,
    split3_partition,
    thm3_partition,
)
from .groups import GroupTable, Subset, build_group, inverse_mask
from .report import ClaimRecord
from .resolvability import THICK_PROBE_NOTE, partition_search, res_search
from .words import (
    concat,
    ds_concat,
    ds_conjugate,
    ds_inverse,
    ds_support,
    enumerate_ball,
    enumerate_ds_ball,
    first_last,
    first_last2,
    format_word,
    inverse,
    reduce_word,
    words_over,
)

#: The small-group grid every subset-level sweep runs over.
GRID_SPECS = (
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:8",
    "product:cyclic:2+cyclic:2",
    "symmetric:3",
    "dihedral:4",
)

#: Groups of order <= 6 for the resolvability oracle.
ORACLE_SPECS = (
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "product:cyclic:2+cyclic:2",
    "symmetric:3",
    "dihedral:3",
)


@lru_cache(maxsize=None)
def grid_group(spec: str) -> GroupTable:
    return build_group(spec)


def _run_claim(claim_id: str, anchor: str, fn: Callable[[NodeCounter], tuple[bool, str]]) -> ClaimRecord:
    counter = NodeCounter(effective_node_budget())
    t0 = time.perf_counter()
    try:
        ok, detail = fn(counter)
        status = "pass" if ok else "fail"
    except BudgetExceeded:
        status, detail = "inconclusive", "node budget exhausted"
    return ClaimRecord(
        claim_id,
        anchor,
        status,
        detail,
        nodes=counter.spent,
        wall_time_s=time.perf_counter() - t0,
    )


def _subset_str(n: int, mask: int) -> str:
    return repr(Subset(n, mask))


# -- duality / variant chain / inversion / lattice / small grid ------------------


def _check_duality(G: GroupTable, counter: NodeCounter) -> tuple[bool, str]:
    n = G.order
    full = G.full_mask
    checked = 0
    for amask in range(1 << n):
        comp = amask ^ full
        for side in cl.SIDES:
            lmax, _ = cl._thick_profile(G, amask, side, "witness-in-G", counter)
            cs = cl.min_cover_size(G, comp, side, counter)
            for kappa in range(2, n + 1):
                thick = kappa - 1 <= lmax
                comp_large = cs is not None and cs <= kappa - 1
                if thick == comp_large:
                    return False, (
                        f"divergence at A={_subset_str(n, amask)} side={side} kappa={kappa}"
                    )
                checked += 1
    return True, f"{checked} (A, side, kappa) combinations agree"


def _check_variant_chain(G: GroupTable, counter: NodeCounter) -> tuple[bool, str]:
    n = G.order
    checked = 0
    for amask in range(1 << n):
        for side in cl.SIDES:
            la, _ = cl._thick_profile(G, amask, side, "witness-in-A", counter)
            lg, _ = cl._thick_profile(G, amask, side, "witness-in-G", counter)
            for kappa in range(2, n + 1):
                in_a = kappa - 1 <= la
                in_g = kappa - 1 <= lg
                if in_a and not in_g:
                    return False, f"chain A=>G broken at A={_subset_str(n, amask)} side={side} kappa={kappa}"
                if kappa >= 3 and in_g and not (kappa - 2 <= la):
                    return False, f"chain G=>A(kappa-1) broken at A={_subset_str(n, amask)} side={side} kappa={kappa}"
                checked += 1
    return True, f"{checked} chain instances hold"


def _check_divergence(counter: NodeCounter) -> tuple[bool, str]:
    G = grid_group("cyclic:2")
    A = Subset.from_indices(2, [1])
    va = is_thick(G, A, 2, "left", "witness-in-A")
    vg = is_thick(G, A, 2, "left", "witness-in-G")
    ok = va.verdict is False and vg.verdict is True and va.witness == Subset.from_indices(2, [1])
    return ok, (
        f"cyclic:2 A={{1}} kappa=2: in-A={va.verdict} (failing F={va.witness}), in-G={vg.verdict}"
    )


def _check_inversion(G: GroupTable, counter: NodeCounter) -> tuple[bool, str]:
    n = G.order
    checked = 0
    for amask in range(1 << n):
        iv = inverse_mask(G, amask)
        pairs = (("left", "right"), ("right", "left"), ("two-sided", "two-sided"))
        for s1, s2 in pairs:
            if cl.min_cover_size(G, amask, s1, counter) != cl.min_cover_size(G, iv, s2, counter):
                return False, f"largeness inversion fails at A={_subset_str(n, amask)} {s1}/{s2}"
            for variant in cl.VARIANTS:
                p1, _ = cl._thick_profile(G, amask, s1, variant, counter)
                p2, _ = cl._thick_profile(G, iv, s2, variant, counter)
                if p1 != p2:
                    return False, (
                        f"thickness inversion fails at A={_subset_str(n, amask)} {s1}/{s2} {variant}"
                    )
            checked += 1
    return True, f"{checked} (A, side-pair) inversion instances hold"


def _check_lattice(G: GroupTable, counter: NodeCounter) -> tuple[bool, str]:
    # two-sided thick => one-sided thick (any-translate variant);
    # one-sided large => two-sided large. Exact at every kappa via the
    # profile/cover summaries.
    n = G.order
    checked = 0
    for amask in range(1 << n):
        l2, _ = cl._thick_profile(G, amask, "two-sided", "witness-in-G", counter)
        ll, _ = cl._thick_profile(G, amask, "left", "witness-in-G", counter)
        lr, _ = cl._thick_profile(G, amask, "right", "witness-in-G", counter)
        if l2 > min(ll, lr):
            return False, f"thick lattice fails at A={_subset_str(n, amask)}"
        s2 = cl.min_cover_size(G, amask, "two-sided", counter)
        sl = cl.min_cover_size(G, amask, "left", counter)
        sr = cl.min_cover_size(G, amask, "right", counter)
        if amask and s2 > min(sl, sr):
            return False, f"large lattice fails at A={_subset_str(n, amask)}"
        checked += 1
    return True, f"{checked} subsets satisfy both lattice inequalities"


def _check_small_not_large(G: GroupTable, counter: NodeCounter) -> tuple[bool, str]:
    n = G.order
    checked = 0
    for side in ("left", "right"):
        sizes = {m: cl.min_cover_size(G, m, side, counter) for m in range(1 << n)}
        for kappa in range(2, n + 1):
            limit = kappa - 1
            large = [m for m in range(1 << n) if sizes[m] is not None and sizes[m] <= limit]
            for amask in range(1 << n):
                small = True
                for lm in large:
                    rest = sizes[lm & ~amask]
                    if rest is None or rest > limit:
                        small = False
                        break
                if small and sizes[amask] is not None and sizes[amask] <= limit:
                    return False, (
                        f"small-but-large at A={_subset_str(n, amask)} side={side} kappa={kappa}"
                    )
                checked += 1
    return True, f"{checked} (A, side, kappa) small=>not-large instances hold"


def suite_duality() -> list[ClaimRecord]:
    records = []
    for spec in GRID_SPECS:
        G = grid_group(spec)
        records.append(
            _run_claim(
                f"duality.{spec}",
                "any-translate thickness equals non-largeness of the complement, per side",
                lambda c, G=G: _check_duality(G, c),
            )
        )
    for spec in GRID_SPECS:
        G = grid_group(spec)
        records.append(
            _run_claim(
                f"variant-chain.{spec}",
                "in-A thick at kappa implies in-G thick at kappa implies in-A thick at kappa-1",
                lambda c, G=G: _check_variant_chain(G, c),
            )
        )
    records.append(
        _run_claim(
            "variant-divergence.cyclic:2",
            "the two thickness variants split at the finite boundary",
            _check_divergence,
        )
    )
    for spec in GRID_SPECS:
        G = grid_group(spec)
        records.append(
            _run_claim(
                f"inversion.{spec}",
                "largeness and thickness swap sides under subset inversion",
                lambda c, G=G: _check_inversion(G, c),
            )
        )
    for spec in GRID_SPECS:
        G = grid_group(spec)
        records.append(
            _run_claim(
                f"lattice.{spec}",
                "two-sided thick implies one-sided thick; one-sided large implies two-sided large",
                lambda c, G=G: _check_lattice(G, c),
            )
        )
    for spec in GRID_SPECS:
        G = grid_group(spec)
        records.append(
            _run_claim(
                f"small-not-large.{spec}",
                "a small subset is never large on the same side",
                lambda c, G=G: _check_small_not_large(G, c),
            )
        )
    return records


# -- the meets property -----------------------------------------------------------


def _check_meets(G: GroupTable, counter: NodeCounter) -> tuple[bool, str]:
    n = G.order
    checked = 0
    for kappa in range(2, n + 1):
        limit = kappa - 1
        thick = []
        large = []
        for amask in range(1 << n):
            lmax, _ = cl._thick_profile(G, amask, "left", "witness-in-G", counter)
            if limit <= lmax:
                thick.append(amask)
            cs = cl.min_cover_size(G, amask, "left", counter)
            if cs is not None and cs <= limit:
                large.append(amask)
        for am in thick:
            for lm in large:
                if am & lm == 0:
                    return False, (
                        f"disjoint thick/large pair at kappa={kappa}: "
                        f"{_subset_str(n, am)} vs {_subset_str(n, lm)}"
                    )
                checked += 1
    return True, f"{checked} thick/large pairs all meet"


def suite_meets() -> list[ClaimRecord]:
    return [
        _run_claim(
            f"meets.{spec}",
            "every left thick subset meets every left large subset",
            lambda c, G=grid_group(spec): _check_meets(G, c),
        )
        for spec in GRID_SPECS
    ]


# -- the endpoint-marked set -------------------------------------------------------


def _check_s_sandwich(counter: NodeCounter) -> tuple[bool, str]:
    S = s_set(2, 0)
    ball = enumerate_ball(2, 8)
    K = [(), (1,), (-1,)]
    for g in ball.words:
        if not any(S(concat(concat(k1, g), k2)) for k1 in K for k2 in K):
            return False, f"no sandwich for {format_word(g)}"
    return True, f"all {ball.size} ball words sandwich into the set with K = {{1, a, a'}}"


def _check_s_power_witness(counter: NodeCounter) -> tuple[bool, str]:
    S = s_set(2, 0)
    H = enumerate_ball(2, 3).words
    b4 = (2, 2, 2, 2)
    if any(S(concat(inverse(h), b4)) for h in H):
        return False, "b^4 is covered by H*S for H the radius-3 ball"
    ball = enumerate_ball(2, 8)
    w = ball_uncovered_witness(ball, list(H), S)
    if w is None or any(S(concat(inverse(h), w)) for h in H):
        return False, "scan returned no verifiable uncovered word"
    if ball.index_of(w) > ball.index_of(b4):
        return False, "scan missed b^4"
    return True, f"b^4 uncovered; first uncovered ball word is {format_word(w)}"


def _check_s_fresh_letter_witness(counter: NodeCounter) -> tuple[bool, str]:
    S = s_set(4, 0)
    H = words_over([0, 1], 2)
    c = (3,)
    if any(S(concat(inverse(h), c)) for h in H):
        return False, "c is covered by H*S"
    w = ball_uncovered_witness(enumerate_ball(4, 2), H, S)
    if w != c:
        return False, f"first uncovered word is {format_word(w)} instead of c"
    return True, f"fresh letter c uncovered by the {len(H)} adversary words over {{a,b}}"


def _check_s_symmetric(counter: NodeCounter) -> tuple[bool, str]:
    S = s_set(2, 0)
    ball = enumerate_ball(2, 6)
    for w in ball.words:
        if S(w) != S(inverse(w)):
            return False, f"not inverse-symmetric at {format_word(w)}"
    return True, f"inverse-symmetric on all {ball.size} ball words"


def suite_s_set() -> list[ClaimRecord]:
    return [
        _run_claim(
            "s-set.sandwich",
            "K(.)K with K = {1, a, a'} maps every word into the endpoint-marked set",
            _check_s_sandwich,
        ),
        _run_claim(
            "s-set.power-witness",
            "b^4 escapes H*S for H the radius-3 ball on two letters",
            _check_s_power_witness,
        ),
        _run_claim(
            "s-set.fresh-letter-witness",
            "a letter unused by the adversary escapes H*S on four letters",
            _check_s_fresh_letter_witness,
        ),
        _run_claim(
            "s-set.symmetric",
            "the endpoint-marked set equals its inverse",
            _check_s_symmetric,
        ),
    ]


# -- last-letter split (two cells) --------------------------------------------------


def _check_thm3_partition(counter: NodeCounter) -> tuple[bool, str]:
    part = thm3_partition(4, [0, 1], check_radius=3)
    part.verify_on_ball(enumerate_ball(4, 5))
    return True, "2-cell last-letter split partitions the radius-5 ball on four letters"


def _check_thm3_witnesses(counter: NodeCounter) -> tuple[bool, str]:
    part = thm3_partition(4, [0, 1], check_radius=3)
    b1, b2 = part.cells
    ball = enumerate_ball(4, 2)
    h1 = words_over([0, 1, 2], 2)
    w1 = ball_uncovered_witness(ball, h1, b1)
    if w1 != (4,):
        return False, f"cell-0 witness is {None if w1 is None else format_word(w1)}, expected s"
    if any(b1(concat(inverse(h), (4,))) for h in h1):
        return False, "cell-0 witness failed raw re-verification"
    h2 = words_over([0, 2, 3], 2)
    w2 = ball_uncovered_witness(ball, h2, b2)
    if w2 != (2,):
        return False, f"cell-1 witness is {None if w2 is None else format_word(w2)}, expected q"
    if any(b2(concat(inverse(h), (2,))) for h in h2):
        return False, "cell-1 witness failed raw re-verification"
    return True, "witnesses: s escapes H1*B1 (H1 over {p,q,r}); q escapes H2*B2 (H2 over {p,r,s})"


def _check_thm3_suffix_stability(counter: NodeCounter) -> tuple[bool, str]:
    part = thm3_partition(4, [0, 1], check_radius=3)
    b1 = part.cells[0]
    for w in enumerate_ball(4, 4).words:
        direct = b1(w)
        from_data = bool(w) and abs(first_last(w)[1]) - 1 in (0, 1) if w else False
        if direct != from_data:
            return False, f"membership not a function of the last letter at {format_word(w)}"
    return True, "cell membership depends only on the last letter, radius-4 sweep"


def suite_thm3() -> list[ClaimRecord]:
    return [
        _run_claim(
            "thm3.partition",
            "the last-letter split is a verified two-cell partition",
            _check_thm3_partition,
        ),
        _run_claim(
            "thm3.witnesses",
            "each cell escapes covering by its letter-avoiding adversary",
            _check_thm3_witnesses,
        ),
        _run_claim(
            "thm3.suffix-stability",
            "cell membership is a function of the length-1 suffix",
            _check_thm3_suffix_stability,
        ),
    ]


# -- three-cell constructions and the meet property ----------------------------------


def _check_c1_partitions(counter: NodeCounter) -> tuple[bool, str]:
    split3_partition(3, [0], [1], [2], check_radius=3).verify_on_ball(enumerate_ball(3, 6))
    split3_partition(6, [0, 1], [2, 3], [4, 5], check_radius=3).verify_on_ball(
        enumerate_ball(6, 4)
    )
    rank2_partition(check_radius=4).verify_on_ball(enumerate_ball(2, 8))
    rank1_partition(check_radius=16).verify_on_ball(enumerate_ball(1, 64))
    return True, (
        "verified partitions: 3-split on 3 letters (radius 6) and 6 letters (radius 4), "
        "rank-2 end-factor split (radius 8), rank-1 doubling blocks (radius 64)"
    )


def _check_c1_rank2_witnesses(counter: NodeCounter) -> tuple[bool, str]:
    part = rank2_partition(check_radius=4)
    b1, b2, b3 = part.cells
    H = enumerate_ball(2, 2).words
    b6 = (2,) * 6
    a6 = (1,) * 6
    ab6 = reduce_word([1, 2] * 6)
    for target, cell, name in ((b6, b1, "b^6 vs cell 0"), (a6, b2, "a^6 vs cell 1"), (ab6, b3, "(ab)^6 vs cell 2")):
        if any(cell(concat(inverse(h), target)) for h in H):
            return False, f"covered: {name}"
    return True, "b^6, a^6 and (ab)^6 escape H times cell 0, 1, 2 for the radius-2 adversary"


def _check_c1_rank2_factor_stability(counter: NodeCounter) -> tuple[bool, str]:
    part = rank2_partition(check_radius=4)
    b1 = part.cells[0]
    mixed = {(1, 2), (1, -2), (-1, 2), (-1, -2), (2, 1), (2, -1), (-2, 1), (-2, -1)}
    marked = mixed | {(1, 1), (-1, -1)}
    for w in enumerate_ball(2, 6).words:
        if len(w) < 2:
            if b1(w):
                return False, f"short word in cell 0: {format_word(w)}"
            continue
        lam2, rho2 = first_last2(w)
        if b1(w) != (lam2 in marked and rho2 in marked):
            return False, f"membership not a function of the end factors at {format_word(w)}"
    return True, "cell-0 membership depends only on the length-2 end factors, radius-6 sweep"


def _check_c1_rank1_blocks(counter: NodeCounter) -> tuple[bool, str]:
    for v in range(1, 8193):
        if rank1_cell_of_int(-v) != rank1_cell_of_int(v):
            return False, f"not mirrored at {v}"
    checked = 0
    for h in range(1, 9):
        for k in range(1, 13):
            if 2**k <= 2 * h:
                continue
            for nval in range(2**k + h + 1, 2 ** (k + 1) - h):
                cell = rank1_cell_of_int(nval)
                for m in range(nval - h, nval + h + 1):
                    if rank1_cell_of_int(m) != cell:
                        return False, f"window at n={nval}, h={h} touches the other cell"
                checked += 1
    return True, f"{checked} interior points have monochromatic translate windows"


def _check_c1_split3_endpoint_stability(counter: NodeCounter) -> tuple[bool, str]:
    part = split3_partition(3, [0], [1], [2], check_radius=3)
    b1 = part.cells[0]
    for w in enumerate_ball(3, 5).words:
        direct = b1(w)
        if not w:
            from_data = False
        else:
            lam, rho = first_last(w)
            from_data = abs(lam) - 1 in (1, 2) and abs(rho) - 1 in (1, 2)
        if direct != from_data:
            return False, f"membership not a function of the endpoints at {format_word(w)}"
    return True, "cell-0 membership depends only on the endpoint letters, radius-5 sweep"


def _check_c1_meet(counter: NodeCounter) -> tuple[bool, str]:
    G = grid_group("cyclic:8")
    n = G.order
    limit = 2  # kappa = 3
    checked = 0
    for amask in range(1, 1 << (n - 1)):  # top element in the complement: each
        comp = amask ^ G.full_mask        # unordered 2-cell partition appears once
        ca = cl.min_cover_size(G, amask, "left", counter)
        cc = cl.min_cover_size(G, comp, "left", counter)
        if (ca is not None and ca <= limit) or (cc is not None and cc <= limit):
            continue
        part = Partition(
            (Subset(n, amask), Subset(n, comp)), "oracle 2-cell partition", group=G
        )
        for cell in meet_partition(G, part).cells:
            for side in ("left", "right"):
                cs = cl.min_cover_size(G, cell.mask, side, counter)
                if cs is not None and cs <= limit:
                    return False, (
                        f"meet cell {cell} is {side} 3-large for P = "
                        f"{_subset_str(n, amask)} | {_subset_str(n, comp)}"
                    )
        checked += 1
    return True, f"{checked} qualifying 2-cell partitions: every meet cell stays non-large"


def suite_comment1() -> list[ClaimRecord]:
    return [
        _run_claim(
            "comment1.partitions",
            "all four three-cell-family constructions partition their balls",
            _check_c1_partitions,
        ),
        _run_claim(
            "comment1.rank2-witnesses",
            "power and alternating words escape the covered rank-2 cells",
            _check_c1_rank2_witnesses,
        ),
        _run_claim(
            "comment1.rank2-factor-stability",
            "rank-2 cell membership is a function of the length-2 end factors",
            _check_c1_rank2_factor_stability,
        ),
        _run_claim(
            "comment1.split3-endpoint-stability",
            "3-split cell membership is a function of the endpoint letters",
            _check_c1_split3_endpoint_stability,
        ),
        _run_claim(
            "comment1.rank1-blocks",
            "doubling blocks are mirrored and outgrow every translate window",
            _check_c1_rank1_blocks,
        ),
        _run_claim(
            "comment1.meet",
            "meeting a non-large 2-cell partition with its inverse keeps every cell non-large both ways",
            _check_c1_meet,
        ),
    ]


# -- direct sums ---------------------------------------------------------------------


def _check_c2_support(counter: NodeCounter) -> tuple[bool, str]:
    dsball = enumerate_ds_ball((2, 1), 3)
    for g in dsball:
        for x in dsball:
            counter.spend()
            if ds_support(ds_conjugate(x, g)) != ds_support(x):
                return False, f"support moved for x={x} under g={g}"
    return True, f"conjugation preserves support on all {len(dsball)}^2 pairs (ranks 2+1, radius 3)"


def _check_c2_witness(counter: NodeCounter) -> tuple[bool, str]:
    B = comment2_bset((2, 2), (0, 0))
    if not B(((2, 1), ())):
        return False, "expected member (ba, e) rejected"
    if B(((2, 1), (2,))):
        return False, "expected non-member (ba, d) accepted"
    H = [(w, ()) for w in enumerate_ball(2, 2).words]
    g = ((), (2,))
    for h in H:
        if B(ds_concat(ds_inverse(h), g)):
            return False, "witness (e, d) covered by H*B"
    return True, f"(e, d) escapes H*B for the {len(H)} support-0 adversaries of length <= 2"


def suite_comment2() -> list[ClaimRecord]:
    return [
        _run_claim(
            "comment2.support-preservation",
            "conjugation in a direct sum never changes the support",
            _check_c2_support,
        ),
        _run_claim(
            "comment2.bset-witness",
            "the top-mark set escapes covering by adversaries supported below",
            _check_c2_witness,
        ),
    ]


# -- searches: the constructive witness, resolvability oracle, and the probe ---------


def _check_thick_to_large(counter: NodeCounter) -> tuple[bool, str]:
    checked = 0
    for spec in ("cyclic:6", "cyclic:8"):
        G = grid_group(spec)
        n = G.order
        for kappa in (3, 4):
            limit = kappa - 1
            for amask in range(1 << n):
                lmax, _ = cl._thick_profile(G, amask, "left", "witness-in-G", counter)
                if limit > lmax:
                    continue
                A = Subset(n, amask)
                for block in range(1, kappa):
                    cover = CoverDecomposition.blocks(G, block)
                    F = thick_to_large_witness(G, A, kappa, cover)
                    if F.size > len(cover.cells):
                        return False, f"oversized witness at A={A} kappa={kappa} block={block}"
                    checked += 1
    return True, f"{checked} (thick A, cover) pairs produce verified right-cover witnesses"


def _all_set_partitions(n: int) -> Iterator[list[int]]:
    """All set partitions of range(n) as lists of bitmasks (restricted-growth order)."""
    parts: list[int] = []

    def rec(i: int):
        if i == n:
            yield list(parts)
            return
        bit = 1 << i
        for j in range(len(parts)):
            parts[j] |= bit
            yield from rec(i + 1)
            parts[j] ^= bit
        parts.append(bit)
        yield from rec(i + 1)
        parts.pop()

    yield from rec(0)


def _check_res_oracle(counter: NodeCounter) -> tuple[bool, str]:
    checked = 0
    for spec in ORACLE_SPECS:
        G = grid_group(spec)
        n = G.order
        for kappa in range(2, n + 1):
            limit = kappa - 1
            best = {"left": 0, "left+right": 0}
            for parts in _all_set_partitions(n):
                counter.spend()
                left_ok = True
                both_ok = True
                for m in parts:
                    csl = cl.min_cover_size(G, m, "left", counter)
                    if csl is None or csl > limit:
                        left_ok = both_ok = False
                        break
                    csr = cl.min_cover_size(G, m, "right", counter)
                    if csr is None or csr > limit:
                        both_ok = False
                if left_ok:
                    best["left"] = max(best["left"], len(parts))
                if both_ok:
                    best["left+right"] = max(best["left+right"], len(parts))
            for mode in ("left", "left+right"):
                got = res_search(G, kappa, mode)
                if got.cells != best[mode] or not got.optimal:
                    return False, (
                        f"mismatch at {spec} kappa={kappa} mode={mode}: "
                        f"search={got.cells}, oracle={best[mode]}"
                    )
                checked += 1
    return True, f"{checked} (group, kappa, mode) resolvability values match the set-partition oracle"


def _check_res_pinned(counter: NodeCounter) -> tuple[bool, str]:
    expected = (
        ("cyclic:4", 3, 2),
        ("cyclic:4", 2, 1),
        ("cyclic:6", 4, 3),
    )
    for spec, kappa, cells in expected:
        got = res_search(grid_group(spec), kappa, "left")
        if got.cells != cells or not got.optimal:
            return False, f"res({spec}, kappa={kappa}) = {got.cells}, expected {cells}"
    return True, "pinned values: res(cyclic:4,3)=2, res(cyclic:4,2)=1, res(cyclic:6,4)=3"


def _check_two_thick_probe(counter: NodeCounter) -> tuple[bool, str]:
    G = grid_group("cyclic:6")
    got = partition_search(G, 3, 2, "all-thick")
    if got.found is None or not got.exhaustive:
        return False, "no two-cell all-thick partition found"
    cells = tuple(cell.indices() for cell in got.found.cells)
    for cell in got.found.cells:
        if not is_thick(G, cell, 3, "left", "witness-in-G").verdict:
            return False, f"cell {cell} failed thickness re-verification"
    if cells != ((0, 1, 3), (2, 4, 5)):
        return False, f"non-canonical probe outcome {cells}"
    return True, f"cells {{0,1,3}} | {{2,4,5}} are both left 3-thick; {THICK_PROBE_NOTE}"


def suite_oracle() -> list[ClaimRecord]:
    return [
        _run_claim(
            "oracle.thick-to-large",
            "the cover-based construction turns left thickness into a right cover",
            _check_thick_to_large,
        ),
        _run_claim(
            "oracle.res-vs-bruteforce",
            "resolvability search equals the brute-force set-partition maximum",
            _check_res_oracle,
        ),
        _run_claim(
            "oracle.res-pinned",
            "pinned resolvability values reproduce",
            _check_res_pinned,
        ),
        _run_claim(
            "oracle.two-thick-probe",
            "a two-cell all-left-thick partition exists at finite scale",
            _check_two_thick_probe,
        ),
    ]


SUITES: dict[str, Callable[[], list[ClaimRecord]]] = {
    "duality": suite_duality,
    "meets": suite_meets,
    "s-set": suite_s_set,
    "thm3": suite_thm3,
    "comment1": suite_comment1,
    "comment2": suite_comment2,
    "oracle": suite_oracle,
}


def run_suite(name: str) -> list[ClaimRecord]:
    if name == "all":
        out: list[ClaimRecord] = []
        for fn in SUITES.values():
            out.extend(fn())
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name]()
