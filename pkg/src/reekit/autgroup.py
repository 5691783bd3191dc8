"""Exhaustive automorphism-group search for the Ree geometries at q=3.

Points are indexed 0..27 in the canonical ovoid order.  Every point triple
is classified by how many blocks of each kind contain it; an automorphism
must preserve this class.  The backtracking search assigns point images in
most-constrained-first order, narrowing per-point bitmasks of allowed
images through the triple classes, and every completed permutation is
verified against the full block family before being accepted.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .geometry import Block, ReeContext

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class AutResult:
    structure: str
    order: int
    generators: list[Permutation]
    elements: list[Permutation]


def structure_blocks(structure: str, ctx: ReeContext) -> list[Block]:
    if structure == "G":
        return ctx.circles + ctx.spheres
    if structure == "GC":
        return ctx.circles
    if structure == "GS":
        return ctx.spheres
    raise ValueError(f"unknown structure {structure!r}; expected G, GC or GS")


def _index_sets(ctx: ReeContext, blocks: list[Block]) -> list[frozenset[int]]:
    return [frozenset(ctx.point_index[p] for p in b.points) for b in blocks]


def _triple_classes(n: int, kind_sets: list[list[frozenset[int]]]):
    """class3[i][j][k]: per-kind block counts through the triple {i,j,k}."""
    width = len(kind_sets)
    counts = [[[0] * n for _ in range(n)] for _ in range(n)]
    for which, sets in enumerate(kind_sets):
        weight = 8 ** which  # counts stay below 8 per kind
        for s in sets:
            for i, j, k in combinations(sorted(s), 3):
                for a, b, c in ((i, j, k), (i, k, j), (j, i, k),
                                (j, k, i), (k, i, j), (k, j, i)):
                    counts[a][b][c] += weight
    return counts


def automorphisms(structure: str, ctx: ReeContext) -> list[Permutation]:
    """All point permutations preserving the block family, sorted."""
    blocks = structure_blocks(structure, ctx)
    n = len(ctx.points)
    full_mask = (1 << n) - 1
    sets = _index_sets(ctx, blocks)
    kinds = sorted({b.kind for b in blocks})
    kind_sets = [[s for s, b in zip(sets, blocks) if b.kind == kind]
                 for kind in kinds]
    class3 = _triple_classes(n, kind_sets)
    # classmask[i][j][c]: bitmask of k with class3[i][j][k] == c
    classmask: list[list[dict[int, int]]] = [
        [{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            row = class3[i][j]
            d = classmask[i][j]
            for k in range(n):
                if k != i and k != j:
                    d[row[k]] = d.get(row[k], 0) | (1 << k)

    block_set_lookup = {kind: set(ks) for kind, ks in zip(kinds, kind_sets)}

    def preserves_blocks(perm: Permutation) -> bool:
        for kind, ks in zip(kinds, kind_sets):
            family = block_set_lookup[kind]
            for s in ks:
                if frozenset(perm[p] for p in s) not in family:
                    return False
        return True

    perm = [-1] * n
    assigned: list[int] = []
    used_mask = 0
    allowed = [full_mask] * n
    found: list[Permutation] = []

    def assign():
        nonlocal used_mask
        if len(assigned) == n:
            cand = tuple(perm)
            if preserves_blocks(cand):
                found.append(cand)
            return
        best, best_count = -1, n + 1
        for p in range(n):
            if perm[p] >= 0:
                continue
            count = (allowed[p] & ~used_mask).bit_count()
            if count == 0:
                return
            if count < best_count:
                best, best_count = p, count
        p = best
        options = allowed[p] & ~used_mask
        while options:
            kbit = options & -options
            options ^= kbit
            k = kbit.bit_length() - 1
            # narrow every unassigned point through the new pairs (p, u)
            saved: list[tuple[int, int]] = []
            ok = True
            for u in assigned:
                row = class3[p][u]
                masks = classmask[k][perm[u]]
                for q in range(n):
                    if perm[q] >= 0 or q == p:
                        continue
                    new = allowed[q] & masks.get(row[q], 0)
                    if new != allowed[q]:
                        saved.append((q, allowed[q]))
                        allowed[q] = new
                        if not (new & ~used_mask & ~kbit):
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                perm[p] = k
                used_mask |= kbit
                assigned.append(p)
                assign()
                assigned.pop()
                used_mask ^= kbit
                perm[p] = -1
            for q, old in reversed(saved):
                allowed[q] = old

    assign()
    found.sort()
    return found


def _compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def closure(gens: list[Permutation], n: int) -> set[Permutation]:
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def minimal_generators(elements: list[Permutation]) -> list[Permutation]:
    """Greedy lexicographically-least generating set."""
    n = len(elements[0])
    target = len(elements)
    gens: list[Permutation] = []
    generated = {tuple(range(n))}
    for g in elements:  # elements are sorted; the identity adds nothing
        if g in generated:
            continue
        gens.append(g)
        generated = closure(gens, n)
        if len(generated) == target:
            break
    return gens


def automorphism_group(structure: str, ctx: ReeContext) -> AutResult:
    """Order plus deterministic generators of Aut of the chosen structure."""
    elements = automorphisms(structure, ctx)
    return AutResult(structure, len(elements),
                     minimal_generators(elements), elements)
