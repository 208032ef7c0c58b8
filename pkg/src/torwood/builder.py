"""Construction of Schnyder woods by contraction and search-based decontraction.

The pipeline contracts an essentially 3-connected non-basic map down to the
one-vertex triangulation or the brick, seeds the stored base wood, and
undoes the contractions one at a time.  Each decontraction enumerates the
colorings of the few edges around the reinstated edge, filters by the local
Schnyder property, and accepts the first candidate satisfying the relaxed
axioms; the result is then a type-1 wood.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .torus_map import TorusMap, EdgeCorrespondence, ContractLoopError
from .wood import (
    Wood, WoodType, check_T1, check_T2, check_relaxed, classify,
    is_full_schnyder_wood, mono_cycles, vertex_schnyder_ok,
)


class NotEssentially3ConnectedError(Exception):
    def __init__(self, witness=None, detail: str = ""):
        super().__init__(detail or "map is not essentially 3-connected")
        self.witness = witness


class ImpossibleError(Exception):
    """No contractible edge found; the input violates the preconditions."""


class NotBaseError(Exception):
    pass


class DecontractFailError(Exception):
    pass


# edge states: uni-directed first, then bi-oriented
UNI_STATES: Tuple[Tuple[int, int], ...] = tuple(
    (side, c) for side in (0, 1) for c in (0, 1, 2))
BI_STATES: Tuple[Tuple[int, int], ...] = tuple(
    (cp, cm) for cp in (0, 1, 2) for cm in (0, 1, 2) if cp != cm)


@dataclass(frozen=True)
class ContractionStep:
    """One contraction: the uncontracted map plus the edge correspondence."""

    before: TorusMap
    corr: EdgeCorrespondence


# ---------------------------------------------------------------------------
# base-case detection and base woods

def is_3loops(nmap: TorusMap) -> bool:
    return nmap.n == 1 and nmap.m == 3 and nmap.validate().ok


def is_brick(nmap: TorusMap) -> bool:
    return (nmap.n == 2 and nmap.m == 3
            and not any(nmap.is_loop(e) for e in range(3))
            and nmap.validate().ok)


def _basic_spine_loops(nmap: TorusMap) -> Optional[Tuple[List[int], List[int]]]:
    """Loop edge and spine darts per vertex for a basic map, else None."""
    if nmap.n == 1:
        if nmap.m == 2 and nmap.validate().ok:
            rot = nmap.vertex_darts[0]
            return [0], [rot[0]]
        return None
    if nmap.m != 2 * nmap.n or not nmap.validate().ok:
        return None
    loop_of = [-1] * nmap.n
    spine_darts: List[List[int]] = [[] for _ in range(nmap.n)]
    for v in range(nmap.n):
        rot = nmap.vertex_darts[v]
        if len(rot) != 4:
            return None
        loops = [d for d in rot if nmap.is_loop(d >> 1)]
        if len(loops) != 2 or (loops[0] >> 1) != (loops[1] >> 1):
            return None
        loop_of[v] = loops[0] >> 1
        # loop darts must be antipodal in the rotation
        if rot.index(loops[1]) != (rot.index(loops[0]) + 2) % 4:
            return None
        spine_darts[v] = [d for d in rot if not nmap.is_loop(d >> 1)]
    # loops pairwise homotopic
    h0 = nmap.off[2 * loop_of[0]]
    for e in loop_of:
        h = nmap.off[2 * e]
        if h != h0 and h != (-h0[0], -h0[1]):
            return None
    # spine edges form one cycle through all vertices
    seen = {0}
    d = spine_darts[0][0]
    hs = (0, 0)
    for _ in range(nmap.n):
        hs = (hs[0] + nmap.off[d][0], hs[1] + nmap.off[d][1])
        w = nmap.head(d)
        if w in seen and w != 0:
            return None
        if w == 0:
            break
        seen.add(w)
        nxt = [x for x in spine_darts[w] if x != (d ^ 1)]
        if len(nxt) != 1:
            return None
        d = nxt[0]
    else:
        return None
    if len(seen) != nmap.n or hs == (0, 0):
        return None
    return loop_of, spine_darts[0]


def is_basic(nmap: TorusMap) -> bool:
    return _basic_spine_loops(nmap) is not None


def base_wood(nmap: TorusMap) -> Wood:
    """Stored wood for a base-case map (3-loops, brick, or basic family)."""
    if is_3loops(nmap):
        rot = list(nmap.vertex_darts[0])
        k = rot.index(min(rot))
        rot = rot[k:] + rot[:k]
        for j in range(3):
            if rot[(j + 3) % 6] != rot[j] ^ 1:
                raise NotBaseError("one-vertex triangulation without antipodal rotation")
        wood = Wood.from_dict(nmap, {rot[0]: 0, rot[2]: 1, rot[4]: 2})
    elif is_brick(nmap):
        rot = list(nmap.vertex_darts[0])
        k = rot.index(min(rot))
        rot = rot[k:] + rot[:k]
        coloring: Dict[int, int] = {}
        for j, d in enumerate(rot):
            coloring[d] = j
            coloring[d ^ 1] = (j + 1) % 3
        wood = Wood.from_dict(nmap, coloring)
    elif is_basic(nmap):
        wood = _basic_wood(nmap)
    else:
        raise NotBaseError("map matches no base-case pattern")
    if not is_full_schnyder_wood(nmap, wood):
        raise NotBaseError("base wood failed verification")
    return wood


def _basic_wood(nmap: TorusMap) -> Wood:
    if nmap.n == 1:
        rot = nmap.vertex_darts[0]
        # rotation (s, l, s^1, l^1): spine loop bi-oriented 0/2, other loop 1
        s = rot[0]
        l = rot[1]
        return Wood.from_dict(nmap, {s: 0, s ^ 1: 2, l: 1})
    coloring: Dict[int, int] = {}
    spine0 = sorted(d for d in nmap.vertex_darts[0] if not nmap.is_loop(d >> 1))
    d = spine0[0]
    for _ in range(nmap.n):
        v = nmap.origin[d]
        rot = nmap.vertex_darts[v]
        k = rot.index(d)
        e1 = rot[(k + 1) % 4]          # loop dart right after the outgoing spine dart
        coloring[d] = 0
        coloring[d ^ 1] = 2
        coloring[e1] = 1
        w = nmap.head(d)
        d = [x for x in nmap.vertex_darts[w]
             if not nmap.is_loop(x >> 1) and x != (d ^ 1)][0]
    return Wood.from_dict(nmap, coloring)


# ---------------------------------------------------------------------------
# contraction pipeline

def _candidate_contractions(nmap: TorusMap):
    for e in range(nmap.m):
        if nmap.is_loop(e):
            continue
        u, v = nmap.edge_endpoints(e)
        if nmap.degree(u) < 3 or nmap.degree(v) < 3:
            continue
        yield e


def _find_contraction(nmap: TorusMap) -> Tuple[int, TorusMap, EdgeCorrespondence]:
    """Lowest-id edge whose contraction stays essentially 3-connected and,
    when possible, non-basic."""
    fallback = None
    for e in _candidate_contractions(nmap):
        contracted, corr = nmap.contract(e)
        if not contracted.validate().ok:
            continue
        ok, _ = contracted.is_essentially_3connected()
        if not ok:
            continue
        if is_basic(contracted):
            if fallback is None:
                fallback = (e, contracted, corr)
            continue
        return e, contracted, corr
    if fallback is not None:
        return fallback
    raise ImpossibleError("no contractible edge keeps the map essentially 3-connected")


def find_contractible_edge(nmap: TorusMap) -> int:
    """Edge whose contraction preserves essential 3-connectivity (non-basic preferred)."""
    if nmap.n < 2:
        raise ImpossibleError("map has a single vertex")
    return _find_contraction(nmap)[0]


def decontract_step(before: TorusMap, corr: EdgeCorrespondence,
                    wood_small: Wood) -> Wood:
    """Extend a type-1 wood across one decontraction.

    Colors of unaffected edges are pulled back through the correspondence;
    the contracted edge and the few edges around it are recolored by
    exhaustive search filtered by the local Schnyder property, and the first
    candidate (uni-directed states before bi-oriented, edges by id)
    satisfying the relaxed axioms is returned.
    """
    nmap = before
    base: List[Optional[int]] = [None] * (2 * nmap.m)
    affected = list(corr.affected_old_edges)
    aff_set = set(affected)
    for e_old, e_new in corr.edge_new_of_old.items():
        if e_new is None or e_old in aff_set:
            continue
        base[2 * e_old] = wood_small.colors[2 * e_new]
        base[2 * e_old + 1] = wood_small.colors[2 * e_new + 1]
    bi_fixed = sum(
        1 for e in range(nmap.m)
        if e not in aff_set and base[2 * e] is not None and base[2 * e + 1] is not None)
    quota = (3 * nmap.n - nmap.m) - bi_fixed
    aff_vertices: Set[int] = set()
    for e in affected:
        u, v = nmap.edge_endpoints(e)
        aff_vertices.update((u, v))
    last_edge_at: Dict[int, int] = {}
    for idx, e in enumerate(affected):
        u, v = nmap.edge_endpoints(e)
        last_edge_at[u] = idx
        last_edge_at[v] = idx
    check_after: List[List[int]] = [[] for _ in affected]
    for v, idx in last_edge_at.items():
        check_after[idx].append(v)

    colors = base[:]

    def color_of(d: int) -> Optional[int]:
        return colors[d]

    out_used: List[Set[int]] = [set() for _ in range(nmap.n)]
    for d in range(2 * nmap.m):
        if colors[d] is not None:
            out_used[nmap.origin[d]].add(colors[d])

    states_of_edge: List[List[Tuple[int, Optional[int], Optional[int]]]] = []
    for e in affected:
        states: List[Tuple[int, Optional[int], Optional[int]]] = []
        for side, c in UNI_STATES:
            states.append((0, c, None) if side == 0 else (0, None, c))
        if quota > 0:
            for cp, cm in BI_STATES:
                states.append((1, cp, cm))
        states_of_edge.append(states)

    result: Optional[Wood] = None

    def assign(idx: int, bi_used: int) -> Optional[Wood]:
        if idx == len(affected):
            if bi_used != quota:
                return None
            wood = Wood(tuple(colors))
            flags = check_relaxed(nmap, wood)
            if flags.all:
                return wood
            return None
        e = affected[idx]
        dp, dm = 2 * e, 2 * e + 1
        up, um = nmap.origin[dp], nmap.origin[dm]
        remaining = len(affected) - idx - 1
        for is_bi, cp, cm in states_of_edge[idx]:
            nb = bi_used + is_bi
            if nb > quota or nb + remaining < quota:
                continue
            if cp is not None and cp in out_used[up]:
                continue
            if cm is not None and cm in out_used[um]:
                continue
            if cp is not None and cm is not None and up == um and cp == cm:
                continue
            colors[dp], colors[dm] = cp, cm
            if cp is not None:
                out_used[up].add(cp)
            if cm is not None:
                out_used[um].add(cm)
            ok = True
            for v in check_after[idx]:
                good, _ = vertex_schnyder_ok(nmap, v, color_of)
                if not good:
                    ok = False
                    break
            if ok:
                res = assign(idx + 1, nb)
                if res is not None:
                    return res
            if cp is not None:
                out_used[up].discard(cp)
            if cm is not None:
                out_used[um].discard(cm)
            colors[dp] = colors[dm] = None
        return None

    result = assign(0, 0)
    if result is None:
        raise DecontractFailError(
            f"no extension across edge {corr.contracted_edge}")
    return result


def compute_wood(nmap: TorusMap) -> Tuple[Wood, WoodType]:
    """Schnyder wood of an essentially 3-connected toroidal map.

    Basic maps get their type-2 wood directly; everything else is contracted
    to a base case and decontracted, producing a type-1 wood.  The result is
    re-verified by the independent axiom checkers before being returned.
    """
    ok, witness = nmap.is_essentially_3connected()
    if not ok:
        raise NotEssentially3ConnectedError(witness=witness)
    if is_basic(nmap):
        wood = base_wood(nmap)
        return wood, classify(nmap, wood)
    steps: List[ContractionStep] = []
    cur = nmap
    while not (is_3loops(cur) or is_brick(cur)):
        _, contracted, corr = _find_contraction(cur)
        steps.append(ContractionStep(cur, corr))
        cur = contracted
    wood = base_wood(cur)
    for step in reversed(steps):
        wood = decontract_step(step.before, step.corr, wood)
    if not is_full_schnyder_wood(nmap, wood):
        raise DecontractFailError("final wood failed independent verification")
    kind = classify(nmap, wood)
    if kind.kind != "type1":
        raise DecontractFailError("pipeline produced a non-type-1 wood on a non-basic map")
    return wood, kind


def edge_disjoint_triple(nmap: TorusMap):
    """Three pairwise edge-disjoint, non-homotopic non-contractible cycles
    of a toroidal triangulation, one monochromatic cycle per color."""
    if not nmap.is_triangulation():
        raise ValueError("not a triangulation")
    wood, _ = compute_wood(nmap)
    cycles = [mono_cycles(nmap, wood, i)[0] for i in range(3)]
    return cycles
