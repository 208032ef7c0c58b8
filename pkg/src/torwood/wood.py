"""Schnyder woods on toroidal maps: verification, classification, duality.

A wood is a partial coloring of darts with colors 0, 1, 2.  A colored dart
means the underlying edge is oriented out of the dart's origin with that
color; an edge is uni-directed if exactly one of its darts is colored and
bi-oriented if both are (with distinct colors).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from .torus_map import TorusMap, Vec2, v2add

ColorOf = Callable[[int], Optional[int]]


class InconsistentWoodError(Exception):
    pass


@dataclass(frozen=True)
class Wood:
    """Per-dart color assignment; ``colors[d]`` is 0, 1, 2 or None."""

    colors: Tuple[Optional[int], ...]

    @classmethod
    def from_dict(cls, nmap: TorusMap, d: Dict[int, int]) -> "Wood":
        colors: List[Optional[int]] = [None] * (2 * nmap.m)
        for dart, c in d.items():
            colors[dart] = c
        return cls(tuple(colors))

    def color(self, d: int) -> Optional[int]:
        return self.colors[d]

    def is_bi(self, e: int) -> bool:
        return self.colors[2 * e] is not None and self.colors[2 * e + 1] is not None

    def bi_count(self) -> int:
        return sum(1 for e in range(len(self.colors) // 2) if self.is_bi(e))

    def structural_issues(self, nmap: TorusMap) -> List[str]:
        out = []
        for e in range(nmap.m):
            cp, cm = self.colors[2 * e], self.colors[2 * e + 1]
            if cp is None and cm is None:
                out.append(f"edge {e} uncolored")
            if cp is not None and cp == cm:
                out.append(f"edge {e} bi-oriented with equal colors")
        return out


@dataclass(frozen=True)
class MonoCycle:
    """Directed monochromatic cycle with its color and homotopy class."""

    color: int
    darts: Tuple[int, ...]
    vertices: Tuple[int, ...]
    homotopy: Vec2

    def dart_set(self) -> frozenset:
        return frozenset(self.darts)

    def reversed_dart_set(self) -> frozenset:
        return frozenset(d ^ 1 for d in self.darts)


@dataclass(frozen=True)
class WoodType:
    kind: str          # "type1" or "type2"
    color: Optional[int] = None

    def __str__(self) -> str:
        return self.kind if self.kind == "type1" else f"type2.{self.color}"


@dataclass(frozen=True)
class RelaxedFlags:
    t1: bool
    t2: bool
    t3: bool

    @property
    def all(self) -> bool:
        return self.t1 and self.t2 and self.t3


def vertex_schnyder_ok(nmap: TorusMap, v: int, color_of: ColorOf) -> Tuple[bool, str]:
    """Local Schnyder property at v: out-degrees, ccw order, in-sector rule.

    In-edges of color i may sit anywhere in the closed ccw sector from
    e_{i+1}(v) to e_{i-1}(v); landing on an endpoint is the bi-oriented case.
    """
    rot = nmap.vertex_darts[v]
    L = len(rot)
    out: Dict[int, int] = {}
    for d in rot:
        c = color_of(d)
        if c is not None:
            if c in out:
                return False, f"vertex {v}: two out-darts of color {c}"
            out[c] = d
    if len(out) != 3:
        return False, f"vertex {v}: out-colors {sorted(out)} incomplete"
    pos = {d: i for i, d in enumerate(rot)}
    p = [pos[out[i]] for i in range(3)]
    d1 = (p[1] - p[0]) % L
    d2 = (p[2] - p[0]) % L
    if not (0 < d1 < d2):
        return False, f"vertex {v}: out-darts not in ccw color order"
    for t in rot:
        ci = color_of(t ^ 1)
        if ci is None:
            continue
        start = pos[out[(ci + 1) % 3]]
        width = (pos[out[(ci - 1) % 3]] - start) % L
        if (pos[t] - start) % L > width:
            return False, (f"vertex {v}: in-edge of color {ci} outside sector")
    return True, ""


def check_T1(nmap: TorusMap, wood: Wood) -> Tuple[bool, List[str]]:
    """Schnyder property at every vertex; diagnostics name failing vertices."""
    diags = []
    for v in range(nmap.n):
        ok, msg = vertex_schnyder_ok(nmap, v, wood.color)
        if not ok:
            diags.append(msg)
    return not diags, diags


def out_dart_table(nmap: TorusMap, wood: Wood, i: int) -> List[int]:
    """out[v] = the unique dart of color i leaving v (requires out-degree one)."""
    out = [-1] * nmap.n
    for d in range(2 * nmap.m):
        if wood.colors[d] == i:
            v = nmap.origin[d]
            if out[v] != -1:
                raise InconsistentWoodError(f"vertex {v} has two out-darts of color {i}")
            out[v] = d
    for v, d in enumerate(out):
        if d == -1:
            raise InconsistentWoodError(f"vertex {v} has no out-dart of color {i}")
    return out


def mono_cycles(nmap: TorusMap, wood: Wood, i: int) -> List[MonoCycle]:
    """The unique directed cycle of each component of the color-i functional graph."""
    out = out_dart_table(nmap, wood, i)
    state = [0] * nmap.n  # 0 unvisited, 1 on current walk, 2 done
    cycles: List[MonoCycle] = []
    for s in range(nmap.n):
        if state[s] != 0:
            continue
        path: List[int] = []
        v = s
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = nmap.head(out[v])
        if state[v] == 1:
            k = path.index(v)
            cyc_vertices = path[k:]
            darts = tuple(out[w] for w in cyc_vertices)
            h = (0, 0)
            for d in darts:
                h = v2add(h, nmap.off[d])
            # canonical rotation: start at the smallest dart
            j = darts.index(min(darts))
            darts = darts[j:] + darts[:j]
            verts = tuple(nmap.origin[d] for d in darts)
            cycles.append(MonoCycle(i, darts, verts, h))
        for w in path:
            state[w] = 2
    return sorted(cycles, key=lambda c: c.darts)


def all_mono_cycles(nmap: TorusMap, wood: Wood) -> List[List[MonoCycle]]:
    return [mono_cycles(nmap, wood, i) for i in range(3)]


def _on_cycle_vertices(cycles: List[MonoCycle]) -> Set[int]:
    s: Set[int] = set()
    for c in cycles:
        s.update(c.vertices)
    return s


def check_T2(nmap: TorusMap, wood: Wood) -> Tuple[bool, Optional[Tuple[MonoCycle, int]]]:
    """Every i-cycle meets a cycle of each neighbor color; witness on failure."""
    fam = all_mono_cycles(nmap, wood)
    on = [_on_cycle_vertices(fam[i]) for i in range(3)]
    for i in range(3):
        for cyc in fam[i]:
            for j in ((i + 1) % 3, (i - 1) % 3):
                if not any(v in on[j] for v in cyc.vertices):
                    return False, (cyc, j)
    return True, None


def _reversal_pair_exists(fam: List[List[MonoCycle]], wood: Wood) -> bool:
    for i in range(3):
        for cyc in fam[i]:
            twin_colors = {wood.colors[d ^ 1] for d in cyc.darts}
            if len(twin_colors) == 1:
                (j,) = twin_colors
                if j is not None and j != i:
                    return True
    return False


def check_relaxed(nmap: TorusMap, wood: Wood) -> RelaxedFlags:
    """Relaxed axioms: local property, one crossing pair per color pair, no reversal pair."""
    t1, _ = check_T1(nmap, wood)
    if not t1:
        return RelaxedFlags(False, False, False)
    fam = all_mono_cycles(nmap, wood)
    on = [_on_cycle_vertices(fam[i]) for i in range(3)]
    t2 = all(bool(on[i] & on[j]) for i in range(3) for j in range(i + 1, 3))
    t3 = not _reversal_pair_exists(fam, wood)
    return RelaxedFlags(t1, t2, t3)


def three_path_probe(nmap: TorusMap, wood: Wood, v: int = 0) -> bool:
    """Sufficient test for the crossing axiom: walk the three paths from v and
    check that the three monochromatic cycles they reach pairwise intersect."""
    marked: List[Set[int]] = []
    for i in range(3):
        out = out_dart_table(nmap, wood, i)
        seen = set()
        w = v
        while w not in seen:
            seen.add(w)
            w = nmap.head(out[w])
        # w is on the cycle; collect it
        cyc = set()
        x = w
        while x not in cyc:
            cyc.add(x)
            x = nmap.head(out[x])
        marked.append(cyc)
    return all(marked[i] & marked[j] for i in range(3) for j in range(i + 1, 3))


def classify(nmap: TorusMap, wood: Wood) -> WoodType:
    """Type 2.i iff the (i-1)-cycles equal the reversed (i+1)-cycles; else Type 1."""
    fam = all_mono_cycles(nmap, wood)
    hits = []
    for i in range(3):
        a = {c.dart_set() for c in fam[(i - 1) % 3]}
        b = {c.reversed_dart_set() for c in fam[(i + 1) % 3]}
        if a == b:
            hits.append(i)
    if not hits:
        return WoodType("type1")
    if len(hits) > 1:
        raise InconsistentWoodError(f"reversal structure in {len(hits)} colors")
    return WoodType("type2", hits[0])


@dataclass(frozen=True)
class AngleLabeling:
    """Corner labels keyed by dart: corner(d) is the sector from d to nxt[d]."""

    labels: Tuple[int, ...]
    vertex_ok: bool
    face_ok: bool

    @property
    def ok(self) -> bool:
        return self.vertex_ok and self.face_ok


def angle_labeling(nmap: TorusMap, wood: Wood) -> AngleLabeling:
    """Label corners per the sector rule and check vertex/face interval validity."""
    nd = 2 * nmap.m
    labels = [-1] * nd
    vertex_ok = True
    for v in range(nmap.n):
        rot = nmap.vertex_darts[v]
        outpos = [(i, wood.color(d)) for i, d in enumerate(rot) if wood.color(d) is not None]
        if len(outpos) != 3 or {c for _, c in outpos} != {0, 1, 2}:
            vertex_ok = False
            continue
        L = len(rot)
        for k, d in enumerate(rot):
            # most recent out-dart at position <= k (cyclically)
            best = None
            for i, c in outpos:
                delta = (k - i) % L
                if best is None or delta < best[0]:
                    best = (delta, c)
            labels[d] = (best[1] - 1) % 3
    face_ok = vertex_ok
    if vertex_ok:
        for walk in nmap.faces:
            # corners of the face in ccw order
            seq = [labels[d ^ 1] for d in reversed(walk)]
            changes = 0
            for a, b in zip(seq, seq[1:] + seq[:1]):
                if b == a:
                    continue
                if b == (a + 1) % 3:
                    changes += 1
                else:
                    changes = -10 ** 9  # wrong direction
            if changes != 3:
                face_ok = False
                break
    return AngleLabeling(tuple(labels), vertex_ok, face_ok)


def dual_wood(nmap: TorusMap, wood: Wood) -> Wood:
    """Wood induced on the dual map.

    A uni-directed edge of color i dualizes to a bi-oriented edge entering it
    in color i-1 from its right side and i+1 from its left side; a
    bi-oriented edge with colors i+1/i-1 dualizes to a uni-directed edge of
    color i leaving the face right of its (i+1)-colored dart.
    """
    nd = 2 * nmap.m
    colors: List[Optional[int]] = [None] * nd
    for e in range(nmap.m):
        dp, dm = 2 * e, 2 * e + 1
        cp, cm = wood.colors[dp], wood.colors[dm]
        if cp is None and cm is None:
            raise InconsistentWoodError(f"edge {e} uncolored")
        if cp is not None and cm is not None:
            i = 3 - cp - cm  # the missing color
            c = dp if cp == (i + 1) % 3 else dm
            colors[c] = i
        else:
            d = dp if cp is not None else dm
            i = wood.colors[d]
            colors[d] = (i - 1) % 3
            colors[d ^ 1] = (i + 1) % 3
    return Wood(tuple(colors))


def is_full_schnyder_wood(nmap: TorusMap, wood: Wood) -> bool:
    if wood.structural_issues(nmap):
        return False
    ok1, _ = check_T1(nmap, wood)
    if not ok1:
        return False
    ok2, _ = check_T2(nmap, wood)
    return ok2
