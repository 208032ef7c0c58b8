"""Dart-based combinatorial maps on the torus.

A map is stored as a rotation system plus per-dart homology offsets.  Edge
``e`` owns darts ``2e`` (the ``+`` dart, based at the edge's first endpoint)
and ``2e+1`` (its twin); ``twin(d) == d ^ 1``.  ``nxt[d]`` is the next dart
counterclockwise around ``origin(d)``.  ``off[d]`` is the pair ``(dx, dy)``
of signed fundamental-domain crossings from origin to head: crossing the
right side of the parallelogram adds ``(+1, 0)``, crossing the top adds
``(0, +1)``.

Faces are the orbits of ``d -> nxt[twin(d)]``; along such an orbit the face
lies on the *right* of every dart, so the orbit walks the face boundary
clockwise.  The face on the left of ``d`` is the face of ``twin(d)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

Vec2 = Tuple[int, int]


class MapError(Exception):
    """Base class for map construction/operation failures."""


class MapStructureError(MapError):
    """Dart table is not a combinatorial map (INVALID_STRUCTURE)."""


class NotACycleError(MapError):
    """Walk passed to homotopy_of_walk is not closed (NOT_A_CYCLE)."""


class ContractLoopError(MapError):
    """Attempted to contract a loop edge (CONTRACT_LOOP)."""


class BadSuspensionError(MapError):
    """Suspension markers are not on the outer face (BAD_SUSPENSION)."""


def v2add(a: Vec2, b: Vec2) -> Vec2:
    return (a[0] + b[0], a[1] + b[1])


def v2sub(a: Vec2, b: Vec2) -> Vec2:
    return (a[0] - b[0], a[1] - b[1])


def v2neg(a: Vec2) -> Vec2:
    return (-a[0], -a[1])


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :meth:`TorusMap.validate`."""

    n: int
    m: int
    f: int
    issues: Tuple[Tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.issues

    def has(self, code: str) -> bool:
        return any(c == code for c, _ in self.issues)


@dataclass(frozen=True)
class EdgeCorrespondence:
    """Bookkeeping produced by edge contraction.

    Old ids refer to the uncontracted map, new ids to the contracted one.
    ``removed`` maps each deleted parallel edge to the kept edge of its
    homotopy bundle.  ``affected_old_edges`` lists the contracted edge, the
    four corner edges around it, and every removed/kept bundle member; these
    are exactly the edges whose coloring is re-derived on decontraction.
    """

    contracted_edge: int
    old_u: int
    old_v: int
    merged_new_vertex: int
    vertex_old_of_new: Tuple[int, ...]
    edge_new_of_old: Dict[int, Optional[int]]
    dart_new_of_old: Dict[int, int]
    removed: Dict[int, int]
    affected_old_edges: Tuple[int, ...]


class TorusMap:
    """Immutable torus-embedded combinatorial map."""

    __slots__ = (
        "n", "origin", "nxt", "off", "m", "prv", "vertex_darts",
        "face_id", "faces", "face_pos", "f", "_vrep", "_ess3",
    )

    def __init__(self, n: int, origin: Sequence[int], nxt: Sequence[int],
                 off: Sequence[Vec2]):
        nd = len(origin)
        if nd % 2 != 0 or len(nxt) != nd or len(off) != nd:
            raise MapStructureError("dart table sizes inconsistent")
        self.n = n
        self.origin = tuple(origin)
        self.nxt = tuple(nxt)
        self.off = tuple(tuple(o) for o in off)
        self.m = nd // 2
        self._vrep = None
        self._ess3 = None
        self._check_structure()
        self._build_derived()

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Tuple[int, int, int, int]],
                   rotations: Sequence[Sequence[int]]) -> "TorusMap":
        """Build from an edge list ``(u, v, dx, dy)`` and per-vertex ccw dart lists."""
        nd = 2 * len(edges)
        origin = [0] * nd
        off: List[Vec2] = [(0, 0)] * nd
        for e, (u, v, dx, dy) in enumerate(edges):
            origin[2 * e] = u
            origin[2 * e + 1] = v
            off[2 * e] = (dx, dy)
            off[2 * e + 1] = (-dx, -dy)
        nxt = [-1] * nd
        seen: Set[int] = set()
        for v, rot in enumerate(rotations):
            for i, d in enumerate(rot):
                if d in seen:
                    raise MapStructureError(f"dart {d} listed twice in rotations")
                seen.add(d)
                if origin[d] != v:
                    raise MapStructureError(
                        f"dart {d} has origin {origin[d]} but is listed at vertex {v}")
                nxt[d] = rot[(i + 1) % len(rot)]
        if len(seen) != nd:
            raise MapStructureError("some darts missing from rotations")
        return cls(n, origin, nxt, off)

    def _check_structure(self) -> None:
        nd = 2 * self.m
        for d in range(nd):
            if not (0 <= self.nxt[d] < nd):
                raise MapStructureError("rotation out of range")
            if self.off[d ^ 1] != v2neg(self.off[d]):
                raise MapStructureError("twin offsets not opposite")
            if not (0 <= self.origin[d] < self.n):
                raise MapStructureError("origin out of range")
        if sorted(self.nxt) != list(range(nd)):
            raise MapStructureError("rotation is not a permutation")
        seen = [False] * nd
        for d in range(nd):
            if seen[d]:
                continue
            v = self.origin[d]
            x = d
            while not seen[x]:
                seen[x] = True
                if self.origin[x] != v:
                    raise MapStructureError("rotation orbit mixes origins")
                x = self.nxt[x]
            if x != d:
                raise MapStructureError("rotation orbit not closed")

    def _build_derived(self) -> None:
        nd = 2 * self.m
        prv = [0] * nd
        for d in range(nd):
            prv[self.nxt[d]] = d
        self.prv = tuple(prv)
        vdarts: List[List[int]] = [[] for _ in range(self.n)]
        seen = [False] * nd
        for d in range(nd):
            if seen[d]:
                continue
            cyc = []
            x = d
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.nxt[x]
            vdarts[self.origin[d]] = cyc
        # every vertex must own at least one dart
        for v, cyc in enumerate(vdarts):
            if not cyc:
                raise MapStructureError(f"vertex {v} has no darts")
        self.vertex_darts = tuple(tuple(c) for c in vdarts)
        face_id = [-1] * nd
        faces: List[Tuple[int, ...]] = []
        face_pos: List[Vec2] = [(0, 0)] * nd
        for d in range(nd):
            if face_id[d] != -1:
                continue
            walk = []
            x = d
            while face_id[x] == -1:
                face_id[x] = len(faces)
                walk.append(x)
                x = self.nxt[x ^ 1]
            # rotate so the walk starts at its minimum dart (canonical anchor)
            k = walk.index(min(walk))
            walk = walk[k:] + walk[:k]
            pos = (0, 0)
            for y in walk:
                face_pos[y] = pos
                pos = v2add(pos, self.off[y])
            faces.append(tuple(walk))
        self.face_id = tuple(face_id)
        self.faces = tuple(faces)
        self.face_pos = tuple(face_pos)
        self.f = len(faces)

    # -- elementary accessors ----------------------------------------------

    def twin(self, d: int) -> int:
        return d ^ 1

    def head(self, d: int) -> int:
        return self.origin[d ^ 1]

    def face_next(self, d: int) -> int:
        """Next dart along the face on the right of ``d`` (clockwise walk)."""
        return self.nxt[d ^ 1]

    def face_right(self, d: int) -> int:
        return self.face_id[d]

    def face_left(self, d: int) -> int:
        return self.face_id[d ^ 1]

    def degree(self, v: int) -> int:
        return len(self.vertex_darts[v])

    def edge_endpoints(self, e: int) -> Tuple[int, int]:
        return self.origin[2 * e], self.origin[2 * e + 1]

    def is_loop(self, e: int) -> bool:
        return self.origin[2 * e] == self.origin[2 * e + 1]

    def edges(self) -> range:
        return range(self.m)

    def darts(self) -> range:
        return range(2 * self.m)

    def face_degree(self, fid: int) -> int:
        return len(self.faces[fid])

    def is_triangulation(self) -> bool:
        return all(len(w) == 3 for w in self.faces)

    # -- validation ---------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check the toroidal-map axioms and report every violation found."""
        if self._vrep is not None:
            return self._vrep
        issues: List[Tuple[str, str]] = []
        if self.n - self.m + self.f != 0:
            issues.append(("euler", f"n-m+f = {self.n - self.m + self.f} != 0"))
        for fid, walk in enumerate(self.faces):
            t = (0, 0)
            for d in walk:
                t = v2add(t, self.off[d])
            if t != (0, 0):
                issues.append(("face_offset", f"face {fid} has offset {t}"))
        for e in range(self.m):
            if self.is_loop(e) and self.off[2 * e] == (0, 0):
                issues.append(("contractible_loop", f"edge {e}"))
        seen_keys: Dict[Tuple, int] = {}
        for e in range(self.m):
            u, v = self.edge_endpoints(e)
            o = self.off[2 * e]
            if u == v:
                key = ("loop", u, max(o, v2neg(o)))
            elif u < v:
                key = ("edge", u, v, o)
            else:
                key = ("edge", v, u, v2neg(o))
            if key in seen_keys:
                issues.append(("homotopic_multi_edge", f"edges {seen_keys[key]} and {e}"))
            else:
                seen_keys[key] = e
        # connectivity via (rotation, twin) orbit
        if self.m > 0:
            seen_d = {0}
            stack = [0]
            while stack:
                d = stack.pop()
                for nb in (self.nxt[d], d ^ 1):
                    if nb not in seen_d:
                        seen_d.add(nb)
                        stack.append(nb)
            if len(seen_d) != 2 * self.m:
                issues.append(("disconnected", "map is not connected"))
        self._vrep = ValidationReport(self.n, self.m, self.f, tuple(issues))
        return self._vrep

    def is_toroidal_map(self) -> bool:
        return self.validate().ok

    # -- homotopy ------------------------------------------------------------

    def homotopy_of_walk(self, walk: Sequence[int]) -> Vec2:
        """Total offset of a closed dart walk; raises NotACycleError if open."""
        if not walk:
            raise NotACycleError("empty walk")
        for a, b in zip(walk, walk[1:]):
            if self.head(a) != self.origin[b]:
                raise NotACycleError("consecutive darts do not chain")
        if self.head(walk[-1]) != self.origin[walk[0]]:
            raise NotACycleError("walk does not close")
        t = (0, 0)
        for d in walk:
            t = v2add(t, self.off[d])
        return t

    # -- duality -------------------------------------------------------------

    def dual(self) -> "TorusMap":
        """Dual map; dual dart ``d`` crosses primal dart ``d`` right-to-left.

        The dual dart with id ``d`` has origin ``face_right(d)`` and twin
        ``d ^ 1``, so edge/dart ids carry over.  Rotation: the ccw successor
        of dual dart ``d`` is the dual dart of the face-walk predecessor of
        ``d``.
        """
        nd = 2 * self.m
        origin = [self.face_id[d] for d in range(nd)]
        nxt = [0] * nd
        for d in range(nd):
            # predecessor of d along its face walk
            p = (self.prv[d]) ^ 1
            nxt[d] = p
        off: List[Vec2] = [(0, 0)] * nd
        for d in range(nd):
            t = v2add(v2sub(self.face_pos[d], self.face_pos[d ^ 1]), self.off[d])
            off[d] = t
        return TorusMap(self.f, origin, nxt, off)

    def angle_map(self) -> "TorusMap":
        """Map whose vertices are primal vertices plus faces and whose edges are corners.

        Corner ``c(d)`` is the sector at ``origin(d)`` between ``d`` and
        ``nxt[d]``; it lies in the face left of ``d``.  Vertex ids: primal
        vertex ``v`` -> ``v``; face ``F`` -> ``n + F``.  Edge id of corner
        ``c(d)`` is ``d`` with dart ``2d`` based at the primal vertex.
        """
        nd = 2 * self.m
        n_ang = self.n + self.f
        edges: List[Tuple[int, int, int, int]] = []
        for d in range(nd):
            # corner c(d) lies in face_left(d); that face's walk contains
            # nxt[d], whose origin is the corner vertex, so the vertex sits at
            # cell face_pos[nxt[d]] in the face's anchor frame.
            F = self.face_id[d ^ 1]
            rel = self.face_pos[self.nxt[d]]  # corner-vertex cell in F's frame
            edges.append((self.origin[d], self.n + F, -rel[0], -rel[1]))
        # rotations: around a primal vertex, corners in rotation order of d;
        # around a face vertex, corners of the face in ccw boundary order.
        rotations: List[List[int]] = [[] for _ in range(n_ang)]
        for v in range(self.n):
            rotations[v] = [2 * d for d in self.vertex_darts[v]]
        for fid, walk in enumerate(self.faces):
            # walk is clockwise around the face; corners c(d^1) for d in walk
            # appear clockwise, so reverse for ccw.
            rotations[self.n + fid] = [2 * (d ^ 1) + 1 for d in reversed(walk)]
        return TorusMap.from_edges(n_ang, edges, rotations)

    # -- essential 3-connectivity ---------------------------------------------

    def is_essentially_3connected(self) -> Tuple[bool, Optional[List[int]]]:
        """Angle-map criterion: no contractible 2- or 4-walk bounding a non-face disk.

        Returns ``(ok, witness)`` where the witness is a list of angle-map
        darts forming the offending closed walk.
        """
        rep = self.validate()
        if not rep.ok:
            return False, None
        A = self.angle_map()
        # 2-walks: two distinct parallel angle edges with equal offsets.
        bykey: Dict[Tuple[int, int, Vec2], int] = {}
        for e in range(A.m):
            u, v = A.edge_endpoints(e)
            o = A.off[2 * e]
            key = (u, v, o) if u <= v else (v, u, v2neg(o))
            if key in bykey:
                return False, [2 * bykey[key], 2 * e + 1]
            bykey[key] = e
        # 4-walks: pairs of 2-paths with the same lifted endpoints.
        paths: Dict[Tuple[int, int, Vec2], List[Tuple[int, int]]] = {}
        for x in range(A.n):
            darts = A.vertex_darts[x]
            for i in range(len(darts)):
                for j in range(i + 1, len(darts)):
                    g1, g2 = darts[i], darts[j]
                    a, b = A.head(g1), A.head(g2)
                    delta = v2sub(A.off[g2], A.off[g1])  # from a-lift to b-lift
                    if (a, delta) <= (b, v2neg(delta)):
                        key = (a, b, delta)
                        paths.setdefault(key, []).append((g1, g2))
                    else:
                        key = (b, a, v2neg(delta))
                        paths.setdefault(key, []).append((g2, g1))
        face_edges = [tuple(sorted(d >> 1 for d in w)) for w in A.faces]
        for (a, b, delta), plist in paths.items():
            if len(plist) < 2:
                continue
            if a == b and delta == (0, 0):
                continue
            for i in range(len(plist)):
                for j in range(i + 1, len(plist)):
                    g1, g2 = plist[i]
                    h1, h2 = plist[j]
                    if {g1 >> 1, g2 >> 1} & {h1 >> 1, h2 >> 1}:
                        continue  # shares an edge: pinched, handled by 2-walks
                    # distinct middle lifts?
                    if A.origin[g1] == A.origin[h1] and A.off[g1] == A.off[h1]:
                        continue  # same lifted middle vertex: pinched
                    # A simple contractible 4-cycle bounds exactly one face
                    # iff its edge set is a face's edge set.
                    walk = [g1 ^ 1, g2, h2 ^ 1, h1]
                    ws = tuple(sorted(x >> 1 for x in walk))
                    if ws == face_edges[A.face_id[walk[0]]]:
                        continue
                    if ws == face_edges[A.face_id[walk[0] ^ 1]]:
                        continue
                    return False, walk
        return True, None

    @staticmethod
    def _angle_walk_bounds_nonface_disk(A: "TorusMap", walk: List[int]) -> bool:
        """Check whether a contractible simple closed walk in A bounds >1 face.

        The walk is given as chained darts (head of each = origin of next)
        with total offset zero.  Faces strictly enclosed by the lifted curve
        are counted; the walk is harmless iff it bounds exactly one face.
        """
        if sorted(walk) == sorted(A.faces[A.face_id[walk[0]]]):
            return False
        rev = sorted(x ^ 1 for x in walk)
        if rev == sorted(A.faces[A.face_id[walk[0] ^ 1]]):
            return False
        cells = []
        c = (0, 0)
        for d in walk:
            cells.append(c)
            c = v2add(c, A.off[d])
        if c != (0, 0):
            return False  # not contractible
        barrier: Set[Tuple[int, Vec2]] = set()
        for d, cell in zip(walk, cells):
            barrier.add((d, cell))
            barrier.add((d ^ 1, v2add(cell, A.off[d])))
        clo = (min(cl[0] for cl in cells), min(cl[1] for cl in cells))
        chi = (max(cl[0] for cl in cells), max(cl[1] for cl in cells))
        span = 1
        for p in A.face_pos:
            span = max(span, abs(p[0]) + 1, abs(p[1]) + 1)
        alo = (clo[0] - span, clo[1] - span)
        ahi = (chi[0] + span, chi[1] + span)
        # Enclosed faces have every dart cell within the curve bbox, hence
        # anchors within [alo, ahi]; anything with a cell beyond the bbox is
        # outside and seeds the flood.
        outside: Set[Tuple[int, Vec2]] = set()
        stack: List[Tuple[int, Vec2]] = []
        candidates: List[Tuple[int, Vec2]] = []
        for fid in range(A.f):
            for x in range(alo[0], ahi[0] + 1):
                for y in range(alo[1], ahi[1] + 1):
                    fa = (fid, (x, y))
                    beyond = False
                    for d in A.faces[fid]:
                        cell = (x + A.face_pos[d][0], y + A.face_pos[d][1])
                        if not (clo[0] <= cell[0] <= chi[0] and clo[1] <= cell[1] <= chi[1]):
                            beyond = True
                            break
                    candidates.append(fa)
                    if beyond:
                        outside.add(fa)
                        stack.append(fa)
        in_range = set(candidates)
        while stack:
            fid, anchor = stack.pop()
            for d in A.faces[fid]:
                cell = (anchor[0] + A.face_pos[d][0], anchor[1] + A.face_pos[d][1])
                if (d, cell) in barrier:
                    continue
                d2 = d ^ 1
                cell2 = v2add(cell, A.off[d])
                nb = (A.face_id[d2], v2sub(cell2, A.face_pos[d2]))
                if nb in outside or nb not in in_range:
                    continue
                outside.add(nb)
                stack.append(nb)
        inside_count = len(in_range) - len(outside)
        return inside_count != 1

    # -- contraction -----------------------------------------------------------

    def contract(self, e: int) -> Tuple["TorusMap", EdgeCorrespondence]:
        """Contract non-loop edge ``e``, merging its head into its tail.

        Parallel edges made homotopic by the contraction are cleaned up:
        within each bundle the edge met first counterclockwise after the
        removed corner survives.
        """
        if self.is_loop(e):
            raise ContractLoopError(f"edge {e} is a loop")
        dp, dm = 2 * e, 2 * e + 1
        u, v = self.origin[dp], self.origin[dm]
        oe = self.off[dp]
        # merged rotation: u's darts after dp, then v's darts after dm
        ru = self.vertex_darts[u]
        rv = self.vertex_darts[v]
        iu = ru.index(dp)
        iv = rv.index(dm)
        a_list = [ru[(iu + k) % len(ru)] for k in range(1, len(ru))]
        b_list = [rv[(iv + k) % len(rv)] for k in range(1, len(rv))]
        merged = a_list + b_list
        scan_order = b_list + a_list  # ccw from the removed corner
        # corner edges around e (may coincide)
        flank: Set[int] = set()
        for lst in (a_list, b_list):
            if lst:
                flank.add(lst[0] >> 1)
                flank.add(lst[-1] >> 1)

        def new_off(d: int) -> Vec2:
            o = self.off[d]
            if self.origin[d] == v:
                o = v2add(o, oe)
            if self.origin[d ^ 1] == v:
                o = v2sub(o, oe)
            return o

        # homotopy-bundle cleanup over darts at the merged vertex
        def bundle_key(d: int) -> Tuple:
            h = self.head(d)
            h_merged = u if h == v else h
            o = new_off(d)
            if h_merged == u:
                return ("loop", max(o, v2neg(o)))
            return ("edge", h_merged, o)

        kept_of_key: Dict[Tuple, int] = {}
        removed: Dict[int, int] = {}
        for d in scan_order:
            eid = d >> 1
            if eid == e or eid in removed:
                continue
            key = bundle_key(d)
            if key in kept_of_key:
                if kept_of_key[key] != eid:
                    removed[eid] = kept_of_key[key]
            else:
                kept_of_key[key] = eid
        dead_edges = set(removed) | {e}
        # new vertex numbering: drop v, keep order
        old_vertices = [w for w in range(self.n) if w != v]
        new_of_oldv = {w: i for i, w in enumerate(old_vertices)}
        merged_new = new_of_oldv[u]
        # new edge numbering: surviving edges in old order
        surviving = [ei for ei in range(self.m) if ei not in dead_edges]
        new_of_olde: Dict[int, Optional[int]] = {ei: None for ei in dead_edges}
        for i, ei in enumerate(surviving):
            new_of_olde[ei] = i
        dart_map: Dict[int, int] = {}
        for ei in surviving:
            ni = new_of_olde[ei]
            assert ni is not None
            dart_map[2 * ei] = 2 * ni
            dart_map[2 * ei + 1] = 2 * ni + 1
        edges: List[Tuple[int, int, int, int]] = []
        for ei in surviving:
            a, b = self.origin[2 * ei], self.origin[2 * ei + 1]
            a2 = merged_new if a in (u, v) else new_of_oldv[a]
            b2 = merged_new if b in (u, v) else new_of_oldv[b]
            o = new_off(2 * ei)
            edges.append((a2, b2, o[0], o[1]))
        rotations: List[List[int]] = []
        for w in old_vertices:
            if w == u:
                rot = [dart_map[d] for d in merged if (d >> 1) not in dead_edges]
            else:
                rot = [dart_map[d] for d in self.vertex_darts[w] if (d >> 1) not in dead_edges]
            rotations.append(rot)
        newmap = TorusMap.from_edges(self.n - 1, edges, rotations)
        affected = sorted({e} | flank | set(removed) | set(removed.values()))
        corr = EdgeCorrespondence(
            contracted_edge=e, old_u=u, old_v=v, merged_new_vertex=merged_new,
            vertex_old_of_new=tuple(old_vertices), edge_new_of_old=new_of_olde,
            dart_new_of_old=dart_map, removed=removed,
            affected_old_edges=tuple(affected),
        )
        return newmap, corr

    # -- planar suspension -------------------------------------------------------

    @classmethod
    def from_planar_suspension(cls, planar: "PlanarSuspension") -> "TorusMap":
        """Wrap a rooted planar map around the torus by adding a hub vertex.

        The hub carries three pairwise non-homotopic loops (offsets (1,0),
        (0,1), (1,1)) and one spoke to each root, with spokes and loops
        interleaved so no two spokes enter the hub consecutively.
        """
        return planar.suspend()

    # -- isomorphism (tests only) --------------------------------------------------

    def canonical_form(self) -> Tuple:
        """Canonical encoding of the rotation system (offsets ignored)."""
        nd = 2 * self.m
        best = None
        for start in range(nd):
            label = {start: 0}
            order = [start]
            i = 0
            code: List[Tuple[int, int]] = []
            while i < len(order):
                d = order[i]
                for nb in (self.nxt[d], d ^ 1):
                    if nb not in label:
                        label[nb] = len(order)
                        order.append(nb)
                code.append((label[self.nxt[d]], label[d ^ 1]))
                i += 1
            enc = tuple(code)
            if best is None or enc < best:
                best = enc
        return best

    def is_isomorphic_to(self, other: "TorusMap") -> bool:
        return (self.n, self.m, self.f) == (other.n, other.m, other.f) and \
            self.canonical_form() == other.canonical_form()

    def same_embedded_map(self, other: "TorusMap", dart_map: Dict[int, int]) -> bool:
        """Check ``dart_map`` is a rotation isomorphism whose offsets differ by a coboundary."""
        nd = 2 * self.m
        if 2 * other.m != nd:
            return False
        for d in range(nd):
            if dart_map[d ^ 1] != dart_map[d] ^ 1:
                return False
            if dart_map[self.nxt[d]] != other.nxt[dart_map[d]]:
                return False
        # solve vertex potential pi with off'(phi d) = off(d) + pi(head) - pi(origin)
        pi: Dict[int, Vec2] = {self.origin[0]: (0, 0)}
        stack = [self.origin[0]]
        # build vertex adjacency via darts
        while stack:
            w = stack.pop()
            for d in self.vertex_darts[w]:
                h = self.head(d)
                need = v2sub(other.off[dart_map[d]], self.off[d])  # pi(head)-pi(origin)
                if h not in pi:
                    pi[h] = v2add(pi[w], need)
                    stack.append(h)
        if len(pi) != self.n:
            return False
        for d in range(nd):
            w, h = self.origin[d], self.head(d)
            if v2sub(other.off[dart_map[d]], self.off[d]) != v2sub(pi[h], pi[w]):
                return False
        return True


@dataclass
class PlanarSuspension:
    """Planar map with rotation system, a distinguished outer face, and three roots.

    ``edges``: (u, v) pairs; ``rotations``: per-vertex ccw dart lists using the
    same dart-id convention as TorusMap; ``outer_dart``: any dart on the outer
    face walk; ``roots``: (x0, x1, x2) in counterclockwise order on the outer
    face.
    """

    n: int
    edges: List[Tuple[int, int]]
    rotations: List[List[int]]
    outer_dart: int
    roots: Tuple[int, int, int]

    def suspend(self) -> TorusMap:
        base = TorusMap.from_edges(
            self.n, [(u, v, 0, 0) for (u, v) in self.edges], self.rotations)
        outer = base.face_id[self.outer_dart]
        walk = base.faces[outer]  # clockwise walk; outer face lies right of each dart
        on_outer = {base.origin[d] for d in walk}
        for x in self.roots:
            if x not in on_outer:
                raise BadSuspensionError(f"root {x} not on outer face")
        x0, x1, x2 = self.roots
        hub = self.n
        loop_offsets = [(1, 0), (0, 1), (1, 1)]
        m0 = len(self.edges)
        edges: List[Tuple[int, int, int, int]] = [(u, v, 0, 0) for (u, v) in self.edges]
        spoke_eid = {}
        for i, x in enumerate(self.roots):
            spoke_eid[i] = m0 + i
            edges.append((x, hub, 0, 0))
        loop_eid = {}
        for i, off in enumerate(loop_offsets):
            loop_eid[i] = m0 + 3 + i
            edges.append((hub, hub, off[0], off[1]))
        rotations = [list(r) for r in self.rotations]
        # insert each spoke at the root's first corner on the outer walk
        for i, x in enumerate(self.roots):
            corner_dart = None
            for d in walk:
                # corner c(d^1)? outer face is right of d; corner between d and nxt[d]
                if base.origin[d] == x:
                    corner_dart = d
                    break
            assert corner_dart is not None
            rot = rotations[x]
            k = rot.index(corner_dart)
            rot.insert(k, 2 * spoke_eid[i])
        # hub rotation: 3-loops pattern with spokes inserted in distinct corners.
        # loops a,b,c with darts a+=la, etc.; base ccw order (a+, c+, b+, a-, c-, b-)
        la, lb, lc = (2 * loop_eid[0], 2 * loop_eid[1], 2 * loop_eid[2])
        s0, s1, s2 = (2 * spoke_eid[0] + 1, 2 * spoke_eid[1] + 1, 2 * spoke_eid[2] + 1)
        hub_rot = [la, s2, lc, s1, lb, la ^ 1, s0, lc ^ 1, lb ^ 1]
        rotations.append(hub_rot)
        tm = TorusMap.from_edges(self.n + 1, edges, rotations)
        return tm
