"""File formats, fixture library, triangulation, and random map generation.

Text formats (``#`` starts a comment, blank lines ignored):

``.tmap``::

    tmap 1
    vertices <n>
    edge <eid> <u> <v> <dx> <dy>
    rot <v> <dart> <dart> ...

where dart ``<eid>+`` is based at ``u`` with offset ``(dx, dy)`` and
``<eid>-`` is its twin.  Every dart appears exactly once in ``rot`` lines.

``.wood``::

    w <eid> <spec>

with spec one of ``+i``, ``-i``, ``+i-j`` (``+`` = oriented from ``u``).
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional, Tuple

from .torus_map import TorusMap, MapStructureError, v2add, v2sub
from .wood import Wood


class FormatError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing / serialization

def _tokens(text: str) -> List[List[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def _parse_dart(tok: str) -> int:
    if tok.endswith("+"):
        return 2 * int(tok[:-1])
    if tok.endswith("-"):
        return 2 * int(tok[:-1]) + 1
    raise FormatError(f"bad dart token {tok!r}")


def _dart_token(d: int) -> str:
    return f"{d >> 1}{'+' if d % 2 == 0 else '-'}"


def parse_tmap(text: str) -> TorusMap:
    rows = _tokens(text)
    if not rows or rows[0][:2] != ["tmap", "1"]:
        raise FormatError("missing 'tmap 1' header")
    n = None
    edges: Dict[int, Tuple[int, int, int, int]] = {}
    rots: Dict[int, List[int]] = {}
    for row in rows[1:]:
        if row[0] == "vertices":
            n = int(row[1])
        elif row[0] == "edge":
            eid, u, v, dx, dy = (int(x) for x in row[1:6])
            if eid in edges:
                raise FormatError(f"duplicate edge id {eid}")
            edges[eid] = (u, v, dx, dy)
        elif row[0] == "rot":
            v = int(row[1])
            if v in rots:
                raise FormatError(f"duplicate rot line for vertex {v}")
            rots[v] = [_parse_dart(t) for t in row[2:]]
        else:
            raise FormatError(f"unknown directive {row[0]!r}")
    if n is None:
        raise FormatError("missing 'vertices' line")
    if sorted(edges) != list(range(len(edges))):
        raise FormatError("edge ids must be 0..m-1")
    edge_list = [edges[e] for e in range(len(edges))]
    rotations = [rots.get(v, []) for v in range(n)]
    try:
        return TorusMap.from_edges(n, edge_list, rotations)
    except MapStructureError as exc:
        raise FormatError(str(exc)) from exc


def serialize_tmap(nmap: TorusMap) -> str:
    out = ["tmap 1", f"vertices {nmap.n}"]
    for e in range(nmap.m):
        u, v = nmap.edge_endpoints(e)
        dx, dy = nmap.off[2 * e]
        out.append(f"edge {e} {u} {v} {dx} {dy}")
    for v in range(nmap.n):
        toks = " ".join(_dart_token(d) for d in nmap.vertex_darts[v])
        out.append(f"rot {v} {toks}")
    return "\n".join(out) + "\n"


def parse_wood(text: str, nmap: TorusMap) -> Wood:
    colors: List[Optional[int]] = [None] * (2 * nmap.m)
    for row in _tokens(text):
        if row[0] != "w":
            raise FormatError(f"unknown directive {row[0]!r}")
        eid = int(row[1])
        if not (0 <= eid < nmap.m):
            raise FormatError(f"edge id {eid} out of range")
        spec = row[2]
        i = 0
        while i < len(spec):
            sign = spec[i]
            if sign not in "+-":
                raise FormatError(f"bad wood spec {spec!r}")
            c = int(spec[i + 1])
            if c not in (0, 1, 2):
                raise FormatError(f"bad color in {spec!r}")
            d = 2 * eid if sign == "+" else 2 * eid + 1
            if colors[d] is not None:
                raise FormatError(f"edge {eid} colored twice on the same side")
            colors[d] = c
            i += 2
    return Wood(tuple(colors))


def serialize_wood(wood: Wood, nmap: TorusMap) -> str:
    out = []
    for e in range(nmap.m):
        cp, cm = wood.colors[2 * e], wood.colors[2 * e + 1]
        if cp is None and cm is None:
            continue
        if cp is not None and cm is not None:
            spec = f"+{cp}-{cm}"
        elif cp is not None:
            spec = f"+{cp}"
        else:
            spec = f"-{cm}"
        out.append(f"w {e} {spec}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# fixtures

def fix_3loops() -> Tuple[TorusMap, Wood]:
    """One vertex, loops (1,0), (0,1), (1,1); the type-1 wood colors a+/b+/c-."""
    nmap = TorusMap.from_edges(
        1, [(0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 1, 1)], [[0, 4, 2, 1, 5, 3]])
    wood = Wood.from_dict(nmap, {0: 0, 2: 1, 5: 2})
    return nmap, wood


def fix_2loops() -> Tuple[TorusMap, Wood]:
    """One vertex, loops (1,0), (0,1); type-2.1 wood with the (1,0) loop bi-oriented."""
    nmap = TorusMap.from_edges(1, [(0, 0, 1, 0), (0, 0, 0, 1)], [[0, 2, 1, 3]])
    wood = Wood.from_dict(nmap, {0: 0, 1: 2, 2: 1})
    return nmap, wood


def fix_brick() -> Tuple[TorusMap, Wood]:
    """Two vertices, three parallel edges, one hexagonal face; type-1 wood."""
    nmap = TorusMap.from_edges(
        2, [(0, 1, 0, 0), (0, 1, 1, 0), (0, 1, 0, 1)], [[0, 2, 4], [1, 3, 5]])
    wood = Wood.from_dict(nmap, {0: 0, 1: 1, 2: 1, 3: 2, 4: 2, 5: 0})
    return nmap, wood


def fix_basic(n: int) -> Tuple[TorusMap, Wood]:
    """Non-contractible n-cycle plus n parallel loops; the only woods are type 2."""
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return fix_2loops()
    edges: List[Tuple[int, int, int, int]] = []
    for i in range(n):  # spine edge i: v_i -> v_{i+1}
        if i < n - 1:
            edges.append((i, i + 1, 0, 0))
        else:
            edges.append((i, 0, 1, 0))
    for i in range(n):  # loop at v_i, edge id n+i
        edges.append((i, i, 0, 1))
    rotations = []
    for i in range(n):
        nxt_dart = 2 * i              # spine out
        prv_dart = 2 * ((i - 1) % n) + 1
        lp = 2 * (n + i)
        rotations.append([nxt_dart, lp, prv_dart, lp + 1])
    nmap = TorusMap.from_edges(n, edges, rotations)
    coloring: Dict[int, int] = {}
    for i in range(n):
        coloring[2 * i] = 0          # spine forward color 0
        coloring[2 * i + 1] = 2      # spine backward color 2
        coloring[2 * (n + i)] = 1    # loops color 1, upward
    return nmap, Wood.from_dict(nmap, coloring)


# ---------------------------------------------------------------------------
# triangulation and random generation

def split_face(nmap: TorusMap, fid: int) -> TorusMap:
    """Star-split face ``fid``: one new vertex joined to every corner of the face."""
    walk = nmap.faces[fid]
    w = nmap.n
    m0 = nmap.m
    edges = [(nmap.origin[2 * e], nmap.origin[2 * e + 1], *nmap.off[2 * e])
             for e in range(m0)]
    spoke_of: Dict[int, int] = {}
    for k, d in enumerate(walk):
        eid = m0 + k
        spoke_of[d] = eid
        cell = nmap.face_pos[d]
        edges.append((w, nmap.origin[d], cell[0], cell[1]))
    rotations = [list(r) for r in nmap.vertex_darts]
    for k, d in enumerate(walk):
        # corner of the face at origin(d) sits after y^1, y = walk predecessor
        y = walk[k - 1]
        rot = rotations[nmap.origin[d]]
        rot.insert(rot.index(y ^ 1) + 1, 2 * spoke_of[d] + 1)
    rotations.append([2 * spoke_of[d] for d in reversed(walk)])
    return TorusMap.from_edges(nmap.n + 1, edges, rotations)


def triangulate(nmap: TorusMap) -> Tuple[TorusMap, List[int], List[int]]:
    """Star-triangulate non-triangular faces.

    Returns the new map plus the lists of added edge ids and vertex ids;
    simplicity is preserved (every added edge joins a fresh vertex).
    """
    cur = nmap
    added_edges: List[int] = []
    added_vertices: List[int] = []
    while True:
        big = [fid for fid in range(cur.f) if cur.face_degree(fid) != 3]
        if not big:
            return cur, added_edges, added_vertices
        fid = big[0]
        deg = cur.face_degree(fid)
        m0, n0 = cur.m, cur.n
        cur = split_face(cur, fid)
        added_vertices.append(n0)
        added_edges.extend(range(m0, m0 + deg))


def flip_edge(nmap: TorusMap, e: int) -> Optional[TorusMap]:
    """Replace diagonal ``e`` of the quad formed by its two triangle faces.

    Returns None when the flip is not applicable (loops at the quad level,
    shared faces, non-triangles) or produces an invalid toroidal map.
    """
    dp, dm = 2 * e, 2 * e + 1
    f1, f2 = nmap.face_id[dp], nmap.face_id[dm]
    if f1 == f2 or nmap.face_degree(f1) != 3 or nmap.face_degree(f2) != 3:
        return None
    w1 = nmap.faces[f1]
    w2 = nmap.faces[f2]
    a1, a2 = [w1[(w1.index(dp) + k) % 3] for k in (1, 2)]
    b1, b2 = [w2[(w2.index(dm) + k) % 3] for k in (1, 2)]
    # diagonal from origin(a2) to origin(b2), in the frame anchored at origin(e+)
    off_g = v2sub(nmap.off[b1], v2add(nmap.off[dp], nmap.off[a1]))
    ua, ub = nmap.origin[a2], nmap.origin[b2]
    edges = [(nmap.origin[2 * k], nmap.origin[2 * k + 1], *nmap.off[2 * k])
             for k in range(nmap.m)]
    edges[e] = (ua, ub, off_g[0], off_g[1])
    rotations = [list(r) for r in nmap.vertex_darts]
    for rot in rotations:
        while dp in rot:
            rot.remove(dp)
        while dm in rot:
            rot.remove(dm)
    rotations[ua].insert(rotations[ua].index(a1 ^ 1) + 1, dp)
    rotations[ub].insert(rotations[ub].index(b1 ^ 1) + 1, dm)
    try:
        out = TorusMap.from_edges(nmap.n, edges, rotations)
    except MapStructureError:
        return None
    if not out.validate().ok:
        return None
    return out


def random_triangulation(n: int, seed: int) -> TorusMap:
    """Deterministic random essentially-3-connected toroidal triangulation.

    Grows from the one-vertex triangulation by random star splits, then
    applies random diagonal flips that keep the map valid and essentially
    3-connected.
    """
    rng = random.Random(seed)
    cur, _ = fix_3loops()
    while cur.n < n:
        fid = rng.randrange(cur.f)
        cur = split_face(cur, fid)
    flips = 2 * n
    attempts = 0
    while flips > 0 and attempts < 20 * n:
        attempts += 1
        e = rng.randrange(cur.m)
        cand = flip_edge(cur, e)
        if cand is None:
            continue
        ok, _ = cand.is_essentially_3connected()
        if not ok:
            continue
        cur = cand
        flips -= 1
    ok, _ = cur.is_essentially_3connected()
    if not ok:
        raise AssertionError("random triangulation lost essential 3-connectivity")
    return cur
