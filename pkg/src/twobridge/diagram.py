"""Planar knot diagrams as rotation systems.

A diagram is a set of vertices (4-valent crossings and 2-valent bends such as
the caps and cups of a plat) with a fixed counterclockwise order of slots at
each vertex, and an involution pairing slots into edges.  A *dart* ``(v, s)``
is the half-edge leaving vertex ``v`` through slot ``s``.

Face tracing keeps the face on the left: after arriving at ``v`` through slot
``s`` the walk leaves through the clockwise neighbour ``s - 1``.  The corner
between slots ``k`` and ``k + 1`` therefore belongs to the face of dart
``(v, k)``.

Plat crossings use the slot layout NE=0, NW=1, SW=2, SE=3 with the braid
read top to bottom.  ``sigma_i`` has the NW-SE strand over, ``sigma_i^-1``
the NE-SW strand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .braidkit import BraidWord
from .errors import LinkNotKnotError, MalformedPDError

Dart = tuple[int, int]

BLACK, WHITE = 0, 1


@dataclass(frozen=True)
class Crossing:
    """A 4-valent vertex; the over strand occupies slots ``over`` and ``over + 2``."""

    over: int

    degree = 4

    def __post_init__(self):
        if self.over not in (0, 1):
            raise ValueError("over strand is slot pair (0, 2) or (1, 3)")


@dataclass(frozen=True)
class Bend:
    """A 2-valent vertex (cap, cup or splice point); carries no crossing data."""

    label: str = "bend"

    degree = 2


@dataclass(frozen=True, eq=False)
class PlanarDiagram:
    vertices: tuple
    edges: Mapping[Dart, Dart]
    exterior: Dart | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", dict(self.edges))
        for (v, s), (w, t) in self.edges.items():
            if self.edges.get((w, t)) != (v, s):
                raise ValueError(f"edge pairing is not an involution at {(v, s)}")
        for v, vert in enumerate(self.vertices):
            for s in range(vert.degree):
                if (v, s) not in self.edges:
                    raise ValueError(f"dangling slot {(v, s)}")

    # -- basic structure ---------------------------------------------------

    @cached_property
    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(v for v, vert in enumerate(self.vertices) if isinstance(vert, Crossing))

    @property
    def crossing_count(self) -> int:
        return len(self.crossing_ids)

    def darts(self) -> list[Dart]:
        return [(v, s) for v, vert in enumerate(self.vertices) for s in range(vert.degree)]

    def opposite(self, dart: Dart) -> Dart:
        """The slot across the vertex, i.e. where a strand entering at ``dart`` leaves."""
        v, s = dart
        deg = self.vertices[v].degree
        return (v, (s + deg // 2) % deg)

    @cached_property
    def strands(self) -> tuple[tuple[Dart, ...], ...]:
        """Link components as cyclic dart sequences, each traced from its lowest dart."""
        seen = set()
        comps = []
        for start in sorted(self.darts()):
            if start in seen:
                continue
            # a strand leaves through ``start``; its reverse traversal starts elsewhere
            path = []
            d = start
            while True:
                path.append(d)
                seen.add(d)
                arrive = self.edges[d]
                seen.add(arrive)
                d = self.opposite(arrive)
                if d == start:
                    break
            comps.append(tuple(path))
        return tuple(comps)

    @property
    def component_count(self) -> int:
        return len(self.strands)

    @cached_property
    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in range(len(self.vertices))}
        for (v, _), (w, _) in self.edges.items():
            adj[v].add(w)
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    # -- faces ---------------------------------------------------------------

    def next_in_face(self, dart: Dart) -> Dart:
        w, t = self.edges[dart]
        return (w, (t - 1) % self.vertices[w].degree)

    @cached_property
    def faces(self) -> tuple[tuple[Dart, ...], ...]:
        seen = set()
        faces = []
        for start in sorted(self.darts()):
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                d = self.next_in_face(d)
            faces.append(tuple(face))
        return tuple(faces)

    @cached_property
    def face_of(self) -> dict[Dart, int]:
        return {d: i for i, face in enumerate(self.faces) for d in face}

    def euler_ok(self) -> bool:
        """Planarity of a connected diagram: F = V + 2 over crossings."""
        return self.is_connected and len(self.faces) == self.crossing_count + 2

    @property
    def exterior_face(self) -> int:
        dart = self.exterior if self.exterior is not None else min(self.darts())
        return self.face_of[dart]


# -- plat closure --------------------------------------------------------------


def plat_closure(b: BraidWord) -> PlanarDiagram:
    """Cap strands 2i-1, 2i at the top and bottom of ``b`` and record the embedding."""
    vertices: list = []
    edges: dict[Dart, Dart] = {}

    def join(a: Dart, c: Dart):
        edges[a] = c
        edges[c] = a

    pending: dict[int, Dart] = {}
    # caps: slot 0 = left leg, slot 1 = right leg; corner 1 faces outward
    for j in range(b.strand_pairs):
        vertices.append(Bend("cap"))
        cap = len(vertices) - 1
        pending[2 * j + 1] = (cap, 0)
        pending[2 * j + 2] = (cap, 1)
    exterior = (0, 1)
    for letter in b.letters:
        i = letter.generator_index
        vertices.append(Crossing(over=1 if letter.exponent_sign > 0 else 0))
        x = len(vertices) - 1
        join(pending[i], (x, 1))
        join(pending[i + 1], (x, 0))
        pending[i] = (x, 2)
        pending[i + 1] = (x, 3)
    # cups: slot 0 = right leg, slot 1 = left leg, keeping ccw order
    for j in range(b.strand_pairs):
        vertices.append(Bend("cup"))
        cup = len(vertices) - 1
        join(pending[2 * j + 1], (cup, 1))
        join(pending[2 * j + 2], (cup, 0))
    return PlanarDiagram(tuple(vertices), edges, exterior)


# -- orientation ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class OrientedDiagram:
    diagram: PlanarDiagram
    outgoing: frozenset  # darts the knot leaves through

    @cached_property
    def signs(self) -> dict[int, int]:
        """Crossing signs: +1 when the under direction is the over direction turned a quarter ccw."""
        out = {}
        for v in self.diagram.crossing_ids:
            o = self.diagram.vertices[v].over
            o_out = o if (v, o) in self.outgoing else o + 2
            u_out = (o_out + 1) % 4 if (v, (o_out + 1) % 4) in self.outgoing else (o_out + 3) % 4
            out[v] = 1 if u_out == (o_out + 1) % 4 else -1
        return out

    def reversed(self) -> OrientedDiagram:
        d = self.diagram
        return OrientedDiagram(d, frozenset(x for x in d.darts() if x not in self.outgoing))


def orient(d: PlanarDiagram) -> OrientedDiagram:
    """Orient a one-component diagram along the strand through its lowest dart."""
    if d.component_count != 1:
        raise LinkNotKnotError(d.component_count)
    return OrientedDiagram(d, frozenset(d.strands[0]))


def writhe(od: OrientedDiagram) -> int:
    return sum(od.signs.values())


# -- checkerboard coloring ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ColoredDiagram:
    diagram: PlanarDiagram
    colors: tuple[int, ...]  # per face id
    orientation: OrientedDiagram | None = None

    @cached_property
    def white_faces(self) -> tuple[int, ...]:
        """White faces X_0, X_1, ... in face-id order; X_0 is the one deleted from G'."""
        return tuple(f for f, c in enumerate(self.colors) if c == WHITE)

    def corner_color(self, v: int, k: int) -> int:
        return self.colors[self.diagram.face_of[(v, k % 4)]]


def checkerboard(d: PlanarDiagram | OrientedDiagram) -> ColoredDiagram:
    """Two-color the faces with the exterior black."""
    orientation = d if isinstance(d, OrientedDiagram) else None
    pd = d.diagram if orientation else d
    if not pd.is_connected:
        raise LinkNotKnotError(pd.component_count, "split diagram has no well-defined face structure")
    nfaces = len(pd.faces)
    colors = [None] * nfaces
    ext = pd.exterior_face
    colors[ext] = BLACK
    stack = [ext]
    neighbours: dict[int, set[int]] = {f: set() for f in range(nfaces)}
    for dart, other in pd.edges.items():
        neighbours[pd.face_of[dart]].add(pd.face_of[other])
    while stack:
        f = stack.pop()
        for g in neighbours[f]:
            want = 1 - colors[f]
            if colors[g] is None:
                colors[g] = want
                stack.append(g)
            else:
                assert colors[g] == want, "diagram is not checkerboard colorable"
    return ColoredDiagram(pd, tuple(colors), orientation)


# -- crossing statistics ---------------------------------------------------------------


@dataclass(frozen=True)
class CrossingStats:
    eta: dict
    types: dict  # crossing id -> "I" or "II"
    signs: dict

    @property
    def mu_I(self) -> int:
        return sum(e for v, e in self.eta.items() if self.types[v] == "I")

    @property
    def mu_II(self) -> int:
        return sum(e for v, e in self.eta.items() if self.types[v] == "II")

    @property
    def writhe(self) -> int:
        return sum(self.signs.values())


def crossing_eta(cd: ColoredDiagram, v: int) -> int:
    """Incidence number: -1 when the corners just counterclockwise of the over strand are white."""
    o = cd.diagram.vertices[v].over
    return -1 if cd.corner_color(v, o) == WHITE else 1


def crossing_type(cd: ColoredDiagram, od: OrientedDiagram, v: int) -> str:
    """Type II when each white corner sits between one incoming and one outgoing slot.

    Over/under information is not used.
    """
    k = 0 if cd.corner_color(v, 0) == WHITE else 1
    out_k = (v, k) in od.outgoing
    out_k1 = (v, (k + 1) % 4) in od.outgoing
    return "II" if out_k != out_k1 else "I"


def crossing_stats(cd: ColoredDiagram, od: OrientedDiagram | None = None) -> CrossingStats:
    od = od or cd.orientation
    if od is None:
        raise ValueError("crossing types need an oriented diagram")
    ids = cd.diagram.crossing_ids
    return CrossingStats(
        eta={v: crossing_eta(cd, v) for v in ids},
        types={v: crossing_type(cd, od, v) for v in ids},
        signs={v: od.signs[v] for v in ids},
    )


# -- connected sum -----------------------------------------------------------------------


def _exterior_darts(d: PlanarDiagram) -> tuple[Dart, ...]:
    face = d.faces[d.exterior_face]
    start = face.index(d.exterior) if d.exterior in face else 0
    return face[start:] + face[:start]


def splice_connected_sum(d1: OrientedDiagram, d2: OrientedDiagram) -> OrientedDiagram:
    """Band the two knots together across one exterior edge of each.

    The first exterior edge of ``d1`` is joined to the first exterior edge of
    ``d2`` whose orientation relative to the face walk is opposite, which is
    what a planar, orientation-preserving band needs.  If ``d2`` has no such
    edge its orientation is reversed.
    """
    for od in (d1, d2):
        if od.diagram.component_count != 1:
            raise LinkNotKnotError(od.diagram.component_count)
    p1, p2 = d1.diagram, d2.diagram
    e1 = _exterior_darts(p1)[0]
    agree1 = e1 in d1.outgoing
    ext2 = _exterior_darts(p2)
    candidates = [x for x in ext2 if (x in d2.outgoing) != agree1]
    if not candidates:
        d2 = d2.reversed()
        candidates = [x for x in ext2 if (x in d2.outgoing) != agree1]
    e2 = candidates[0]

    shift = len(p1.vertices)
    edges = dict(p1.edges)
    for (v, s), (w, t) in p2.edges.items():
        edges[(v + shift, s)] = (w + shift, t)
    outgoing = set(d1.outgoing) | {(v + shift, s) for v, s in d2.outgoing}

    def directed(dart, od_out, offset):
        v, s = dart
        dart = (v + offset, s)
        other = edges[dart]
        return (dart, other) if dart in od_out else (other, dart)

    t1, h1 = directed(e1, outgoing, 0)
    t2, h2 = directed(e2, outgoing, shift)
    for a, c in ((t1, h2), (t2, h1)):
        edges[a] = c
        edges[c] = a

    ext_candidates = [x for x in _exterior_darts(p1) if x not in (t1, h1)]
    exterior = ext_candidates[0] if ext_candidates else t1
    out = PlanarDiagram(p1.vertices + p2.vertices, edges, exterior)
    assert out.euler_ok(), "connected-sum band is not planar"
    od = OrientedDiagram(out, frozenset(outgoing))
    assert out.component_count == 1
    return od


# -- PD codes ----------------------------------------------------------------------------


def _compressed_labels(od: OrientedDiagram) -> dict[Dart, int]:
    """Label knot arcs between consecutive crossings 1..2V, keyed by crossing darts."""
    d = od.diagram
    strand = d.strands[0]
    if not (strand[0] in od.outgoing):
        strand = tuple(od.diagram.edges[x] for x in reversed(strand))
    # rotate so the walk starts leaving a crossing
    xs = set(d.crossing_ids)
    first = next(i for i, (v, _) in enumerate(strand) if v in xs)
    strand = strand[first:] + strand[:first]
    labels: dict[Dart, int] = {}
    label = 0
    for dart in strand:
        if dart[0] in xs:
            label += 1
            labels[dart] = label
        arrive = d.edges[dart]
        if arrive[0] in xs:
            labels[arrive] = label
    return labels


def to_pd(od: OrientedDiagram) -> list[tuple[str, tuple[int, int, int, int]]]:
    d = od.diagram
    if od.diagram.component_count != 1:
        raise LinkNotKnotError(d.component_count)
    if not d.crossing_ids:
        return []
    labels = _compressed_labels(od)
    rows = []
    for v in d.crossing_ids:
        o = d.vertices[v].over
        under = [(o + 1) % 4, (o + 3) % 4]
        u_in = next(s for s in under if (v, s) not in od.outgoing)
        slots = [(u_in + j) % 4 for j in range(4)]
        rows.append(("Xp" if od.signs[v] > 0 else "Xm", tuple(labels[(v, s)] for s in slots)))
    return rows


def format_pd(rows) -> str:
    lines = ["# PD code: edge labels ccw from the incoming under-strand"]
    lines += [f"{tag} {','.join(str(x) for x in labs)}" for tag, labs in rows]
    return "\n".join(lines) + "\n"


def parse_pd(text: str) -> list[tuple[str, tuple[int, int, int, int]]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if len(parts) != 2 or parts[0] not in ("Xp", "Xm"):
            raise MalformedPDError(f"line {lineno}: expected 'Xp a,b,c,d' or 'Xm a,b,c,d'")
        try:
            labs = tuple(int(x) for x in parts[1].split(","))
        except ValueError:
            raise MalformedPDError(f"line {lineno}: non-integer edge label") from None
        if len(labs) != 4 or any(x <= 0 for x in labs):
            raise MalformedPDError(f"line {lineno}: need four positive edge labels")
        rows.append((parts[0], labs))
    return rows


def from_pd(rows: Iterable[tuple[str, tuple[int, int, int, int]]]) -> OrientedDiagram:
    """Build an oriented diagram; an empty code is the 0-crossing unknot."""
    rows = list(rows)
    if not rows:
        return orient(unknot_diagram())
    vertices = []
    where: dict[int, list[Dart]] = {}
    outgoing = set()
    for v, (tag, labs) in enumerate(rows):
        # slot 0 is the incoming under strand, so the over strand is slots 1, 3
        vertices.append(Crossing(over=1))
        for s, lab in enumerate(labs):
            where.setdefault(lab, []).append((v, s))
        outgoing.add((v, 2))
        outgoing.add((v, 1) if tag == "Xp" else (v, 3))
    edges = {}
    for lab, ds in where.items():
        if len(ds) != 2:
            raise MalformedPDError(f"edge label {lab} occurs {len(ds)} times, expected 2")
        a, c = ds
        if (a in outgoing) == (c in outgoing):
            raise MalformedPDError(f"edge {lab} is not oriented consistently by its crossing tags")
        edges[a] = c
        edges[c] = a
    pd = PlanarDiagram(tuple(vertices), edges)
    if pd.component_count != 1:
        raise LinkNotKnotError(pd.component_count)
    if not pd.euler_ok():
        raise MalformedPDError("PD code does not describe a planar diagram")
    pd = PlanarDiagram(pd.vertices, pd.edges, exterior=pd.faces[0][0])
    return OrientedDiagram(pd, frozenset(outgoing))


def unknot_diagram() -> PlanarDiagram:
    """The crossingless circle, as the plat of the empty word in B_2."""
    return plat_closure(BraidWord(2))
