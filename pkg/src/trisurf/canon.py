"""Canonical forms, isomorphism testing and automorphism groups.

The canonical code of a triangulation is computed by flag traversal: a
flag is an incident (vertex, edge, face) triple with a side, encoded here
as an ordered face triple ``(a, b, c)``.  Starting from a flag, a
breadth-first sweep over the faces relabels the vertices in discovery
order; the serialised, relabelled face list depends only on the starting
flag and the isomorphism class.  The code is the lexicographic minimum of
that serialisation over starting flags, which makes it a complete
isomorphism invariant, and comparing the per-flag serialisations against
a fixed reference flag yields the full automorphism group.

Boundary participates automatically: boundary edges are exactly the
edges on one face, so the face list determines them, and the code header
records order, face count and boundary length for cheap comparison.

All functions are pure; codes and labelings are cached per value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .complex_core import Triangulation

CanonicalCode = bytes


@dataclass(frozen=True)
class AutomorphismGroup:
    """All face-preserving vertex permutations of a triangulation.

    ``elements`` maps vertex ``v`` to ``perm[v]``; the identity is always
    present and the list is closed under composition and inverse.
    """

    order: int
    elements: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        parent = list(range(self.order))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.elements:
            for v, w in enumerate(perm):
                parent[find(v)] = find(w)
        groups: dict[int, list[int]] = {}
        for v in range(self.order):
            groups.setdefault(find(v), []).append(v)
        return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def _cross_map(tri: Triangulation) -> dict[tuple[int, int, int], int]:
    """Map (edge u<v, apex) -> apex of the other face across the edge."""
    cross: dict[tuple[int, int, int], int] = {}
    for (u, v), incident in tri.edge_faces.items():
        if len(incident) != 2:
            continue
        apexes = [next(x for x in face if x not in (u, v)) for face in incident]
        cross[(u, v, apexes[0])] = apexes[1]
        cross[(u, v, apexes[1])] = apexes[0]
    return cross


def _serialise_from_flag(
    tri: Triangulation,
    cross: dict[tuple[int, int, int], int],
    flag: tuple[int, int, int],
) -> tuple[bytes, tuple[int, ...]]:
    """Relabel by BFS from ``flag``; return (code bytes, old->new labeling)."""
    n = tri.order
    label = [-1] * n
    a, b, c = flag
    label[a], label[b], label[c] = 0, 1, 2
    next_label = 3
    seen = {tuple(sorted(flag))}
    queue = deque([flag])
    relabelled = []
    while queue:
        u, v, w = queue.popleft()
        relabelled.append(tuple(sorted((label[u], label[v], label[w]))))
        for x, y, z in ((u, v, w), (v, w, u), (w, u, v)):
            key = (x, y, z) if x < y else (y, x, z)
            t = cross.get(key)
            if t is None:
                continue
            face = tuple(sorted((x, y, t)))
            if face in seen:
                continue
            if label[t] < 0:
                label[t] = next_label
                next_label += 1
            seen.add(face)
            # Enter the neighbour with the shared edge reversed so the
            # traversal keeps a consistent local orientation.
            queue.append((y, x, t))
    relabelled.sort()
    header = bytes((n, len(tri.faces), len(tri.boundary_edges)))
    body = bytes(v for face in relabelled for v in face)
    return header + body, tuple(label)


def _vertex_key(tri: Triangulation, v: int) -> tuple[int, int]:
    return (tri.degrees[v], 1 if v in tri.boundary_vertices else 0)


def _flag_key(tri: Triangulation, flag: tuple[int, int, int]):
    return tuple(_vertex_key(tri, v) for v in flag)


def _all_flags(tri: Triangulation) -> list[tuple[int, int, int]]:
    flags = []
    for a, b, c in tri.faces:
        flags.extend(
            ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a))
        )
    return flags


def candidate_flags(tri: Triangulation) -> list[tuple[int, int, int]]:
    """Flags with the minimal invariant key; the canonical code is the
    minimum serialisation over exactly this set."""
    flags = _all_flags(tri)
    best = min(_flag_key(tri, f) for f in flags)
    return [f for f in flags if _flag_key(tri, f) == best]


@lru_cache(maxsize=65536)
def _canonical(tri: Triangulation) -> tuple[bytes, tuple[int, ...]]:
    cross = _cross_map(tri)
    best: tuple[bytes, tuple[int, ...]] | None = None
    for flag in candidate_flags(tri):
        result = _serialise_from_flag(tri, cross, flag)
        if best is None or result[0] < best[0]:
            best = result
    assert best is not None
    return best


def canonical_code(tri: Triangulation) -> CanonicalCode:
    """Byte key uniquely identifying the isomorphism class."""
    return _canonical(tri)[0]


def canonical_labeling(tri: Triangulation) -> tuple[int, ...]:
    """A vertex relabelling realising the canonical code."""
    return _canonical(tri)[1]


def canonical_faces(tri: Triangulation) -> tuple[tuple[int, int, int], ...]:
    """The face list of the canonical representative."""
    label = canonical_labeling(tri)
    return tuple(sorted(
        tuple(sorted((label[a], label[b], label[c]))) for a, b, c in tri.faces
    ))


def isomorphic(t1: Triangulation, t2: Triangulation) -> bool:
    return canonical_code(t1) == canonical_code(t2)


def isomorphism(t1: Triangulation, t2: Triangulation) -> dict[int, int] | None:
    """A witness vertex bijection if the two are isomorphic, else None."""
    if not isomorphic(t1, t2):
        return None
    label1 = canonical_labeling(t1)
    label2 = canonical_labeling(t2)
    inverse2 = {new: old for old, new in enumerate(label2)}
    return {v: inverse2[label1[v]] for v in range(t1.order)}


def automorphisms(tri: Triangulation) -> AutomorphismGroup:
    """Exhaustive face-preserving vertex permutations via flag traversal.

    Each flag-to-flag map induces at most one automorphism, so comparing
    every flag's serialisation with a fixed reference flag finds them all.
    """
    cross = _cross_map(tri)
    flags = _all_flags(tri)
    ref_code, ref_label = _serialise_from_flag(tri, cross, flags[0])
    inverse_ref = {new: old for old, new in enumerate(ref_label)}
    elements = []
    for flag in flags:
        code, label = _serialise_from_flag(tri, cross, flag)
        if code != ref_code:
            continue
        inverse = {new: old for old, new in enumerate(label)}
        perm = tuple(inverse[ref_label[v]] for v in range(tri.order))
        elements.append(perm)
    return AutomorphismGroup(order=tri.order, elements=tuple(sorted(set(elements))))


def vertex_orbits(tri: Triangulation) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of the vertices under the automorphism group."""
    return automorphisms(tri).orbits


def relabel(tri: Triangulation, perm: dict[int, int] | tuple[int, ...]) -> Triangulation:
    """Apply a vertex permutation and rebuild (test helper and witness checker)."""
    from .complex_core import build

    mapping = perm if isinstance(perm, dict) else {i: p for i, p in enumerate(perm)}
    return build([(mapping[a], mapping[b], mapping[c]) for a, b, c in tri.faces])


def brute_force_isomorphic(t1: Triangulation, t2: Triangulation) -> bool:
    """Independent isomorphism oracle: backtracking over vertex bijections.

    Used by the test suite to validate the canonical code; deliberately
    shares no machinery with the flag traversal.
    """
    if t1.order != t2.order or len(t1.faces) != len(t2.faces):
        return False
    if t1.degree_sequence != t2.degree_sequence:
        return False
    n = t1.order
    faces2 = set(t2.faces)

    def key(tri: Triangulation, v: int) -> tuple[int, bool]:
        return (tri.degrees[v], v in tri.boundary_vertices)

    candidates = [
        [w for w in range(n) if key(t2, w) == key(t1, v)] for v in range(n)
    ]
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def extend(v: int) -> bool:
        if v == n:
            return all(
                tuple(sorted((assignment[a], assignment[b], assignment[c]))) in faces2
                for a, b, c in t1.faces
            )
        for w in candidates[v]:
            if w in used:
                continue
            consistent = all(
                t1.has_edge(v, u) == t2.has_edge(w, assignment[u])
                for u in range(v)
            )
            if not consistent:
                continue
            assignment[v] = w
            used.add(w)
            if extend(v + 1):
                return True
            used.discard(w)
            del assignment[v]
        return False

    return extend(0)


def nonisomorphic_representatives(
    triangulations: list[Triangulation],
) -> list[Triangulation]:
    """One representative per canonical code, in code order."""
    by_code: dict[bytes, Triangulation] = {}
    for tri in triangulations:
        by_code.setdefault(canonical_code(tri), tri)
    return [by_code[code] for code in sorted(by_code)]
