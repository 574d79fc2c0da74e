"""Simplicial complexes, vertex decomposability and Stanley-Reisner ideals."""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .ideals import Ideal, is_monomial, is_squarefree, minimal_monomial_generators
from .poly import Ring


class ComplexError(ValueError):
    pass


def _maximal(faces: Iterable[frozenset]) -> frozenset:
    faces = set(faces)
    return frozenset(f for f in faces if not any(f < g for g in faces))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored by its facets on an explicit vertex list.

    ``facets == frozenset()`` is the void complex; ``{frozenset()}`` is the
    complex whose only face is the empty set.
    """

    vertices: tuple[str, ...]
    facets: frozenset

    def __init__(self, vertices: Iterable[str], facets: Iterable[Iterable[str]]):
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise ComplexError(f"repeated vertex in {verts}")
        fs = [frozenset(f) for f in facets]
        for f in fs:
            extra = f - set(verts)
            if extra:
                raise ComplexError(f"facet uses unknown vertices {sorted(extra)}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", _maximal(fs))

    @classmethod
    def parse(cls, text: str, vertices: Iterable[str] | None = None) -> SimplicialComplex:
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ComplexError("facet list must be enclosed in braces")
        body = body[1:-1].strip()
        facets = []
        if body:
            for chunk in body.split(","):
                names = chunk.split()
                if not names:
                    raise ComplexError("empty facet in facet list")
                for n in names:
                    if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", n):
                        raise ComplexError(f"bad vertex name {n!r}")
                facets.append(names)
        if vertices is None:
            seen: list[str] = []
            for f in facets:
                seen += [v for v in f if v not in seen]
            vertices = sorted(seen)
        return cls(vertices, facets)

    @property
    def is_void(self) -> bool:
        return not self.facets

    def sorted_facets(self) -> list[tuple[str, ...]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        fs = [tuple(sorted(f, key=pos.__getitem__)) for f in self.facets]
        return sorted(fs, key=lambda f: (len(f), [pos[v] for v in f]))

    def __str__(self):
        return "{" + ", ".join(" ".join(f) for f in self.sorted_facets()) + "}"

    def is_face(self, face: Iterable[str]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def covered_vertices(self) -> list[str]:
        return [v for v in self.vertices if any(v in f for f in self.facets)]

    def uncovered_vertices(self) -> list[str]:
        return [v for v in self.vertices if not any(v in f for f in self.facets)]

    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def _check_vertex(self, x: str):
        if x not in self.vertices:
            raise ComplexError(f"unknown vertex {x!r}")


def link(cx: SimplicialComplex, x: str) -> SimplicialComplex:
    cx._check_vertex(x)
    rest = [v for v in cx.vertices if v != x]
    return SimplicialComplex(rest, [f - {x} for f in cx.facets if x in f])


def deletion(cx: SimplicialComplex, x: str) -> SimplicialComplex:
    cx._check_vertex(x)
    rest = [v for v in cx.vertices if v != x]
    return SimplicialComplex(rest, [f - {x} for f in cx.facets])


def is_pure(cx: SimplicialComplex) -> bool:
    return len({len(f) for f in cx.facets}) <= 1


def minimal_nonfaces(cx: SimplicialComplex) -> list[frozenset]:
    if cx.is_void:
        return [frozenset()]
    out = []
    for k in range(1, len(cx.vertices) + 1):
        for sub in combinations(cx.vertices, k):
            s = frozenset(sub)
            if cx.is_face(s):
                continue
            if all(cx.is_face(s - {v}) for v in s):
                out.append(s)
    return out


def stanley_reisner_ideal(cx: SimplicialComplex, ring: Ring | None = None) -> Ideal:
    ring = ring or Ring(cx.vertices)
    if set(ring.variables) != set(cx.vertices):
        raise ComplexError("ring variables must be the complex's vertices")
    gens = []
    for s in minimal_nonfaces(cx):
        gens.append(ring.monomial(tuple(1 if v in s else 0 for v in ring.variables)))
    return Ideal(ring, gens)


def complex_from_squarefree_ideal(ideal: Ideal) -> SimplicialComplex:
    if not is_monomial(ideal) or not is_squarefree(ideal):
        raise ComplexError("expected a squarefree monomial ideal")
    ring = ideal.ring
    if ideal.is_unit():
        return SimplicialComplex(ring.variables, [])
    supports = [frozenset(ring.variables[i] for i, k in enumerate(e) if k)
                for e in minimal_monomial_generators(ideal)]
    faces = []
    for k in range(len(ring.variables), -1, -1):
        for sub in combinations(ring.variables, k):
            s = frozenset(sub)
            if any(g <= s for g in supports):
                continue
            if not any(s <= f for f in faces):
                faces.append(s)
    return SimplicialComplex(ring.variables, faces)


@lru_cache(maxsize=None)
def _vd(facets: frozenset) -> bool:
    if len({len(f) for f in facets}) > 1:
        return False
    if len(facets) <= 1:
        return True
    verts = sorted(set().union(*facets))
    for x in verts:
        lk = _maximal(f - {x} for f in facets if x in f)
        dl = _maximal(f - {x} for f in facets)
        if _vd(dl) and _vd(lk):
            return True
    return False


def is_vertex_decomposable(cx: SimplicialComplex) -> bool:
    """Purity is required at every level of the recursion; the void complex counts."""
    return _vd(cx.facets)


def shedding_vertex(cx: SimplicialComplex) -> str | None:
    if not is_pure(cx) or len(cx.facets) <= 1:
        return None
    for x in sorted(cx.covered_vertices()):
        if is_vertex_decomposable(deletion(cx, x)) and is_vertex_decomposable(link(cx, x)):
            return x
    return None


MAX_ENUMERATION_VERTICES = 5


def default_labels(k: int) -> tuple[str, ...]:
    return tuple(string.ascii_lowercase[:k])


def pure_complexes_on(k: int) -> Iterator[SimplicialComplex]:
    """Pure complexes whose facets cover exactly the first ``k`` labels."""
    labels = default_labels(k)
    for size in range(1, k + 1):
        pool = [frozenset(c) for c in combinations(labels, size)]
        for mask in range(1, 1 << len(pool)):
            chosen = [pool[i] for i in range(len(pool)) if mask >> i & 1]
            if set().union(*chosen) == set(labels):
                yield SimplicialComplex(labels, chosen)


def enumerate_complexes(max_vertices: int, allow_larger: bool = False) -> Iterator[SimplicialComplex]:
    """The void complex, then every pure complex covering ``a``, ``ab``, ... up to ``max_vertices`` labels."""
    if max_vertices > MAX_ENUMERATION_VERTICES and not allow_larger:
        raise ComplexError(f"max_vertices above {MAX_ENUMERATION_VERTICES} needs allow_larger=True")
    if max_vertices < 1:
        raise ComplexError("max_vertices must be positive")
    yield SimplicialComplex(default_labels(1), [])
    for k in range(1, max_vertices + 1):
        yield from pure_complexes_on(k)

