"""Simplicial posets with explicit Boolean face lattices.

A simplicial poset is a finite poset with an implicit minimal element
whose lower intervals are Boolean lattices.  Unlike an abstract
simplicial complex, several faces may share one vertex set, so faces
are identified by explicit ids and carry an ordered facet list:
position j holds the face obtained by omitting the j-th vertex of the
sorted vertex list.  That ordering pins down the boundary signs used
by the homology backend.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    DanglingFaceRef,
    EmptyInput,
    NonBooleanInterval,
    PosetValidationError,
    RankMismatch,
    UnknownElement,
)


@dataclass(frozen=True)
class SimplexElem:
    """One face: sorted vertices plus facet ids in omitted-vertex order.

    Rank-1 faces have an empty facet list; their unique codimension-one
    face is the implicit minimal element, which is never stored.
    """

    id: str
    vertices: tuple[str, ...]
    facets: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class PosetStats:
    dim: int
    pure: bool
    connected: bool
    f: tuple[int, ...]


class SimplicialPoset:
    """Finite poset whose lower intervals are Boolean lattices.

    Instances are immutable once built and safe to share; construct via
    :func:`from_face_lattice` or :func:`from_facets`.  ``n`` is the
    ambient rank (``dim + 1`` for pure posets unless overridden).
    """

    __slots__ = ("name", "n", "_elems", "_sorted", "_cache")

    def __init__(self, elements: Mapping[str, SimplexElem], n: int, name: str = ""):
        self._elems = dict(elements)
        self.n = n
        self.name = name
        self._sorted = tuple(
            sorted(self._elems.values(), key=lambda e: (e.rank, e.id))
        )
        self._cache: dict = {}

    def __len__(self) -> int:
        return len(self._elems)

    def __contains__(self, eid: str) -> bool:
        return eid in self._elems

    def __iter__(self):
        return iter(self._sorted)

    def element(self, eid: str) -> SimplexElem:
        try:
            return self._elems[eid]
        except KeyError:
            raise UnknownElement(f"no element {eid!r} in poset {self.name!r}") from None

    def elements(self) -> tuple[SimplexElem, ...]:
        """All faces, sorted by (rank, id)."""
        return self._sorted

    def ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self._sorted)

    @property
    def dim(self) -> int:
        return max((e.dim for e in self._sorted), default=-1)

    def by_rank(self, k: int) -> tuple[SimplexElem, ...]:
        return tuple(e for e in self._sorted if e.rank == k)

    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.by_rank(1))

    def maximal_ids(self) -> tuple[str, ...]:
        covered = {fid for e in self._sorted for fid in e.facets}
        return tuple(e.id for e in self._sorted if e.id not in covered)

    def _descendant_map(self) -> dict[str, frozenset[str]]:
        # desc[e] = all faces <= e, including e itself (the minimal
        # element stays implicit).  Built bottom-up along the rank grading.
        desc = self._cache.get("desc")
        if desc is None:
            desc = {}
            for e in self._sorted:
                acc = {e.id}
                for fid in e.facets:
                    acc |= desc[fid]
                desc[e.id] = frozenset(acc)
            self._cache["desc"] = desc
        return desc

    def descendants(self, eid: str) -> frozenset[str]:
        """Ids of every face below ``eid`` (inclusive)."""
        self.element(eid)
        return self._descendant_map()[eid]

    def leq(self, a: str, b: str) -> bool:
        """Order relation: is face ``a`` below face ``b``?"""
        return a in self.descendants(b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialPoset):
            return NotImplemented
        return self.n == other.n and self._sorted == other._sorted

    def __hash__(self) -> int:
        return hash((self.n, self._sorted))

    def __repr__(self) -> str:
        return (
            f"SimplicialPoset(name={self.name!r}, n={self.n}, "
            f"elements={len(self._elems)}, dim={self.dim})"
        )


def _as_elem(raw) -> SimplexElem:
    if isinstance(raw, SimplexElem):
        eid, vertices, facets = raw.id, raw.vertices, raw.facets
    elif isinstance(raw, Mapping):
        try:
            eid, vertices, facets = raw["id"], raw["vertices"], raw["facets"]
        except KeyError as exc:
            raise PosetValidationError(
                raw.get("id", "?"), "element-shape", f"missing key {exc}"
            ) from None
    else:
        eid, vertices, facets = raw
    vertices = tuple(sorted(str(v) for v in vertices))
    return SimplexElem(str(eid), vertices, tuple(str(f) for f in facets))


def from_face_lattice(
    elements: Iterable, n: int | None = None, name: str = ""
) -> SimplicialPoset:
    """Build and validate a simplicial poset from explicit face data.

    Each entry supplies ``(id, vertices, facets)`` as a SimplexElem,
    mapping or triple.  Raises :class:`DanglingFaceRef`,
    :class:`RankMismatch` or :class:`NonBooleanInterval` naming the
    offending element when an axiom fails.
    """
    elems: dict[str, SimplexElem] = {}
    for raw in elements:
        e = _as_elem(raw)
        if e.id in elems:
            raise PosetValidationError(e.id, "unique-ids", "duplicate element id")
        if not e.vertices:
            raise RankMismatch(e.id, "rank", "face with no vertices")
        if len(set(e.vertices)) != len(e.vertices):
            raise RankMismatch(e.id, "rank", "repeated vertex in vertex list")
        elems[e.id] = e

    for e in elems.values():
        k = e.rank
        if k == 1:
            if e.facets:
                raise RankMismatch(
                    e.id, "rank", "a vertex lists facets other than the minimal element"
                )
            continue
        if len(e.facets) != k:
            raise RankMismatch(
                e.id, "rank", f"rank {k} face lists {len(e.facets)} facets"
            )
        if len(set(e.facets)) != k:
            raise NonBooleanInterval(e.id, "boolean", "facet list repeats an id")
        for j, fid in enumerate(e.facets):
            if fid not in elems:
                raise DanglingFaceRef(e.id, "resolvable", f"facet {fid!r} not found")
            want = e.vertices[:j] + e.vertices[j + 1 :]
            if elems[fid].vertices != want:
                raise NonBooleanInterval(
                    e.id,
                    "boolean",
                    f"facet {fid!r} should omit vertex {e.vertices[j]!r}",
                )

    # The simplicial identities d_j d_j' = d_(j'-1) d_j (j < j') make the
    # descent from a face to any subset of its vertices path-independent,
    # which together with the vertex-set conditions above forces every
    # lower interval to be Boolean.
    for e in elems.values():
        if e.rank < 3:
            continue
        for jp in range(1, e.rank):
            upper = elems[e.facets[jp]]
            for j in range(jp):
                lower = elems[e.facets[j]]
                if upper.facets[j] != lower.facets[jp - 1]:
                    raise NonBooleanInterval(
                        e.id, "boolean", "facet maps do not commute"
                    )

    max_rank = max((e.rank for e in elems.values()), default=0)
    if n is None:
        n = max_rank
    elif n < max_rank:
        raise PosetValidationError(
            "", "ambient-rank", f"n={n} below maximal rank {max_rank}"
        )
    return SimplicialPoset(elems, n, name)


def subset_id(vertices: Iterable[str]) -> str:
    """Canonical id used by :func:`from_facets` for a vertex subset."""
    return ",".join(sorted(vertices))


def from_facets(facet_vertex_sets: Iterable[Iterable], name: str = "") -> SimplicialPoset:
    """Face poset of the simplicial complex generated by the given facets.

    Every nonempty subset of a facet becomes one face, identified by its
    vertex set, so the result is a genuine simplicial complex.
    """
    sets = []
    for fs in facet_vertex_sets:
        vs = tuple(sorted({str(v) for v in fs}))
        if not vs:
            raise EmptyInput("empty facet vertex set")
        sets.append(vs)
    if not sets:
        raise EmptyInput("no facets given")

    subsets: set[tuple[str, ...]] = set()
    for vs in sets:
        k = len(vs)
        for mask in range(1, 1 << k):
            subsets.add(tuple(v for i, v in enumerate(vs) if mask >> i & 1))

    elems = []
    for vs in sorted(subsets, key=lambda s: (len(s), s)):
        eid = vs[0] if len(vs) == 1 else subset_id(vs)
        if len(vs) == 1:
            facets: tuple[str, ...] = ()
        else:
            faces = []
            for j in range(len(vs)):
                sub = vs[:j] + vs[j + 1 :]
                faces.append(sub[0] if len(sub) == 1 else subset_id(sub))
            facets = tuple(faces)
        elems.append(SimplexElem(eid, vs, facets))
    if len({e.id for e in elems}) != len(elems):
        raise PosetValidationError(
            "", "vertex-name", "vertex names collide under subset naming"
        )
    return from_face_lattice(elems, name=name)


def link(S: SimplicialPoset, eid: str) -> SimplicialPoset:
    """Sub-poset of faces strictly above ``eid``, re-ranked from it.

    The result's vertices are the faces covering ``eid``; its ambient
    rank is ``S.n - rank(eid)``.  The link of a maximal face is the
    empty poset.
    """
    base = S.element(eid)
    cached = S._cache.setdefault("links", {})
    if eid in cached:
        return cached[eid]

    desc = S._descendant_map()
    above = [e for e in S.elements() if eid in desc[e.id] and e.id != eid]
    atom_rank = base.rank + 1
    atoms = [e.id for e in above if e.rank == atom_rank]

    def link_vertices(e: SimplexElem) -> tuple[str, ...]:
        return tuple(sorted(a for a in atoms if a in desc[e.id]))

    vsets = {e.id: link_vertices(e) for e in above}
    elems = []
    for e in above:
        vs = vsets[e.id]
        if len(vs) == 1:
            facets: tuple[str, ...] = ()
        else:
            # candidates: facets of e in S that still contain the base face
            cands = [f for f in e.facets if eid in desc[f]]
            facets_list = []
            for j in range(len(vs)):
                want = vs[:j] + vs[j + 1 :]
                match = [f for f in cands if vsets[f] == want]
                if len(match) != 1:
                    raise NonBooleanInterval(
                        e.id, "boolean", "link interval is not Boolean"
                    )
                facets_list.append(match[0])
            facets = tuple(facets_list)
        elems.append(SimplexElem(e.id, vs, facets))
    out = from_face_lattice(
        elems, n=S.n - base.rank, name=f"lk({S.name or '?'};{eid})"
    )
    cached[eid] = out
    return out


def barycentric(S: SimplicialPoset) -> SimplicialPoset:
    """Barycentric subdivision: the complex of chains in the poset.

    Vertices are the faces of ``S``; simplices are strictly increasing
    chains.  Always a genuine simplicial complex.
    """
    cached = S._cache.get("barycentric")
    if cached is not None:
        return cached
    if len(S) == 0:
        out = SimplicialPoset({}, S.n, name=f"sd({S.name or '?'})")
        S._cache["barycentric"] = out
        return out

    chains: list[tuple[str, ...]] = []

    def grow(chain: list[str]) -> None:
        fs = S.element(chain[-1]).facets
        if not fs:
            chains.append(tuple(chain))
            return
        for fid in fs:
            chain.append(fid)
            grow(chain)
            chain.pop()

    for mid in S.maximal_ids():
        grow([mid])

    out = from_facets(chains, name=f"sd({S.name or '?'})")
    if S.n != out.n:
        out = SimplicialPoset(dict((e.id, e) for e in out.elements()), S.n, out.name)
    S._cache["barycentric"] = out
    return out


def f_vector(S: SimplicialPoset) -> tuple[int, ...]:
    """Face counts (f_-1, f_0, ..., f_(n-1)); always starts with 1."""
    counts = [0] * S.n
    for e in S.elements():
        counts[e.rank - 1] += 1
    return (1, *counts)


def validate_stats(S: SimplicialPoset) -> PosetStats:
    """Dimension, purity, connectivity and the f-vector of a poset.

    Connectivity is judged on the comparability graph (each face linked
    to its facets), which matches connectivity of the realization.
    """
    ranks = {e.id: i for i, e in enumerate(S.elements())}
    parent = list(range(len(ranks)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in S.elements():
        for fid in e.facets:
            ra, rb = find(ranks[e.id]), find(ranks[fid])
            if ra != rb:
                parent[ra] = rb
    components = len({find(i) for i in range(len(ranks))})

    maximal_dims = {S.element(m).dim for m in S.maximal_ids()}
    return PosetStats(
        dim=S.dim,
        pure=len(maximal_dims) <= 1,
        connected=components == 1,
        f=f_vector(S),
    )
