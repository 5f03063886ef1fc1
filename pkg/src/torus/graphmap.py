"""Topological representatives on finite graphs.

Oriented edges use the same signed-int encoding as letters: edge ``i`` is
``i + 1`` and its reverse is ``-(i + 1)``.  An edge path is therefore a
:class:`~torus.words.Word`, and a path is tight exactly when the word is
freely reduced.  The one-vertex rose turns an automorphism into a graph map
whose edge paths are plain words.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .words import Alphabet, Word, default_alphabet, invert, substitute

__all__ = [
    "Automorphism",
    "GraphMap",
    "MarkedGraph",
    "Presentation",
    "apply_tight",
    "is_vanishing",
    "iterate",
    "mapping_torus",
    "rose_of",
]

EdgePath = Word


class MarkedGraph:
    """A finite connected graph with oriented edges.

    ``edges`` lists ``(origin, terminus)`` vertex indices for the positive
    orientation of each edge; reversal is negation of the signed edge id.
    """

    def __init__(self, vertices: Sequence[str], edges: Sequence[Tuple[int, int]],
                 edge_names: Optional[Sequence[str]] = None):
        self.vertices = tuple(vertices)
        self.edges = tuple((int(o), int(t)) for o, t in edges)
        nv = len(self.vertices)
        if nv == 0:
            raise ValueError("graph has no vertices")
        for o, t in self.edges:
            if not (0 <= o < nv and 0 <= t < nv):
                raise ValueError(f"edge endpoint out of range: {(o, t)}")
        if edge_names is None:
            self.alphabet = default_alphabet(len(self.edges))
        else:
            self.alphabet = Alphabet(edge_names, reserved=("t",))
            if self.alphabet.rank != len(self.edges):
                raise ValueError("edge_names and edges differ in length")
        if not self.is_connected():
            raise ValueError("graph is not connected")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def origin(self, e: int) -> int:
        o, t = self.edges[abs(e) - 1]
        return o if e > 0 else t

    def terminus(self, e: int) -> int:
        o, t = self.edges[abs(e) - 1]
        return t if e > 0 else o

    def oriented_edges(self) -> List[int]:
        n = len(self.edges)
        return [e for i in range(1, n + 1) for e in (i, -i)]

    def is_connected(self) -> bool:
        adj = {v: set() for v in range(len(self.vertices))}
        for o, t in self.edges:
            adj[o].add(t)
            adj[t].add(o)
        seen, todo = {0}, [0]
        while todo:
            v = todo.pop()
            for u in adj[v] - seen:
                seen.add(u)
                todo.append(u)
        return len(seen) == len(self.vertices)

    def check_path(self, path: Sequence[int]):
        """Raise ``ValueError`` unless ``path`` is a composable edge path."""
        for e in path:
            if not 1 <= abs(e) <= len(self.edges):
                raise ValueError(f"unknown edge {e}")
        for a, b in zip(path, path[1:]):
            if self.terminus(a) != self.origin(b):
                raise ValueError(
                    f"edges {self.alphabet.format_letter(a)} and "
                    f"{self.alphabet.format_letter(b)} are not composable")

    def endpoints(self, path: Sequence[int]) -> Optional[Tuple[int, int]]:
        if not path:
            return None
        return self.origin(path[0]), self.terminus(path[-1])


@dataclass(frozen=True)
class GraphMap:
    graph: MarkedGraph
    vertex_image: Tuple[int, ...]
    edge_image: Tuple[Word, ...]
    lipschitz: int = field(init=False)

    def __post_init__(self):
        g = self.graph
        if len(self.vertex_image) != len(g.vertices):
            raise ValueError("vertex_image has the wrong size")
        if len(self.edge_image) != g.n_edges:
            raise ValueError("edge_image has the wrong size")
        for i, img in enumerate(self.edge_image):
            name = g.alphabet.names[i]
            if not img:
                raise ValueError(f"image of edge {name} is a point")
            if Word(img) != tuple(img):
                raise ValueError(f"image of edge {name} is not tight")
            g.check_path(img)
            o, t = g.edges[i]
            if g.endpoints(img) != (self.vertex_image[o], self.vertex_image[t]):
                raise ValueError(f"image of edge {name} has the wrong endpoints")
        object.__setattr__(self, "edge_image", tuple(Word(x) for x in self.edge_image))
        object.__setattr__(self, "lipschitz", max((len(x) for x in self.edge_image), default=0))

    @classmethod
    def from_dict(cls, spec: dict) -> "GraphMap":
        """Build from the graph-map file schema.

        ``{"vertices": ["v", "w"], "edges": {"e": ["v", "w"]},
        "vertex_image": {"v": "w", "w": "v"}, "edge_image": {"e": "e^-1"}}``
        """
        vertices = list(spec["vertices"])
        vindex = {v: i for i, v in enumerate(vertices)}
        names = list(spec["edges"])
        edges = [(vindex[spec["edges"][n][0]], vindex[spec["edges"][n][1]]) for n in names]
        graph = MarkedGraph(vertices, edges, names)
        vimg = tuple(vindex[spec["vertex_image"][v]] for v in vertices)
        eimg = tuple(tuple(graph.alphabet.letters(spec["edge_image"][n])) for n in names)
        return cls(graph, vimg, eimg)

    def to_dict(self) -> dict:
        g = self.graph
        return {
            "vertices": list(g.vertices),
            "edges": {n: [g.vertices[o], g.vertices[t]] for n, (o, t) in zip(g.alphabet.names, g.edges)},
            "vertex_image": {v: g.vertices[self.vertex_image[i]] for i, v in enumerate(g.vertices)},
            "edge_image": {n: g.alphabet.format(img) for n, img in zip(g.alphabet.names, self.edge_image)},
        }

    @property
    def alphabet(self) -> Alphabet:
        return self.graph.alphabet

    def __call__(self, sigma):
        return apply_tight(self, sigma)


class Automorphism:
    """An automorphism of the free group given with its inverse.

    ``images[g]`` and ``inverse_images[g]`` are the words that generator ``g``
    maps to under the automorphism and its inverse.  Both composites are
    checked to be the identity on generators at construction time.
    """

    def __init__(self, images: Sequence[Sequence[int]], inverse_images: Sequence[Sequence[int]],
                 alphabet: Optional[Alphabet] = None):
        rank = len(images)
        if rank < 1:
            raise ValueError("rank must be at least 1")
        if len(inverse_images) != rank:
            raise ValueError("images and inverse_images differ in length")
        self.alphabet = alphabet if alphabet is not None else default_alphabet(rank)
        if self.alphabet.rank != rank:
            raise ValueError("alphabet rank does not match the images")
        self.images = tuple(Word(x) for x in images)
        self.inverse_images = tuple(Word(x) for x in inverse_images)
        for w in self.images + self.inverse_images:
            if any(not 1 <= abs(x) <= rank for x in w):
                raise ValueError("image uses a letter outside the alphabet")
        for g in range(rank):
            x = Word._trusted((g + 1,))
            name = self.alphabet.names[g]
            if substitute(self.inverse_images, self.images[g]) != x:
                raise ValueError(f"inverse_images is not inverse to images at generator {name}")
            if substitute(self.images, self.inverse_images[g]) != x:
                raise ValueError(f"images is not inverse to inverse_images at generator {name}")
        self.lipschitz = max(len(w) for w in self.images)
        self._inverse = None

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def from_dict(cls, spec: dict) -> "Automorphism":
        gens = list(spec["generators"])
        rank = int(spec.get("rank", len(gens)))
        if rank < 1:
            raise ValueError("rank must be at least 1")
        if rank != len(gens):
            raise ValueError(f"rank {rank} does not match {len(gens)} generators")
        alphabet = Alphabet(gens, reserved=("t",))
        for key in ("images", "inverse_images"):
            missing = set(gens) - set(spec[key])
            if missing:
                raise ValueError(f"{key} is missing generator {sorted(missing)[0]}")
        images = [alphabet.parse(spec["images"][g]) for g in gens]
        inverse = [alphabet.parse(spec["inverse_images"][g]) for g in gens]
        return cls(images, inverse, alphabet)

    def to_dict(self) -> dict:
        a = self.alphabet
        return {
            "rank": self.rank,
            "generators": list(a.names),
            "images": {n: a.format(w) for n, w in zip(a.names, self.images)},
            "inverse_images": {n: a.format(w) for n, w in zip(a.names, self.inverse_images)},
        }

    @property
    def inverse(self) -> "Automorphism":
        if self._inverse is None:
            inv = Automorphism.__new__(Automorphism)
            inv.alphabet = self.alphabet
            inv.images, inv.inverse_images = self.inverse_images, self.images
            inv.lipschitz = max(len(w) for w in inv.images)
            inv._inverse = self
            self._inverse = inv
        return self._inverse

    def __call__(self, w: Sequence[int]) -> Word:
        return substitute(self.images, w)

    def power(self, w: Sequence[int], k: int) -> Word:
        """Image of ``w`` under the ``k``-th power; negative ``k`` uses the inverse."""
        images = self.images if k >= 0 else self.inverse_images
        w = Word(w)
        for _ in range(abs(k)):
            w = substitute(images, w)
        return w

    def __repr__(self):
        a = self.alphabet
        body = ", ".join(f"{n}->{a.format(w)}" for n, w in zip(a.names, self.images))
        return f"Automorphism({body})"


def rose_of(phi: Automorphism) -> GraphMap:
    graph = MarkedGraph(["v"], [(0, 0)] * phi.rank, phi.alphabet.names)
    return GraphMap(graph, (0,), phi.images)


def apply_tight(f: GraphMap, sigma: Sequence[int]) -> Word:
    f.graph.check_path(sigma)
    return substitute(f.edge_image, sigma)


def iterate(f: GraphMap, sigma: Sequence[int], k: int) -> List[Word]:
    if k < 0:
        raise ValueError("k must be non-negative")
    f.graph.check_path(sigma)
    out = [Word(sigma)]
    for _ in range(k):
        out.append(substitute(f.edge_image, out[-1]))
    return out


def is_vanishing(f: GraphMap, sigma: Sequence[int], k_max: Optional[int] = None):
    """Return ``(vanishes, first_step)`` for the orbit of ``sigma`` up to ``k_max``."""
    if k_max is None:
        k_max = 2 * f.graph.n_edges + 1
    sigma = Word(sigma)
    f.graph.check_path(sigma)
    if not sigma:
        return True, 0
    for j in range(1, k_max + 1):
        sigma = substitute(f.edge_image, sigma)
        if not sigma:
            return True, j
    return False, None


@dataclass(frozen=True)
class Presentation:
    """Generators and relators of a 2-complex; relators are signed-int words over ``generators``."""

    generators: Tuple[str, ...]
    relators: Tuple[Tuple[int, ...], ...]

    def format_relator(self, r: Sequence[int]) -> str:
        return " ".join(self.generators[abs(x) - 1] + ("" if x > 0 else "^-1") for x in r)

    def __str__(self):
        rels = ", ".join(self.format_relator(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def mapping_torus(f: GraphMap) -> Presentation:
    """Presentation of the mapping torus: one ``t_v`` per vertex, one relator per edge.

    The relator for ``e: v -> v'`` with image ``u`` is ``t_v^-1 e t_v' u^-1``.
    For a one-vertex graph the single stable letter is called ``t``.
    """
    g = f.graph
    n = g.n_edges
    if len(g.vertices) == 1:
        tnames = ["t"]
    else:
        tnames = [f"t_{v}" for v in g.vertices]
    gens = tuple(g.alphabet.names) + tuple(tnames)
    relators = []
    for i, (o, t) in enumerate(g.edges):
        tv = n + 1 + (o if len(tnames) > 1 else 0)
        tw = n + 1 + (t if len(tnames) > 1 else 0)
        rel = (-tv, i + 1, tw) + tuple(invert(f.edge_image[i]))
        relators.append(rel)
    return Presentation(gens, tuple(relators))


def relator_is_loop(f: GraphMap, pres: Presentation, rel: Sequence[int]) -> bool:
    """Check that ``rel`` is a closed path in the 1-skeleton of the mapping torus.

    ``t_v`` runs from ``v`` to ``f(v)``.
    """
    g = f.graph
    n = g.n_edges
    one = len(g.vertices) == 1

    def ends(x):
        if abs(x) <= n:
            return g.origin(x), g.terminus(x)
        v = 0 if one else abs(x) - n - 1
        o, t = v, f.vertex_image[v]
        return (o, t) if x > 0 else (t, o)

    if not rel:
        return True
    path = [ends(x) for x in rel]
    for (_, t), (o, _) in zip(path, path[1:]):
        if t != o:
            return False
    return path[-1][1] == path[0][0]
