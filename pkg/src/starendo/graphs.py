"""Star graphs, the five endomorphism-type predicates, and exhaustive censuses.

The star graph on n vertices has hub 0 joined to every other vertex.  A full
transformation of the vertex set is classified against five conditions,
checked literally over vertex pairs:

* endomorphism: every edge maps to an edge;
* weak endomorphism: every edge whose endpoints stay distinct maps to an edge;
* strong endomorphism: pairs are edges exactly when their images are;
* strong weak endomorphism: the "if and only if" variant of weak;
* automorphism: bijective strong endomorphism.

``enumerate_class`` scans all n^n maps and filters by these predicates, so
the closed-form cardinalities and structural descriptions stay testable
claims instead of build assumptions.
"""

from __future__ import annotations

import enum
import functools
import math
from itertools import product
from typing import Iterable, Sequence

from .errors import BudgetExceededError
from .monoid import TransformationMonoid
from .transform import Transformation, _compose_images

DEFAULT_SCAN_DEGREE = 8


class EndoClass(enum.Enum):
    END = "end"
    WEAK_END = "wend"
    STRONG_END = "send"
    STRONG_WEAK_END = "swend"
    AUT = "aut"


class SimpleGraph:
    """An undirected graph without loops or multiple edges.

    Edges are stored as sorted vertex pairs; endpoints must be in range.
    """

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError(f"invalid vertex count {vertex_count}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            norm.add((u, v) if u < v else (v, u))
        self.vertex_count = vertex_count
        self.edges = frozenset(norm)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph({self.vertex_count}, {sorted(self.edges)})"


def star_graph(n: int) -> SimpleGraph:
    """The star with n vertices: hub 0 joined to each of 1, ..., n-1."""
    if n < 1:
        raise ValueError(f"invalid vertex count {n}")
    return SimpleGraph(n, [(0, i) for i in range(1, n)])


def _adjacency(graph: SimpleGraph) -> list[list[bool]]:
    n = graph.vertex_count
    adj = [[False] * n for _ in range(n)]
    for u, v in graph.edges:
        adj[u][v] = True
        adj[v][u] = True
    return adj


def _is_endo(img: Sequence[int], edges: Sequence[tuple[int, int]], adj) -> bool:
    return all(adj[img[u]][img[v]] for u, v in edges)


def _is_weak_endo(img: Sequence[int], edges: Sequence[tuple[int, int]], adj) -> bool:
    return all(img[u] == img[v] or adj[img[u]][img[v]] for u, v in edges)


def _is_strong_endo(img: Sequence[int], pairs: Sequence[tuple[int, int]], adj) -> bool:
    return all(adj[u][v] == adj[img[u]][img[v]] for u, v in pairs)


def _is_strong_weak_endo(img: Sequence[int], pairs: Sequence[tuple[int, int]], adj) -> bool:
    return all(
        (adj[u][v] and img[u] != img[v]) == adj[img[u]][img[v]] for u, v in pairs
    )


def classify(f: Transformation, graph: SimpleGraph) -> frozenset[EndoClass]:
    """The exact set of endomorphism classes ``f`` belongs to on ``graph``."""
    n = graph.vertex_count
    if f.degree != n:
        raise ValueError(f"degree mismatch: map has degree {f.degree}, graph has {n}")
    adj = _adjacency(graph)
    edges = sorted(graph.edges)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    img = f.images
    out = set()
    if _is_endo(img, edges, adj):
        out.add(EndoClass.END)
    if _is_weak_endo(img, edges, adj):
        out.add(EndoClass.WEAK_END)
    strong = _is_strong_endo(img, pairs, adj)
    if strong:
        out.add(EndoClass.STRONG_END)
    if _is_strong_weak_endo(img, pairs, adj):
        out.add(EndoClass.STRONG_WEAK_END)
    if strong and len(set(img)) == n:
        out.add(EndoClass.AUT)
    return frozenset(out)


@functools.lru_cache(maxsize=None)
def _class_census(n: int) -> dict[EndoClass, tuple[tuple[int, ...], ...]]:
    """Scan all n^n maps once; bucket the image tuples by class, in lex order.

    Weak endomorphism contains all five classes, so maps failing it are
    skipped early; the predicates themselves are the literal definitions.
    """
    graph = star_graph(n)
    adj = _adjacency(graph)
    edges = sorted(graph.edges)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out: dict[EndoClass, list[tuple[int, ...]]] = {c: [] for c in EndoClass}
    for img in product(range(n), repeat=n):
        if not _is_weak_endo(img, edges, adj):
            continue
        out[EndoClass.WEAK_END].append(img)
        if _is_endo(img, edges, adj):
            out[EndoClass.END].append(img)
        strong = _is_strong_endo(img, pairs, adj)
        if strong:
            out[EndoClass.STRONG_END].append(img)
        if _is_strong_weak_endo(img, pairs, adj):
            out[EndoClass.STRONG_WEAK_END].append(img)
        if strong and len(set(img)) == n:
            out[EndoClass.AUT].append(img)
    return {c: tuple(v) for c, v in out.items()}


def _standard_generator_images(n: int) -> dict[str, tuple[int, ...]]:
    """Image tuples of the named generators on degree n (n >= 3)."""
    a0 = (0, 2, 1) + tuple(range(3, n))
    b0 = (0,) + tuple(range(2, n)) + (1,)
    e0 = (0, 1, 1) + tuple(range(3, n))
    c0 = (0, 0) + tuple(range(2, n))
    z = (1,) + (0,) * (n - 1)
    z0 = (0,) * n
    return {"a0": a0, "b0": b0, "e0": e0, "c0": c0, "z": z, "z0": z0}


def standard_generators(n: int, cls: EndoClass) -> list[tuple[str, Transformation]]:
    """The named generating set of minimum size for the given class.

    Supported for the endomorphism, strong weak endomorphism and weak
    endomorphism monoids with n >= 3.  For n = 3 the reduced sets are
    returned (a0 = b0 and e0 = z*z there).
    """
    if n < 3:
        raise ValueError(f"standard generators need n >= 3, got {n}")
    if cls not in (EndoClass.END, EndoClass.STRONG_WEAK_END, EndoClass.WEAK_END):
        raise ValueError(f"no standard generating set for class {cls.name}")
    gens = _standard_generator_images(n)
    if n == 3:
        names = {
            EndoClass.END: ["a0", "z"],
            EndoClass.STRONG_WEAK_END: ["a0", "z", "z0"],
            EndoClass.WEAK_END: ["a0", "c0", "z"],
        }[cls]
    else:
        names = {
            EndoClass.END: ["a0", "b0", "e0", "z"],
            EndoClass.STRONG_WEAK_END: ["a0", "b0", "e0", "z", "z0"],
            EndoClass.WEAK_END: ["a0", "b0", "e0", "c0", "z"],
        }[cls]
    return [(nm, Transformation(gens[nm])) for nm in names]


def _class_generators(n: int, cls: EndoClass) -> list[tuple[str, Transformation]]:
    """A generating set used to attach witness words to a census class."""
    if n == 1:
        return []
    if n == 2:
        swap = Transformation((1, 0))
        if cls in (EndoClass.END, EndoClass.STRONG_END, EndoClass.AUT):
            return [("s", swap)]
        return [("s", swap), ("z0", Transformation((0, 0)))]
    if cls is EndoClass.AUT:
        gens = _standard_generator_images(n)
        named = [("a0", Transformation(gens["a0"]))]
        if n >= 4:
            named.append(("b0", Transformation(gens["b0"])))
        return named
    if cls is EndoClass.STRONG_END:
        return standard_generators(n, EndoClass.END)
    return standard_generators(n, cls)


def enumerate_class(
    n: int, cls: EndoClass, *, max_degree: int = DEFAULT_SCAN_DEGREE
) -> TransformationMonoid:
    """All transformations of degree n in the given class, in lex order.

    Brute force over all n^n maps; refuses degrees above ``max_degree``
    (default 8) to keep default runs bounded.
    """
    if n < 1:
        raise ValueError(f"invalid degree {n}")
    if n > max_degree:
        raise BudgetExceededError(
            f"degree {n} exceeds the scan budget {max_degree}; raise max_degree to override"
        )
    elems = [Transformation(img) for img in _class_census(n)[cls]]
    return TransformationMonoid.from_elements(elems, _class_generators(n, cls))


def cardinality_formula(n: int, cls: EndoClass) -> int:
    """Closed-form size of the class monoid on the star with n vertices.

    Validity ranges: endomorphisms and weak endomorphisms for n >= 1,
    strong weak endomorphisms for n >= 2, automorphisms for n >= 3.  The
    strong endomorphism monoid coincides with the endomorphism monoid and
    shares its formula.
    """
    if n < 1:
        raise ValueError(f"invalid degree {n}")
    if cls in (EndoClass.END, EndoClass.STRONG_END):
        return (n - 1) ** (n - 1) + n - 1
    if cls is EndoClass.STRONG_WEAK_END:
        if n < 2:
            raise ValueError("strong weak endomorphism formula needs n >= 2")
        return (n - 1) ** (n - 1) + 2 * n - 1
    if cls is EndoClass.WEAK_END:
        return n ** (n - 1) + (n - 1) * 2 ** (n - 1)
    if cls is EndoClass.AUT:
        if n < 3:
            raise ValueError("automorphism formula needs n >= 3")
        return math.factorial(n - 1)
    raise ValueError(f"unknown class {cls!r}")


def is_regular_element(f: Transformation, monoid: TransformationMonoid) -> bool:
    """True iff some b in the monoid satisfies f*b*f == f (brute force)."""
    if f not in monoid:
        raise ValueError("element is not in the monoid")
    fi = f.images
    for b in monoid.elements:
        if _compose_images(_compose_images(fi, b.images), fi) == fi:
            return True
    return False


def is_regular_monoid(monoid: TransformationMonoid) -> bool:
    return all(is_regular_element(f, monoid) for f in monoid.elements)
