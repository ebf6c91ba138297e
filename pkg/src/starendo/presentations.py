"""Monoid presentations as data, plus builders for the standard families.

A presentation is an ordered alphabet plus a list of relations, each a pair
of words over the alphabet; the empty word denotes the identity.  Chained
equalities u = v = w are stored as adjacent pairs (u, v), (v, w), except
that chains ending in the identity distribute: u = v = 1 stores (u, 1) and
(v, 1), which is how those relation families are conventionally quoted.

Builders cover the symmetric group and full/partial transformation monoid
presentations (the classical Moore / Aizenstat / Popova families) and, on
top of them, the endomorphism-type monoids of star graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

Word = tuple[str, ...]
Relation = tuple[Word, Word]


@dataclass(frozen=True)
class Presentation:
    """Alphabet plus relation pairs; words are tuples of letter names."""

    alphabet: tuple[str, ...]
    relations: tuple[Relation, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "relations", tuple((tuple(u), tuple(v)) for u, v in self.relations)
        )
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet has repeated letters")
        letters = set(self.alphabet)
        seen = set()
        for u, v in self.relations:
            for word in (u, v):
                for x in word:
                    if x not in letters:
                        raise ValueError(f"letter {x!r} not in alphabet {self.alphabet}")
            if (u, v) in seen:
                raise ValueError(f"duplicate relation {u} = {v}")
            seen.add((u, v))

    def relabel(self, mapping: Mapping[str, str]) -> "Presentation":
        """Rename letters; unmapped letters keep their names."""
        new_alphabet = tuple(mapping.get(x, x) for x in self.alphabet)
        new_relations = tuple(
            (tuple(mapping.get(x, x) for x in u), tuple(mapping.get(x, x) for x in v))
            for u, v in self.relations
        )
        return Presentation(new_alphabet, new_relations)

    def __repr__(self) -> str:
        return f"<Presentation |X|={len(self.alphabet)} |R|={len(self.relations)}>"


def _chain(*words: Word) -> list[Relation]:
    """Adjacent-pairs expansion of a chained equality."""
    return [(words[i], words[i + 1]) for i in range(len(words) - 1)]


def _moore_relations(a: Word, b: Word, n: int) -> list[Relation]:
    """Relations presenting the symmetric group on n points over (a, b)."""
    rels: list[Relation] = [
        (a * 2, ()),
        (b * n, ()),
        ((b + a) * (n - 1), ()),
        ((a + b * (n - 1) + a + b) * 3, ()),
    ]
    for j in range(2, n - 1):
        rels.append(((a + b * (n - j) + a + b * j) * 2, ()))
    return rels


def sym_presentation(n: int) -> Presentation:
    """Presentation of the symmetric group on n points, letters a, b (n >= 3)."""
    if n < 3:
        raise ValueError(f"symmetric group presentation needs n >= 3, got {n}")
    return Presentation(("a", "b"), _moore_relations(("a",), ("b",), n))


def full_transf_presentation(n: int) -> Presentation:
    """Presentation of the full transformation monoid on n points, letters a, b, e."""
    if n < 3:
        raise ValueError(f"full transformation presentation needs n >= 3, got {n}")
    a, b, e = ("a",), ("b",), ("e",)
    rels = _moore_relations(a, b, n)
    if n == 3:
        rels += _chain(
            a + e,
            b + a + b * 2 + a + b + e + b * 2 + a + b + a + b * 2,
            (e + b + a + b * 2) * 2,
            e,
        )
        rels += _chain((b * 2 + a + b + e) * 2, e + b * 2 + a + b + e, (e + b * 2 + a + b) * 2)
    else:
        rels += _chain(
            a + e,
            b * (n - 2) + a + b * 2 + e + b * (n - 2) + a + b * 2,
            b + a + b * (n - 1) + a + b + e + b * (n - 1) + a + b + a + b * (n - 1),
            (e + b + a + b * (n - 1)) * 2,
            e,
        )
        rels += _chain(
            (b * (n - 1) + a + b + e) * 2,
            e + b * (n - 1) + a + b + e,
            (e + b * (n - 1) + a + b) * 2,
        )
        rels.append(((e + b + a + b * (n - 2) + a + b) * 2, (b + a + b * (n - 2) + a + b + e) * 2))
    return Presentation(("a", "b", "e"), rels)


def partial_transf_presentation(n: int) -> Presentation:
    """Presentation of the partial transformation monoid on n points, letters a, b, c, e."""
    if n < 3:
        raise ValueError(f"partial transformation presentation needs n >= 3, got {n}")
    a, b, c, e = ("a",), ("b",), ("c",), ("e",)
    rels = _moore_relations(a, b, n)
    rels += _chain(
        b * (n - 1) + a + b + c + b * (n - 1) + a + b,
        b + a + c + a + b * (n - 1),
        c,
        c * 2,
    )
    rels += _chain((c + a) * 2, c + a + c, (a + c) * 2)
    if n == 3:
        rels += _chain(
            a + e,
            b + a + b * 2 + a + b + e + b * 2 + a + b + a + b * 2,
            (e + b + a + b * 2) * 2,
            e,
        )
        rels += _chain((b * 2 + a + b + e) * 2, e + b * 2 + a + b + e, (e + b * 2 + a + b) * 2)
    else:
        rels += _chain(
            a + e,
            b * (n - 2) + a + b * 2 + e + b * (n - 2) + a + b * 2,
            b + a + b * (n - 1) + a + b + e + b * (n - 1) + a + b + a + b * (n - 1),
            (e + b + a + b * (n - 1)) * 2,
            e,
        )
        rels += _chain(
            (b * (n - 1) + a + b + e) * 2,
            e + b * (n - 1) + a + b + e,
            (e + b * (n - 1) + a + b) * 2,
        )
        rels.append(((e + b + a + b * (n - 2) + a + b) * 2, (b + a + b * (n - 2) + a + b + e) * 2))
    w = a + b * (n - 1) + a + b + a
    rels += [
        (e + c, c + a + c),
        (c + e, c + a),
        (e + a + c, e + a),
        (e + w + c, w + c + w + e + w),
    ]
    return Presentation(("a", "b", "c", "e"), rels)


def end_star_presentation(n: int) -> Presentation:
    """Presentation of the endomorphism monoid of the star with n vertices.

    For n >= 4 this is the full transformation presentation on n-1 points,
    relabeled to (a0, b0, e0), extended by the hub-collapse relations for z.
    """
    if n < 3:
        raise ValueError(f"star presentations need n >= 3, got {n}")
    a0, z = ("a0",), ("z",)
    if n == 3:
        return Presentation(("a0", "z"), [(a0 * 2, ()), (a0 + z, z), (z * 3, z)])
    base = full_transf_presentation(n - 1).relabel({"a": "a0", "b": "b0", "e": "e0"})
    b0, e0 = ("b0",), ("e0",)
    rels = list(base.relations)
    rels += _chain(a0 + z, b0 + z, e0 + z, z)
    rels.append((z * 2, (e0 + b0) * (n - 3) + e0))
    return Presentation(("a0", "b0", "e0", "z"), rels)


def swend_star_presentation(n: int) -> Presentation:
    """Presentation of the strong weak endomorphism monoid of the star with n vertices."""
    if n < 3:
        raise ValueError(f"star presentations need n >= 3, got {n}")
    a0, z, z0 = ("a0",), ("z",), ("z0",)
    if n == 3:
        rels = [(a0 * 2, ()), (a0 + z, z), (z * 3, z)]
        rels += _chain(a0 + z0, z + z0, z0 * 2, z0 + a0, z0 + z * 2, z0)
        return Presentation(("a0", "z", "z0"), rels)
    base = end_star_presentation(n)
    b0, e0 = ("b0",), ("e0",)
    rels = list(base.relations)
    rels += _chain(
        a0 + z0, b0 + z0, e0 + z0, z + z0, z0 * 2, z0 + a0, z0 + b0, z0 + e0, z0
    )
    return Presentation(("a0", "b0", "e0", "z", "z0"), rels)


def wend_star_presentation(n: int) -> Presentation:
    """Presentation of the weak endomorphism monoid of the star with n vertices.

    For n >= 4 this is the partial transformation presentation on n-1
    points, relabeled to (a0, b0, c0, e0), extended by the z relations.
    """
    if n < 3:
        raise ValueError(f"star presentations need n >= 3, got {n}")
    a0, c0, z = ("a0",), ("c0",), ("z",)
    if n == 3:
        rels = [(a0 * 2, ()), (a0 + z, z), (z * 3, z), (c0 * 2, c0)]
        rels += _chain((c0 + a0) * 2, (a0 + c0) * 2, c0 + a0 + c0)
        rels += [
            (z * 2 + c0, c0 + a0 + c0),
            (c0 + z * 2, c0 + a0),
            (z * 2 + a0 + c0, z * 2 + a0),
            (z * 2 + c0, z + c0),
        ]
        return Presentation(("a0", "c0", "z"), rels)
    base = partial_transf_presentation(n - 1).relabel(
        {"a": "a0", "b": "b0", "c": "c0", "e": "e0"}
    )
    b0, e0 = ("b0",), ("e0",)
    rels = list(base.relations)
    rels += _chain(a0 + z, b0 + z, e0 + z, z)
    rels.append((z * 2, (e0 + b0) * (n - 3) + e0))
    rels.append((z * 2 + c0, z + c0))
    return Presentation(("a0", "b0", "e0", "c0", "z"), rels)


def presentation_to_json(pres: Presentation) -> str:
    """Serialize to the structured text format (round-trip is bit-exact)."""
    doc = {
        "alphabet": list(pres.alphabet),
        "relations": [[list(u), list(v)] for u, v in pres.relations],
    }
    return json.dumps(doc, indent=2) + "\n"


def presentation_from_json(text: str) -> Presentation:
    """Parse the structured text format produced by :func:`presentation_to_json`."""
    doc = json.loads(text)
    alphabet = tuple(doc["alphabet"])
    relations = tuple((tuple(u), tuple(v)) for u, v in doc["relations"])
    return Presentation(alphabet, relations)
