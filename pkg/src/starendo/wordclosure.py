"""Word-level union-find oracle for sizing a finitely presented monoid.

Deliberately independent of the class-table enumerator in congruence.py:
this one works on literal words.  Words are discovered breadth-first in
shortlex order, extending each class representative by every letter, and
merged by union-find along relation rewrites: a discovered word containing
one side of a relation merges with the shortlex-smaller word obtained by
substituting the other side.  Registering a word registers all its
prefixes, and a per-class signature map propagates merges to right
extensions: when two classes merge and both have a discovered extension by
the same letter, those extensions merge too.

Descending rewrites alone cannot prove equalities whose derivations detour
through longer words, so before the breadth-first frontier advances to the
next word length the discovered classes are read off as a transition table
(state = shortlex-least word of its class) and checked: the table must be
complete, reachable from the class of the empty word, and must satisfy
every relation traced at every state.  If it does, the state count is
returned; merges only ever join words provably congruent, and a table
passing this certificate has exactly one state per element of the presented
monoid, so the answer is exact.  Each failure of the certificate at a state
s for a relation (u, v) feeds the two concatenations s+u and s+v back in
and merges them, which is the rewrite u -> v applied at the end of s; these
injected merges are what collapses word families the descending rules
cannot reach.  Budget exhaustion returns None, never a guess.
"""

from __future__ import annotations

from heapq import heappop, heappush
from typing import Optional

from .presentations import Presentation


def word_closure_size(
    pres: Presentation,
    *,
    max_words: int = 2_000_000,
    max_rounds: int = 10_000,
) -> Optional[int]:
    """Number of classes of the presented monoid, or None on budget exhaustion."""
    k = len(pres.alphabet)
    if k > 24:
        raise ValueError("alphabet too large for the word-closure oracle")
    letters = [chr(97 + i) for i in range(k)]
    to_char = {x: letters[i] for i, x in enumerate(pres.alphabet)}
    rels = [
        ("".join(to_char[x] for x in u), "".join(to_char[x] for x in v))
        for u, v in pres.relations
    ]
    rels = [(u, v) for u, v in rels if u != v]

    parent: dict[str, str] = {}
    sig: dict[str, dict[str, str]] = {}
    heap: list[tuple[int, str]] = []
    merges = 0

    def find(w: str) -> str:
        r = w
        while parent[r] != r:
            r = parent[r]
        while parent[w] != r:
            parent[w], w = r, parent[w]
        return r

    def union(u: str, v: str) -> None:
        nonlocal merges
        work = [(u, v)]
        while work:
            x, y = work.pop()
            rx, ry = find(x), find(y)
            if rx == ry:
                continue
            # shortlex-least word of the class stays the representative
            if (len(ry), ry) < (len(rx), rx):
                rx, ry = ry, rx
            parent[ry] = rx
            merges += 1
            sy = sig.pop(ry, {})
            sx = sig.setdefault(rx, {})
            for ch, tgt in sy.items():
                if ch in sx:
                    work.append((sx[ch], tgt))
                else:
                    sx[ch] = tgt

    def register(w: str) -> None:
        missing = []
        x = w
        while x not in parent:
            missing.append(x)
            if not x:
                break
            x = x[:-1]
        for word in reversed(missing):
            parent[word] = word
            sig[word] = {}
            heappush(heap, (len(word), word))
            if word:
                prefix_root = find(word[:-1])
                s = sig.setdefault(prefix_root, {})
                ch = word[-1]
                if ch in s:
                    union(word, s[ch])
                else:
                    s[ch] = word

    def trace(state: str, word: str) -> Optional[str]:
        cur = state
        for ch in word:
            nxt = cur + ch
            if nxt not in parent:
                return None
            cur = find(nxt)
        return cur

    def trace_registering(state: str, word: str) -> Optional[str]:
        """Like trace, but registers a missing step so later passes see it."""
        cur = state
        for ch in word:
            nxt = cur + ch
            if nxt not in parent:
                register(nxt)
                return None
            cur = find(nxt)
        return cur

    def certify() -> Optional[int]:
        """Return the exact size if the current table passes the certificate.

        Otherwise check every relation at every trace-able state and merge
        each definite mismatch by injecting the words state+side (the
        rewrite between them is applied at the end of the state word, so the
        injected union is an ordinary one-step rewrite merge).  Returns None
        after injecting; missing table entries are registered for later
        passes rather than treated as mismatches.
        """
        root0 = find("")
        order = {root0: 0}
        states = [root0]
        i = 0
        complete = True
        while i < len(states):
            s = states[i]
            for ch in letters:
                t = s + ch
                if t not in parent:
                    register(t)
                    complete = False
                    continue
                d = find(t)
                if d not in order:
                    order[d] = len(states)
                    states.append(d)
            i += 1
        certified = complete
        for s in states:
            for u, v in rels:
                a = trace_registering(s, u)
                b = trace_registering(s, v)
                if a is None or b is None:
                    certified = False
                    continue
                if a != b:
                    certified = False
                    register(s + u)
                    register(s + v)
                    union(s + u, s + v)
        return len(states) if certified else None

    register("")
    for u, v in rels:
        register(u)
        register(v)
        union(u, v)

    frontier = 0
    rounds = 0
    while True:
        if len(parent) > max_words:
            return None
        if not heap or heap[0][0] > frontier:
            words_before, merges_before = len(parent), merges
            size = certify()
            rounds += 1
            if size is not None:
                return size
            if rounds > max_rounds:
                return None
            if not heap:
                if len(parent) == words_before and merges == merges_before:
                    return None  # drained and stuck: no possible progress
                continue
            frontier = heap[0][0]
            continue
        _, w = heappop(heap)
        key = (len(w), w)
        for u, v in rels:
            for src, dst in ((u, v), (v, u)):
                if not src:
                    continue
                start = w.find(src)
                while start != -1:
                    w2 = w[:start] + dst + w[start + len(src):]
                    if (len(w2), w2) < key:
                        register(w2)
                        union(w, w2)
                    start = w.find(src, start + 1)
        if find(w) == w:
            for ch in letters:
                register(w + ch)
