"""Strings over the Brauer graph quiver and the surgery acting on them.

A string is a word in arrows and formal inverses. Every letter knows the
half-edge it leaves from and the half-edge it arrives at, which turns all
validity questions into local tests on half-edges:

* two letters of the same sign may follow each other only if the first
  arrives where the second leaves (consecutive arrows of one vertex cycle);
* a run of letters of one sign around a vertex ``v`` is at most
  ``e_v * val(v) - 1`` long, so full cycle powers (and the uniserial
  projective strings) are never strings.

Zero strings may carry an orientation half-edge ``sigma``. A formal inverse
appended to ``ε(x)`` leaves from ``sigma`` and an arrow from the other
half-edge of ``x``. Deleting a hook or cohook down to a zero string keeps
the orientation, so the surgery at the far end stays well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import BrauerGraph, HalfEdge
from .quiver import Quiver, build_quiver


class StringError(ValueError):
    pass


class Letter(NamedTuple):
    arrow: str
    inverse: bool = False

    def inv(self) -> "Letter":
        return Letter(self.arrow, not self.inverse)

    def __str__(self) -> str:
        return self.arrow + ("^-1" if self.inverse else "")


@dataclass(frozen=True)
class StringWord:
    letters: tuple[Letter, ...] = ()
    edge: str | None = None       # only for the zero string
    orient: HalfEdge | None = None  # optional orientation of a zero string

    @staticmethod
    def zero(edge: str, orient: HalfEdge | None = None) -> "StringWord":
        return StringWord((), edge, orient)

    @staticmethod
    def of(*letters) -> "StringWord":
        return StringWord(tuple(Letter(*l) if isinstance(l, tuple) else Letter(l) for l in letters))

    @property
    def is_zero(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "StringWord":
        if self.is_zero:
            return StringWord((), self.edge, self.orient.bar() if self.orient else None)
        return StringWord(tuple(l.inv() for l in reversed(self.letters)))

    def unoriented(self) -> "StringWord":
        return StringWord((), self.edge) if self.is_zero else self

    def __str__(self) -> str:
        if self.is_zero:
            return f"ε({self.edge})"
        return ",".join(str(l) for l in self.letters)


def parse_string(text: str) -> StringWord:
    text = text.strip()
    for head in ("ε(", "eps(", "e("):
        if text.startswith(head) and text.endswith(")"):
            return StringWord.zero(text[len(head):-1].strip())
    letters = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise StringError(f"empty letter in {text!r}")
        if tok.endswith("^-1"):
            letters.append(Letter(tok[:-3], True))
        else:
            letters.append(Letter(tok, False))
    return StringWord(tuple(letters))


class MouthString(NamedTuple):
    half_edge: HalfEdge
    word: StringWord


class StringEngine:
    """String combinatorics of the Brauer graph algebra of ``g``."""

    def __init__(self, g: BrauerGraph, quiver: Quiver | None = None):
        self.graph = g
        self.quiver = quiver or build_quiver(g)
        q = self.quiver
        self._cap = {}
        for v in q.cycles:
            self._cap[v] = 0 if q.single_edge else g.multiplicity[v] * g.valency(v) - 1
        self._index = q.index

    # -- letters --------------------------------------------------------

    def s_half(self, l: Letter) -> HalfEdge:
        a = self.quiver.by_id[l.arrow]
        return a.target_half if l.inverse else a.source_half

    def e_half(self, l: Letter) -> HalfEdge:
        a = self.quiver.by_id[l.arrow]
        return a.source_half if l.inverse else a.target_half

    def source(self, w: StringWord) -> str:
        return w.edge if w.is_zero else self.s_half(w.letters[0]).edge

    def target(self, w: StringWord) -> str:
        return w.edge if w.is_zero else self.e_half(w.letters[-1]).edge

    def cap(self, v: str) -> int:
        """Longest run of one sign allowed around vertex v."""
        return self._cap.get(v, 0)

    def _live(self, h: HalfEdge) -> bool:
        """Whether arrows leave from (and arrive at) half-edge h."""
        return self.cap(self.graph.vertex_of(h)) > 0 and h in self.quiver.out_of

    # -- validity -------------------------------------------------------

    def check(self, w: StringWord) -> tuple[bool, str]:
        if w.is_zero:
            if w.edge not in self.graph.edges:
                return False, "unknown-edge"
            return True, "ok"
        q = self.quiver
        for l in w.letters:
            if l.arrow not in q.by_id:
                return False, "unknown-arrow"
        run = 0
        prev = None
        for l in w.letters:
            if prev is None:
                run = 1
            else:
                if self.e_half(prev).edge != self.s_half(l).edge:
                    return False, "not-composable"
                if prev.inverse == l.inverse:
                    if self.e_half(prev) != self.s_half(l):
                        return False, "forbidden-pair"
                    run += 1
                else:
                    if prev.arrow == l.arrow:
                        return False, "backtrack"
                    run = 1
            if run > self.cap(q.by_id[l.arrow].vertex):
                return False, "cycle-power"
            prev = l
        return True, "ok"

    def is_valid_string(self, w: StringWord) -> bool:
        return self.check(w)[0]

    # -- ends -----------------------------------------------------------

    def _end_run(self, w: StringWord) -> int:
        last = w.letters[-1]
        n = 0
        for l in reversed(w.letters):
            if l.inverse != last.inverse:
                break
            n += 1
        return n

    def end_marker(self, w: StringWord, hint: HalfEdge | None = None) -> HalfEdge | None:
        """Half-edge from which a formal inverse appended to w must leave.

        An arrow appended to w leaves from the other half-edge of the same
        edge. For zero strings this is the (hinted) orientation.
        """
        if w.is_zero:
            h = hint or w.orient
            if h is not None and h.edge != w.edge:
                raise StringError(f"hint {h} is not a half-edge of {w.edge}")
            return h
        last = w.letters[-1]
        h = self.e_half(last)
        return h if last.inverse else h.bar()

    def inverse_extension(self, w: StringWord, hint: HalfEdge | None = None) -> Letter | None:
        sigma = self.end_marker(w, hint)
        if sigma is None or not self._live(sigma):
            return None
        l = Letter(self.quiver.into[sigma].id, True)
        if not w.is_zero and w.letters[-1].inverse:
            if self._end_run(w) + 1 > self.cap(self.graph.vertex_of(sigma)):
                return None
        return l

    def direct_extension(self, w: StringWord, hint: HalfEdge | None = None) -> Letter | None:
        sigma = self.end_marker(w, hint)
        if sigma is None:
            return None
        h = sigma.bar()
        if not self._live(h):
            return None
        l = Letter(self.quiver.out_of[h].id, False)
        if not w.is_zero and not w.letters[-1].inverse:
            if self._end_run(w) + 1 > self.cap(self.graph.vertex_of(h)):
                return None
        return l

    def ends_on_peak(self, w: StringWord) -> bool:
        """No formal inverse can be appended.

        Either the last letter is an arrow into an edge whose far end is
        truncated, or w ends with a full-length run of formal inverses.
        """
        g = self.graph
        if w.is_zero:
            if w.orient is None:
                return all(not self._live(HalfEdge(w.edge, s)) for s in (0, 1))
            return not self._live(w.orient)
        last = w.letters[-1]
        far = self.e_half(last).bar()
        if not last.inverse:
            return not self._live(far)
        return self._end_run(w) == self.cap(g.vertex_of(self.e_half(last)))

    def ends_in_deep(self, w: StringWord) -> bool:
        """No arrow can be appended (dual of ends_on_peak)."""
        g = self.graph
        if w.is_zero:
            if w.orient is None:
                return all(not self._live(HalfEdge(w.edge, s)) for s in (0, 1))
            return not self._live(w.orient.bar())
        last = w.letters[-1]
        far = self.e_half(last).bar()
        if last.inverse:
            return not self._live(far)
        return self._end_run(w) == self.cap(g.vertex_of(self.e_half(last)))

    def starts_on_peak(self, w: StringWord) -> bool:
        return self.ends_on_peak(w.inverse())

    def starts_in_deep(self, w: StringWord) -> bool:
        return self.ends_in_deep(w.inverse())

    # -- maximal strings ------------------------------------------------

    def maximal_direct(self, h: HalfEdge) -> StringWord:
        """Longest direct string whose first arrow leaves from h."""
        if not self._live(h):
            raise StringError(f"no arrows leave from {h}: its vertex is truncated")
        q = self.quiver
        n = self.cap(self.graph.vertex_of(h))
        out = []
        cur = h
        for _ in range(n):
            a = q.out_of[cur]
            out.append(Letter(a.id, False))
            cur = a.target_half
        return StringWord(tuple(out))

    def maximal_inverse(self, h: HalfEdge) -> StringWord:
        """Longest inverse string whose first formal inverse leaves from h."""
        if not self._live(h):
            raise StringError(f"no arrows arrive at {h}: its vertex is truncated")
        q = self.quiver
        n = self.cap(self.graph.vertex_of(h))
        out = []
        cur = h
        for _ in range(n):
            a = q.into[cur]
            out.append(Letter(a.id, True))
            cur = a.source_half
        return StringWord(tuple(out))

    def _maybe(self, fn, h: HalfEdge) -> tuple[Letter, ...]:
        return fn(h).letters if self._live(h) else ()

    # -- surgery at the end ---------------------------------------------

    def add_hook_end(self, w: StringWord, hint: HalfEdge | None = None) -> StringWord:
        """w·α⁻¹·(maximal direct string); hint = half-edge α⁻¹ leaves from."""
        if w.is_zero and hint is None and w.orient is None:
            raise StringError("adding a hook to a zero string needs a half-edge hint")
        l = self.inverse_extension(w, hint)
        if l is None:
            raise StringError(f"{w} ends on a peak: no hook can be added")
        tail = self._maybe(self.maximal_direct, self.e_half(l).bar())
        return StringWord(w.letters + (l,) + tail)

    def add_cohook_end(self, w: StringWord, hint: HalfEdge | None = None) -> StringWord:
        """w·β·(maximal inverse string); hint = half-edge the arrow β leaves from."""
        if w.is_zero and hint is None and w.orient is None:
            raise StringError("adding a cohook to a zero string needs a half-edge hint")
        l = self.direct_extension(w, hint.bar() if hint is not None else None)
        if l is None:
            raise StringError(f"{w} ends in a deep: no cohook can be added")
        tail = self._maybe(self.maximal_inverse, self.e_half(l).bar())
        return StringWord(w.letters + (l,) + tail)

    def delete_hook_end(self, w: StringWord) -> StringWord:
        """Strip the trailing arrows and then one formal inverse."""
        if w.is_zero or not self.ends_in_deep(w):
            raise StringError(f"{w} does not end with a hook")
        i = len(w.letters) - 1
        while i >= 0 and not w.letters[i].inverse:
            i -= 1
        if i < 0:
            raise StringError(f"{w} does not end with a hook")
        l = w.letters[i]
        if i == 0:
            return StringWord.zero(self.s_half(l).edge, self.s_half(l))
        return StringWord(w.letters[:i])

    def delete_cohook_end(self, w: StringWord) -> StringWord:
        """Strip the trailing formal inverses and then one arrow."""
        if w.is_zero or not self.ends_on_peak(w):
            raise StringError(f"{w} does not end with a cohook")
        i = len(w.letters) - 1
        while i >= 0 and w.letters[i].inverse:
            i -= 1
        if i < 0:
            raise StringError(f"{w} does not end with a cohook")
        l = w.letters[i]
        if i == 0:
            return StringWord.zero(self.s_half(l).edge, self.s_half(l).bar())
        return StringWord(w.letters[:i])

    # -- surgery at the start (via the inverse word) --------------------

    def add_hook_start(self, w: StringWord, hint: HalfEdge | None = None) -> StringWord:
        return self.add_hook_end(w.inverse(), hint).inverse()

    def add_cohook_start(self, w: StringWord, hint: HalfEdge | None = None) -> StringWord:
        return self.add_cohook_end(w.inverse(), hint).inverse()

    def delete_hook_start(self, w: StringWord) -> StringWord:
        return self.delete_hook_end(w.inverse()).inverse()

    def delete_cohook_start(self, w: StringWord) -> StringWord:
        return self.delete_cohook_end(w.inverse()).inverse()

    # -- the four neighbours --------------------------------------------

    def oriented(self, w: StringWord) -> StringWord:
        """Give an unoriented zero string its default orientation."""
        if w.is_zero and w.orient is None:
            return StringWord.zero(w.edge, HalfEdge(w.edge, 0))
        return w

    def end_plus(self, w: StringWord) -> StringWord | None:
        """w₊: delete a cohook if w ends on a peak, add a hook otherwise."""
        w = self.oriented(w)
        if self.ends_on_peak(w):
            if w.is_zero or all(l.inverse for l in w.letters):
                return None
            return self.delete_cohook_end(w)
        return self.add_hook_end(w)

    def end_minus(self, w: StringWord) -> StringWord | None:
        """w₋: delete a hook if w ends in a deep, add a cohook otherwise."""
        w = self.oriented(w)
        if self.ends_in_deep(w):
            if w.is_zero or not any(l.inverse for l in w.letters):
                return None
            return self.delete_hook_end(w)
        return self.add_cohook_end(w)

    def start_plus(self, w: StringWord) -> StringWord | None:
        r = self.end_plus(self.oriented(w).inverse())
        return None if r is None else r.inverse()

    def start_minus(self, w: StringWord) -> StringWord | None:
        r = self.end_minus(self.oriented(w).inverse())
        return None if r is None else r.inverse()

    def tau(self, w: StringWord) -> StringWord:
        """Auslander-Reiten translate, via the minus surgery at both ends."""
        w = self.oriented(w)
        a = self.start_minus(w)
        if a is not None:
            r = self.end_minus(a)
            if r is not None:
                return r
        b = self.end_minus(w)
        if b is not None:
            r = self.start_minus(b)
            if r is not None:
                return r
        if a is None and b is None:
            # the lone node of K[α]/(α²)
            return w
        raise StringError(f"translate of {w} is not defined")

    def tau_inverse(self, w: StringWord) -> StringWord:
        w = self.oriented(w)
        a = self.start_plus(w)
        if a is not None:
            r = self.end_plus(a)
            if r is not None:
                return r
        b = self.end_plus(w)
        if b is not None:
            r = self.start_plus(b)
            if r is not None:
                return r
        if a is None and b is None:
            return w
        raise StringError(f"inverse translate of {w} is not defined")

    # -- distinguished strings ------------------------------------------

    def zero_string(self, x: str) -> StringWord:
        return StringWord.zero(x)

    def mouth_string(self, h: HalfEdge) -> StringWord:
        if not self._live(h):
            return StringWord.zero(h.edge)
        return self.maximal_direct(h)

    def mouth_strings(self) -> list[MouthString]:
        return [MouthString(h, self.mouth_string(h)) for h in self.graph.half_edges()]

    def radical_string(self, x: str) -> StringWord:
        """String of rad P(x): maximal direct into x^u, then maximal inverse out of x^v."""
        hu, hv = HalfEdge(x, 0), HalfEdge(x, 1)
        head = self._maybe(self.maximal_inverse, hu)
        head = tuple(l.inv() for l in reversed(head))
        tail = self._maybe(self.maximal_inverse, hv)
        if not head and not tail:
            return StringWord.zero(x)
        return StringWord(head + tail)

    def top_quotient_string(self, x: str) -> StringWord:
        """String of P(x)/soc P(x): maximal inverse into x^u, then maximal direct out of x^v."""
        hu, hv = HalfEdge(x, 0), HalfEdge(x, 1)
        head = self._maybe(self.maximal_direct, hu)
        head = tuple(l.inv() for l in reversed(head))
        tail = self._maybe(self.maximal_direct, hv)
        if not head and not tail:
            return StringWord.zero(x)
        return StringWord(head + tail)

    # -- identity -------------------------------------------------------

    def _key(self, w: StringWord):
        return tuple((self._index[l.arrow], l.inverse) for l in w.letters)

    def canonical_form(self, w: StringWord) -> StringWord:
        if w.is_zero:
            return StringWord.zero(w.edge)
        inv = w.inverse()
        return w if self._key(w) <= self._key(inv) else inv

    def same_module(self, a: StringWord, b: StringWord) -> bool:
        return self.canonical_form(a) == self.canonical_form(b)

    # -- presentation ---------------------------------------------------

    def render(self, w: StringWord) -> list[tuple[str, str, str, str]]:
        """The string drawn on the graph: (vertex, from-edge, to-edge, orientation)."""
        out = []
        for l in w.letters:
            a = self.quiver.by_id[l.arrow]
            s, e = self.s_half(l), self.e_half(l)
            out.append((a.vertex, s.edge, e.edge, "clockwise" if l.inverse else "anticlockwise"))
        return out
