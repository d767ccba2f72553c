"""Simplicial complexes represented by their facets over a fixed vertex universe.

Vertices are dense indices 0..n-1 and a face is a bit-packed int (bit i =
vertex i).  A Complex stores the maximal faces as a sorted tuple of ints;
facet lists are always antichains.  The void complex has no facets at all,
while the complex {∅} has the single facet 0.  Unused vertices (in no facet)
are legal.  All operations are pure; Complex values are immutable and safe
to share between threads.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from ._bitops import compress_columns, iter_bits, mask, maximal_sets, transpose_rows
from .errors import InputError

FaceLike = Union[int, Iterable[int]]


def as_face(n: int, face: FaceLike) -> int:
    """Normalize a face given as an int bitmask or an iterable of vertex
    indices, checking bounds against the universe size n."""
    if isinstance(face, int):
        if face < 0 or face.bit_length() > n:
            raise InputError(f"face {face:#x} does not fit a universe of {n} vertices")
        return face
    bits = 0
    for v in face:
        if not 0 <= v < n:
            raise InputError(f"vertex index {v} outside universe of size {n}")
        bits |= 1 << v
    return bits


@dataclass(frozen=True)
class Complex:
    """A simplicial complex: universe size plus the antichain of facets."""

    n: int
    facets: tuple

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def facet_members(self):
        """Facets as sorted vertex-index tuples (for display and tests)."""
        return [tuple(iter_bits(f)) for f in self.facets]

    def is_void(self) -> bool:
        return not self.facets

    def __repr__(self):
        return f"Complex(n={self.n}, facets={self.facet_members()})"


def make_complex(n: int, faces: Iterable[FaceLike]) -> Complex:
    """Build a Complex from arbitrary faces: duplicates and dominated faces
    are removed, so the result's facets are the maximal input faces."""
    if n < 0:
        raise InputError("universe size must be non-negative")
    return Complex(n, tuple(maximal_sets([as_face(n, f) for f in faces])))


def restrict(cx: Complex, tau: FaceLike):
    """The deletion Δ⊖τ: faces of Δ disjoint from τ, on the universe of the
    surviving n-|τ| vertices (re-indexed densely, ascending).

    Returns (complex, old_to_new) where old_to_new maps surviving vertex
    indices to their new names.
    """
    t = as_face(cx.n, tau)
    keep = mask(cx.n) & ~t
    facets = maximal_sets([f & keep for f in cx.facets])
    k, packed = compress_columns(keep, facets)
    old_to_new = {p: j for j, p in enumerate(iter_bits(keep))}
    return Complex(k, tuple(packed)), old_to_new


def add_facet_closure(cx: Complex, sigma: FaceLike) -> Complex:
    """Δ ∪ pows(σ): add every subset of σ, keeping the universe."""
    s = as_face(cx.n, sigma)
    for f in cx.facets:
        if s & ~f == 0:
            return cx  # σ already a face
    facets = [f for f in cx.facets if f & ~s] + [s]
    return Complex(cx.n, tuple(sorted(facets)))


def is_cone(cx: Complex) -> Optional[int]:
    """Lowest vertex contained in every facet, or None.  Void and {∅} are
    not cones."""
    if not cx.facets:
        return None
    common = cx.facets[0]
    for f in cx.facets:
        common &= f
        if not common:
            return None
    return (common & -common).bit_length() - 1


def codisjoint(sigma: FaceLike, tau: FaceLike, n: int) -> bool:
    """True iff σ ∪ τ covers the whole universe (complements disjoint)."""
    return (as_face(n, sigma) | as_face(n, tau)) == mask(n)


def nerve(cx: Complex) -> Complex:
    """Nerve of a non-void complex: one vertex per facet, faces = facet sets
    with a common vertex.  ∅ is always a face, so a complex whose only face
    is ∅ has nerve {∅}.  Preserves the reduced Euler characteristic."""
    if not cx.facets:
        raise InputError("nerve of the void complex is undefined")
    rows = transpose_rows(cx.facets)  # vertex -> set of facets containing it
    m = len(cx.facets)
    if not rows:
        return Complex(m, (0,))
    return Complex(m, tuple(maximal_sets(list(rows.values()))))


def join(a: Complex, b: Complex) -> Complex:
    """Join Δ⊕Γ on the concatenated universes (Γ's vertices shifted by Δ.n).
    Reduced Euler characteristics multiply."""
    if not a.facets or not b.facets:
        raise InputError("join requires non-void operands")
    afull = mask(a.n)
    bfull = mask(b.n) << a.n
    cand = [f | bfull for f in a.facets]
    cand += [afull | (t << a.n) for t in b.facets]
    return Complex(a.n + b.n, tuple(maximal_sets(cand)))


def find_independent_pair(cx: Complex):
    """Detect a vertex bipartition (A, B) witnessing Δ = Δ_A ⊕ Δ_B, where each
    facet complement lies entirely inside one side.

    Connected components of the facet complements under shared-vertex overlap
    are merged; with two or more components the split is the component holding
    the lowest complement vertex versus everything else.  Returns bitmasks
    (A, B) or None (single component, a facet equal to V, or < 2 facets).
    Assumes no unused vertices.
    """
    if len(cx.facets) < 2:
        return None
    full = mask(cx.n)
    blobs = []
    for f in cx.facets:
        c = full & ~f
        if not c:
            return None  # facet = V means Δ = pows(V)
        merged = c
        rest = []
        for b in blobs:
            if b & merged:
                merged |= b
            else:
                rest.append(b)
        rest.append(merged)
        blobs = rest
    if len(blobs) < 2:
        return None
    a = min(blobs, key=lambda b: (b & -b).bit_length())
    return a, full & ~a


def independent_parts(cx: Complex, a: int, b: int):
    """Reconstruct (Δ_A, Δ_B) from an independent pair: Δ_A is the closure of
    the facets whose complement lies in A, deleted down to A's universe."""
    full = mask(cx.n)
    fa = [f for f in cx.facets if full & ~f & ~a == 0]
    fb = [f for f in cx.facets if full & ~f & ~b == 0]
    ka, pa = compress_columns(a, sorted(f & a for f in fa))
    kb, pb = compress_columns(b, sorted(f & b for f in fb))
    return Complex(ka, tuple(pa)), Complex(kb, tuple(pb))
