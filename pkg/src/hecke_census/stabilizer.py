"""Schreier transversals and stabilizer generators of a coloring.

Conventions.  A word w moves the base tile to w·Δ, and that tile's color
is eval(w)(1), so the subgroup fixing color 1 is L = {w : eval(w)(1) = 1}.
Colors label the right cosets Lw via w ↦ eval(w)⁻¹(1), and the breadth-
first transversal below extends representatives on the right, one
generator at a time, which keeps the word set prefix-closed.  The
Schreier generators t·g·rep(t·g)⁻¹ then generate L exactly.

For involution alphabets the coset color of t·g is eval(g)(color of t);
for the one non-involution generator (x in the rotation family) it is
the preimage eval(g)⁻¹(color of t).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .enumeration import Homomorphism
from .orbifold import orientation_preserving
from .permutation import is_transitive
from .words import Word, word_of


@dataclass(frozen=True)
class Transversal:
    """Prefix-closed coset representative words; words[i] is the
    representative of color i+1, words[0] the empty word."""

    words: tuple[Word, ...]

    def word_for(self, color: int) -> Word:
        return self.words[color - 1]

    def __len__(self) -> int:
        return len(self.words)


def _coset_color(hom: Homomorphism, w: Word) -> int:
    return hom.eval(w).inverse()(1)


def schreier_transversal(hom: Homomorphism) -> Transversal:
    """Breadth-first coset representatives from color 1, generators tried
    in declaration order."""
    n = hom.degree
    if not is_transitive(hom.images, n):
        raise ValueError("transversal requires a transitive coloring")
    inverse_images = [img.inverse() for img in hom.images]
    words: dict[int, Word] = {1: Word()}
    queue = [1]
    while queue:
        color = queue.pop(0)
        for sym, inv_img in zip(hom.presentation.generators, inverse_images):
            reached = inv_img(color)
            if reached not in words:
                words[reached] = words[color] * word_of(sym)
                queue.append(reached)
    assert len(words) == n
    return Transversal(tuple(words[i] for i in range(1, n + 1)))


def schreier_generators(hom: Homomorphism, transversal: Transversal | None = None) -> tuple[Word, ...]:
    """Stabilizer generators t·g·rep(t·g)⁻¹, freely reduced, identities
    dropped, and each kept only when its inverse is not already present."""
    if transversal is None:
        transversal = schreier_transversal(hom)
    inverse_images = {
        sym: img.inverse() for sym, img in zip(hom.presentation.generators, hom.images)
    }
    out: list[Word] = []
    seen: set = set()
    for color in range(1, len(transversal) + 1):
        t = transversal.word_for(color)
        for sym in hom.presentation.generators:
            reached = inverse_images[sym](color)
            candidate = t * word_of(sym) * transversal.word_for(reached).inverse()
            if candidate.is_identity() or candidate.letters in seen:
                continue
            assert hom.eval(candidate)(1) == 1
            seen.add(candidate.letters)
            seen.add(candidate.inverse().letters)
            out.append(candidate)
    return tuple(out)


def fundamental_region(hom: Homomorphism) -> tuple[Word, ...]:
    """The transversal words in color order: the tiles t_i·Δ tile a
    fundamental region of the stabilizer."""
    return schreier_transversal(hom).words


@dataclass
class SubgroupRecord:
    """A stabilizer subgroup: coloring, transversal, generators, index,
    and the results of the independent index check."""

    hom: Homomorphism
    transversal: Transversal
    generators: tuple[Word, ...]
    index: int
    orientation: bool | None  # None outside the 2D reflection family
    verified: bool = False

    def as_json_dict(self) -> dict:
        return {
            "index": self.index,
            "transversal": [str(w) for w in self.transversal.words],
            "generators": [str(w) for w in self.generators],
            "orientation_preserving": self.orientation,
            "verified": self.verified,
        }


def subgroup_record(hom: Homomorphism) -> SubgroupRecord:
    transversal = schreier_transversal(hom)
    generators = schreier_generators(hom, transversal)
    family = hom.presentation.family
    if family == "extended_hecke":
        orientation = orientation_preserving(hom)
    elif family in ("hecke", "modular"):
        orientation = True  # the rotation group has no reversing elements
    else:
        orientation = None
    return SubgroupRecord(
        hom=hom,
        transversal=transversal,
        generators=generators,
        index=hom.degree,
        orientation=orientation,
    )
