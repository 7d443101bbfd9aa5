"""Enumeration of transitive coloring homomorphisms and the census.

A degree-n coloring of a family is an assignment of one permutation of
{1..n} to each generator such that every relator maps to the identity and
the image group is transitive.  The point-1 stabilizer of such a coloring
is an index-n subgroup, and conversely every index-n subgroup arises from
(n-1)! colorings, so counting colorings up to the two natural conjugation
actions counts subgroups and conjugacy classes of subgroups.

With a symbolic parameter p the relators of order p cannot be checked
outright; instead each assignment records the least d such that it is
valid exactly when d divides p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .permutation import (
    MAX_DEGREE,
    Permutation,
    all_permutations,
    involutions_and_identity,
    is_transitive,
)
from .words import Presentation, Word, evaluate
from . import words


class InvalidAssignment(ValueError):
    pass


@dataclass(frozen=True)
class Homomorphism:
    """One coloring: a permutation per generator, in declaration order."""

    presentation: Presentation = field(compare=False, hash=False)
    images: tuple[Permutation, ...] = ()
    # least d with the assignment valid iff d | p; None for families
    # without a parameter
    divisibility: int | None = None

    @property
    def degree(self) -> int:
        return self.images[0].degree

    def image_map(self) -> dict:
        return dict(zip(self.presentation.generators, self.images))

    def image_of(self, name: str) -> Permutation:
        return self.image_map()[self.presentation.generator_by_name(name)]

    def eval(self, w: Word) -> Permutation:
        return evaluate(w, self.image_map(), self.degree)

    def as_json_dict(self) -> dict:
        return {
            "generators": {
                g.name: img.cycle_string()
                for g, img in zip(self.presentation.generators, self.images)
            },
            "divisibility": self.divisibility,
        }


def relator_status(pres: Presentation, images: tuple[Permutation, ...]):
    """Check the finite relators and compute the divisibility record.

    Returns (ok, d): ok is False when a fixed-order relator fails; d is
    the lcm of the orders of the p-relator evaluations (None when the
    family has no parameter).
    """
    image_map = dict(zip(pres.generators, images))
    n = images[0].degree
    d = 1
    for rel in pres.relators:
        got = evaluate(rel.word, image_map, n).order()
        if rel.p_relator:
            d = lcm(d, got)
        elif rel.order % got != 0:
            return False, None
    return True, (d if pres.parameterized else None)


def hom_from_images(pres: Presentation, images) -> Homomorphism:
    """Build a validated Homomorphism, raising InvalidAssignment with the
    reason when the images do not define a transitive coloring."""
    images = tuple(images)
    if len(images) != len(pres.generators):
        raise InvalidAssignment(
            f"expected {len(pres.generators)} images, got {len(images)}"
        )
    n = images[0].degree
    for g, img in zip(pres.generators, images):
        if img.degree != n:
            raise InvalidAssignment("mixed degrees in assignment")
        if g.involution and not (img * img).is_identity():
            raise InvalidAssignment(f"image of {g.name} is not an involution")
    image_map = dict(zip(pres.generators, images))
    for rel in pres.relators:
        got = evaluate(rel.word, image_map, n).order()
        if rel.p_relator:
            if pres.p is not None and pres.p % got != 0:
                raise InvalidAssignment(
                    f"order of {rel.word} image is {got}, not a divisor of p={pres.p}"
                )
        elif rel.order % got != 0:
            raise InvalidAssignment(
                f"order of {rel.word} image is {got}, not a divisor of {rel.order}"
            )
    if not is_transitive(images, n):
        raise InvalidAssignment("image group is not transitive")
    _, d = relator_status(pres, images)
    return Homomorphism(pres, images, d)


def enumerate_homs(pres: Presentation, n: int) -> list[Homomorphism]:
    """All transitive colorings of degree n, in lexicographic order of the
    image tuple.  For a concrete p only assignments valid at that p are
    kept; with symbolic p every assignment is kept with its divisibility.
    """
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be between 1 and {MAX_DEGREE}, got {n}")
    involutions = involutions_and_identity(n)
    everything = all_permutations(n)
    candidates = [involutions if g.involution else everything for g in pres.generators]

    # relators checkable once their last generator (in declaration order)
    # has been assigned; p-relators never prune, they only record d
    position = {g: i for i, g in enumerate(pres.generators)}
    checkable_at: list[list] = [[] for _ in pres.generators]
    for rel in pres.relators:
        if rel.p_relator:
            continue
        last = max(position[sym] for sym, _ in rel.word.letters)
        checkable_at[last].append(rel)

    found: list[Homomorphism] = []
    chosen: list[Permutation] = []

    def assign(k: int):
        if k == len(pres.generators):
            images = tuple(chosen)
            if not is_transitive(images, n):
                return
            ok, d = relator_status(pres, images)
            assert ok
            if pres.p is not None and pres.p % d != 0:
                return
            found.append(Homomorphism(pres, images, d))
            return
        for img in candidates[k]:
            chosen.append(img)
            image_map = dict(zip(pres.generators, chosen))
            if all(
                rel.order % evaluate(rel.word, image_map, n).order() == 0
                for rel in checkable_at[k]
            ):
                assign(k + 1)
            chosen.pop()

    assign(0)
    return found


def _conjugated_key(images: tuple[Permutation, ...], s: Permutation):
    s_inv = s.inverse()
    return tuple((s * img * s_inv).images for img in images)


def canonical_images(images: tuple[Permutation, ...], acting) -> tuple:
    """Lexicographically least simultaneous conjugate of the image tuple
    over the acting permutations."""
    return min(_conjugated_key(images, s) for s in acting)


def point_stabilizer(n: int) -> list[Permutation]:
    return [s for s in all_permutations(n) if s(1) == 1]


@dataclass(frozen=True)
class CensusEntry:
    family: str
    degree: int
    mode: str  # "subgroups" | "classes"
    p: int | None
    # with symbolic p: the count holds whenever this divides p
    condition: int | None
    representatives: tuple[Homomorphism, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)

    def as_json_dict(self) -> dict:
        return {
            "family": self.family,
            "p_condition": f"{self.condition} | p" if self.condition is not None else None,
            "p": self.p,
            "index": self.degree,
            "mode": self.mode,
            "count": self.count,
            "representatives": [h.as_json_dict() for h in self.representatives],
        }


def dedupe(homs, mode: str) -> list[Homomorphism]:
    """Orbit representatives of simultaneous conjugation.

    mode "subgroups": conjugation by permutations fixing point 1; orbits
    are in bijection with distinct point-1 stabilizer subgroups.
    mode "classes": conjugation by all of S_n; orbits are in bijection
    with conjugacy classes of index-n subgroups.
    """
    homs = list(homs)
    if not homs:
        return []
    n = homs[0].degree
    if any(h.degree != n for h in homs):
        raise ValueError("mixed degrees")
    if mode == "subgroups":
        acting = point_stabilizer(n)
    elif mode == "classes":
        acting = all_permutations(n)
    else:
        raise ValueError(f"unknown dedupe mode {mode!r}")
    reps: dict[tuple, Homomorphism] = {}
    for h in homs:
        key = canonical_images(h.images, acting)
        if key not in reps:
            reps[key] = Homomorphism(
                h.presentation, tuple(Permutation(im) for im in key), h.divisibility
            )
    return [reps[k] for k in sorted(reps)]


FAMILIES = ("extended_hecke", "hecke", "modular", "picard")


def presentation_for(family: str, p: int | None = None) -> Presentation:
    if family == "extended_hecke":
        return words.extended_hecke(p)
    if family == "hecke":
        return words.hecke(p)
    if family == "modular":
        if p not in (None, 3):
            raise ValueError("the modular group has no parameter")
        return words.modular()
    if family == "picard":
        if p is not None:
            raise ValueError("the Picard group has no parameter")
        return words.picard()
    raise ValueError(f"unknown family {family!r}")


def census(family: str, n: int, mode: str, p: int | None = None) -> CensusEntry:
    pres = presentation_for(family, p)
    homs = enumerate_homs(pres, n)
    reps = dedupe(homs, mode)
    condition = None
    if pres.symbolic:
        condition = lcm(*(h.divisibility for h in reps)) if reps else 1
    return CensusEntry(
        family=family,
        degree=n,
        mode=mode,
        p=pres.p,
        condition=condition,
        representatives=tuple(reps),
    )
