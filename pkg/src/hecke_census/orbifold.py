"""Orbifold signatures, Conway-notation strings, and Euler characteristics.

Everything here is exact.  Quantities that depend on the symbolic
parameter p live in the ring of expressions a + b/p with rational a, b
(the Chi type); cone orders that scale with p are carried as p/ℓ tokens
and only folded to integers once p is concrete.

For an orientation-preserving stabilizer given by a rotation-group
coloring (x = QR, y = RP acting on n colors) the quotient signature is
read off the cycle structure:

* each ℓ-cycle of the x image contributes a cone of order p/ℓ
  (order-1 cones, ℓ = p, vanish),
* each fixed point of the y image contributes a cone of order 2,
* each cycle of the xy image contributes one cusp,
* the genus is forced by the Euler characteristic χ = n·(1/p − 1/2).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import Homomorphism, hom_from_images
from .permutation import Permutation
from .words import hecke, word_of


@dataclass(frozen=True)
class Chi:
    """An exact expression const + over_p/p."""

    const: Fraction
    over_p: Fraction

    def __add__(self, other: Chi) -> Chi:
        return Chi(self.const + other.const, self.over_p + other.over_p)

    def __sub__(self, other: Chi) -> Chi:
        return Chi(self.const - other.const, self.over_p - other.over_p)

    def scale(self, k) -> Chi:
        return Chi(self.const * k, self.over_p * k)

    def evaluate(self, p: int) -> Fraction:
        return self.const + self.over_p / p

    def as_json_dict(self) -> dict:
        return {"const": str(self.const), "over_p": str(self.over_p)}


CHI_ZERO = Chi(Fraction(0), Fraction(0))

# quotient Euler characteristics of the two parent groups
CHI_EXTENDED = Chi(Fraction(-1, 4), Fraction(1, 2))   # mirrored triangle *2p∞
CHI_HECKE = Chi(Fraction(-1, 2), Fraction(1))         # rotation group 2p∞


def parent_chi(family: str) -> Chi:
    if family == "extended_hecke":
        return CHI_EXTENDED
    if family in ("hecke", "modular"):
        return CHI_HECKE
    raise ValueError(f"no 2D parent characteristic for family {family!r}")


@dataclass(frozen=True, order=True)
class POver:
    """The symbolic cone or corner order p/ell."""

    ell: int

    def __str__(self) -> str:
        return "p" if self.ell == 1 else f"(p/{self.ell})"


INF = math.inf

Token = object  # int, POver, or INF


def _feature_cost(tok, corner: bool) -> Chi:
    """Euler-characteristic cost of one cone (or corner, at half weight)."""
    if tok is INF:
        c = Chi(Fraction(1), Fraction(0))
    elif isinstance(tok, POver):
        c = Chi(Fraction(1), Fraction(-tok.ell))
    else:
        c = Chi(Fraction(1) - Fraction(1, tok), Fraction(0))
    return c.scale(Fraction(1, 2)) if corner else c


class ConwayParseError(ValueError):
    pass


@dataclass(frozen=True)
class ConwaySymbol:
    handles: int
    cones: tuple
    mirrors: tuple  # one tuple of corner tokens per '*'
    crosscaps: int

    def all_tokens(self):
        return self.cones + tuple(t for m in self.mirrors for t in m)


_PAREN = re.compile(r"\((?:(?P<num>\d+)|p(?:/(?P<den>\d+))?)\)")


def conway_parse(s: str, p: int | None = None) -> ConwaySymbol:
    """Parse an orbifold string: ['o']* cones* ('*' corners*)* ['x']*.

    Cones and corners are single digits, '∞', bare 'p', or parenthesized
    '(p/k)' / '(n)' tokens; with concrete p the p-tokens fold to integers.
    """
    if not s:
        raise ConwayParseError("empty orbifold string")

    def fold(tok):
        if p is None or not isinstance(tok, POver):
            return tok
        if p % tok.ell:
            raise ConwayParseError(f"p/{tok.ell} is not an integer for p={p}")
        return p // tok.ell

    handles = 0
    i = 0
    while i < len(s) and s[i] == "o":
        handles += 1
        i += 1
    cones: list = []
    mirrors: list[list] = []
    current = cones
    crosscaps = 0
    while i < len(s):
        ch = s[i]
        if ch == "x":
            if set(s[i:]) != {"x"}:
                raise ConwayParseError(f"cross-caps must be trailing, position {i} in {s!r}")
            crosscaps = len(s) - i
            break
        if ch == "*":
            mirrors.append([])
            current = mirrors[-1]
            i += 1
        elif ch == "∞":
            current.append(INF)
            i += 1
        elif ch.isdigit():
            if ch == "0":
                raise ConwayParseError(f"cone of order 0 at position {i} in {s!r}")
            current.append(int(ch))
            i += 1
        elif ch == "p":
            current.append(fold(POver(1)))
            i += 1
        elif ch == "(":
            m = _PAREN.match(s, i)
            if not m:
                raise ConwayParseError(f"bad parenthesized token at position {i} in {s!r}")
            if m.group("num") is not None:
                current.append(int(m.group("num")))
            else:
                current.append(fold(POver(int(m.group("den") or 1))))
            i = m.end()
        else:
            raise ConwayParseError(f"unexpected character {ch!r} at position {i} in {s!r}")
    if any(tok == 1 for tok in cones) or any(tok == 1 for mir in mirrors for tok in mir):
        raise ConwayParseError(f"cone of order 1 in {s!r}")
    return ConwaySymbol(handles, tuple(cones), tuple(tuple(m) for m in mirrors), crosscaps)


def conway_chi(sym: ConwaySymbol) -> Chi:
    """Orbifold Euler characteristic of a parsed symbol, as a + b/p."""
    total = Chi(Fraction(2 * sym.handles + sym.crosscaps + len(sym.mirrors)), Fraction(0))
    for tok in sym.cones:
        total = total + _feature_cost(tok, corner=False)
    for mirror in sym.mirrors:
        for tok in mirror:
            total = total + _feature_cost(tok, corner=True)
    return Chi(Fraction(2), Fraction(0)) - total


def chi_consistency(orbifold_string: str, n: int, family: str) -> bool:
    """Does the string's χ equal n times the parent group's χ?"""
    sym = conway_parse(orbifold_string)
    return conway_chi(sym) == parent_chi(family).scale(n)


class InvalidHomSignature(ValueError):
    """The branch data does not close up to an orbifold; the coloring it
    came from cannot be a valid rotation-group coloring."""


@dataclass(frozen=True)
class Signature:
    """Orientation-preserving quotient data: genus, cones, cusps.

    Cones are kept symbolic (POver for p/ℓ orders, ints otherwise) and
    ordered canonically: p-cones by rising ℓ, then integer cones falling.
    """

    genus: int
    cones: tuple
    cusps: int

    def chi(self) -> Chi:
        total = Chi(Fraction(2 - 2 * self.genus - self.cusps), Fraction(0))
        for tok in self.cones:
            total = total - _feature_cost(tok, corner=False)
        return total

    def folded_cones(self, p: int) -> list[tuple[int, bool]]:
        """Concrete (order, came_from_p_cone) pairs, order-1 cones dropped."""
        out = []
        for tok in self.cones:
            if isinstance(tok, POver):
                if p % tok.ell:
                    raise ValueError(f"cone p/{tok.ell} is not an integer at p={p}")
                if p // tok.ell > 1:
                    out.append((p // tok.ell, True))
            else:
                out.append((tok, False))
        out.sort(key=lambda t: (-t[0], not t[1]))
        return out

    def render(self, p: int | None = None) -> str:
        """Canonical string: 'o' per genus, cones descending, '∞' per cusp.
        Cones folded from p-orders are parenthesized when p is concrete."""
        parts = ["o" * self.genus]
        if p is None:
            parts.extend(str(tok) for tok in self.cones)
        else:
            for order, from_p in self.folded_cones(p):
                parts.append(f"({order})" if from_p or order > 9 else str(order))
        parts.append("∞" * self.cusps)
        return "".join(parts)

    def as_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "cones": [str(tok) for tok in self.cones],
            "cusps": self.cusps,
            "conway": self.render(),
            "chi": self.chi().as_json_dict(),
        }


def _sorted_cones(p_cones, int_cones) -> tuple:
    return tuple(sorted(p_cones)) + tuple(sorted(int_cones, reverse=True))


def signature_from_hom(hom: Homomorphism) -> Signature:
    """Quotient signature of the color-1 stabilizer of a rotation-group
    coloring; raises InvalidHomSignature if the genus does not come out a
    nonnegative integer (which would mean the coloring is not valid)."""
    if hom.presentation.family not in ("hecke", "modular"):
        raise ValueError("signatures are computed for rotation-group colorings")
    n = hom.degree
    x_img = hom.image_of("x")
    y_img = hom.image_of("y")
    p_cones = [POver(len(c)) for c in x_img.cycles()]
    int_cones = [2 for c in y_img.cycles() if len(c) == 1]
    cusps = len((x_img * y_img).cycles())
    cones = _sorted_cones(p_cones, int_cones)
    # solve 2 - 2g - Σ(1 - 1/m) - cusps = n(1/p - 1/2) for g
    target = CHI_HECKE.scale(n)
    probe = Signature(0, cones, cusps)
    gap = probe.chi() - target
    if gap.over_p != 0 or gap.const % 2 != 0 or gap.const < 0:
        raise InvalidHomSignature(
            f"branch data {probe.render()} cannot close: residual {gap}"
        )
    return Signature(int(gap.const) // 2, cones, cusps)


def orientation_preserving(hom: Homomorphism) -> bool:
    """Does the color-1 stabilizer of a reflection-group coloring avoid
    reflections and glides?  Checked on the double cover (color, sign):
    true iff no odd-length word fixes color 1."""
    if hom.presentation.family != "extended_hecke":
        raise ValueError("orientation test applies to reflection-group colorings")
    n = hom.degree
    start = (1, 0)
    seen = {start}
    frontier = [start]
    while frontier:
        color, sign = frontier.pop()
        for img in hom.images:
            nxt = (img(color), 1 - sign)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return (1, 1) not in seen


def k_restriction(hom: Homomorphism) -> Homomorphism:
    """Restrict an orientation-preserving reflection-group coloring to the
    rotation subgroup: the action of x = QR and y = RP on the orbit of
    color 1, relabeled 1..n/2.  The stabilizer subgroup is unchanged."""
    if not orientation_preserving(hom):
        raise ValueError("stabilizer contains orientation-reversing elements")
    n = hom.degree
    pres = hom.presentation
    x_full = hom.eval(word_of(pres.generator_by_name("Q"), pres.generator_by_name("R")))
    y_full = hom.eval(word_of(pres.generator_by_name("R"), pres.generator_by_name("P")))
    orbit = {1}
    frontier = [1]
    while frontier:
        c = frontier.pop()
        for img in (x_full, y_full, x_full.inverse()):
            if img(c) not in orbit:
                orbit.add(img(c))
                frontier.append(img(c))
    assert len(orbit) * 2 == n, "orientation-preserving stabilizer must halve the orbit"
    relabel = {c: i for i, c in enumerate(sorted(orbit), start=1)}
    m = len(orbit)

    def restrict(img: Permutation) -> Permutation:
        images = [0] * m
        for c in orbit:
            images[relabel[c] - 1] = relabel[img(c)]
        return Permutation(tuple(images))

    sub = hecke(pres.p)
    return hom_from_images(sub, (restrict(x_full), restrict(y_full)))
