"""Generator alphabets, freely reduced words, and the group presentations.

Four families are provided:

* ``extended_hecke(p)`` — reflections P, Q, R in the sides of a triangle
  with angles π/2, π/p, 0; relators (RP)^2 and (QR)^p.
* ``hecke(p)`` — the rotation subgroup, generated by x = QR (order p) and
  y = RP (order 2), free product apart from those orders.
* ``modular()`` — ``hecke(3)``.
* ``picard()`` — four involutions g1 = R'P', g2 = S'P', g3 = Q'P'Q'P',
  g4 = Q'R'P'Q' inside the tetrahedral reflection group on P', Q', R', S',
  with relators (g4 g3 g2)^3, (g2 g3)^2, (g2 g1)^3, (g4 g3 g1)^2.

``tetrahedral_coxeter()`` builds the ambient reflection group of the
hyperbolic tetrahedron with dihedral angles π/4, π/4, π/3, π/2, π/2, π/2;
it is used to check words in the primed alphabet, not by the census.

Passing ``p=None`` to a parameterized family keeps p symbolic: validity
of a coloring is then recorded as a divisibility condition on p instead
of a yes/no answer.

Words multiply like the group elements they spell: in ``eval`` the
rightmost letter is applied first, matching permutation composition.
Inverses of the one non-involution generator x are written in uppercase
("X") in text form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .permutation import Permutation

Letter = tuple["GeneratorSymbol", int]


@dataclass(frozen=True)
class GeneratorSymbol:
    id: int
    name: str
    involution: bool = False


@dataclass(frozen=True)
class Word:
    """A word over generator symbols; letters are (symbol, ±1) pairs.

    Involution letters always carry exponent +1.  Construction does not
    reduce; use free_reduce or the * operator, which reduces.
    """

    letters: tuple[Letter, ...] = ()

    def __mul__(self, other: Word) -> Word:
        return free_reduce(Word(self.letters + other.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> Word:
        return Word(tuple((s, 1 if s.involution else -e) for s, e in reversed(self.letters)))

    def __str__(self) -> str:
        return "".join(s.name if e == 1 else s.name.upper() for s, e in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self) or 'e'})"


EMPTY_WORD = Word()


def word_of(*symbols: GeneratorSymbol) -> Word:
    return Word(tuple((s, 1) for s in symbols))


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs, treating involution letters as
    self-inverse.  Idempotent and length-nonincreasing."""
    stack: list[Letter] = []
    for sym, exp in w.letters:
        if sym.involution:
            exp = 1
        if stack and stack[-1][0] == sym:
            top_exp = stack[-1][1]
            if sym.involution or top_exp == -exp:
                stack.pop()
                continue
        stack.append((sym, exp))
    return Word(tuple(stack))


class WordParseError(ValueError):
    pass


def parse_word(text: str, alphabet) -> Word:
    """Parse concatenated generator names, greedy longest match.

    Uppercase forms of lowercase non-involution names denote inverses.
    Raises WordParseError (with position) on anything unmatched.
    """
    tokens: dict[str, Letter] = {}
    for sym in alphabet:
        tokens[sym.name] = (sym, 1)
        if not sym.involution and sym.name.islower():
            tokens[sym.name.upper()] = (sym, -1)
    by_length = sorted(tokens, key=len, reverse=True)
    letters = []
    i = 0
    while i < len(text):
        for tok in by_length:
            if text.startswith(tok, i):
                letters.append(tokens[tok])
                i += len(tok)
                break
        else:
            raise WordParseError(f"cannot parse {text!r} at position {i}")
    return free_reduce(Word(tuple(letters)))


@dataclass(frozen=True)
class Relator:
    """The relation word^order = e.  ``order=None`` leaves the order tied
    to the symbolic parameter p; ``p_relator`` marks relators whose order
    is p, the ones that turn into divisibility conditions."""

    word: Word
    order: int | None
    p_relator: bool = False


@dataclass(frozen=True, eq=False)
class Presentation:
    family: str
    generators: tuple[GeneratorSymbol, ...]
    relators: tuple[Relator, ...]
    p: int | None = None
    parameterized: bool = False
    # expansion of each generator as a word over an ambient reflection
    # alphabet (P,Q,R for the Hecke family; P',Q',R',S' for picard)
    expansions: tuple[tuple[GeneratorSymbol, Word], ...] = ()

    @property
    def symbolic(self) -> bool:
        return self.parameterized and self.p is None

    def generator_by_name(self, name: str) -> GeneratorSymbol:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def expansion_map(self) -> dict[GeneratorSymbol, Word]:
        return dict(self.expansions)

    def expand(self, w: Word) -> Word:
        """Rewrite w over the ambient reflection alphabet, if one exists."""
        ex = self.expansion_map()
        if not ex:
            return w
        out = EMPTY_WORD
        for sym, exp in w.letters:
            piece = ex[sym]
            out = out * (piece if exp == 1 else piece.inverse())
        return out


# canonical generator symbols, shared by every presentation instance
P = GeneratorSymbol(0, "P", involution=True)
Q = GeneratorSymbol(1, "Q", involution=True)
R = GeneratorSymbol(2, "R", involution=True)

X = GeneratorSymbol(0, "x")
Y = GeneratorSymbol(1, "y", involution=True)

G1 = GeneratorSymbol(0, "g1", involution=True)
G2 = GeneratorSymbol(1, "g2", involution=True)
G3 = GeneratorSymbol(2, "g3", involution=True)
G4 = GeneratorSymbol(3, "g4", involution=True)

Pp = GeneratorSymbol(0, "P'", involution=True)
Qp = GeneratorSymbol(1, "Q'", involution=True)
Rp = GeneratorSymbol(2, "R'", involution=True)
Sp = GeneratorSymbol(3, "S'", involution=True)


def _check_p(p):
    if p is not None and p < 3:
        raise ValueError(f"p must be at least 3, got {p}")


def extended_hecke(p: int | None = None) -> Presentation:
    """Reflection presentation of *2p∞.  QP is deliberately unconstrained."""
    _check_p(p)
    return Presentation(
        family="extended_hecke",
        generators=(P, Q, R),
        relators=(
            Relator(word_of(R, P), 2),
            Relator(word_of(Q, R), p, p_relator=True),
        ),
        p=p,
        parameterized=True,
    )


def hecke(p: int | None = None) -> Presentation:
    """Rotation presentation 2p∞ with x = QR, y = RP."""
    _check_p(p)
    return Presentation(
        family="hecke",
        generators=(X, Y),
        relators=(
            Relator(word_of(Y), 2),
            Relator(word_of(X), p, p_relator=True),
        ),
        p=p,
        parameterized=True,
        expansions=((X, word_of(Q, R)), (Y, word_of(R, P))),
    )


def modular() -> Presentation:
    """The modular group, 23∞."""
    pres = hecke(3)
    return Presentation(
        family="modular",
        generators=pres.generators,
        relators=pres.relators,
        p=3,
        parameterized=True,
        expansions=pres.expansions,
    )


def picard() -> Presentation:
    return Presentation(
        family="picard",
        generators=(G1, G2, G3, G4),
        relators=(
            Relator(word_of(G4, G3, G2), 3),
            Relator(word_of(G2, G3), 2),
            Relator(word_of(G2, G1), 3),
            Relator(word_of(G4, G3, G1), 2),
        ),
        expansions=(
            (G1, word_of(Rp, Pp)),
            (G2, word_of(Sp, Pp)),
            (G3, word_of(Qp, Pp, Qp, Pp)),
            (G4, word_of(Qp, Rp, Pp, Qp)),
        ),
    )


# Coxeter exponents of the ambient tetrahedral reflection group: edge
# orders 4, 4, 3 on the P'Q', Q'R', R'S' edges and 2 elsewhere.
_TETRAHEDRAL_EXPONENTS = (
    (Pp, Qp, 4),
    (Pp, Rp, 2),
    (Pp, Sp, 2),
    (Qp, Rp, 4),
    (Qp, Sp, 2),
    (Rp, Sp, 3),
)


def tetrahedral_coxeter() -> Presentation:
    return Presentation(
        family="tetrahedral_coxeter",
        generators=(Pp, Qp, Rp, Sp),
        relators=tuple(Relator(word_of(a, b), m) for a, b, m in _TETRAHEDRAL_EXPONENTS),
    )


def evaluate(w: Word, images: dict[GeneratorSymbol, Permutation], degree: int) -> Permutation:
    """Image of a word under generator images; rightmost letter acts first."""
    result = Permutation.identity(degree)
    for sym, exp in w.letters:
        try:
            img = images[sym]
        except KeyError:
            raise ValueError(f"word uses undeclared generator {sym.name}") from None
        result = result * (img if exp == 1 else img.inverse())
    return result


def picard_identity_check() -> bool:
    """Confirm, by free reduction over the involutions P', Q', R', S',
    that the four extra Picard relators spell the intended elements:

        g2 g1⁻¹     = S'R'         g2 g3⁻¹     = S'Q'P'Q'
        g4 g3 g2⁻¹  = Q'R'Q'S'     g4 g3 g1⁻¹  = Q'R'Q'R'

    Each g_i is an involution in the group, so these identify the relator
    words with the printed rotation products.
    """
    ex = picard().expansion_map()
    targets = [
        ((G2, 1), (G1, -1), word_of(Sp, Rp)),
        ((G2, 1), (G3, -1), word_of(Sp, Qp, Pp, Qp)),
        ((G4, 1), (G3, 1), (G2, -1), word_of(Qp, Rp, Qp, Sp)),
        ((G4, 1), (G3, 1), (G1, -1), word_of(Qp, Rp, Qp, Rp)),
    ]
    for *letters, expected in targets:
        w = EMPTY_WORD
        for sym, exp in letters:
            w = w * (ex[sym] if exp == 1 else ex[sym].inverse())
        if w != free_reduce(expected):
            return False
    return True


_PAIR_REWRITE = {
    ("Q", "R"): ((X, 1),),
    ("R", "Q"): ((X, -1),),
    ("R", "P"): ((Y, 1),),
    ("P", "R"): ((Y, 1),),  # y is an involution
    ("Q", "P"): ((X, 1), (Y, 1)),
    ("P", "Q"): ((Y, 1), (X, -1)),
    ("P", "P"): (),
    ("Q", "Q"): (),
    ("R", "R"): (),
}


def rotation_word(w: Word) -> Word | None:
    """Rewrite an even-length word over P, Q, R as a word over x, y.

    Splitting w into consecutive letter pairs and inserting R·R where
    needed expresses each pair in x = QR and y = RP; only the involution
    relations are used, so the rewrite is valid in every quotient.
    Returns None for odd-length words, which lie outside the rotation
    subgroup.
    """
    w = free_reduce(w)
    if len(w) % 2:
        return None
    letters: list[Letter] = []
    for i in range(0, len(w), 2):
        a, b = w.letters[i][0].name, w.letters[i + 1][0].name
        letters.extend(_PAIR_REWRITE[(a, b)])
    return free_reduce(Word(tuple(letters)))
