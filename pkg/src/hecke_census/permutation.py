"""Exact permutations on the color set {1..n}.

Permutations are the carrier of every coloring homomorphism.  Points are
1-based to match color labels c_1..c_n, and composition follows the
function convention (a * b)(x) = a(b(x)): the right factor acts first.
This is the unique convention under which the product columns of the
bundled reference tables come out right.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

MAX_DEGREE = 12


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"degree must be between 1 and {MAX_DEGREE}, got {n}")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> Permutation:
        images = list(range(1, n + 1))
        for cycle in cycles:
            for i, point in enumerate(cycle):
                if not 1 <= point <= n:
                    raise ValueError(f"point {point} out of range 1..{n}")
                images[point - 1] = cycle[(i + 1) % len(cycle)]
        perm = cls(tuple(images))
        if sum(len(c) for c in cycles) != len({p for c in cycles for p in c}):
            raise ValueError(f"cycles overlap: {cycles}")
        return perm

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition a * b with b applied first: (a*b)(x) = a(b(x))."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(self.images[i - 1] for i in other.images))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self) -> list[list[int]]:
        """All cycles, singletons included; each starts at its smallest point,
        cycles ordered by smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            out.append(cycle)
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def cycle_string(self) -> str:
        """Cycle-notation text form, e.g. "(12)(34)"; the identity is "(1)".

        Only defined for degree at most 9: points are printed as single
        digits so the form stays whitespace-free and unambiguous.
        """
        if self.degree > 9:
            raise ValueError("cycle notation is limited to degree 9")
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "(1)"
        return "".join("(" + "".join(str(p) for p in c) + ")" for c in nontrivial)

    def __str__(self) -> str:
        return self.cycle_string()


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse whitespace-free cycle notation like "(12)(34)" on n points.

    "(1)" and "()" both denote the identity.
    """
    if n > 9:
        raise ValueError("cycle notation is limited to degree 9")
    cycles = []
    i = 0
    if not text:
        raise ValueError("empty cycle string")
    while i < len(text):
        if text[i] != "(":
            raise ValueError(f"expected '(' at position {i} in {text!r}")
        j = text.index(")", i + 1) if ")" in text[i + 1:] else -1
        if j < 0:
            raise ValueError(f"unclosed cycle at position {i} in {text!r}")
        body = text[i + 1:j]
        if not all(ch.isdigit() and ch != "0" for ch in body):
            raise ValueError(f"bad cycle body {body!r} in {text!r}")
        points = [int(ch) for ch in body]
        if len(points) > 1:
            cycles.append(points)
        i = j + 1
    return Permutation.from_cycles(cycles, n)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a ∘ b)(x) = a(b(x)); the right factor acts first."""
    return a * b


def conjugate(a: Permutation, s: Permutation) -> Permutation:
    """s ∘ a ∘ s⁻¹, the relabeling of a by s."""
    if a.degree != s.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {s.degree}")
    return s * a * s.inverse()


def orbit(gens, start: int, n: int) -> set[int]:
    """Orbit of a point under the group generated by gens (closure by BFS)."""
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for g in gens:
            for y in (g(x), g.inverse()(x)):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return seen


def is_transitive(gens, n: int) -> bool:
    """True iff the group generated by gens has a single orbit on {1..n}."""
    for g in gens:
        if g.degree != n:
            raise ValueError(f"degree mismatch: {g.degree} vs {n}")
    if n == 1:
        return True
    if not gens:
        return False
    return len(orbit(gens, 1, n)) == n


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order of image tuples."""
    from itertools import permutations as iter_perms

    return [Permutation(images) for images in iter_perms(range(1, n + 1))]


def involutions_and_identity(n: int) -> list[Permutation]:
    """Elements of order dividing 2, in lexicographic order of image tuples."""
    return [g for g in all_permutations(n) if (g * g).is_identity()]
