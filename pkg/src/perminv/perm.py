"""Permutations of {1..n}, cycle structure, and naive group closure.

Labels are 1-based at every interface (cycle notation, ``str``, JSON) and
0-based inside ``Permutation.image``.
"""
from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

DEFAULT_CLOSURE_CAP = 20160  # |S_8| / 2


class PermutationError(ValueError):
    """Malformed cycle notation or an image that is not a bijection."""


class MixedDegrees(ValueError):
    pass


class ClosureCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of n points; ``image[i]`` is the 0-based image of point i.

    Ordering is lexicographic by image sequence, which fixes the element
    order of every generated group.
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        if sorted(image) != list(range(len(image))):
            raise PermutationError(f"not a bijection of {len(image)} points: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from a 1-based image list, e.g. ``[2, 3, 4, 1]``."""
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        image = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            for label in cycle:
                if not 1 <= label <= n:
                    raise PermutationError(f"label {label} out of range 1..{n}")
                if label in seen:
                    raise PermutationError(f"repeated label {label}")
                seen.add(label)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                image[a - 1] = b - 1
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: Permutation) -> Permutation:
        # (p * q)(i) = p(q(i))
        if self.n != other.n:
            raise MixedDegrees(f"degrees {self.n} and {other.n}")
        return Permutation(tuple(self.image[j] for j in other.image))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        """Disjoint cycles as 1-based tuples, each starting at its smallest label."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.image[i]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycles = self.cycles(include_fixed=False)
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def images_1based(self) -> list[int]:
        return [i + 1 for i in self.image]


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3 4)"`` or ``"(1 3)(2 4)"``.

    Unmentioned points are fixed; the empty string is the identity.
    """
    if n < 1:
        raise PermutationError(f"degree must be positive, got {n}")
    cycles = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(text, pos)
        if m is None:
            raise PermutationError(f"malformed cycle notation at offset {pos}: {text!r}")
        body = m.group(1).replace(",", " ").split()
        if not body:
            raise PermutationError(f"empty cycle at offset {pos}: {text!r}")
        try:
            cycles.append([int(tok) for tok in body])
        except ValueError:
            raise PermutationError(f"non-integer label in {m.group(0)!r}") from None
        pos = m.end()
    return Permutation.from_cycles(cycles, n)


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths (fixed points as 1s), sorted descending."""
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def sign(p: Permutation) -> int:
    return -1 if (p.n - len(p.cycles())) % 2 else 1


def rank_id_minus(p: Permutation) -> int:
    """Rank of Id - P over a field of characteristic 0: n minus the number of cycles."""
    return p.n - len(p.cycles())


def is_pseudoreflection(p: Permutation) -> bool:
    return cycle_type(p) == (2,) + (1,) * (p.n - 2) if p.n >= 2 else False


@dataclass(frozen=True)
class PermGroup:
    n: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in set(self.elements)

    def cycle_type_census(self) -> Counter:
        return Counter(cycle_type(g) for g in self.elements)


def generate_group(
    gens: Iterable[Permutation],
    n: int | None = None,
    cap: int = DEFAULT_CLOSURE_CAP,
) -> PermGroup:
    """Breadth-first closure of ``gens`` under right multiplication by generators.

    For a finite group this set is automatically closed under inverses.
    ``n`` is required when ``gens`` is empty.
    """
    gens = tuple(gens)
    degrees = {g.n for g in gens}
    if n is not None:
        degrees.add(n)
    if len(degrees) > 1:
        raise MixedDegrees(f"generators disagree on degree: {sorted(degrees)}")
    if not degrees:
        raise MixedDegrees("degree is undetermined: no generators and no n given")
    (n,) = degrees

    ident = Permutation.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                if len(seen) >= cap:
                    raise ClosureCapExceeded(f"group closure exceeds cap {cap}")
                seen.add(h)
                queue.append(h)
    elements = tuple(sorted(seen))
    assert factorial(n) % len(elements) == 0
    return PermGroup(n=n, generators=gens, elements=elements)
