"""Permutation groups and their diagonal action on the variable grid.

Convention: sigma sends x_i^(j) to x_{sigma(i)}^(j); the copy index is fixed.
Composition is right-to-left, (sigma * tau)(i) = sigma(tau(i)), so
``act(sigma * tau, f) == act(sigma, act(tau, f))``.
"""
from __future__ import annotations

import re
from collections import deque
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .polyring import DimensionError, Monomial, Polynomial

DEFAULT_GROUP_CAP = 20160


class GroupTooLarge(RuntimeError):
    pass


class Permutation:
    """Bijection of {1..n}, stored as the tuple of images (sigma(1), ..., sigma(n))."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        img = list(range(1, n + 1))
        # apply the rightmost cycle first
        for cyc in reversed(list(cycles)):
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {tuple(cyc)}")
            step = {cyc[t]: cyc[(t + 1) % len(cyc)] for t in range(len(cyc))}
            for pt in cyc:
                if not 1 <= pt <= n:
                    raise ValueError(f"point {pt} outside 1..{n}")
            img = [step.get(x, x) for x in img]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise DimensionError("permutations of different degree")
        return Permutation(tuple(self.images[x - 1] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def sign(self) -> int:
        seen, s = set(), 1
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            length, x = 0, start
            while x not in seen:
                seen.add(x)
                x = self(x)
                length += 1
            if length % 2 == 0:
                s = -s
        return s

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation({cyc or '()'}, n={self.degree})"


class PermutationGroup:
    """A fully enumerated finite permutation group."""

    def __init__(self, n: int, elements: Sequence[Permutation],
                 generators: Sequence[Permutation] = (), name: str | None = None):
        self.n = n
        self.elements = tuple(sorted(elements))
        self.generators = tuple(generators)
        self.name = name

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, sigma):
        return sigma in set(self.elements)

    def __repr__(self):
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermutationGroup({label}, n={self.n}, order={self.order})"


def close_group(generators: Iterable[Permutation], n: int, cap: int = DEFAULT_GROUP_CAP,
                name: str | None = None) -> PermutationGroup:
    """Breadth-first closure of the generators under composition."""
    gens = list(generators)
    for g in gens:
        if g.degree != n:
            raise DimensionError(f"generator {g} has degree {g.degree}, expected {n}")
    e = Permutation.identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        h = queue.popleft()
        for g in gens:
            x = g * h
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise GroupTooLarge(f"group closure exceeds cap {cap}")
                queue.append(x)
    return PermutationGroup(n, list(seen), gens, name)


# named groups

def symmetric_group(n: int) -> PermutationGroup:
    if n == 1:
        return close_group([], 1, name="S1")
    gens = [Permutation.from_cycles([(1, 2)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    return close_group(gens, n, name=f"S{n}")


def alternating_group(n: int) -> PermutationGroup:
    gens = [Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]
    return close_group(gens, n, name=f"A{n}")


def cyclic_group(n: int) -> PermutationGroup:
    gens = [Permutation.from_cycles([tuple(range(1, n + 1))], n)] if n > 1 else []
    return close_group(gens, n, name=f"C{n}")


def trivial_group(n: int) -> PermutationGroup:
    return close_group([], n, name=f"1_{n}")


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> Permutation:
    """Product of cycles, e.g. ``(1 2)(3 4)``; ``()`` is the identity."""
    text = text.strip()
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE.findall(text):
        pts = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
        if pts:
            cycles.append(pts)
    return Permutation.from_cycles(cycles, n)


def parse_group(spec: str, cap: int = DEFAULT_GROUP_CAP) -> PermutationGroup:
    """``S3``, ``A4``, ``C5`` or ``n=4; gens=(1 2)(3 4),(1 3)``."""
    spec = spec.strip()
    mt = re.fullmatch(r"([SACsac])(\d+)", spec)
    if mt:
        kind, n = mt.group(1).upper(), int(mt.group(2))
        if n < 1:
            raise ValueError("degree must be positive")
        builder = {"S": symmetric_group, "A": alternating_group, "C": cyclic_group}[kind]
        if kind == "S" and _factorial(n) > cap:
            raise GroupTooLarge(f"S{n} exceeds cap {cap}")
        return builder(n)
    mt = re.fullmatch(r"n\s*=\s*(\d+)\s*;\s*gens\s*=\s*(.*)", spec)
    if not mt:
        raise ValueError(f"unrecognised group spec {spec!r}")
    n = int(mt.group(1))
    body = mt.group(2).strip()
    gens = []
    if body:
        # split on commas that sit between cycles
        for chunk in re.split(r"\)\s*,\s*\(", body):
            chunk = chunk.strip()
            if not chunk.startswith("("):
                chunk = "(" + chunk
            if not chunk.endswith(")"):
                chunk = chunk + ")"
            gens.append(parse_permutation(chunk, n))
    return close_group(gens, n, cap=cap, name=spec)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# action

@lru_cache(maxsize=4096)
def _index_map(images: tuple, m: int) -> tuple:
    """src[t] = flat index whose exponent lands at flat index t."""
    n = len(images)
    src = [0] * (n * m)
    for i in range(n):
        target = images[i] - 1
        for j in range(m):
            src[target * m + j] = i * m + j
    return tuple(src)


def act_exps(sigma: Permutation, exps: tuple, m: int) -> tuple:
    src = _index_map(sigma.images, m)
    return tuple([exps[s] for s in src])


def act_monomial(sigma: Permutation, mono: Monomial) -> Monomial:
    if sigma.degree != mono.n:
        raise DimensionError(f"permutation degree {sigma.degree} != n = {mono.n}")
    return Monomial._raw(act_exps(sigma, mono.exps, mono.m), mono.n, mono.m)


def act(sigma: Permutation, f: Polynomial) -> Polynomial:
    """Substitute x_i^(j) -> x_{sigma(i)}^(j) in f."""
    if sigma.degree != f.n:
        raise DimensionError(f"permutation degree {sigma.degree} != n = {f.n}")
    src = _index_map(sigma.images, f.m)
    terms = {tuple([e[s] for s in src]): c for e, c in f.terms.items()}
    return Polynomial._raw(terms, f.n, f.m, f.field)


def orbit(mono: Monomial, G: PermutationGroup) -> set[Monomial]:
    if G.n != mono.n:
        raise DimensionError(f"group degree {G.n} != n = {mono.n}")
    return {Monomial._raw(e, mono.n, mono.m) for e in orbit_exps(mono.exps, G, mono.m)}


def orbit_exps(exps: tuple, G: PermutationGroup, m: int) -> set[tuple]:
    return {act_exps(s, exps, m) for s in G.elements}


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


__all__ = [
    "Permutation", "PermutationGroup", "GroupTooLarge", "close_group", "act",
    "act_monomial", "orbit", "orbit_exps", "parse_group", "parse_permutation",
    "symmetric_group", "alternating_group", "cyclic_group", "trivial_group",
    "all_permutations", "DEFAULT_GROUP_CAP",
]
