"""Forbidden patterns, families, witnesses, and containment checkers.

A pattern is a cycle on L vertices or a complete bipartite s-by-t graph,
each in subgraph mode (a copy may have extra edges among its vertices) or
induced mode (the vertex set must induce exactly the pattern). Families are
ordered, duplicate-free pattern lists with a small text grammar:

    term      := ("C" digits | "K" digits "," digits) ["-ind"]
    family    := term (";" term)*            when any K term is present
               | term (("," | ";") term)*    cycles only

so "C5;K2,2-ind" forbids 5-cycles and induced 4-cycles. The comma separator
is only unambiguous in cycle-only families such as "C3,C5".

Checkers return witnesses that can be re-validated against the graph, and
always the lexicographically least one, so tests can assert exact values.
"""

from __future__ import annotations

from dataclasses import dataclass

from turanlab import kernels
from turanlab.core import SimpleGraph


class PatternError(ValueError):
    pass


class FamilyParseError(ValueError):
    """Family text rejected; carries the offending position."""

    def __init__(self, text: str, pos: int, expected: str):
        found = text[pos] if pos < len(text) else "end of input"
        super().__init__(
            f"bad family spec at position {pos}: expected {expected}, found {found!r} in {text!r}"
        )
        self.text = text
        self.pos = pos
        self.expected = expected


@dataclass(frozen=True, order=True)
class ForbiddenPattern:
    """kind 'cycle' uses a=L; kind 'kst' uses a=s, b=t with s <= t."""

    kind: str
    a: int
    b: int
    induced: bool = False

    @staticmethod
    def cycle(length: int, induced: bool = False) -> "ForbiddenPattern":
        if length < 3:
            raise PatternError(f"cycle length must be >= 3, got {length}")
        return ForbiddenPattern("cycle", length, 0, induced)

    @staticmethod
    def kst(s: int, t: int, induced: bool = False) -> "ForbiddenPattern":
        if s < 1 or t < 1:
            raise PatternError(f"complete bipartite sides must be >= 1, got ({s}, {t})")
        if s > t:
            s, t = t, s
        return ForbiddenPattern("kst", s, t, induced)

    def as_kernel(self) -> tuple[int, int, int, bool]:
        code = kernels.CYCLE if self.kind == "cycle" else kernels.KST
        return (code, self.a, self.b, self.induced)

    def vertex_count(self) -> int:
        return self.a if self.kind == "cycle" else self.a + self.b

    def __str__(self) -> str:
        base = f"C{self.a}" if self.kind == "cycle" else f"K{self.a},{self.b}"
        return base + ("-ind" if self.induced else "")


@dataclass(frozen=True)
class FamilySpec:
    """Ordered, duplicate-free forbidden family."""

    patterns: tuple[ForbiddenPattern, ...]

    def __init__(self, patterns):
        seen = []
        for p in patterns:
            if not isinstance(p, ForbiddenPattern):
                raise PatternError(f"not a pattern: {p!r}")
            if p not in seen:
                seen.append(p)
        if not seen:
            raise PatternError("a family needs at least one pattern")
        object.__setattr__(self, "patterns", tuple(seen))

    def canonical(self) -> str:
        """Order-independent text form, the cache key component."""
        return ";".join(str(p) for p in sorted(self.patterns))

    def as_kernel(self) -> tuple[tuple[int, int, int, bool], ...]:
        return tuple(p.as_kernel() for p in self.patterns)

    def __str__(self) -> str:
        return ";".join(str(p) for p in self.patterns)


def parse_family(text: str) -> FamilySpec:
    """Parse the family grammar; errors carry position and expectation."""
    has_k = "K" in text or "k" in text
    patterns = []
    i = 0
    n = len(text)

    def skip_ws(j):
        while j < n and text[j] == " ":
            j += 1
        return j

    def read_int(j):
        start = j
        while j < n and text[j].isdigit():
            j += 1
        if j == start:
            raise FamilyParseError(text, start, "a number")
        return int(text[start:j]), j

    while True:
        i = skip_ws(i)
        if i >= n:
            raise FamilyParseError(text, i, "a pattern ('C<L>' or 'K<s>,<t>')")
        ch = text[i]
        if ch in "Cc":
            length, i = read_int(i + 1)
            if length < 3:
                raise FamilyParseError(text, i, f"a cycle length >= 3 (got {length})")
            kind = ("cycle", length, 0)
        elif ch in "Kk":
            s, i = read_int(i + 1)
            if i >= n or text[i] != ",":
                raise FamilyParseError(text, i, "',' between the two K sides")
            t, i = read_int(i + 1)
            if s < 1 or t < 1:
                raise FamilyParseError(text, i, "K sides >= 1")
            kind = ("kst", s, t)
        else:
            raise FamilyParseError(text, i, "a pattern ('C<L>' or 'K<s>,<t>')")
        induced = False
        if text.startswith("-ind", i):
            induced = True
            i += 4
        if kind[0] == "cycle":
            patterns.append(ForbiddenPattern.cycle(kind[1], induced))
        else:
            patterns.append(ForbiddenPattern.kst(kind[1], kind[2], induced))
        i = skip_ws(i)
        if i >= n:
            break
        if text[i] == ";":
            i += 1
        elif text[i] == "," and not has_k:
            i += 1
        else:
            expected = "';'" if has_k else "';' or ','"
            raise FamilyParseError(text, i, f"{expected} between patterns")
    return FamilySpec(patterns)


@dataclass(frozen=True)
class Witness:
    """A concrete pattern occurrence: vertices in pattern order.

    For cycles the vertices are in traversal order; for K patterns the s
    side precedes the t side. verify() re-checks the claim against a graph.
    """

    pattern: ForbiddenPattern
    vertices: tuple[int, ...]

    def verify(self, g: SimpleGraph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        p = self.pattern
        if p.kind == "cycle":
            if len(vs) != p.a:
                return False
            L = p.a
            for i in range(L):
                if not g.has_edge(vs[i], vs[(i + 1) % L]):
                    return False
            if p.induced:
                for i in range(L):
                    for j in range(i + 2, L):
                        if i == 0 and j == L - 1:
                            continue
                        if g.has_edge(vs[i], vs[j]):
                            return False
            return True
        if len(vs) != p.a + p.b:
            return False
        a_side, b_side = vs[: p.a], vs[p.a:]
        for u in a_side:
            for v in b_side:
                if not g.has_edge(u, v):
                    return False
        if p.induced:
            for side in (a_side, b_side):
                for i, u in enumerate(side):
                    for v in side[i + 1:]:
                        if g.has_edge(u, v):
                            return False
        return True


def contains_cycle_of_length(g: SimpleGraph, length: int, induced: bool = False) -> Witness | None:
    p = ForbiddenPattern.cycle(length, induced)
    found = kernels.find_cycle(g.rows, g.n, length, induced)
    if found is None:
        return None
    return Witness(p, found)


def contains_kst(g: SimpleGraph, s: int, t: int) -> Witness | None:
    p = ForbiddenPattern.kst(s, t)
    found = kernels.find_kst(g.rows, g.n, p.a, p.b, False)
    if found is None:
        return None
    return Witness(p, found[0] + found[1])


def contains_induced_kst(g: SimpleGraph, s: int, t: int) -> Witness | None:
    p = ForbiddenPattern.kst(s, t, induced=True)
    found = kernels.find_kst(g.rows, g.n, p.a, p.b, True)
    if found is None:
        return None
    return Witness(p, found[0] + found[1])


def check_pattern(g: SimpleGraph, p: ForbiddenPattern) -> Witness | None:
    if p.kind == "cycle":
        return contains_cycle_of_length(g, p.a, p.induced)
    if p.induced:
        return contains_induced_kst(g, p.a, p.b)
    return contains_kst(g, p.a, p.b)


def is_family_free(g: SimpleGraph, family: FamilySpec) -> Witness | None:
    """None iff g violates no pattern; otherwise the first violation in
    pattern-list order (deterministic)."""
    for p in family.patterns:
        w = check_pattern(g, p)
        if w is not None:
            return w
    return None


def max_codegree_nonadjacent(g: SimpleGraph) -> tuple[int, tuple[int, int] | None]:
    """Largest common neighborhood over non-adjacent vertex pairs.

    Returns (0, None) when no non-adjacent pair exists. A value <= t-1 over
    all pairs (adjacent included) is what K_{2,t} subgraph freeness means.
    """
    return kernels.max_codegree_nonadjacent(g.rows, g.n)


def count_triangles(g: SimpleGraph) -> int:
    return kernels.count_triangles(g.rows, g.n)
