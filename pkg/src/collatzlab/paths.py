"""Red/blue path combinatorics of the step tree.

A path is written as a word over {R, B}: R for a halving step, B for an
o*x+1 step.  A blue step always lands on an even value, so admissible
words never contain the factor BB.  Depth-n edge tallies follow the
Fibonacci numbers: F(n+1) red and F(n) blue edges enter depth n, F(n+2)
admissible words of length n in total.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple

from .asymptotics import fib
from .core import EdgeColor, _check_multiplier

# all-words enumeration and the huge-binomial count blow up exponentially
ENUMERATION_CAP = 25

_CHILDREN = {
    None: frozenset({EdgeColor.RED, EdgeColor.BLUE}),
    EdgeColor.RED: frozenset({EdgeColor.RED, EdgeColor.BLUE}),
    EdgeColor.BLUE: frozenset({EdgeColor.RED}),
}


class EdgeCensus(NamedTuple):
    depth: int
    red_edges: int
    blue_edges: int


def is_admissible(word: str) -> bool:
    """True when the word uses only R/B and never follows blue with blue."""
    return not set(word) - {"R", "B"} and "BB" not in word


def admissible_children(last: EdgeColor | None) -> frozenset[EdgeColor]:
    """Colors that may follow the given edge color (None = tree root)."""
    return _CHILDREN[last]


def enumerate_words(n: int) -> list[str]:
    """All admissible words of length n, in generation order.

    The count is F(n+2); n is capped at ENUMERATION_CAP because the list
    grows like the Fibonacci numbers.
    """
    if n < 0:
        raise ValueError("word length must be >= 0")
    if n > ENUMERATION_CAP:
        raise ValueError(f"enumeration capped at n = {ENUMERATION_CAP}, got {n}")
    words = [""]
    for _ in range(n):
        nxt = []
        for w in words:
            nxt.append(w + "R")
            if not w.endswith("B"):
                nxt.append(w + "B")
        words = nxt
    return words


def tally_last_letters(words: Iterable[str]) -> tuple[int, int]:
    """(red, blue) tally of final letters, i.e. edges entering the last depth."""
    red = blue = 0
    for w in words:
        if not w:
            continue
        if w[-1] == "R":
            red += 1
        else:
            blue += 1
    return red, blue


def edge_counts(n: int) -> EdgeCensus:
    """Red and blue edge counts entering depth n of the full tree.

    Computed by the branching recurrence (every node spawns a red child,
    red-entered nodes also spawn a blue one) and cross-checked against the
    closed form R(n) = F(n+1), B(n) = F(n).  Depth 0 has no edges.
    """
    if n < 0:
        raise ValueError("depth must be >= 0")
    if n == 0:
        return EdgeCensus(0, 0, 0)
    red, blue = 1, 1
    for _ in range(n - 1):
        red, blue = red + blue, red
    if (red, blue) != (fib(n + 1), fib(n)):
        raise AssertionError(f"edge recurrence and closed form disagree at depth {n}")
    return EdgeCensus(n, red, blue)


def edge_quotient(n: int) -> Fraction:
    """Exact blue/red quotient at depth n, F(n)/F(n+1).  Undefined at depth 0."""
    if n < 1:
        raise ValueError("quotient undefined at depth 0")
    census = edge_counts(n)
    return Fraction(census.blue_edges, census.red_edges)


def alternating_path_value(
    x: Fraction | int,
    j: int,
    o: int = 3,
    even_start: bool = False,
) -> Fraction:
    """Exact value after j blue-red rounds of the strictly alternating path.

    For an odd-style start the path is (BR)^j and the closed form is
    sum_{i=1}^{j-1} o**(i-1)/2**i + (o**(j-1)/2**j) * (o*x + 1); an
    even-style start substitutes x for o*x+1, giving the R(BR)^(j-1) path.
    x may be any rational: the tree carries these formal paths whether or
    not an integer realizes them.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    _check_multiplier(o)
    x = Fraction(x)
    head = Fraction(x) if even_start else o * x + 1
    total = sum((Fraction(o ** (i - 1), 2**i) for i in range(1, j)), Fraction(0))
    return total + Fraction(o ** (j - 1), 2**j) * head


def iterate_alternating(
    x: Fraction | int,
    j: int,
    o: int = 3,
    even_start: bool = False,
) -> Fraction:
    """Step-by-step formal iteration of the alternating path (oracle twin
    of alternating_path_value)."""
    if j < 1:
        raise ValueError("j must be >= 1")
    _check_multiplier(o)
    v = Fraction(x)
    if even_start:
        v = v / 2
        for _ in range(j - 1):
            v = (o * v + 1) / 2
    else:
        for _ in range(j):
            v = (o * v + 1) / 2
    return v


def combinations_count(n: int) -> int:
    """Number of ways to place the blue edges among all depth-n edges:
    C(F(n+2), F(n))."""
    if n < 1:
        raise ValueError("depth must be >= 1")
    if n > ENUMERATION_CAP:
        raise ValueError(f"binomial growth capped at n = {ENUMERATION_CAP}, got {n}")
    return math.comb(fib(n + 2), fib(n))
