"""PBW generators and dimensions for the finite-dimensional rank-3 classes.

Bracket words are stored as data (nested pairs of generator indices); no
braided commutator is ever evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .braiding import BraidingMatrix, gdd_of
from .classify import CaseLabel

Word = Union[int, tuple]


@dataclass(frozen=True)
class BracketWord:
    """A bracketed word such as ``[[x1,x3],x2]``; leaves are 1-based indices."""

    tree: Word

    def __post_init__(self):
        def ok(t):
            if isinstance(t, int):
                return t >= 1
            return isinstance(t, tuple) and len(t) == 2 and ok(t[0]) and ok(t[1])
        if not ok(self.tree):
            raise ValueError(f"malformed bracket word {self.tree!r}")

    @classmethod
    def parse(cls, text: str) -> BracketWord:
        text = text.replace(" ", "")
        pos = 0

        def term():
            nonlocal pos
            if text[pos] == "[":
                pos += 1
                left = term()
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                    right = term()
                    node = (left, right)
                else:
                    node = left  # "[x1]" is just the letter
                if text[pos] != "]":
                    raise ValueError(f"expected ']' at {pos} in {text!r}")
                pos += 1
                return node
            if text[pos] != "x":
                raise ValueError(f"expected 'x' at {pos} in {text!r}")
            end = pos + 1
            while end < len(text) and text[end].isdigit():
                end += 1
            idx = int(text[pos + 1:end])
            pos = end
            return idx

        tree = term()
        if pos != len(text):
            raise ValueError(f"trailing characters in {text!r}")
        return cls(tree)

    def leaves(self) -> list[int]:
        out = []

        def walk(t):
            if isinstance(t, int):
                out.append(t)
            else:
                walk(t[0])
                walk(t[1])
        walk(self.tree)
        return out

    def degree(self, rank: int) -> tuple[int, ...]:
        """Z^rank degree vector: how often each generator occurs."""
        counts = [0] * rank
        for i in self.leaves():
            if i > rank:
                raise ValueError(f"x{i} does not exist in rank {rank}")
            counts[i - 1] += 1
        return tuple(counts)

    def __len__(self):
        return len(self.leaves())

    def __str__(self):
        def show(t):
            if isinstance(t, int):
                return f"x{t}"
            return f"[{show(t[0])},{show(t[1])}]"
        return show(self.tree)


_W = BracketWord.parse
_BASE = ["[x1]", "[x2]", "[x3]", "[x1,x2]", "[x1,x3]", "[[x1,x3],x2]"]
_PBW = {
    CaseLabel.Rank3_i: _BASE,
    CaseLabel.Rank3_ii: _BASE + [
        "[[x1,x2],[x1,x3]]",
        "[[x1,x2],[[x1,x3],x2]]",
        "[[x1,x3],[[x1,x3],x2]]",
        "[[[x1,x2],[[x1,x3],x2]],[x1,x3]]",
    ],
    CaseLabel.Rank3_iii: _BASE + ["[[x1,x2],[x1,x3]]"],
}


def rank3_pbw(label: CaseLabel) -> list[BracketWord]:
    """PBW generators for the template diagram of a rank-3 class (vertex 1 is the middle -1)."""
    try:
        return [_W(w) for w in _PBW[label]]
    except KeyError:
        raise ValueError(f"{label} is not a rank-3 class") from None


def rank3_dimension(label: CaseLabel, m: int | None = None, m2: int | None = None) -> int:
    if label is CaseLabel.Rank3_i:
        if m is None or m <= 2:
            raise ValueError("class (i) needs m > 2")
        return 2**4 * m**2
    if label is CaseLabel.Rank3_ii:
        return 2**7 * 3**4
    if label is CaseLabel.Rank3_iii:
        if m is None or m2 is None or m <= 1 or m2 <= 1:
            raise ValueError("class (iii) needs m, m' > 1")
        return 2**4 * m**2 * m2**2 // gcd(m, m2)
    raise ValueError(f"{label} is not a rank-3 class")


def rank2_pbw_special(B: BraidingMatrix) -> list[BracketWord]:
    """``[x1, x2, [x1,x2]]`` when ``q11 = -1`` and ``(q22 + 1)(q22 q12 q21 - 1) = 0``.

    Returns an empty list when the hypothesis fails (no claim is made then).
    """
    if B.rank != 2:
        raise ValueError("needs a rank-2 braiding")
    n, a = B.n, B.exponents
    e = (a[0][1] + a[1][0]) % n
    if e == 0:
        raise ValueError("needs a connected braiding")
    half = n // 2 if n % 2 == 0 else None
    if a[0][0] == half and (a[1][1] == half or (a[1][1] + e) % n == 0):
        return [_W("x1"), _W("x2"), _W("[x1,x2]")]
    return []


def is_quantum_linear_space(B: BraidingMatrix) -> bool:
    """No edges: ``q_ij q_ji = 1`` for all ``i != j``."""
    return not gdd_of(B).edges()


@dataclass(frozen=True)
class NicholsSummary:
    label: CaseLabel
    pbw: tuple[BracketWord, ...]
    dimension: int | None
    m: int | None = None
    m2: int | None = None

    def to_json(self) -> dict:
        doc = {"label": str(self.label), "pbw": [str(w) for w in self.pbw],
               "dimension": self.dimension}
        if self.dimension is None:
            doc["note"] = "dimension not provided by source"
        return doc


def summarize(label: CaseLabel, m: int | None = None, m2: int | None = None) -> NicholsSummary:
    """Generators and dimension for rank-3 classes; rank-2 labels carry no dimension."""
    if label in _PBW:
        return NicholsSummary(label, tuple(rank3_pbw(label)), rank3_dimension(label, m, m2), m, m2)
    return NicholsSummary(label, (), None, m, m2)
