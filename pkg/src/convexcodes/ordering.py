"""Column orderings: decide CO / CCO orderability of a codeword set.

co_order arranges a set of codewords as the columns of a CO matrix via
PQ-tree reduction.  cco_order reduces the circular problem to the linear
one by Tucker complementation: fix an anchor codeword and flip every bit
position in which the anchor is 1 (i.e. XOR all words with the anchor);
the complemented set is CO-orderable iff the original is CCO-orderable,
and any CO ordering maps back to a circular one by XOR-ing again.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .core import (
    CCO,
    CO,
    BitVector,
    Code,
    SensorMatrix,
    regime_check,
)
from .pqtree import PQTree, ReductionFailed


@dataclass(frozen=True)
class OrderingResult:
    """A feasible column ordering plus its permutation-class summary.

    tree_summary uses codeword strings, with {..} for freely permutable
    groups and [..] for sequences fixed up to reversal.
    """

    feasible: bool
    ordering: Optional[tuple[BitVector, ...]] = None
    tree_summary: Optional[str] = None


INFEASIBLE_ORDERING = OrderingResult(False)


def _pq_solve(
    words: list[BitVector], summarize: bool
) -> Optional[tuple[list[int], Optional[str]]]:
    """Canonical consecutive-ones order of word indices, or None."""
    n = len(words)
    k = words[0].n if words else 0
    constraints: dict[int, list[int]] = {}
    for j, w in enumerate(words):
        m = w.mask
        while m:
            i = (m & -m).bit_length() - 1
            constraints.setdefault(i, []).append(j)
            m &= m - 1
    tree = PQTree(n)
    try:
        for i in range(k):
            labels = constraints.get(i, ())
            if len(labels) > 1:
                tree.reduce(labels)
    except ReductionFailed:
        return None
    return tree.frontier(), tree.summary() if summarize else None


def _relabel(summary: str, words: list[BitVector]) -> str:
    return re.sub(r"\d+", lambda m: words[int(m.group())].to_string(), summary)


def co_order(words: Code, summarize: bool = True) -> OrderingResult:
    """A canonical CO column ordering of the codeword set, or infeasible.

    Pass summarize=False to skip building the permutation-class summary
    string, which can dwarf the recognition cost on very large codes.
    """
    ws = words.sorted_words()
    if not ws:
        return OrderingResult(True, (), "{}" if summarize else None)
    solved = _pq_solve(ws, summarize)
    if solved is None:
        return INFEASIBLE_ORDERING
    order, summary = solved
    cols = tuple(ws[j] for j in order)
    m = SensorMatrix.from_columns(cols, CO.geometry)
    assert regime_check(m, CO), "PQ-tree produced a non-CO ordering"
    return OrderingResult(
        True, cols, _relabel(summary, ws) if summary is not None else None
    )


def cco_order(words: Code, summarize: bool = True) -> OrderingResult:
    """A canonical CCO column ordering of the codeword set, or infeasible."""
    ws = words.sorted_words()
    if not ws:
        return OrderingResult(True, (), "{}" if summarize else None)
    anchor = ws[-1]
    flipped = sorted((w ^ anchor for w in ws), key=lambda w: w.mask)
    solved = _pq_solve(flipped, summarize)
    if solved is None:
        return INFEASIBLE_ORDERING
    order, summary = solved
    cols = tuple(flipped[j] ^ anchor for j in order)
    m = SensorMatrix.from_columns(cols, CCO.geometry)
    assert regime_check(m, CCO), "complementation produced a non-CCO ordering"
    if summary is None:
        return OrderingResult(True, cols, None)
    originals = [w ^ anchor for w in flipped]
    return OrderingResult(True, cols, _relabel(summary, originals))
