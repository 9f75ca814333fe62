"""Pure-Python column-profile kernel (reference and fallback)."""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Optional, Sequence


def column_profiles(words: Sequence[Sequence[int]], g: int, q: int,
                    ref: Optional[Sequence[int]] = None) -> dict[tuple[int, ...], int]:
    """Aggregate the column multisets of every g-tuple of ``words``.

    For a tuple (u_1, ..., u_g) position i has column code
    ``sum_j u_j[i] * q**(j-1)``, plus ``ref[i] * q**g`` when a reference
    vector occupies slot g+1.  The profile of the tuple is the sorted tuple
    of its n column codes; the result maps each profile to the number of
    tuples having it.  Every enumerator is a function of this map.
    """
    n = len(words[0])
    scaled = [[tuple(a * q**j for a in w) for w in words] for j in range(g)]
    base = tuple(r * q**g for r in ref) if ref is not None else (0,) * n
    counts: Counter = Counter()
    for combo in itertools.product(range(len(words)), repeat=g):
        rows = [scaled[j][t] for j, t in enumerate(combo)]
        counts[tuple(sorted(map(sum, zip(base, *rows))))] += 1
    return dict(counts)
