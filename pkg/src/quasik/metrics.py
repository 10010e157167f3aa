"""Accuracy metrics for comparing top-k size lists.

Two runs are compared by their sorted lists of quasi-clique sizes.  The
Soergel distance between the lists,

    100 * sum_i |h_i - z_i| / sum_i max(h_i, z_i),

after sorting both the same direction and zero-padding the shorter one, is
the error percentage: 0 for identical lists, 100 when one side found nothing.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def canonical_sizes(sizes: Iterable[int]) -> tuple[int, ...]:
    """Validate and sort a size list non-increasing."""
    out = []
    for x in sizes:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise ValueError(f"sizes must be non-negative integers, got {x!r}")
        out.append(x)
    return tuple(sorted(out, reverse=True))


def pad_pair(h: Sequence[int], z: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], bool]:
    """Zero-pad the shorter list; the flag reports whether padding happened."""
    h = tuple(h)
    z = tuple(z)
    width = max(len(h), len(z))
    padded = len(h) != len(z)
    return (h + (0,) * (width - len(h)), z + (0,) * (width - len(z)), padded)


def soergel_distance(h: Iterable[int], z: Iterable[int]) -> float:
    """Soergel distance between two size lists, as a percentage in [0, 100]."""
    hs, zs, _ = pad_pair(canonical_sizes(h), canonical_sizes(z))
    if not hs:
        raise ValueError("cannot compare two empty size lists")
    num = sum(abs(a - b) for a, b in zip(hs, zs))
    den = sum(max(a, b) for a, b in zip(hs, zs))
    if den == 0:
        raise ValueError("cannot compare two all-zero size lists")
    return 100.0 * num / den


def error_percent(h: Iterable[int], z: Iterable[int]) -> float:
    """Error of a heuristic size list ``h`` against the exact list ``z``:
    identical to the Soergel distance between them."""
    return soergel_distance(h, z)
