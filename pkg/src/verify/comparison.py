"""
Tolerance-based multiset comparison of spectra
"""
from typing import List, Sequence, Tuple

from src.models.verification import ComparisonReport, MatchedPair, Verdict

REAL_TOL = 1e-10


def _is_real(values: Sequence[complex]) -> bool:
    return all(abs(v.imag) <= REAL_TOL for v in values)


def _sort_key(value: complex) -> Tuple[float, float]:
    return (round(value.real, 9), round(value.imag, 9))


def _zip_sorted(left: List[complex], right: List[complex]) -> List[MatchedPair]:
    left = sorted(left, key=_sort_key)
    right = sorted(right, key=_sort_key)
    return [MatchedPair(left=a, right=b, gap=abs(a - b)) for a, b in zip(left, right)]


def _greedy_nearest(left: List[complex], right: List[complex]) -> List[MatchedPair]:
    """Repeatedly pair the globally closest remaining values"""
    candidates = sorted(
        ((abs(a - b), i, j) for i, a in enumerate(left) for j, b in enumerate(right)),
        key=lambda item: (round(item[0], 12), item[1], item[2]),
    )
    used_left, used_right = set(), set()
    pairs = []
    for gap, i, j in candidates:
        if i in used_left or j in used_right:
            continue
        used_left.add(i)
        used_right.add(j)
        pairs.append(MatchedPair(left=left[i], right=right[j], gap=gap))
    pairs.sort(key=lambda pair: _sort_key(pair.left))
    return pairs


def compare_multisets(
    s1: Sequence[complex],
    s2: Sequence[complex],
    tol: float = 1e-6,
    left_label: str = "left",
    right_label: str = "right",
) -> ComparisonReport:
    """
    Match two multisets of eigenvalues

    Real multisets are sorted and zipped; anything complex goes through
    greedy nearest-pair matching. The verdict is PASS iff the sizes agree
    and every matched gap is within tol. Unmatched values (size mismatch)
    are the surplus of the longer input.
    """
    left = [complex(v) for v in s1]
    right = [complex(v) for v in s2]
    if _is_real(left) and _is_real(right):
        pairs = _zip_sorted(left, right)
    else:
        pairs = _greedy_nearest(left, right)

    matched_left = [p.left for p in pairs]
    matched_right = [p.right for p in pairs]
    unmatched_left = _surplus(left, matched_left)
    unmatched_right = _surplus(right, matched_right)

    max_gap = max((p.gap for p in pairs), default=0.0)
    passed = len(left) == len(right) and max_gap <= tol
    return ComparisonReport(
        left_label=left_label,
        right_label=right_label,
        pairs=pairs,
        max_gap=max_gap,
        unmatched_left=unmatched_left,
        unmatched_right=unmatched_right,
        tolerance=tol,
        verdict=Verdict.PASS if passed else Verdict.FAIL,
    )


def _surplus(values: List[complex], matched: List[complex]) -> List[complex]:
    remaining = list(values)
    for value in matched:
        remaining.remove(value)
    return sorted(remaining, key=_sort_key)
