"""Brute-force word oracle: Lyndon words and aperiodic circular words.

This module is deliberately independent of the closed-form counting in
wittkit.necklace; it enumerates actual words so the Moebius-inversion
formulas can be checked against ground truth.  Letters are the integers
1..r in natural order.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import BudgetExceededError

__all__ = [
    "is_lyndon",
    "duval_lyndon",
    "lyndon_words",
    "lyndon_words_naive",
    "lyndon_census",
    "aperiodic_count",
    "multiset_permutations",
]

DEFAULT_BUDGET = 14

Word = Tuple[int, ...]


def is_lyndon(word: Sequence[int]) -> bool:
    """True iff the word is strictly smaller than all its proper rotations."""
    w = tuple(word)
    n = len(w)
    if n == 0:
        raise ValueError("the empty word is neither Lyndon nor not")
    doubled = w + w
    return all(doubled[s : s + n] > w for s in range(1, n))


def duval_lyndon(max_len: int, alphabet_size: int) -> Iterator[Word]:
    """All Lyndon words of length <= max_len over 1..alphabet_size, in
    lexicographic order (Duval's generation algorithm)."""
    if max_len < 1 or alphabet_size < 1:
        return
    w = [1]
    while True:
        yield tuple(w)
        # extend periodically to max_len, then strip maximal letters and bump
        w = [w[i % len(w)] for i in range(max_len)]
        while w and w[-1] == alphabet_size:
            w.pop()
        if not w:
            return
        w[-1] += 1


def _content_of(word: Sequence[int], alphabet_size: int) -> Word:
    return tuple(word.count(i) for i in range(1, alphabet_size + 1))


def lyndon_words(content: Sequence[int]) -> List[Word]:
    """Lyndon words whose letter-i multiplicity is content[i-1], in
    lexicographic order.  Duval generation filtered by content."""
    content = tuple(content)
    n = sum(content)
    if n < 1:
        raise ValueError("lyndon_words requires a nonzero content")
    r = len(content)
    out = []
    for w in duval_lyndon(n, r):
        if len(w) == n and _content_of(w, r) == content:
            out.append(w)
    return out


def lyndon_words_naive(content: Sequence[int], budget: int = 10) -> List[Word]:
    """Second, slower oracle: filter all r^n strings by content and the
    rotation-minimality test.  Guards the guard for totals <= budget."""
    content = tuple(content)
    n = sum(content)
    if n < 1:
        raise ValueError("lyndon_words_naive requires a nonzero content")
    if n > budget:
        raise BudgetExceededError(f"total {n} exceeds naive budget {budget}")
    r = len(content)
    out = []
    word = [1] * n
    while True:
        w = tuple(word)
        if _content_of(w, r) == content and is_lyndon(w):
            out.append(w)
        # odometer over 1..r
        i = n - 1
        while i >= 0 and word[i] == r:
            word[i] = 1
            i -= 1
        if i < 0:
            return out
        word[i] += 1


def lyndon_census(alphabet_size: int, max_total: int) -> Dict[Word, int]:
    """Count Lyndon words by exact content for every length <= max_total,
    from a single Duval pass."""
    census: Dict[Word, int] = {}
    for w in duval_lyndon(max_total, alphabet_size):
        key = _content_of(w, alphabet_size)
        census[key] = census.get(key, 0) + 1
    return census


def multiset_permutations(items: Sequence[int]) -> Iterator[Word]:
    """Distinct permutations of a multiset, in lexicographic order."""
    word = sorted(items)
    n = len(word)
    if n == 0:
        return
    while True:
        yield tuple(word)
        # classic next-permutation step; terminates at the descending word
        i = n - 2
        while i >= 0 and word[i] >= word[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while word[j] <= word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1 :] = reversed(word[i + 1 :])


def aperiodic_count(content: Sequence[int], budget: int = DEFAULT_BUDGET) -> int:
    """Number of rotation classes of words with the given content whose
    minimal period equals the total length.

    Counts class representatives directly: a word is counted iff it is
    strictly smaller than each of its proper rotations (one such word per
    aperiodic class, none for periodic words).  The content is first
    reduced by dropping absent letters and sorting -- a letter relabeling,
    which permutes the enumerated words but not their number.
    """
    content = tuple(content)
    n = sum(content)
    if any(c < 0 for c in content):
        raise ValueError(f"content must be non-negative, got {content!r}")
    if n < 1:
        raise ValueError("aperiodic_count requires a nonzero content")
    if n > budget:
        raise BudgetExceededError(
            f"total {n} exceeds enumeration budget {budget}; "
            "raise the budget explicitly to proceed"
        )
    reduced = sorted(c for c in content if c > 0)
    letters: List[int] = []
    for letter, mult in enumerate(reduced, start=1):
        letters.extend([letter] * mult)
    count = 0
    for w in multiset_permutations(letters):
        doubled = w + w
        if all(doubled[s : s + n] > w for s in range(1, n)):
            count += 1
    return count
