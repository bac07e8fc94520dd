from functools import lru_cache
from itertools import accumulate, zip_longest
from numbers import Integral
from typing import Dict, Iterable, Iterator, List, Tuple

from .exceptions import DomainError

Composition = Tuple[int, ...]
"""A finite sequence of non-negative integers (an exponent vector / tableau content)."""


def _integer_part(value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise DomainError(f"expected an integer, got {value!r}")
    return int(value)


class Partition(tuple):
    """A weakly decreasing sequence of positive integers.

    :class:`Partition` is a :class:`tuple`, so it hashes, compares and unpacks like one.
    Ordering of two partitions uses tuple comparison, i.e. lexicographic order.

    Parameters:
        parts (`Iterable[int]`): The parts, largest first. Trailing zeros are dropped.

    Raises:
        :class:`DomainError`: If the parts are not weakly decreasing positive integers.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = tuple(_integer_part(p) for p in parts)
        while values and values[-1] == 0:
            values = values[:-1]
        if any(p < 1 for p in values):
            raise DomainError(f"partition parts must be positive integers, got {values}")
        if any(a < b for a, b in zip(values, values[1:])):
            raise DomainError(f"partition parts must be weakly decreasing, got {values}")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def length(self) -> int:
        """Number of (nonzero) parts."""
        return len(self)

    def size(self) -> int:
        """The sum of the parts, ``|λ|``."""
        return sum(self)

    def padded(self, n: int) -> Composition:
        """Return the parts padded with zeros to length ``n``."""
        if len(self) > n:
            raise DomainError(f"partition {self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    @classmethod
    def from_composition(cls, composition: Iterable[int]) -> "Partition":
        """Sort the nonzero entries of a composition into a partition."""
        return cls(sorted((c for c in composition if c), reverse=True))


def _descending(k: int) -> Iterator[Tuple[int, ...]]:
    # step to the lexicographic predecessor: lower the last part above 1 and refill the
    # rest greedily with parts no larger than it
    if k == 0:
        yield ()
        return
    parts = [k]
    while True:
        yield tuple(parts)
        freed = 0
        while parts and parts[-1] == 1:
            parts.pop()
            freed += 1
        if not parts:
            return
        parts[-1] -= 1
        largest, freed = parts[-1], freed + 1
        while freed > largest:
            parts.append(largest)
            freed -= largest
        parts.append(freed)


@lru_cache(maxsize=None)
def _partitions_of(k: int) -> Tuple[Partition, ...]:
    return tuple(Partition(p) for p in _descending(k))


def partitions_of(k: int) -> List[Partition]:
    """Return every partition of ``k`` exactly once, in descending lexicographic order.

    Index 0 is ``(k)`` and the last entry is ``(1, ..., 1)``; ``k = 0`` yields the single
    empty partition.

    Raises:
        :class:`DomainError`: If ``k`` is negative.
    """
    if k < 0:
        raise DomainError(f"cannot partition a negative integer ({k})")
    return list(_partitions_of(k))


def partition_index(lam: Partition) -> int:
    """Position of ``lam`` in :func:`partitions_of` of its size."""
    return _index_table(lam.size())[lam]


@lru_cache(maxsize=None)
def _index_table(k: int) -> Dict[Partition, int]:
    return {p: i for i, p in enumerate(_partitions_of(k))}


def _multiset_permutations(values: List[int]) -> Iterator[Composition]:
    # values start sorted descending; each step moves to the previous permutation in
    # lexicographic order, which never repeats an arrangement of equal values
    n = len(values)
    while True:
        yield tuple(values)
        i = n - 2
        while i >= 0 and values[i] <= values[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while values[j] >= values[i]:
            j -= 1
        values[i], values[j] = values[j], values[i]
        values[i + 1:] = reversed(values[i + 1:])


def compositions_sorting_to(lam: Partition, n: int) -> List[Composition]:
    """All distinct length-``n`` compositions whose nonzero parts sort to ``lam``.

    Generated as permutations of the multiset ``lam ∪ {0^(n-len(lam))}`` in descending
    lexicographic order, without duplicates. A partition with more than ``n`` parts has
    no such compositions and gives an empty list.
    """
    if len(lam) > n:
        return []
    return list(_multiset_permutations(list(lam.padded(n))))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """Return ``True`` iff ``mu`` is dominated by ``lam`` (every prefix sum of ``lam`` is at least ``mu``'s).

    Raises:
        :class:`DomainError`: If the two partitions have different sizes.
    """
    if mu.size() != lam.size():
        raise DomainError(f"dominance compares partitions of equal size, got |{mu}|={mu.size()} and |{lam}|={lam.size()}")
    pairs = zip_longest(mu, lam, fillvalue=0)
    mu_parts, lam_parts = zip(*pairs) if mu or lam else ((), ())
    return all(l >= m for m, l in zip(accumulate(mu_parts), accumulate(lam_parts)))
