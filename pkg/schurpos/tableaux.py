from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import DomainError
from .partitions import Composition, Partition, _integer_part


class Tableau:
    """A filling of a Young diagram with positive integers.

    Parameters:
        rows (`Iterable[Iterable[int]]`): The entries, top row first.
        validate (`bool`, optional): Check the semistandard conditions (default ``True``).

    Raises:
        :class:`DomainError`: If an entry is not an integer or the row lengths are not a partition.
            With ``validate``, also when a row decreases or a column does not strictly increase.
    """

    __slots__ = ("_shape", "_rows")

    def __init__(self, rows: Iterable[Iterable[int]], validate: bool = True) -> None:
        self._rows: Tuple[Tuple[int, ...], ...] = tuple(tuple(_integer_part(e) for e in row) for row in rows)
        self._shape = Partition(len(row) for row in self._rows)
        if len(self._shape) != len(self._rows):
            raise DomainError("tableau rows must be non-empty")
        if validate and not is_semistandard(self._rows):
            raise DomainError(f"not a semistandard tableau: {self._rows}")

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({[list(r) for r in self._rows]!r})"

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self._rows == other._rows

    def __lt__(self, other: "Tableau") -> bool:
        return self.reading_word() < other.reading_word()

    def __hash__(self) -> int:
        return hash(self._rows)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self._rows[i][j]

    @property
    def shape(self) -> Partition:
        return self._shape

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rows

    def reading_word(self) -> Tuple[int, ...]:
        """Entries read row by row, top to bottom, left to right."""
        return tuple(e for row in self._rows for e in row)

    def max_entry(self) -> int:
        return max(self.reading_word(), default=0)


def is_semistandard(rows: Sequence[Sequence[int]]) -> bool:
    """Check rows weakly increase, columns strictly increase and all entries are positive."""
    for r, row in enumerate(rows):
        if any(e < 1 for e in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if r and any(row[c] <= rows[r - 1][c] for c in range(len(row))):
            return False
    return True


def _fill(shape: Partition, max_entry: int, counts: Optional[List[int]]) -> Iterator[Tableau]:
    """Backtrack over cells in reading order, bounding each entry from the cell above and left.

    With ``counts`` given, entry ``v`` may only be used while ``counts[v-1] > 0``. The search
    keeps its own stack of (next value, upper bound) per cell, so its depth is not limited by
    the interpreter's recursion limit.
    """
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    if not cells:
        yield Tableau(grid, validate=False)
        return
    # column heights give the largest entry a cell can hold and still leave room below
    heights = [sum(1 for length in shape if length > c) for c in range(shape[0])]
    next_value = [0] * len(cells)
    bound = [0] * len(cells)

    def enter(pos: int) -> None:
        r, c = cells[pos]
        low = grid[r][c - 1] if c else 1
        if r:
            low = max(low, grid[r - 1][c] + 1)
        next_value[pos] = low
        bound[pos] = max_entry - (heights[c] - r - 1)

    last = len(cells) - 1
    pos = 0
    enter(0)
    while pos >= 0:
        r, c = cells[pos]
        v = grid[r][c]
        if v:
            grid[r][c] = 0
            if counts is not None:
                counts[v - 1] += 1
        v = next_value[pos]
        if counts is not None:
            while v <= bound[pos] and not counts[v - 1]:
                v += 1
        if v > bound[pos]:
            pos -= 1
            continue
        next_value[pos] = v + 1
        grid[r][c] = v
        if counts is not None:
            counts[v - 1] -= 1
        if pos == last:
            yield Tableau(grid, validate=False)
        else:
            pos += 1
            enter(pos)


def enumerate_ssyt(shape: Partition, max_entry: int) -> List[Tableau]:
    """All semistandard tableaux of ``shape`` with entries in ``{1, ..., max_entry}``.

    Tableaux come out in lexicographic order of their reading words. A shape with more
    rows than ``max_entry`` has no fillings and gives an empty list.

    Raises:
        :class:`DomainError`: If ``max_entry`` is negative.
    """
    if max_entry < 0:
        raise DomainError(f"max_entry must be non-negative, got {max_entry}")
    if len(shape) > max_entry:
        return []
    return list(_fill(shape, max_entry, None))


def enumerate_ssyt_content(shape: Partition, content: Composition) -> List[Tableau]:
    """All semistandard tableaux of ``shape`` in which ``i`` appears exactly ``content[i-1]`` times.

    Returns an empty list when ``sum(content) != |shape|``.
    """
    if any(c < 0 for c in content):
        raise DomainError(f"content entries must be non-negative, got {tuple(content)}")
    if sum(content) != shape.size():
        return []
    return list(_fill(shape, len(content), list(content)))


def count_ssyt_content(shape: Partition, content: Composition) -> int:
    """Number of tableaux :func:`enumerate_ssyt_content` would return, without keeping them."""
    if sum(content) != shape.size() or any(c < 0 for c in content):
        return 0
    return sum(1 for _ in _fill(shape, len(content), list(content)))


def weight(t: Tableau) -> Composition:
    """The content of ``t``: component ``i`` counts the entries equal to ``i+1``."""
    counts: Dict[int, int] = {}
    for e in t.reading_word():
        counts[e] = counts.get(e, 0) + 1
    return tuple(counts.get(i, 0) for i in range(1, t.max_entry() + 1))


def bender_knuth(t: Tableau, i: int) -> Tableau:
    """Apply the Bender-Knuth involution exchanging the multiplicities of ``i`` and ``i+1``.

    An ``i`` with an ``i+1`` directly below it, and an ``i+1`` with an ``i`` directly above
    it, are fixed. In every row the remaining free entries form a block of ``a`` copies of
    ``i`` followed by ``b`` copies of ``i+1``; the block is rewritten as ``b`` copies of
    ``i`` followed by ``a`` copies of ``i+1``.

    Raises:
        :class:`DomainError`: If ``i < 1``.
    """
    if i < 1:
        raise DomainError(f"Bender-Knuth index must be at least 1, got {i}")
    rows = [list(row) for row in t.rows]
    for r, row in enumerate(t.rows):
        free: List[int] = []
        for c, e in enumerate(row):
            if e == i:
                below = t.rows[r + 1][c] if r + 1 < len(t.rows) and c < len(t.rows[r + 1]) else None
                if below != i + 1:
                    free.append(c)
            elif e == i + 1:
                above = t.rows[r - 1][c] if r else None
                if above != i:
                    free.append(c)
        if not free:
            continue
        a = sum(1 for c in free if row[c] == i)
        b = len(free) - a
        for offset, c in enumerate(free):
            rows[r][c] = i if offset < b else i + 1
    return Tableau(rows, validate=False)
