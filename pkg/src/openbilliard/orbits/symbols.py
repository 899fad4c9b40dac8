import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

import openbilliard as ob


@dataclass(frozen=True)
class SymbolSequence:
    """
    A word over the obstacle indices, coding the order in which obstacles are hit.

    Symbols are zero-based obstacle indices. Admissible words never repeat a symbol in
    consecutive positions; a periodic word additionally has distinct last and first symbols.

    Attributes
    ----------
    symbols : tuple[int, ...]
        The obstacle indices.
    periodic : bool, default=True
        Whether the word is read cyclically.

    Raises
    ------
    ob.InadmissibleSequenceError
        If the word is empty, contains negative symbols or repeats a symbol consecutively.

    Examples
    --------
    >>> SymbolSequence((2, 0, 1)).canonical().symbols
    (0, 1, 2)
    """

    symbols: tuple[int, ...]
    periodic: bool = True

    def __post_init__(self) -> None:
        symbols = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", symbols)

        if not symbols:
            raise ob.InadmissibleSequenceError("A symbol sequence must not be empty.")
        if min(symbols) < 0:
            raise ob.InadmissibleSequenceError(f"Symbols must not be negative: {symbols}.")
        for position in range(len(symbols) - 1):
            if symbols[position] == symbols[position + 1]:
                raise ob.InadmissibleSequenceError(
                    f"Symbol {symbols[position]} repeats at position {position}."
                )
        if self.periodic and len(symbols) > 1 and symbols[-1] == symbols[0]:
            raise ob.InadmissibleSequenceError(
                f"Periodic sequence {symbols} starts and ends with the same symbol."
            )

    @classmethod
    def parse(cls, text: str, one_based: bool = True) -> "SymbolSequence":
        """
        Parses a comma-separated list such as "1,2,3" into a periodic sequence.

        Raises
        ------
        ob.InadmissibleSequenceError
            If the text is not a list of integers or the sequence is not admissible.
        """
        try:
            values = [int(item) for item in text.split(",") if item.strip()]
        except ValueError:
            raise ob.InadmissibleSequenceError(f"Cannot parse symbol sequence '{text}'.")
        offset = 1 if one_based else 0
        return cls(tuple(value - offset for value in values))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def rotate(self, shift: int) -> "SymbolSequence":
        shift %= len(self.symbols)
        return SymbolSequence(self.symbols[shift:] + self.symbols[:shift], self.periodic)

    def canonical(self) -> "SymbolSequence":
        """
        The lexicographically smallest rotation of a periodic sequence.
        """
        if not self.periodic:
            return self
        return min((self.rotate(k) for k in range(len(self))), key=lambda s: s.symbols)

    def is_primitive(self) -> bool:
        """
        Whether the periodic word is not a power of a shorter word.
        """
        n = len(self.symbols)
        for period in range(1, n):
            if n % period == 0 and self.symbols == self.symbols[:period] * (n // period):
                return False
        return True

    def check_alphabet(self, size: int) -> None:
        """
        Raises if the sequence names an obstacle index outside range(size).
        """
        if max(self.symbols) >= size:
            raise ob.InadmissibleSequenceError(
                f"Sequence {self.symbols} uses obstacle {max(self.symbols)}, "
                f"but the billiard has only {size} obstacles."
            )

    def one_based(self) -> str:
        return ",".join(str(s + 1) for s in self.symbols)


def _admissible_cyclic(word: Sequence[int]) -> bool:
    return all(word[k] != word[(k + 1) % len(word)] for k in range(len(word)))


def enumerate_periodic_sequences(
    size: int, max_period: int, min_period: int = 2
) -> Iterator[SymbolSequence]:
    """
    Lists all primitive admissible periodic words up to rotation.

    Words are produced by increasing period and in lexicographic order within a period;
    every rotation class appears once, represented by its smallest rotation.

    Parameters
    ----------
    size : int
        The number of obstacles u.
    max_period : int
        The largest period to enumerate.
    min_period : int, default=2
        The smallest period to enumerate.
    """
    if size < 2:
        raise ob.InvalidValueError(f"Need at least two symbols, got {size}.")

    for period in range(max(2, min_period), max_period + 1):
        for word in itertools.product(range(size), repeat=period):
            if word[0] != min(word):
                continue
            if not _admissible_cyclic(word):
                continue
            sequence = SymbolSequence(word)
            if sequence.canonical().symbols == word and sequence.is_primitive():
                yield sequence


def random_periodic_sequences(
    size: int, max_period: int, count: int, rng: np.random.Generator, min_period: int = 2
) -> list[SymbolSequence]:
    """
    Draws distinct primitive admissible periodic words uniformly over the admissible words.

    A period is drawn first, then each symbol uniformly among the ones differing from its
    predecessor; words that close badly or are not primitive are rejected. Duplicates up to
    rotation are removed, so fewer than count words may be returned for small alphabets.
    The result is sorted by period and canonical word to be independent of drawing order.
    """
    found: set[tuple[int, ...]] = set()
    attempts = 0
    while len(found) < count and attempts < 100 * count:
        attempts += 1
        period = int(rng.integers(max(2, min_period), max_period + 1))
        word = [int(rng.integers(size))]
        for _ in range(period - 1):
            step = int(rng.integers(1, size))
            word.append((word[-1] + step) % size)
        if word[-1] == word[0]:
            continue

        sequence = SymbolSequence(tuple(word))
        if sequence.is_primitive():
            found.add(sequence.canonical().symbols)

    return [SymbolSequence(word) for word in sorted(found, key=lambda w: (len(w), w))]
