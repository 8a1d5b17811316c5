"""Binary word sets: region codes of circle rosettes and 2-state encodings.

Naming follows the word sets they generate:
    P        region codes of n circles, i.e. the bitonic words of length n
    T2       2-states of the n-twist loop
    F2       2-states of the n-foil
    Tau2     2-states of the n-twist knot (length n + 2)
"""
import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

from shadow_states.common import Word, is_binary_word, validate
from shadow_states.knot_families import Family, FamilySpec, build, foil, twist_loop
from shadow_states.shadow_core import state_census


@dataclass(frozen=True)
class WordSet:
    """Sorted, duplicate-free words of a common length n."""

    n: int
    members: tuple[Word, ...] = ()

    def __post_init__(self):
        validate(
            all(len(w) == self.n for w in self.members),
            f"Not all words have length {self.n}",
        )
        validate(all(is_binary_word(w) for w in self.members), "Words must be binary")
        validate(
            all(a < b for a, b in zip(self.members, self.members[1:])),
            "Members must be sorted and unique",
        )

    @classmethod
    def of(cls, n: int, words: Iterable[Word]) -> "WordSet":
        return cls(n, tuple(sorted(set(words))))

    def __iter__(self) -> Iterator[Word]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def _lookup(self) -> frozenset[Word]:
        return frozenset(self.members)

    def __contains__(self, word: object) -> bool:
        return word in self._lookup

    def __or__(self, other: "WordSet") -> "WordSet":
        validate(self.n == other.n, f"Cannot join words of length {self.n} and {other.n}")
        return WordSet.of(self.n, self.members + other.members)

    def prefixed(self, prefix: Word) -> "WordSet":
        return WordSet.of(self.n + len(prefix), (prefix + w for w in self.members))

    def suffixed(self, suffix: Word) -> "WordSet":
        return WordSet.of(self.n + len(suffix), (w + suffix for w in self.members))

    def symmetric_difference(self, other: "WordSet") -> list[Word]:
        return sorted(set(self.members) ^ set(other.members))


class WordMethod(str, Enum):
    CLOSED = "closed"
    RECURSIVE = "recursive"
    FILTER = "filter"
    DEFINITION = "definition"
    PSI_RECURSION = "psi_recursion"
    PSI_STEP = "psi_step"


class BlockShape(str, Enum):
    ZERO_ONE = "01"
    ONE_ZERO = "10"
    ZERO_ZERO = "00"
    ONE_ONE = "11"


def run_lengths(word: Word) -> list[tuple[str, int]]:
    return [(bit, len(list(run))) for bit, run in itertools.groupby(word)]


def is_bitonic(word: Word) -> bool:
    """At most two changes between 0 and 1, reading left to right."""
    return is_binary_word(word) and len(run_lengths(word)) <= 3


def gen_P_block(n: int, which: BlockShape | str) -> WordSet:
    """One block of the region codes.

    00: 0^k 1^{n-k}; 11: 1^k 0^{n-k}; 01: 0^k 1^{n-p-k} 0^p;
    10: 1^k 0^{n-p-k} 1^p; with k, p >= 1 and every run nonempty.
    """
    which = BlockShape(which)
    words = []
    match which:
        case BlockShape.ZERO_ZERO:
            words = ["0" * k + "1" * (n - k) for k in range(1, n)]
        case BlockShape.ONE_ONE:
            words = ["1" * k + "0" * (n - k) for k in range(1, n)]
        case BlockShape.ZERO_ONE:
            words = [
                "0" * k + "1" * (n - p - k) + "0" * p
                for p in range(1, n - 1)
                for k in range(1, n - p)
            ]
        case BlockShape.ONE_ZERO:
            words = [
                "1" * k + "0" * (n - p - k) + "1" * p
                for p in range(1, n - 1)
                for k in range(1, n - p)
            ]
    return WordSet.of(max(n, 0), words)


def _P_closed(n: int) -> WordSet:
    words: list[Word] = ["0" * n, "1" * n]
    for shape in BlockShape:
        words.extend(gen_P_block(n, shape))
    return WordSet.of(n, words)


def _P_recursive(n: int) -> WordSet:
    if n == 1:
        return WordSet.of(1, ["0", "1"])
    m = n - 1
    words: list[Word] = ["0" * n, "1" * n]
    for p in range(m):
        words.extend(w + "0" * p for w in gen_P_block(m - p + 1, BlockShape.ZERO_ZERO))
        words.extend(w + "1" * p for w in gen_P_block(m - p + 1, BlockShape.ONE_ONE))
    return WordSet.of(n, words)


def _P_filter(n: int) -> WordSet:
    words = ("".join(bits) for bits in itertools.product("01", repeat=n))
    return WordSet.of(n, (w for w in words if is_bitonic(w)))


def gen_P(n: int, method: WordMethod | str = WordMethod.CLOSED) -> WordSet:
    """Region codes of the rosette of n circles; {ε} for the bare plane."""
    validate(n >= 0, f"n must be >= 0, got {n}")
    method = WordMethod(method)
    if n == 0:
        return WordSet.of(0, [""])
    match method:
        case WordMethod.CLOSED:
            return _P_closed(n)
        case WordMethod.RECURSIVE:
            return _P_recursive(n)
        case WordMethod.FILTER:
            return _P_filter(n)
    raise ValueError(f"Region codes have no '{method.value}' method")


def extend_P(codes: WordSet) -> WordSet:
    """Codes after a new circle is centred on the arc between the last and
    the first centre.

    Old codes take a copy of their first bit for the new circle. The new
    lune and the regions it cuts off the old lunes add 0^k 1^{n+1-k} and
    1^k 0^{n+1-k} for k = 1..n.
    """
    n = codes.n
    validate(n >= 1, "Extending needs at least one circle")
    grown = [w + w[0] for w in codes]
    fresh = [
        word
        for k in range(1, n + 1)
        for word in ("0" * k + "1" * (n + 1 - k), "1" * k + "0" * (n + 1 - k))
    ]
    return WordSet.of(n + 1, grown + fresh)


def gen_T2(n: int) -> WordSet:
    """Words 1^k 0 1^{n-k-1}: the twist loop splits into two loops exactly
    when one crossing takes the A-split."""
    validate(n >= 0, f"n must be >= 0, got {n}")
    return WordSet.of(n, ("1" * k + "0" + "1" * (n - k - 1) for k in range(n)))


def gen_F2(n: int, method: WordMethod | str = WordMethod.CLOSED) -> WordSet:
    validate(n >= 0, f"n must be >= 0, got {n}")
    method = WordMethod(method)
    match method:
        case WordMethod.CLOSED:
            if n == 0:
                return WordSet.of(0, [""])
            two_zeros = [
                "1" * p + "0" + "1" * k + "0" + "1" * (n - p - k - 2)
                for p in range(n - 1)
                for k in range(n - p - 1)
            ]
            return WordSet.of(n, two_zeros + ["1" * n])
        case WordMethod.RECURSIVE:
            words = WordSet.of(0, [""])
            for m in range(1, n + 1):
                words = gen_T2(m - 1).prefixed("0") | words.prefixed("1")
            return words
    raise ValueError(f"Foil states have no '{method.value}' method")


_PSI_PREFIX = {"01": "011", "10": "101", "00": "010", "11": "100"}


def psi(word: Word) -> Word:
    """Rewrite the first two bits: 01 -> 011, 10 -> 101, 00 -> 010, 11 -> 100."""
    validate(len(word) >= 2, f"psi needs a word of length >= 2, got '{word}'")
    validate(is_binary_word(word), f"'{word}' is not a binary word")
    return _PSI_PREFIX[word[:2]] + word[2:]


def psi_pow(word: Word, p: int) -> Word:
    validate(p >= 0, f"p must be >= 0, got {p}")
    for _ in range(p):
        word = psi(word)
    return word


def psi_set(words: WordSet) -> WordSet:
    return WordSet.of(words.n + 1, (psi(w) for w in words))


def _tau2_definition(n: int) -> WordSet:
    foils = gen_F2(n)
    loops = gen_T2(n)
    return (
        foils.prefixed("01")
        | foils.prefixed("10")
        | loops.prefixed("00")
        | loops.prefixed("11")
    )


def _tau2_psi_recursion(n: int) -> WordSet:
    words = [psi_pow(w, n) for w in ("01", "10")]
    for p in range(n):
        for head in (psi_pow("00", p), psi_pow("11", p)):
            words.extend(head + w for w in gen_T2(n - p))
    return WordSet.of(n + 2, words)


def _tau2_psi_step(n: int) -> WordSet:
    words = WordSet.of(2, ["01", "10"])
    for m in range(1, n + 1):
        loops = gen_T2(m)
        words = psi_set(words) | loops.prefixed("00") | loops.prefixed("11")
    return words


def gen_Tau2(n: int, method: WordMethod | str = WordMethod.DEFINITION) -> WordSet:
    """2-states of the n-twist knot; the first two bits are the clasp."""
    validate(n >= 0, f"n must be >= 0, got {n}")
    method = WordMethod(method)
    match method:
        case WordMethod.DEFINITION:
            return _tau2_definition(n)
        case WordMethod.PSI_RECURSION:
            return _tau2_psi_recursion(n)
        case WordMethod.PSI_STEP:
            return _tau2_psi_step(n)
    raise ValueError(f"Twist knot states have no '{method.value}' method")


def census_words(census: dict[int, list[Word]], n: int, k: int) -> WordSet:
    return WordSet.of(n, census.get(k, []))


def lemma_F1_equals_T2_check(n: int, max_crossings: int | None = None) -> bool:
    """Whether the 1-states of the n-foil are the 2-states of the n-twist loop."""
    validate(n >= 1, f"n must be >= 1, got {n}")
    foil_ones = census_words(state_census(foil(n), max_crossings), n, 1)
    loop_twos = census_words(state_census(twist_loop(n), max_crossings), n, 2)
    return foil_ones == loop_twos


def twist_knot_states_from_parts(
    n: int, k: int, max_crossings: int | None = None
) -> WordSet:
    """k-states of the n-twist knot assembled from loop and foil censuses.

    The clasp split 00 leaves the twist loop, 01 and 10 leave the foil, and
    11 leaves the foil next to a separate loop.
    """
    loops = state_census(twist_loop(n), max_crossings)
    foils = state_census(foil(n), max_crossings)
    return (
        census_words(loops, n, k).prefixed("00")
        | census_words(foils, n, k).prefixed("01")
        | census_words(foils, n, k).prefixed("10")
        | census_words(foils, n, k - 1).prefixed("11")
    )


def census_2_states(family: Family, n: int, max_crossings: int | None = None) -> WordSet:
    diagram = build(FamilySpec(Family(family), n))
    return census_words(state_census(diagram, max_crossings), diagram.n, 2)
