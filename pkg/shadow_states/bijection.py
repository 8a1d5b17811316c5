"""Bijection between region codes of n + 1 circles and 2-states of the
n-twist knot.

Block words:
    pi(l, r)     = 0^r 1^{l-r}          1 <= r <= l - 1
    pibar(l, r)  = 1^r 0^{l-r}          1 <= r <= l - 1
    omega(l, r)  = 1^r 0 1^{l-r-1}      0 <= r <= l - 1

phi sends pi(l + 1, r) to omega(l, r - 1) and phi_bar does the same for
pibar. A region code is routed by its block shape:

    0^{n+1}           -> 01 1^n
    1^{n+1}           -> 10 1^n
    0^k 1^m           -> 00 phi(.)
    1^k 0^m           -> 11 phi_bar(.)
    pi_1 0^p          -> 01 1^{p-1} 0 phi(pi_1)        pi_1 of shape 0^k 1^m
    pi_1 1^p          -> 10 1^{p-1} 0 phi_bar(pi_1)    pi_1 of shape 1^k 0^m

where p is the full length of the trailing run, so 1 <= p <= n - 1.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import pandas as pd

from shadow_states.common import DomainError, Word, check_cap, validate
from shadow_states.knot_families import Family
from shadow_states.state_words import (
    BlockShape,
    WordSet,
    census_2_states,
    gen_P,
    gen_P_block,
    gen_Tau2,
    is_bitonic,
    run_lengths,
)

# n = 0 has no room for the block machinery.
BASE_MAP = {"0": "01", "1": "10"}
BASE_INVERSE = {v: k for k, v in BASE_MAP.items()}

CENSUS_CHECK_MAX_N = 12


class BlockKind(str, Enum):
    PI = "pi"
    PI_BAR = "pibar"
    OMEGA = "omega"


@dataclass(frozen=True)
class BlockWord:
    length: int
    r: int
    kind: BlockKind

    def __post_init__(self):
        if self.kind == BlockKind.OMEGA:
            validate(0 <= self.r <= self.length - 1, f"omega needs 0 <= r < l, got {self}")
        else:
            validate(1 <= self.r <= self.length - 1, f"pi needs 0 < r < l, got {self}")

    def expand(self) -> Word:
        match self.kind:
            case BlockKind.PI:
                return "0" * self.r + "1" * (self.length - self.r)
            case BlockKind.PI_BAR:
                return "1" * self.r + "0" * (self.length - self.r)
            case BlockKind.OMEGA:
                return "1" * self.r + "0" + "1" * (self.length - self.r - 1)
        raise ValueError(self.kind)


def _parse_pi(word: Word, lead: str, shape: str) -> BlockWord:
    runs = run_lengths(word)
    if len(runs) != 2 or runs[0][0] != lead:
        raise DomainError(word, shape)
    kind = BlockKind.PI if lead == "0" else BlockKind.PI_BAR
    return BlockWord(len(word), runs[0][1], kind)


def _parse_omega(word: Word) -> BlockWord:
    if not word or word.count("0") != 1 or word.count("1") != len(word) - 1:
        raise DomainError(word, "T")
    return BlockWord(len(word), word.index("0"), BlockKind.OMEGA)


def phi(word: Word) -> Word:
    block = _parse_pi(word, "0", "P00")
    return BlockWord(block.length - 1, block.r - 1, BlockKind.OMEGA).expand()


def phi_bar(word: Word) -> Word:
    block = _parse_pi(word, "1", "P11")
    return BlockWord(block.length - 1, block.r - 1, BlockKind.OMEGA).expand()


def phi_inv(word: Word) -> Word:
    block = _parse_omega(word)
    return BlockWord(block.length + 1, block.r + 1, BlockKind.PI).expand()


def phi_bar_inv(word: Word) -> Word:
    block = _parse_omega(word)
    return BlockWord(block.length + 1, block.r + 1, BlockKind.PI_BAR).expand()


def restriction(word: Word) -> BlockShape:
    """Which part of the twist knot states ``word`` is sent to."""
    if not word or not is_bitonic(word):
        raise DomainError(word, "bitonic")
    runs = run_lengths(word)
    if len(runs) == 1:
        return BlockShape.ZERO_ONE if runs[0][0] == "0" else BlockShape.ONE_ZERO
    if len(runs) == 2:
        return BlockShape.ZERO_ZERO if runs[0][0] == "0" else BlockShape.ONE_ONE
    return BlockShape.ZERO_ONE if runs[0][0] == "0" else BlockShape.ONE_ZERO


def varphi(word: Word) -> Word:
    """Map a region code of n + 1 circles to a 2-state of the n-twist knot."""
    if not word or not is_bitonic(word):
        raise DomainError(word, "bitonic")
    if len(word) == 1:
        return BASE_MAP[word]

    n = len(word) - 1
    runs = run_lengths(word)
    match runs:
        case [("0", _)]:
            return "01" + "1" * n
        case [("1", _)]:
            return "10" + "1" * n
        case [("0", _), _]:
            return "00" + phi(word)
        case [("1", _), _]:
            return "11" + phi_bar(word)
        case [(lead, _), _, (_, p)]:
            head = word[: len(word) - p]
            mapped = phi(head) if lead == "0" else phi_bar(head)
            prefix = "01" if lead == "0" else "10"
            return prefix + "1" * (p - 1) + "0" + mapped
    raise DomainError(word, "bitonic")


def varphi_inv(word: Word) -> Word:
    """Inverse of `varphi` on the 2-states of the n-twist knot."""
    if len(word) == 2:
        if word not in BASE_INVERSE:
            raise DomainError(word, "Tau2")
        return BASE_INVERSE[word]
    if len(word) < 2 or any(bit not in "01" for bit in word):
        raise DomainError(word, "Tau2")

    prefix, rest = word[:2], word[2:]
    n = len(rest)
    match prefix:
        case "00":
            return _checked(phi_inv, rest, word, "00T")
        case "11":
            return _checked(phi_bar_inv, rest, word, "11T")
    shape = prefix + "F"
    if rest == "1" * n:
        return ("0" if prefix == "01" else "1") * (n + 1)
    if rest.count("0") != 2:
        raise DomainError(word, shape)
    p = rest.index("0") + 1
    tail = rest[p:]
    if prefix == "01":
        return _checked(phi_inv, tail, word, shape) + "0" * p
    return _checked(phi_bar_inv, tail, word, shape) + "1" * p


def _checked(inverse: Callable[[Word], Word], part: Word, word: Word, shape: str) -> Word:
    try:
        return inverse(part)
    except DomainError:
        raise DomainError(word, shape)


@dataclass
class BijectionReport:
    n: int
    is_bijection: bool = True
    domain_size: int = 0
    image_size: int = 0
    counterexamples: list[str] = field(default_factory=list)

    def fail(self, message: str):
        self.is_bijection = False
        self.counterexamples.append(message)


def verify_bijection(n: int, max_crossings: int | None = None) -> BijectionReport:
    """Exhaustively check that `varphi` is a bijection onto the n-twist knot's
    2-states, and that both round trips are identities.

    For n up to 12 the image is also compared with the brute-force census of
    the n-twist knot, as long as the brute-force cap allows it.
    """
    validate(n >= 0, f"n must be >= 0, got {n}")
    report = BijectionReport(n)
    domain = gen_P(n + 1)
    target = gen_Tau2(n)
    report.domain_size = len(domain)

    images: dict[Word, Word] = {}
    for word in domain:
        try:
            image = varphi(word)
        except DomainError as e:
            report.fail(f"varphi({word}) raised: {e}")
            continue
        if image in images:
            report.fail(f"varphi({word}) = varphi({images[image]}) = {image}")
        images[image] = word
        if len(image) != len(word) + 1:
            report.fail(f"varphi({word}) = {image} has the wrong length")
        try:
            back = varphi_inv(image)
        except DomainError as e:
            report.fail(f"varphi_inv({image}) raised: {e}")
            continue
        if back != word:
            report.fail(f"varphi_inv(varphi({word})) = {back}")

    image_set = WordSet.of(n + 2, images)
    report.image_size = len(image_set)
    for stray in image_set.symmetric_difference(target):
        report.fail(f"{stray} is in exactly one of the image and the twist knot states")

    for word in target:
        try:
            if varphi(varphi_inv(word)) != word:
                report.fail(f"varphi(varphi_inv({word})) != {word}")
        except DomainError as e:
            report.fail(f"round trip of {word} raised: {e}")

    if n <= CENSUS_CHECK_MAX_N:
        try:
            check_cap(n + 2, max_crossings)
        except ValueError:
            logging.info("Skipping the census comparison for n=%d", n)
        else:
            census = census_2_states(Family.TWIST_KNOT, n, max_crossings)
            for stray in census.symmetric_difference(image_set):
                report.fail(f"{stray} is in exactly one of the image and the census")

    if not report.is_bijection:
        logging.warning("varphi is not a bijection for n=%d", n)
    return report


def _hat_blocks(m: int, lead: str) -> list[Word]:
    """Rows of the 01 (lead "0") or 10 (lead "1") column, including the
    constant word, in the order they are built by appending one bit."""
    if m == 1:
        return [lead]
    shape = BlockShape.ZERO_ZERO if lead == "0" else BlockShape.ONE_ONE
    return [w + lead for w in _hat_blocks(m - 1, lead) + _ascending(m - 1, shape)]


def _ascending(m: int, shape: BlockShape) -> list[Word]:
    lead = "0" if shape == BlockShape.ZERO_ZERO else "1"
    words = list(gen_P_block(m, shape))
    return sorted(words, key=lambda w: len(w) - len(w.lstrip(lead)))


TABLE_COLUMNS = ["P01hat", "P00", "01F", "00T", "P10hat", "P11", "10F", "11T"]


def bijection_table(n: int) -> pd.DataFrame:
    """Region codes of n + 1 circles next to their images, one block per
    column pair. Shorter columns are padded with empty strings."""
    validate(n >= 0, f"n must be >= 0, got {n}")
    m = n + 1
    sources = {
        "P01hat": _hat_blocks(m, "0"),
        "P00": _ascending(m, BlockShape.ZERO_ZERO),
        "P10hat": _hat_blocks(m, "1"),
        "P11": _ascending(m, BlockShape.ONE_ONE),
    }
    images = {
        "01F": [varphi(w) for w in sources["P01hat"]],
        "00T": [varphi(w) for w in sources["P00"]],
        "10F": [varphi(w) for w in sources["P10hat"]],
        "11T": [varphi(w) for w in sources["P11"]],
    }
    columns = sources | images
    height = max(len(c) for c in columns.values())
    return pd.DataFrame(
        {name: columns[name] + [""] * (height - len(columns[name])) for name in TABLE_COLUMNS}
    )
