import logging
import os

Word = str

MAX_BRUTEFORCE_ENV = "SHADOWSTATES_MAX_BRUTEFORCE"
DEFAULT_MAX_BRUTEFORCE = 22


class StructuralError(ValueError):
    """The darts and arcs handed over do not describe a valid knot shadow."""


class BruteForceCapError(ValueError):
    def __init__(self, crossings: int, cap: int):
        self.crossings = crossings
        self.cap = cap
        super().__init__(
            f"Refusing to enumerate 2^{crossings} states: {crossings} crossings exceed "
            f"the brute-force cap of {cap} (raise it with {MAX_BRUTEFORCE_ENV})"
        )


class DomainError(ValueError):
    """A word handed to a word map lies outside the map's domain.

    Attributes:
        shape: Name of the block shape the word was expected to have.
    """

    def __init__(self, word: Word, shape: str):
        self.word = word
        self.shape = shape
        super().__init__(f"Word '{word}' does not have the expected shape {shape}")


class ToleranceError(ValueError):
    pass


def validate(
    condition: bool,
    error_message: str | None = None,
    error: type[ValueError] = ValueError,
):
    if not condition:
        raise error(error_message)


def is_binary_word(word: Word) -> bool:
    return not word.strip("01")


def max_bruteforce() -> int:
    """Brute-force crossing cap, read from the environment on every call."""
    raw = os.environ.get(MAX_BRUTEFORCE_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_BRUTEFORCE
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_BRUTEFORCE_ENV} must be an integer, got '{raw}'")
    validate(cap >= 0, f"{MAX_BRUTEFORCE_ENV} must be nonnegative, got {cap}")
    return cap


def check_cap(crossings: int, max_crossings: int | None = None):
    cap = max_bruteforce() if max_crossings is None else max_crossings
    if crossings > cap:
        raise BruteForceCapError(crossings, cap)
    if crossings > 16:
        logging.info("Enumerating 2^%d states, this may take a while", crossings)
