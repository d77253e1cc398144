"""Shared corpora and tiny definition-level helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from lrq.llr import ABSENT, Repeat
from lrq.oracle import naive_lr_at

ALPHABET_SIZES = (1, 2, 4, 26)


def make_corpus(count: int, max_n: int = 300, seed: str = "corpus-v1") -> list[bytes]:
    """Random lowercase test strings, alphabet size drawn per string."""
    rng = random.Random(seed)
    texts = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        sigma = rng.choice(ALPHABET_SIZES)
        texts.append(bytes(rng.choices(range(97, 97 + sigma), k=n)))
    return texts


def fibonacci_words(max_n: int) -> list[bytes]:
    """The a/b concatenation family: every member up to max_n bytes, plus the
    max_n-byte prefix of the first longer one."""
    words = [b"a", b"ab"]
    while len(words[-1]) <= max_n:
        words.append(words[-1] + words[-2])
    full = [w for w in words if len(w) <= max_n]
    full.append(words[-1][:max_n])
    return full


def adversarial_texts(max_n: int = 500) -> list[bytes]:
    """Structured worst cases: all-equal, strictly increasing, periodic and
    the Fibonacci words, in several lengths up to max_n."""
    texts = []
    texts.extend(b"a" * n for n in (1, 2, 57, max_n))
    texts.extend(bytes(range(n)) for n in (2, 50, 256))
    texts.extend(b"ab" * (n // 2) for n in (4, 100, max_n))
    texts.extend(b"abc" * (n // 3) for n in (6, 99, 498))
    texts.extend(fibonacci_words(max_n))
    return texts


def literal_lr_at(text: bytes, k: int) -> list[Repeat]:
    """Unpruned enumeration of all longest repeats covering k.

    Tries every (start, length) pair outright; cubic-ish and only for
    cross-checking the pruned oracle at tiny sizes.
    """
    n = len(text)
    found: list[Repeat] = []
    best = 0
    for i in range(1, k + 1):
        for j in range(k, n + 1):
            length = j - i + 1
            sub = text[i - 1 : j]
            first = text.find(sub)
            if text.find(sub, first + 1) == -1:
                continue
            if length > best:
                best = length
                found = [Repeat(i, length)]
            elif length == best:
                found.append(Repeat(i, length))
    found.sort()
    return found


@pytest.fixture(scope="session")
def corpus() -> list[bytes]:
    return make_corpus(1000)


@pytest.fixture(scope="session")
def corpus_oracle(corpus) -> list[list[list[Repeat]]]:
    """naive_lr_at answers for every position of every corpus string.

    Computed once per session; both the point-query and the global
    acceptance checks compare against this same data.
    """
    return [
        [naive_lr_at(text, k) for k in range(1, len(text) + 1)]
        for text in corpus
    ]


def leftmost_of(covering: list[Repeat]) -> Repeat:
    return covering[0] if covering else ABSENT
