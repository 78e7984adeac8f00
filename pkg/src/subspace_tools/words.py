"""
Finite words: factor complexity, disjoint repetitions, and the constructive
low-complexity => long-repetition argument.

Positions in :class:`Repetition` are 1-based (u_1 u_2 ... u_N).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputTooLarge, PreconditionFailed

ORACLE_MAX_LENGTH = 64


@dataclass(frozen=True)
class Alphabet:
    letters: tuple

    def __post_init__(self):
        letters = tuple(self.letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet has duplicate letters")
        object.__setattr__(self, "letters", letters)

    def __contains__(self, symbol) -> bool:
        return symbol in self.letters

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class Word:
    """A finite sequence of symbols drawn from an alphabet."""

    symbols: tuple
    alphabet: Alphabet | None = None

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if self.alphabet is None:
            seen = tuple(dict.fromkeys(sorted(set(symbols), key=str))) or ("0",)
            object.__setattr__(self, "alphabet", Alphabet(seen))
        else:
            bad = [s for s in symbols if s not in self.alphabet]
            if bad:
                raise ValueError(f"symbols outside the alphabet: {bad[:5]}")

    @classmethod
    def from_string(cls, text: str, alphabet: Iterable | None = None) -> "Word":
        return cls(tuple(text), Alphabet(tuple(alphabet)) if alphabet is not None else None)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.symbols[i], self.alphabet)
        return self.symbols[i]

    def prefix(self, n: int) -> "Word":
        return Word(self.symbols[:n], self.alphabet)

    def __str__(self) -> str:
        if all(isinstance(s, str) and len(s) == 1 for s in self.symbols):
            return "".join(self.symbols)
        return " ".join(map(str, self.symbols))


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.from_string(w)
    return Word(tuple(w))


@dataclass(frozen=True)
class Repetition:
    """Two disjoint equal factors u_k..u_{k+l-1} and u_n..u_{n+l-1}."""

    k: int
    n: int
    length: int

    def is_valid_in(self, w) -> bool:
        s = as_word(w).symbols
        N = len(s)
        if self.length < 1 or self.k < 1:
            return False
        if not (self.k + self.length <= self.n <= N + 1 - self.length):
            return False
        return all(s[self.k - 1 + j] == s[self.n - 1 + j] for j in range(self.length))


def factors(w, n: int) -> set:
    s = as_word(w).symbols
    return {s[i:i + n] for i in range(len(s) - n + 1)}


def complexity(w, n: int) -> int:
    """Number of distinct length-n factors of w."""
    if n < 1:
        raise ValueError("n must be positive")
    s = as_word(w).symbols
    if n > len(s):
        return 0
    return len(factors(s, n))


def complexity_profile(w, nmax: int) -> list[int]:
    return [complexity(w, n) for n in range(1, nmax + 1)]


def _better(cand, best) -> bool:
    # maximize length, then minimize k, then n
    if best is None:
        return True
    return (-cand[0], cand[1], cand[2]) < (-best[0], best[1], best[2])


def find_disjoint_repetition(w, min_length: int = 1) -> Repetition | None:
    """Longest pair of disjoint equal factors, ties broken by smallest k then n.

    Runs over every shift d = n - k; each maximal run of agreeing positions
    at shift d yields the candidate (min(run, d), run start, run start + d).
    """
    s = as_word(w).symbols
    N = len(s)
    best = None
    for d in range(1, N):
        i = 0
        while i + d < N:
            if s[i] != s[i + d]:
                i += 1
                continue
            start = i
            while i + d < N and s[i] == s[i + d]:
                i += 1
            length = min(i - start, d)
            cand = (length, start + 1, start + 1 + d)
            if _better(cand, best):
                best = cand
    if best is None or best[0] < max(1, min_length):
        return None
    return Repetition(k=best[1], n=best[2], length=best[0])


def brute_force_repetition_oracle(w, min_length: int = 1, max_length: int = ORACLE_MAX_LENGTH) -> Repetition | None:
    """Exhaustive search over (length, k, n); reference for the fast search."""
    s = as_word(w).symbols
    N = len(s)
    if N > max_length:
        raise InputTooLarge(f"oracle limited to words of length <= {max_length}")
    for length in range(N // 2, max(1, min_length) - 1, -1):
        for k in range(1, N + 1):
            for n in range(k + length, N + 2 - length):
                if s[k - 1:k - 1 + length] == s[n - 1:n - 1 + length]:
                    return Repetition(k, n, length)
    return None


def lemma_prefix_length(n: int, kappa) -> int:
    """N = ceil((kappa + 1) n)."""
    kappa = Fraction(kappa)
    return math.ceil((kappa + 1) * n)


def lemma_epsilon(kappa) -> Fraction:
    """The repetition ratio 1 / (6 (kappa + 1)) guaranteed by the lemma."""
    return 1 / (6 * (Fraction(kappa) + 1))


def repetition_from_low_complexity(w, n: int, kappa) -> Repetition:
    """Disjoint repetition of length >= n/3 inside the prefix of length ceil((kappa+1)n).

    Two equal n-factors exist in the prefix by pigeonhole. If they overlap,
    with offset a < n, the stretch they cover is a power of its first a
    letters, long enough to hold two disjoint copies of that block repeated
    floor(k/2) times, k = floor(n/a) + 1.
    """
    kappa = Fraction(kappa)
    s = as_word(w).symbols
    if n < 1 or kappa <= 0:
        raise PreconditionFailed("need n >= 1 and kappa > 0")
    rho = complexity(s, n)
    if not rho < kappa * n:
        raise PreconditionFailed(f"complexity {rho} is not below kappa*n = {kappa * n}")
    N = lemma_prefix_length(n, kappa)
    if len(s) < N:
        raise PreconditionFailed(f"word of length {len(s)} is shorter than N = {N}")

    first_seen: dict = {}
    i = j = None
    for pos in range(N - n + 1):
        f = s[pos:pos + n]
        if f in first_seen:
            i, j = first_seen[f], pos
            break
        first_seen[f] = pos
    if i is None:  # pragma: no cover - excluded by pigeonhole
        raise AssertionError("pigeonhole failed; complexity computation is inconsistent")

    a = j - i
    if a >= n:
        rep = Repetition(k=i + 1, n=j + 1, length=n)
    else:
        k = n // a + 1
        half = k // 2
        rep = Repetition(k=i + 1, n=i + 1 + half * a, length=half * a)
    assert rep.is_valid_in(s[:N])
    assert 3 * rep.length >= n
    return rep
