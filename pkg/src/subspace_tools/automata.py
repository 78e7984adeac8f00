"""
Deterministic finite automata with output and the automatic sequences they
generate from reversed base-k expansions.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from .errors import InvalidAutomaton, InvalidDigit
from .words import Alphabet, Word, complexity


@dataclass(frozen=True)
class FiniteAutomaton:
    base: int
    states: tuple
    initial: str
    transitions: dict  # state -> tuple of next states, one per digit
    output: dict  # state -> letter

    def __post_init__(self):
        if self.base < 2:
            raise InvalidAutomaton("input base must be at least 2")
        states = tuple(self.states)
        if not states or len(set(states)) != len(states):
            raise InvalidAutomaton("states must be a nonempty list without duplicates")
        object.__setattr__(self, "states", states)
        if self.initial not in states:
            raise InvalidAutomaton(f"initial state {self.initial!r} is not a state")
        table = {}
        for st in states:
            row = self.transitions.get(st)
            if row is None or len(row) != self.base:
                raise InvalidAutomaton(f"state {st!r} needs exactly {self.base} transitions")
            for nxt in row:
                if nxt not in states:
                    raise InvalidAutomaton(f"transition from {st!r} to unknown state {nxt!r}")
            table[st] = tuple(row)
        object.__setattr__(self, "transitions", table)
        missing = [st for st in states if st not in self.output]
        if missing:
            raise InvalidAutomaton(f"no output for states {missing}")
        object.__setattr__(self, "output", {st: self.output[st] for st in states})

    @property
    def output_alphabet(self) -> Alphabet:
        return Alphabet(tuple(dict.fromkeys(self.output[s] for s in self.states)))

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteAutomaton":
        try:
            return cls(
                base=int(data["base"]),
                states=tuple(data["states"]),
                initial=data["initial"],
                transitions={k: tuple(v) for k, v in data["transitions"].items()},
                output=dict(data["output"]),
            )
        except KeyError as exc:
            raise InvalidAutomaton(f"missing field {exc}") from None

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "states": list(self.states),
            "initial": self.initial,
            "transitions": {k: list(v) for k, v in self.transitions.items()},
            "output": dict(self.output),
        }

    @classmethod
    def load(cls, path) -> "FiniteAutomaton":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def run(self, digits: Sequence[int]) -> str:
        state = self.initial
        for d in digits:
            d = int(d)
            if not 0 <= d < self.base:
                raise InvalidDigit(f"digit {d} is not valid in base {self.base}")
            state = self.transitions[state][d]
        return self.output[state]


def base_digits(n: int, k: int) -> list[int]:
    """Most-significant-first base-k digits; 0 is the single digit [0]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [0]
    out = []
    while n:
        n, r = divmod(n, k)
        out.append(r)
    return out[::-1]


def automatic_term(m: FiniteAutomaton, n: int) -> str:
    # the expansion is fed least significant digit first
    return m.run(base_digits(n, m.base)[::-1])


def automatic_prefix(m: FiniteAutomaton, N: int) -> Word:
    if N < 1:
        raise ValueError("N must be positive")
    return Word(tuple(automatic_term(m, n) for n in range(N)), m.output_alphabet)


def thue_morse_term(n: int) -> str:
    return str(bin(n).count("1") % 2)


def thue_morse_direct(N: int) -> Word:
    if N < 1:
        raise ValueError("N must be positive")
    return Word(tuple(thue_morse_term(n) for n in range(N)), Alphabet(("0", "1")))


def measured_complexity_slope(m: FiniteAutomaton, N: int, nmax: int) -> Fraction:
    """max_{1<=n<=nmax} complexity(prefix, n) / n."""
    if nmax > N // 2:
        raise ValueError("nmax must be at most N/2")
    w = automatic_prefix(m, N)
    return max(Fraction(complexity(w, n), n) for n in range(1, nmax + 1))


BUNDLED_MACHINES = {
    "figure1": "figure1.json",
    "thue-morse": "thue_morse.json",
    "constant": "constant.json",
}


def bundled_machine(name: str) -> FiniteAutomaton:
    fname = BUNDLED_MACHINES[name]
    text = resources.files("subspace_tools.data").joinpath(fname).read_text()
    return FiniteAutomaton.from_dict(json.loads(text))


def figure1_machine() -> FiniteAutomaton:
    return bundled_machine("figure1")


def thue_morse_machine() -> FiniteAutomaton:
    return bundled_machine("thue-morse")


def resolve_machine(ref: str) -> FiniteAutomaton:
    """Load a machine by path, falling back to a bundled name or file name."""
    p = Path(ref)
    if p.is_file():
        return FiniteAutomaton.load(p)
    key = ref if ref in BUNDLED_MACHINES else None
    if key is None:
        for name, fname in BUNDLED_MACHINES.items():
            if p.name == fname or p.stem == name:
                key = name
                break
    if key is None:
        raise FileNotFoundError(f"no automaton file or bundled machine named {ref!r}")
    return bundled_machine(key)
