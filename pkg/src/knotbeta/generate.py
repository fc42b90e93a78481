"""Seeded random long knots from braid closures."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import BraidWord, ClosedDiagram, DiagramValidationError, from_braid

MIN_STRANDS, MAX_STRANDS = 2, 5


class GenerationBudgetError(RuntimeError):
    def __init__(self, produced: list, attempts: int):
        super().__init__(
            f"gave up after {attempts} attempts with {len(produced)} knots produced"
        )
        self.produced = produced


@dataclass(frozen=True)
class GeneratedKnot:
    word: BraidWord
    diagram: ClosedDiagram


def random_braid_word(rng: random.Random, max_crossings: int) -> BraidWord:
    """Uniform letters over all generators and inverses; length 1..max_crossings."""
    length = rng.randint(1, max_crossings)
    strands = rng.randint(MIN_STRANDS, min(MAX_STRANDS, length + 1))
    letters = tuple(
        rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
    )
    return BraidWord(strands, letters)


def random_knots(
    seed: int, count: int, max_crossings: int, max_attempts: int | None = None
) -> list[GeneratedKnot]:
    """``count`` knot closures, rejecting words whose closure is a link."""
    if count < 1 or max_crossings < 1:
        raise ValueError("count and max_crossings must be at least 1")
    rng = random.Random(seed)
    budget = max_attempts if max_attempts is not None else 200 * count
    out: list[GeneratedKnot] = []
    attempts = 0
    while len(out) < count:
        if attempts >= budget:
            raise GenerationBudgetError(out, attempts)
        attempts += 1
        word = random_braid_word(rng, max_crossings)
        try:
            out.append(GeneratedKnot(word, from_braid(word)))
        except DiagramValidationError:
            continue
    return out
