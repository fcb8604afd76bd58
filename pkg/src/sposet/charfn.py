"""Characteristic functions: primitive integer vectors on the vertices.

An assignment is valid on a simplex over the integers when the matrix
of its vertices' vectors has all Smith invariant factors equal to one
(the subtorus inclusion is injective and splits); over a field, full
row rank suffices.  One integer Smith form per simplex answers every
coefficient ring at once.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Mapping

from .errors import (
    BudgetExhausted,
    MissingVertexAssignment,
    NonPrimitiveVector,
    WrongVectorLength,
)
from .homology import Coefficients, INTEGERS, RATIONALS, smith_normal_form
from .poset import SimplicialPoset


@dataclass(frozen=True)
class CharFunction:
    """Vertex id -> primitive integer vector of length n."""

    n: int
    assignment: Mapping[str, tuple[int, ...]]

    def __post_init__(self):
        clean = {}
        for vid, vec in self.assignment.items():
            vec = tuple(int(x) for x in vec)
            if len(vec) != self.n:
                raise WrongVectorLength(
                    f"vertex {vid!r}: vector has length {len(vec)}, expected {self.n}"
                )
            if gcd(*(abs(x) for x in vec)) != 1:
                raise NonPrimitiveVector(
                    f"vertex {vid!r}: {vec} is not primitive"
                )
            clean[str(vid)] = vec
        object.__setattr__(self, "assignment", clean)

    def vector(self, vid: str) -> tuple[int, ...]:
        try:
            return self.assignment[vid]
        except KeyError:
            raise MissingVertexAssignment(f"no vector for vertex {vid!r}") from None


@dataclass(frozen=True)
class CharCheckReport:
    coeff: Coefficients
    passed: bool
    verdicts: tuple[tuple[str, bool], ...]
    first_failure: tuple[str, tuple[int, ...]] | None


def check(S: SimplicialPoset, lam: CharFunction, coeff: Coefficients) -> CharCheckReport:
    """Per-simplex validity of the assignment over one coefficient ring.

    Walks every face in (rank, id) order; records the first failure and
    its invariant factors.
    """
    verdicts = []
    first_failure = None
    passed = True
    for e in S.elements():
        rows = [lam.vector(v) for v in e.vertices]
        snf = smith_normal_form(rows)
        k = e.rank
        if coeff == INTEGERS:
            ok = snf.rank == k and all(d == 1 for d in snf.factors)
        else:
            ok = snf.rank_over(coeff) == k
        verdicts.append((e.id, ok))
        if not ok:
            passed = False
            if first_failure is None:
                first_failure = (e.id, snf.factors)
    return CharCheckReport(coeff, passed, tuple(verdicts), first_failure)


def random_q_charfn(
    S: SimplicialPoset, n: int, seed: int, bound: int, budget: int = 10_000
) -> CharFunction:
    """Seeded rejection sampling for an assignment valid over Q.

    Draws integer vectors with entries in [-bound, bound], primitivizes
    them, and retries whole assignments until the rational check
    passes.  Deterministic for a fixed seed; raises BudgetExhausted
    with the most frequently failing simplex after ``budget`` attempts.
    """
    if S.dim != n - 1:
        raise ValueError(f"poset has dimension {S.dim}, expected {n - 1}")
    if bound < 1:
        raise ValueError("bound must be >= 1 (no nonzero vectors otherwise)")
    rng = random.Random(seed)
    vertices = [e.id for e in S.by_rank(1)]
    fail_counts: dict[str, int] = {}
    for _ in range(budget):
        assignment = {}
        for vid in vertices:
            while True:
                vec = tuple(rng.randint(-bound, bound) for _ in range(n))
                if any(vec):
                    break
            g = gcd(*(abs(x) for x in vec))
            assignment[vid] = tuple(x // g for x in vec)
        lam = CharFunction(n, assignment)
        report = check(S, lam, RATIONALS)
        if report.passed:
            return lam
        bad = report.first_failure[0]
        fail_counts[bad] = fail_counts.get(bad, 0) + 1
    worst = max(sorted(fail_counts), key=fail_counts.get)
    raise BudgetExhausted(
        f"no valid assignment in {budget} attempts; simplex {worst!r} "
        f"failed {fail_counts[worst]} times",
        failing_simplex=worst,
        attempts=budget,
    )
