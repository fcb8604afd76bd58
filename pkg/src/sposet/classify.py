"""Buchsbaum / Cohen-Macaulay / homology-manifold tests via link homology.

All verdicts are rank-level: a poset of ambient rank n is Buchsbaum over
a ring when every proper link has reduced homology concentrated in its
top degree n - 1 - |I|; Cohen-Macaulay additionally concentrates the
poset's own homology in top degree, and the homology-manifold verdict
asks every link's top homology to have dimension exactly one.  Over the
integers "vanishing" includes torsion.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotConnected, NotPure
from .homology import BettiVector, Coefficients, INTEGERS, reduced_betti
from .poset import SimplicialPoset, link, validate_stats

# (element id or None for the poset itself, degree, offending Betti rank)
Witness = tuple[str | None, int, int]


@dataclass(frozen=True)
class Classification:
    buchsbaum: bool
    cohen_macaulay: bool
    homology_manifold: bool
    orientable_over_field: bool
    witnesses: tuple[Witness, ...]


def link_table(
    S: SimplicialPoset, coeff: Coefficients
) -> tuple[tuple[str, BettiVector], ...]:
    """Reduced link homology for every face, in (rank, id) order."""
    if not validate_stats(S).pure:
        raise NotPure(f"{S.name or 'poset'} is not pure")
    return tuple(
        (e.id, reduced_betti(link(S, e.id), coeff)) for e in S.elements()
    )


def buchsbaum_witnesses(
    S: SimplicialPoset, coeff: Coefficients, n: int | None = None
) -> tuple[Witness, ...]:
    """Entries where some link's homology sits off its top degree.

    ``n`` defaults to the poset's own ambient rank; passing a larger
    value checks the poset against that rank instead, which also flags
    wrong-dimensional or non-pure input (their maximal faces have empty
    links away from the expected top degree).  No connectivity gate.
    """
    if n is None:
        n = S.n
    out: list[Witness] = []
    for e in S.elements():
        lk = reduced_betti(link(S, e.id), coeff)
        top = n - 1 - e.rank
        for deg in lk.degrees():
            if deg == top:
                continue
            if lk.degree(deg) != 0 or lk.torsion_in(deg):
                out.append((e.id, deg, lk.degree(deg)))
    return tuple(out)


def is_buchsbaum(
    S: SimplicialPoset, coeff: Coefficients, n: int | None = None
) -> bool:
    return not buchsbaum_witnesses(S, coeff, n)


def classify(S: SimplicialPoset, coeff: Coefficients) -> Classification:
    """Full classification of a pure connected poset over one ring.

    Witnesses collect every offending (face, degree, rank) triple for
    the Buchsbaum, Cohen-Macaulay and homology-manifold tests; the list
    is empty exactly when all three verdicts hold.  Orientability over
    the ring (top homology of dimension one) is reported but never
    witnessed, since failing it is not a defect of the poset.
    """
    stats = validate_stats(S)
    if not stats.pure:
        raise NotPure(f"{S.name or 'poset'} is not pure")
    if not stats.connected:
        raise NotConnected(f"{S.name or 'poset'} is not connected")

    n = S.n
    witnesses: list[Witness] = list(buchsbaum_witnesses(S, coeff))
    buchsbaum = not witnesses

    own = reduced_betti(S, coeff)
    for deg in own.degrees():
        if deg == n - 1:
            continue
        if own.degree(deg) != 0 or own.torsion_in(deg):
            witnesses.append((None, deg, own.degree(deg)))
    cohen_macaulay = buchsbaum and not any(w[0] is None for w in witnesses)

    hm_ok = True
    for e in S.elements():
        lk = reduced_betti(link(S, e.id), coeff)
        top = n - 1 - e.rank
        val = lk.degree(top)
        bad = val != 1 or (coeff == INTEGERS and lk.torsion_in(top))
        if bad:
            hm_ok = False
            witnesses.append((e.id, top, val))
    homology_manifold = buchsbaum and hm_ok

    orientable = own.degree(n - 1) == 1
    if coeff == INTEGERS and own.torsion_in(n - 1):
        orientable = False

    return Classification(
        buchsbaum=buchsbaum,
        cohen_macaulay=cohen_macaulay,
        homology_manifold=homology_manifold,
        orientable_over_field=orientable,
        witnesses=tuple(witnesses),
    )
