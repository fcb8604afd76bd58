"""Face-vector transforms: f, h, link-based ft, and the corrected
h'/h'' vectors, together with the identity suite connecting them.

Everything is exact integer arithmetic; polynomial identities are
compared coefficient by coefficient, never numerically.  The reduced
Euler characteristic is taken as chi - 1, the alternating sum of
reduced Betti numbers, which is what the top h-number identity forces.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .classify import classify, is_buchsbaum
from .errors import NonFieldCoefficients, NotConnected, NotPure
from .homology import Coefficients, reduced_betti
from .poset import SimplicialPoset, f_vector, link, validate_stats


@dataclass(frozen=True)
class FaceVectorReport:
    n: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    ft: tuple[int, ...]
    hprime: tuple[int, ...]
    hdoubleprime: tuple[int, ...]
    chi: int
    chitilde: int
    coeff: Coefficients


@dataclass(frozen=True)
class IdentityReport:
    checks: dict[str, bool]
    skipped: dict[str, str]
    report: FaceVectorReport

    @property
    def all_passed(self) -> bool:
        return all(self.checks.values())


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_scale(a, c):
    return [c * x for x in a]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_pow(base, e):
    out = [1]
    for _ in range(e):
        out = _poly_mul(out, base)
    return out


def _poly_eq(a, b) -> bool:
    width = max(len(a), len(b))
    a = list(a) + [0] * (width - len(a))
    b = list(b) + [0] * (width - len(b))
    return a == b


def _require_pure(S: SimplicialPoset) -> None:
    if not validate_stats(S).pure:
        raise NotPure(f"{S.name or 'poset'} is not pure")


def f_h_vectors(S: SimplicialPoset):
    """f- and h-vectors plus Euler characteristics of a pure poset.

    h comes from the exact expansion of sum_i f_(i-1) t^i (1-t)^(n-i);
    chi is the alternating face-count sum and chitilde = chi - 1.
    """
    _require_pure(S)
    n = S.n
    f = f_vector(S)
    hpoly = [0]
    for i in range(n + 1):
        term = _poly_scale(_poly_mul(_poly_pow([0, 1], i), _poly_pow([1, -1], n - i)), f[i])
        hpoly = _poly_add(hpoly, term)
    h = tuple(hpoly[i] if i < len(hpoly) else 0 for i in range(n + 1))
    chi = sum(f[i + 1] if i % 2 == 0 else -f[i + 1] for i in range(n))
    return f, h, chi, chi - 1


def ft_vector(S: SimplicialPoset, coeff: Coefficients) -> tuple[int, ...]:
    """Sums of top link Betti numbers, one entry per face dimension.

    ft_i adds dim H~_(n-1-|I|) of the link over all i-dimensional faces;
    for a homology manifold this reproduces the f-vector.
    """
    _require_pure(S)
    if not coeff.is_field:
        raise NonFieldCoefficients("ft numbers need field coefficients")
    n = S.n
    ft = [0] * n
    for e in S.elements():
        lk = reduced_betti(link(S, e.id), coeff)
        ft[e.dim] += lk.degree(n - 1 - e.rank)
    return tuple(ft)


def h_prime_double(S: SimplicialPoset, coeff: Coefficients):
    """Betti-corrected h'- and h''-vectors over a field.

    h'_i adds C(n,i) times an alternating partial sum of reduced Betti
    numbers to h_i; h''_i subtracts C(n,i) b~_(i-1) again except at the
    top, where h''_n = h'_n.
    """
    _require_pure(S)
    if not coeff.is_field:
        raise NonFieldCoefficients("h' and h'' need field coefficients")
    n = S.n
    _, h, _, _ = f_h_vectors(S)
    bt = reduced_betti(S, coeff)
    hp = []
    for i in range(n + 1):
        corr = sum(
            (-1) ** (i - j - 1) * bt.degree(j - 1) for j in range(1, i)
        )
        hp.append(h[i] + comb(n, i) * corr)
    hpp = [
        hp[i] - comb(n, i) * bt.degree(i - 1) for i in range(n)
    ]
    hpp.append(hp[n])
    return tuple(hp), tuple(hpp)


def face_vector_report(S: SimplicialPoset, coeff: Coefficients) -> FaceVectorReport:
    f, h, chi, chit = f_h_vectors(S)
    ft = ft_vector(S, coeff)
    hp, hpp = h_prime_double(S, coeff)
    return FaceVectorReport(
        n=S.n, f=f, h=h, ft=ft, hprime=hp, hdoubleprime=hpp,
        chi=chi, chitilde=chit, coeff=coeff,
    )


def identity_report(S: SimplicialPoset, coeff: Coefficients) -> IdentityReport:
    """Exact verdicts for the identities tying f, h, ft and h'' together.

    Unconditional checks: the face polynomial against link homology, the
    h-from-ft expansion, the top h-number as the reduced Euler
    characteristic, and the top h'-number as the top Betti number.
    Dehn-Sommerville symmetry runs only on homology manifolds (its h''
    half additionally needs top homology of rank one, i.e.
    orientability over the field), and nonnegativity of h'' only on
    Buchsbaum posets; anything gated off is reported as skipped.
    """
    rep = face_vector_report(S, coeff)
    n, f, h, ft = rep.n, rep.f, rep.h, rep.ft
    chi, hp, hpp = rep.chi, rep.hprime, rep.hdoubleprime
    bt = reduced_betti(S, coeff)
    checks: dict[str, bool] = {}
    skipped: dict[str, str] = {}

    # face polynomial: f_S(t) = (1 - chi) + (-1)^n sum_k ft_k (-t-1)^(k+1)
    rhs = [1 - chi]
    for k in range(n):
        term = _poly_scale(_poly_pow([-1, -1], k + 1), ft[k] * (-1) ** n)
        rhs = _poly_add(rhs, term)
    checks["f_from_link_homology"] = _poly_eq(list(f), rhs)

    # h-polynomial: sum h_i t^i = (1-t)^n (1-chi) + sum_k ft_k (t-1)^(n-k-1)
    hrhs = _poly_scale(_poly_pow([1, -1], n), 1 - chi)
    for k in range(n):
        hrhs = _poly_add(hrhs, _poly_scale(_poly_pow([-1, 1], n - k - 1), ft[k]))
    coefwise = all(
        h[i]
        == (1 - chi) * (-1) ** i * comb(n, i)
        + sum(
            (-1) ** (n - k - i - 1) * comb(n - k - 1, i) * ft[k]
            for k in range(n)
        )
        for i in range(n + 1)
    )
    checks["h_from_link_f"] = _poly_eq(list(h), hrhs) and coefwise

    checks["h_top_is_euler"] = h[n] == (-1) ** (n - 1) * rep.chitilde
    checks["h_prime_top_is_betti"] = hp[n] == bt.degree(n - 1)

    try:
        cls = classify(S, coeff)
    except NotConnected:
        cls = None
    hm = cls is not None and cls.homology_manifold
    if hm:
        checks["dehn_sommerville_h"] = all(
            h[i] == h[n - i] + (-1) ** i * comb(n, i) * (1 - (-1) ** n - chi)
            for i in range(n + 1)
        )
        if cls.orientable_over_field:
            checks["dehn_sommerville_h_double"] = all(
                hpp[i] == hpp[n - i] for i in range(n + 1)
            )
        else:
            skipped["dehn_sommerville_h_double"] = (
                "needs top homology of rank 1 over this field"
            )
    else:
        reason = "not a homology manifold over this field"
        skipped["dehn_sommerville_h"] = reason
        skipped["dehn_sommerville_h_double"] = reason

    buchsbaum = cls.buchsbaum if cls is not None else is_buchsbaum(S, coeff)
    if buchsbaum:
        checks["h_double_nonneg"] = all(x >= 0 for x in hpp)
    else:
        skipped["h_double_nonneg"] = "not Buchsbaum over this field"

    return IdentityReport(checks=checks, skipped=skipped, report=rep)
