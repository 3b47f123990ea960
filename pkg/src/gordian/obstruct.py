"""The obstruction battery and the aggregated distance report.

Every verdict carries a machine-checkable certificate: a witness tuple is
re-substituted before it is reported, and a refutation states the search
box that was provably exhaustive.  The aggregate enforces the chain

    gordian lower bound >= algebraic lower bound >= polynomial lower bound

on every report it emits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from math import isqrt

from .laurent import LaurentPoly, divmod_rational, is_multiple
from .seifert import (
    SMALL_H,
    SeifertMatrix,
    alexander,
    h_form,
    knot_determinant,
    signature,
    ua_is_one,
)

TREFOIL_DELTA = h_form(1)


# -- binary quadratic form -----------------------------------------------------


@dataclass(frozen=True)
class QuadFormVerdict:
    """Outcome of deciding h^2 x^2 + (2h-1) xy + y^2 = +-d over the integers.

    ``witness`` and ``refuted`` are definitive; ``inconclusive`` reports how
    far the indefinite search went.
    """

    outcome: str  # "witness" | "refuted" | "inconclusive"
    x: int | None = None
    y: int | None = None
    sign: int | None = None
    searched_bound: int | None = None

    def __post_init__(self):
        assert self.outcome in ("witness", "refuted", "inconclusive")


def _signed_range(bound):
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def form_value(h: int, x: int, y: int) -> int:
    return h * h * x * x + (2 * h - 1) * x * y + y * y


def quadform_represents(h: int, d: int, bound: int = 10_000) -> QuadFormVerdict:
    """Decide whether h^2 x^2 + (2h-1) xy + y^2 takes the value d or -d.

    For h >= 1 the form is positive definite (discriminant 1 - 4h < 0) and
    the search box below is provably exhaustive: completing the square gives

        4 q = (2y + (2h-1)x)^2 + (4h-1) x^2
        4 h^2 q = (2 h^2 x + (2h-1)y)^2 + (4h-1) y^2

    so any solution of |q| <= |d| has (4h-1) x^2 <= 4|d| and
    (4h-1) y^2 <= 4 h^2 |d|.  For h <= -1 the form is indefinite; all
    solutions with |x| <= bound are checked (y is solved exactly per x) and
    the outcome is inconclusive when none is found.
    """
    if h == 0:
        raise ValueError("h must be nonzero")
    if d == 0:
        raise ValueError("d must be nonzero")
    if h >= 1:
        bx = isqrt(4 * abs(d) // (4 * h - 1))
        by = isqrt(4 * h * h * abs(d) // (4 * h - 1))
        for x in _signed_range(bx):
            for y in _signed_range(by):
                v = form_value(h, x, y)
                if v == d:
                    return QuadFormVerdict("witness", x, y, 1)
                if v == -d:
                    return QuadFormVerdict("witness", x, y, -1)
        return QuadFormVerdict("refuted")
    # indefinite: for each x solve y^2 + (2h-1)x y + (h^2 x^2 - s d) = 0
    for x in _signed_range(bound):
        for s in (1, -1):
            disc = (1 - 4 * h) * x * x + 4 * s * d
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root != disc:
                continue
            for pm in (root, -root) if root else (0,):
                num = -(2 * h - 1) * x + pm
                if num % 2 == 0:
                    return QuadFormVerdict("witness", x, num // 2, s)
    return QuadFormVerdict("inconclusive", searched_bound=bound)


# -- residue criteria ------------------------------------------------------------


@dataclass(frozen=True)
class ParityVerdict:
    """Whether a polynomial is congruent to 2 + 4m modulo t + t^-1 - 1."""

    obstructs: bool
    m: int | None
    remainder: LaurentPoly


def parity_criterion(delta_prime: LaurentPoly) -> ParityVerdict:
    """Residue test against the modulus t + t^-1 - 1.

    Fires exactly when the canonical remainder is an integer congruent to
    2 mod 4; any polynomial congruent to such a constant cannot be one
    unknotting step from the modulus class, so the polynomial distance is 2.
    """
    _, r = divmod_rational(delta_prime, TREFOIL_DELTA)
    if r.is_constant and r.is_integral:
        c = r.constant_value
        if c % 4 == 2:
            return ParityVerdict(True, (c - 2) // 4, r)
    return ParityVerdict(False, None, r)


def constant_residue(delta_prime: LaurentPoly, delta: LaurentPoly):
    """The nonzero integer d with delta_prime = d mod delta, if the canonical
    remainder is such a constant; otherwise None."""
    _, r = divmod_rational(delta_prime, delta)
    if r.is_constant and r.is_integral and not r.is_zero:
        return r.constant_value
    return None


# -- bounded witness search for the product c * bar(c) ----------------------------


@dataclass(frozen=True)
class CcBarWitness:
    c: LaurentPoly
    sign: int


def _cc_candidates(max_breadth: int, max_coeff: int):
    """Candidate polynomials with support starting at exponent 0, positive
    lowest coefficient and bounded breadth and coefficients.  Units t^k and
    the global sign are quotiented out since c bar(c) ignores both."""
    lead = range(1, max_coeff + 1)
    signed = list(_signed_range(max_coeff))
    nonzero = [v for v in signed if v]
    for breadth in range(max_breadth + 1):
        if breadth == 0:
            slots = [lead]
        else:
            slots = [lead] + [signed] * (breadth - 1) + [nonzero]
        for coeffs in itertools.product(*slots):
            yield LaurentPoly(dict(enumerate(coeffs)))


def cc_bar_witness_search(
    delta: LaurentPoly,
    delta_prime: LaurentPoly,
    max_breadth: int = 4,
    max_coeff: int = 8,
):
    """Search for c with +-delta_prime - c bar(c) a multiple of delta.

    Returns a CcBarWitness or None.  None is not a refutation; the search
    space is only a finite window.
    """
    if delta.is_zero:
        raise ZeroDivisionError("modulus polynomial must be nonzero")
    for c in _cc_candidates(max_breadth, max_coeff):
        cc = c * c.bar()
        for sign in (1, -1):
            if is_multiple(sign * delta_prime - cc, delta):
                return CcBarWitness(c, sign)
    return None


# -- classical criteria -----------------------------------------------------------


@dataclass(frozen=True)
class MurakamiVerdict:
    obstructs: bool
    witness: int | None


def murakami_obstruction(det1: int, det2: int) -> MurakamiVerdict:
    """Double branched cover linking condition on the knot determinants.

    The fractional statement 2 d^2 / D = +-(D - D') / (2D) (mod 1) is
    cleared of denominators by multiplying through by 2D, leaving
    4 d^2 = +-(D - D') (mod 2D).  Since only d^2 mod 2D matters, d ranges
    over one full residue system.  No witness d means a simultaneous
    unknotting number one and distance one is impossible.
    """
    if det1 <= 0 or det2 <= 0:
        raise ValueError("knot determinants must be positive")
    if det1 % 2 == 0 or det2 % 2 == 0:
        raise ValueError("knot determinants must be odd")
    mod = 2 * det1
    diff = det1 - det2
    for d in range(mod):
        if (4 * d * d - diff) % mod == 0 or (4 * d * d + diff) % mod == 0:
            return MurakamiVerdict(False, d)
    return MurakamiVerdict(True, None)


def signature_bound(sig1: int, sig2: int) -> int:
    """Lower bound |sig1 - sig2| / 2 on the crossing change distance."""
    if sig1 % 2 or sig2 % 2:
        raise ValueError("signatures must be even")
    return abs(sig1 - sig2) // 2


# -- aggregated report -------------------------------------------------------------


@dataclass(frozen=True)
class SearchBounds:
    cc_max_breadth: int = 4
    cc_max_coeff: int = 8
    quadform_bound: int = 10_000


@dataclass(frozen=True)
class CriterionResult:
    name: str
    applicable: bool
    verdict: str  # "Obstructs" | "NoObstruction" | "Inconclusive"
    certificate: str


@dataclass(frozen=True)
class ObstructionReport:
    """Per-criterion verdicts plus certified bounds on the three distances."""

    label1: str
    label2: str
    criteria: tuple
    rho_lower: int
    rho_upper: int
    dga_lower: int
    dga_upper: int | None
    dg_lower: int

    def __post_init__(self):
        assert 0 <= self.rho_lower <= self.rho_upper <= 2
        assert self.dga_lower >= self.rho_lower
        assert self.dg_lower >= self.dga_lower
        if self.dga_upper is not None:
            assert self.dga_upper >= self.dga_lower

    def format(self) -> str:
        lines = [f"input1: {self.label1}", f"input2: {self.label2}"]
        for c in self.criteria:
            lines.append(f"criterion: {c.name}")
            lines.append(f"applicable: {'true' if c.applicable else 'false'}")
            lines.append(f"verdict: {c.verdict}")
            lines.append(f"certificate: {c.certificate}")
        lines.append(f"rho_lower: {self.rho_lower}")
        lines.append(f"rho_upper: {self.rho_upper}")
        lines.append(f"dga_lower: {self.dga_lower}")
        upper = "unknown" if self.dga_upper is None else str(self.dga_upper)
        lines.append(f"dga_upper: {upper}")
        lines.append(f"dg_lower: {self.dg_lower}")
        return "\n".join(lines)


@dataclass(frozen=True)
class _Side:
    """One input of the pair, normalised."""

    label: str
    delta: LaurentPoly
    matrix: SeifertMatrix | None
    ua: int | None
    sigma: int | None
    det: int

    @property
    def ua_one_certificate(self) -> str | None:
        if self.ua == 1:
            return "user supplied u_a = 1"
        if self.matrix is not None:
            verdict = ua_is_one(self.matrix)
            if verdict:
                return verdict.certificate
        h = _h_form_value(self.delta)
        if h in SMALL_H:
            return f"every class with this Alexander polynomial has u_a = 1 (h = {h})"
        return None


def _h_form_value(delta: LaurentPoly):
    h = delta.coeff(1)
    if h and delta == h_form(h):
        return h
    return None


def _is_prime_or_one(n: int) -> bool:
    if n == 1:
        return True
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _make_side(value, ua, default_label) -> _Side:
    if isinstance(value, SeifertMatrix):
        delta = alexander(value)
        return _Side(default_label, delta, value, ua, signature(value), knot_determinant(value))
    if isinstance(value, LaurentPoly):
        if value.is_zero:
            raise ValueError("polynomial input must be nonzero")
        det = value.evaluate(-1)
        det = abs(det) if isinstance(det, int) else 0
        return _Side(default_label, value, None, ua, None, det)
    raise TypeError("input must be a SeifertMatrix or a LaurentPoly")


def _quadform_row(side_mod: _Side, side_other: _Side, bounds: SearchBounds):
    """Evaluate the quadratic form route with side_mod as the modulus.

    Returns None when the hypotheses fail, else a dict with the pieces the
    aggregation needs.
    """
    h = _h_form_value(side_mod.delta)
    if h is None or not _is_prime_or_one(abs(h)):
        return None
    d = constant_residue(side_other.delta, side_mod.delta)
    if d is None:
        return None
    cert = side_mod.ua_one_certificate
    if cert is None:
        return None
    verdict = quadform_represents(h, d, bounds.quadform_bound)
    if verdict.outcome == "witness":
        v = form_value(h, verdict.x, verdict.y)
        assert v == verdict.sign * d
    return {"h": h, "d": d, "verdict": verdict, "ua_cert": cert, "mod": side_mod.label}


def build_report(
    input1,
    input2,
    ua1: int | None = None,
    ua2: int | None = None,
    bounds: SearchBounds | None = None,
    label1: str | None = None,
    label2: str | None = None,
) -> ObstructionReport:
    """Run every applicable criterion on the pair and aggregate the bounds."""
    bounds = bounds or SearchBounds()
    for ua in (ua1, ua2):
        if ua is not None and ua < 0:
            raise ValueError("u_a values must be nonnegative")
    s1 = _make_side(input1, ua1, label1 or "input1")
    s2 = _make_side(input2, ua2, label2 or "input2")
    s1 = replace(s1, label=label1 or str(s1.delta))
    s2 = replace(s2, label=label2 or str(s2.delta))
    equal = s1.delta == s2.delta
    same_matrix = (
        s1.matrix is not None and s2.matrix is not None and s1.matrix == s2.matrix
    )

    criteria = []

    # distinct Alexander polynomials already force distance at least one
    criteria.append(
        CriterionResult(
            "alexander-distance",
            True,
            "Obstructs" if not equal else "NoObstruction",
            "Alexander polynomials differ" if not equal else "Alexander polynomials are equal",
        )
    )

    # residue parity test, modulus t + t^-1 - 1
    parity_fired = False
    parity_parts = []
    for mod_side, other in ((s1, s2), (s2, s1)):
        if mod_side.delta == TREFOIL_DELTA and not equal:
            res = parity_criterion(other.delta)
            if res.obstructs:
                parity_fired = True
                parity_parts.append(
                    f"mod {mod_side.label}: remainder = {res.remainder} = 2 + 4*({res.m}), m = {res.m}"
                )
            else:
                parity_parts.append(
                    f"mod {mod_side.label}: remainder = {res.remainder} is not 2 mod 4"
                )
    parity_applicable = bool(parity_parts)
    criteria.append(
        CriterionResult(
            "parity",
            parity_applicable,
            "Obstructs" if parity_fired else ("NoObstruction" if parity_applicable else "Inconclusive"),
            "; ".join(parity_parts)
            if parity_parts
            else "requires distinct polynomials, one equal to t+t^-1-1",
        )
    )

    # quadratic form route, both directions
    routes = []
    if not equal:
        for mod_side, other in ((s1, s2), (s2, s1)):
            row = _quadform_row(mod_side, other, bounds)
            if row is not None:
                routes.append(row)
    quad_applicable = bool(routes)
    quad_obstructs = any(r["verdict"].outcome == "refuted" for r in routes)
    quad_inconclusive = any(r["verdict"].outcome == "inconclusive" for r in routes)
    quad_parts = []
    for r in routes:
        v = r["verdict"]
        if v.outcome == "refuted":
            detail = "no integer solution (exhaustive box)"
        elif v.outcome == "witness":
            detail = f"witness x = {v.x}, y = {v.y} gives {v.sign * r['d']}"
        else:
            detail = f"inconclusive up to |x| <= {v.searched_bound}"
        quad_parts.append(
            f"mod {r['mod']}: h = {r['h']}, d = {r['d']}: {detail} [u_a certificate: {r['ua_cert']}]"
        )
    if quad_obstructs:
        quad_verdict = "Obstructs"
    elif quad_applicable and not quad_inconclusive:
        quad_verdict = "NoObstruction"
    else:
        quad_verdict = "Inconclusive"
    criteria.append(
        CriterionResult(
            "quadratic-form",
            quad_applicable,
            quad_verdict,
            "; ".join(quad_parts) if quad_parts else "hypotheses not met",
        )
    )

    # bounded witness search for the product c bar(c)
    cc_sides = [s for s in (s1, s2) if s.ua_one_certificate is not None]
    cc_applicable = bool(cc_sides) and not equal
    if not cc_applicable:
        criteria.append(
            CriterionResult(
                "cc-bar-witness",
                False,
                "Inconclusive",
                "requires distinct polynomials and a certified u_a = 1 side",
            )
        )
    elif quad_obstructs:
        criteria.append(
            CriterionResult(
                "cc-bar-witness",
                True,
                "Obstructs",
                "no witness exists: implied by the quadratic-form refutation",
            )
        )
    else:
        side = cc_sides[0]
        other = s2 if side is s1 else s1
        witness = cc_bar_witness_search(
            side.delta, other.delta, bounds.cc_max_breadth, bounds.cc_max_coeff
        )
        if witness is not None:
            assert is_multiple(witness.sign * other.delta - witness.c * witness.c.bar(), side.delta)
            criteria.append(
                CriterionResult(
                    "cc-bar-witness",
                    True,
                    "NoObstruction",
                    f"mod {side.label}: c = {witness.c}, sign = {witness.sign:+d}",
                )
            )
        else:
            criteria.append(
                CriterionResult(
                    "cc-bar-witness",
                    True,
                    "Inconclusive",
                    f"no witness with breadth <= {bounds.cc_max_breadth}, "
                    f"coefficients <= {bounds.cc_max_coeff}",
                )
            )

    # double branched cover condition on determinants
    mur = None
    if s1.det > 0 and s2.det > 0 and s1.det % 2 == 1 and s2.det % 2 == 1:
        mur = murakami_obstruction(s1.det, s2.det)
        criteria.append(
            CriterionResult(
                "murakami",
                True,
                "Obstructs" if mur.obstructs else "NoObstruction",
                (
                    f"no d with 4d^2 = +-({s1.det} - {s2.det}) mod {2 * s1.det}; "
                    "unknotting number one with distance one is impossible"
                )
                if mur.obstructs
                else f"d = {mur.witness} satisfies 4d^2 = +-({s1.det} - {s2.det}) mod {2 * s1.det}",
            )
        )
    else:
        criteria.append(
            CriterionResult(
                "murakami",
                False,
                "Inconclusive",
                "requires odd positive determinants on both sides",
            )
        )

    # signature bound, needs both matrices
    sig_applicable = s1.sigma is not None and s2.sigma is not None
    sig_value = signature_bound(s1.sigma, s2.sigma) if sig_applicable else 0
    criteria.append(
        CriterionResult(
            "signature",
            sig_applicable,
            ("Obstructs" if sig_value >= 1 else "NoObstruction") if sig_applicable else "Inconclusive",
            f"|{s1.sigma} - {s2.sigma}| / 2 = {sig_value}" if sig_applicable else "signatures unknown",
        )
    )

    # aggregation
    if equal:
        rho_lower = rho_upper = 0
    else:
        rho_lower, rho_upper = 1, 2
        if parity_fired:
            rho_lower = 2
        for r in routes:
            if r["verdict"].outcome == "refuted" and r["h"] in SMALL_H:
                rho_lower = 2

    dga_lower = rho_lower
    if not equal and quad_obstructs:
        dga_lower = max(dga_lower, 2)
    if equal and sig_applicable and s1.sigma != s2.sigma:
        dga_lower = max(dga_lower, 1)

    if same_matrix:
        dga_upper = 0
    elif ua1 is not None and ua2 is not None:
        dga_upper = ua1 + ua2
    else:
        dga_upper = None
    if dga_upper is not None and dga_upper < dga_lower:
        raise ValueError(
            f"supplied u_a values give the upper bound {dga_upper}, "
            f"contradicting the certified lower bound {dga_lower}"
        )

    dg_lower = max(dga_lower, sig_value, 2 if mur is not None and mur.obstructs else 0)

    return ObstructionReport(
        s1.label,
        s2.label,
        tuple(criteria),
        rho_lower,
        rho_upper,
        dga_lower,
        dga_upper,
        dg_lower,
    )
