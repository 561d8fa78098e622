"""Assembled invariants of two-bridge knots and the identities tying them together.

Every identity is checked on each report; a mismatch raises
:class:`~twobridge.errors.IdentityViolation` naming the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braidkit import (
    BraidWord,
    ConwayNotation,
    continued_fraction,
    conway_to_braid,
    exponent_sum,
    mirror,
    normalize_odd,
)
from .diagram import (
    OrientedDiagram,
    checkerboard,
    crossing_stats,
    orient,
    plat_closure,
    splice_connected_sum,
    unknot_diagram,
)
from .errors import IdentityViolation, LinkNotKnotError
from .forkengine import run
from .goeritz import conway_closed_form_sign, determinant, gl_signature, goeritz_matrix, signature


def shift(e: int, w: int, n: int) -> Fraction:
    """Rational shift (e - w - 2(n - 1)) / 4 taking the unshifted grading to the reduced one."""
    if n < 1:
        raise ValueError("strand-pair count must be positive")
    return Fraction(e - w - 2 * (n - 1), 4)


def closed_form_R(c: ConwayNotation, e: int, w: int) -> Fraction:
    return Fraction(e - w - 2 * c.sign, 4)


def r_invariant(sigma: int) -> Fraction:
    """3 sigma / 4, the midpoint of the (single) filtration level for a two-bridge knot."""
    if sigma % 2:
        raise ValueError(f"knot signature must be even, got {sigma}")
    return Fraction(3 * sigma, 4)


def lens_label(fraction: Fraction) -> str:
    p = abs(fraction.numerator)
    q = fraction.denominator * (1 if fraction.numerator > 0 else -1)
    return f"L({p},{q % p})"


def _expect(identity, lhs, rhs, context):
    if lhs != rhs:
        raise IdentityViolation(identity, lhs, rhs, context)


@dataclass(frozen=True)
class DiagramReport:
    """Invariants computable from any oriented knot diagram."""

    crossings: int
    w: int
    mu_I: int
    mu_II: int
    goeritz: tuple
    sign_G: int
    det: int
    sigma: int

    def to_json(self) -> dict:
        return {
            "crossings": self.crossings,
            "w": self.w,
            "mu_I": self.mu_I,
            "mu_II": self.mu_II,
            "G": [list(r) for r in self.goeritz],
            "sign_G": self.sign_G,
            "det": self.det,
            "sigma": self.sigma,
            "r": rational_json(r_invariant(self.sigma)),
        }


def diagram_report(od: OrientedDiagram) -> DiagramReport:
    cd = checkerboard(od)
    stats = crossing_stats(cd)
    g = goeritz_matrix(cd)
    sigma = gl_signature(cd)
    report = DiagramReport(
        crossings=od.diagram.crossing_count,
        w=stats.writhe,
        mu_I=stats.mu_I,
        mu_II=stats.mu_II,
        goeritz=g.rows,
        sign_G=signature(g).signature,
        det=abs(determinant(g)),
        sigma=sigma,
    )
    _expect("w = mu_II - mu_I", report.w, report.mu_II - report.mu_I, f"{report.crossings} crossings")
    return report


def braid_diagram(b: BraidWord) -> OrientedDiagram:
    return orient(plat_closure(b))


def knot_diagram(c: ConwayNotation | None) -> OrientedDiagram:
    """Oriented Conway-form plat; ``None`` is the crossingless unknot."""
    if c is None:
        return orient(unknot_diagram())
    return braid_diagram(conway_to_braid(normalize_odd(c)))


def rational_json(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


@dataclass(frozen=True)
class InvariantReport:
    conway: ConwayNotation
    fraction: Fraction
    det: int
    lens_space: str
    e: int
    w: int
    mu_I: int
    mu_II: int
    s_R: Fraction
    r_tilde: int
    R: Fraction
    sigma: int
    r: Fraction
    generator_count: int

    def to_json(self) -> dict:
        out = {}
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            if isinstance(value, Fraction):
                value = rational_json(value)
            elif isinstance(value, ConwayNotation):
                value = list(value.entries)
            out[name] = value
        return out


def reduced_R(c: ConwayNotation) -> Fraction:
    """Reduced grading by the closed form and by automaton plus shift; both must agree."""
    c = normalize_odd(c)
    braid = conway_to_braid(c)
    e = exponent_sum(braid)
    w = crossing_stats(checkerboard(braid_diagram(braid))).writhe
    closed = closed_form_R(c, e, w)
    via_automaton = run(c).r_tilde + shift(e, w, braid.strand_pairs)
    _expect("R closed form = R~ + s_R", closed, via_automaton, str(c))
    return closed


def report(c: ConwayNotation, trace: list | None = None) -> InvariantReport:
    c = normalize_odd(c)
    frac = continued_fraction(c)
    p = abs(frac.numerator)
    if p % 2 == 0:
        raise LinkNotKnotError(2, f"{c} has even numerator {p}: a two-bridge link, not a knot")

    braid = conway_to_braid(c)
    e = exponent_sum(braid)
    od = braid_diagram(braid)
    diag = diagram_report(od)
    automaton = run(c, trace=trace is not None)
    if trace is not None:
        trace.extend(automaton.trace)

    s_R = shift(e, diag.w, braid.strand_pairs)
    R = automaton.r_tilde + s_R
    ctx = str(c)
    _expect("R~ + s_R = closed form", R, closed_form_R(c, e, diag.w), ctx)
    _expect("R = sigma/2", R, Fraction(diag.sigma, 2), ctx)
    _expect("generator count = |p|", automaton.generator_count, p, ctx)
    _expect("|det G| = |p|", diag.det, p, ctx)
    _expect("-(mu_I + mu_II) = sum b_i", -(diag.mu_I + diag.mu_II), sum(c.entries), ctx)
    _expect("sign G = closed form", diag.sign_G, conway_closed_form_sign(c), ctx)

    return InvariantReport(
        conway=c,
        fraction=frac,
        det=p,
        lens_space=lens_label(frac),
        e=e,
        w=diag.w,
        mu_I=diag.mu_I,
        mu_II=diag.mu_II,
        s_R=s_R,
        r_tilde=automaton.r_tilde,
        R=R,
        sigma=diag.sigma,
        r=r_invariant(diag.sigma),
        generator_count=automaton.generator_count,
    )


@dataclass(frozen=True)
class SumVerdict:
    sigma: tuple[int, int, int]  # (K1, K2, K1 # K2)
    det: tuple[int, int, int]
    r: tuple[Fraction, Fraction, Fraction]
    crossings: int

    @property
    def sigma_additive(self) -> bool:
        return self.sigma[2] == self.sigma[0] + self.sigma[1]

    @property
    def det_multiplicative(self) -> bool:
        return self.det[2] == self.det[0] * self.det[1]

    @property
    def r_additive(self) -> bool:
        return self.r[2] == self.r[0] + self.r[1]

    @property
    def ok(self) -> bool:
        return self.sigma_additive and self.det_multiplicative and self.r_additive

    def to_json(self) -> dict:
        return {
            "sigma": {"K1": self.sigma[0], "K2": self.sigma[1], "sum": self.sigma[2]},
            "det": {"K1": self.det[0], "K2": self.det[1], "sum": self.det[2]},
            "r": {"K1": rational_json(self.r[0]), "K2": rational_json(self.r[1]), "sum": rational_json(self.r[2])},
            "r_total": rational_json(self.r[2]),
            "crossings": self.crossings,
            "sigma_additive": self.sigma_additive,
            "det_multiplicative": self.det_multiplicative,
            "additive": self.r_additive,
        }


def check_sum(c1: ConwayNotation | None, c2: ConwayNotation | None, strict: bool = True) -> SumVerdict:
    """Compare invariants of the spliced diagram with those of the summands.

    ``None`` stands for the unknot.
    """
    d1, d2 = knot_diagram(c1), knot_diagram(c2)
    parts = [diagram_report(d) for d in (d1, d2)]
    total = diagram_report(splice_connected_sum(d1, d2))
    sigmas = (parts[0].sigma, parts[1].sigma, total.sigma)
    verdict = SumVerdict(
        sigma=sigmas,
        det=(parts[0].det, parts[1].det, total.det),
        r=tuple(r_invariant(s) for s in sigmas),
        crossings=total.crossings,
    )
    if strict:
        ctx = f"{c1} # {c2}"
        _expect("sigma additive", sigmas[2], sigmas[0] + sigmas[1], ctx)
        _expect("det multiplicative", verdict.det[2], verdict.det[0] * verdict.det[1], ctx)
        _expect("r additive", verdict.r[2], verdict.r[0] + verdict.r[1], ctx)
    return verdict


@dataclass(frozen=True)
class MirrorVerdict:
    sigma: tuple[int, int]  # (K, -K)
    det: tuple[int, int]
    r: tuple[Fraction, Fraction]

    @property
    def antisymmetric(self) -> bool:
        return self.sigma[1] == -self.sigma[0] and self.r[1] == -self.r[0]

    @property
    def ok(self) -> bool:
        return self.antisymmetric and self.det[0] == self.det[1]

    def to_json(self) -> dict:
        return {
            "sigma": {"K": self.sigma[0], "mirror": self.sigma[1]},
            "det": {"K": self.det[0], "mirror": self.det[1]},
            "r_K": rational_json(self.r[0]),
            "r": rational_json(self.r[1]),
            "antisymmetric": self.antisymmetric,
            "det_equal": self.det[0] == self.det[1],
        }


def check_mirror(c: ConwayNotation | None, strict: bool = True) -> MirrorVerdict:
    """Run the diagram pipeline on the braid and on its mirrored braid."""
    if c is None:
        b = BraidWord(2)
    else:
        b = conway_to_braid(normalize_odd(c))
    here, there = diagram_report(braid_diagram(b)), diagram_report(braid_diagram(mirror(b)))
    verdict = MirrorVerdict(
        sigma=(here.sigma, there.sigma),
        det=(here.det, there.det),
        r=(r_invariant(here.sigma), r_invariant(there.sigma)),
    )
    if strict:
        ctx = f"mirror of {c}"
        _expect("sigma(-K) = -sigma(K)", there.sigma, -here.sigma, ctx)
        _expect("r(-K) = -r(K)", verdict.r[1], -verdict.r[0], ctx)
        _expect("det(-K) = det(K)", there.det, here.det, ctx)
    return verdict
