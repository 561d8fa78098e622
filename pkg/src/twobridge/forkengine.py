"""Generator automaton for the Conway-form fork diagram of a two-bridge knot.

The reduced diagram has one tine ``alpha_1`` joining punctures mu_1, mu_2 and
one moving arc ``beta_1``.  An auxiliary tine ``alpha`` joins mu_2 and mu_3;
points of ``(alpha - mu_2) & beta_1`` are *central intersections*.  The arc
``beta_1`` starts as the arc from mu_3 to mu_4, so its only moving end is a
single endpoint that begins at mu_3; mu_4 is never touched by a Conway braid.

Counting happens in the branched double cover, where the tines lift to
circles: a point in the interior of a tine has two lifts, a puncture has one.
So an interior generator contributes 2 to the generator count and the
endpoint contributes 1 while it sits on ``alpha_1`` (at mu_1 or mu_2).
On lifts, ``sigma_2^{+-1}`` adds the central count to the generator count and
``sigma_1^{-+1}`` adds the generator count to the central count, which is
the continued-fraction recursion; the per-point rules below refine that with
gradings.

Positive runs (``sigma_2``, ``sigma_1^-1``) raise the grading by one from a
generator to the central it spawns; negative runs (``sigma_2^-1``,
``sigma_1``) use the mirrored increments and start one level higher.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterator, Mapping

from .braidkit import BraidLetter, ConwayNotation, conway_to_braid
from .errors import IdentityViolation


class GradedCount(Mapping):
    """Immutable grading -> count histogram; zero counts are dropped."""

    __slots__ = ("_data",)

    def __init__(self, data=None):
        self._data = {k: v for k, v in sorted(dict(data or {}).items()) if v}
        if any(v < 0 for v in self._data.values()):
            raise ValueError("negative count in histogram")

    def __getitem__(self, level):
        return self._data[level]

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._data.items()))

    def __repr__(self):
        return "{" + ", ".join(f"{k}: {v}" for k, v in self._data.items()) + "}"

    @property
    def total(self) -> int:
        return sum(self._data.values())

    def add(self, other: Mapping[int, int]) -> GradedCount:
        c = Counter(self._data)
        c.update(dict(other))
        return GradedCount(c)

    def shifted(self, by: int) -> GradedCount:
        return GradedCount({k + by: v for k, v in self._data.items()})

    def scaled(self, factor: int) -> GradedCount:
        return GradedCount({k: v * factor for k, v in self._data.items()})


@dataclass(frozen=True)
class EndpointState:
    """Where the free end of beta_1 sits and the grading it carries there.

    At mu_1 or mu_2 the endpoint is a generator; at mu_3 it is a central
    intersection.  The end meets mu_2 from above and mu_1, mu_3 from below,
    and the twists never change this.
    """

    puncture: int
    grading: int

    def __post_init__(self):
        if self.puncture not in (1, 2, 3):
            raise ValueError(f"endpoint puncture must be 1, 2 or 3, got {self.puncture}")

    @property
    def approach(self) -> str:
        return "above" if self.puncture == 2 else "below"

    @property
    def is_generator(self) -> bool:
        return self.puncture in (1, 2)

    def __str__(self):
        role = "gen" if self.is_generator else "central"
        return f"mu_{self.puncture}({self.approach}) {role}@{self.grading}"


@dataclass(frozen=True)
class ForkState:
    interior: GradedCount
    central: GradedCount
    endpoint: EndpointState
    sign: int = 1  # +1 for runs of sigma_2, sigma_1^-1; -1 for sigma_2^-1, sigma_1

    @property
    def generators(self) -> GradedCount:
        """Graded generators on alpha_1 counted in the double cover."""
        hist = self.interior.scaled(2)
        if self.endpoint.is_generator:
            hist = hist.add({self.endpoint.grading: 1})
        return hist

    @property
    def generator_count(self) -> int:
        return self.generators.total

    @property
    def lifted_central_count(self) -> int:
        """Intersections of the lifted arc with the lift of alpha (mu_2 included)."""
        return 2 * self.central.total + (self.endpoint.puncture in (2, 3))

    def describe(self) -> str:
        return f"interior={self.interior!r} central={self.central!r} endpoint={self.endpoint}"


def base_state(sign: int) -> ForkState:
    """The identity braid: beta_1 runs from mu_3 to mu_4, its end a central."""
    return ForkState(GradedCount(), GradedCount(), EndpointState(3, 1 if sign > 0 else 0), sign)


def _require(s: ForkState, sign: int, name: str):
    if s.sign != sign:
        raise ValueError(f"{name} applies to {'positive' if sign > 0 else 'negative'}-entry runs only")


def _twist_12(s: ForkState) -> ForkState:
    """Half twist exchanging mu_1 and mu_2 (sigma_1^-1 or, mirrored, sigma_1)."""
    up = s.sign
    central = s.central.add(s.interior.shifted(up))
    e = s.endpoint
    if e.puncture == 1:  # case I: g replaced by g', nothing spawned
        e = EndpointState(2, e.grading)
    elif e.puncture == 2:  # case II: g replaced by g', spawns a central
        central = central.add({e.grading + up: 1})
        e = EndpointState(1, e.grading)
    return replace(s, central=central, endpoint=e)


def _twist_23(s: ForkState) -> ForkState:
    """Half twist exchanging mu_2 and mu_3 (sigma_2 or, mirrored, sigma_2^-1)."""
    up = s.sign
    interior = s.interior.add(s.central.shifted(-up))
    e = s.endpoint
    if e.puncture == 2:  # case I: g replaced by interior h, end becomes a central c
        interior = interior.add({e.grading: 1})
        e = EndpointState(3, e.grading + up)
    elif e.puncture == 3:  # case II: central c replaced by generator g
        e = EndpointState(2, e.grading - up)
    return replace(s, interior=interior, endpoint=e)


def apply_sigma1_inv(s: ForkState) -> ForkState:
    _require(s, 1, "sigma_1^-1")
    return _twist_12(s)


def apply_sigma2(s: ForkState) -> ForkState:
    _require(s, 1, "sigma_2")
    return _twist_23(s)


def apply_sigma1(s: ForkState) -> ForkState:
    _require(s, -1, "sigma_1")
    return _twist_12(s)


def apply_sigma2_inv(s: ForkState) -> ForkState:
    _require(s, -1, "sigma_2^-1")
    return _twist_23(s)


_STEPS = {
    (1, -1): apply_sigma1_inv,
    (2, 1): apply_sigma2,
    (1, 1): apply_sigma1,
    (2, -1): apply_sigma2_inv,
}


def apply_letter(s: ForkState, letter: BraidLetter) -> ForkState:
    try:
        step = _STEPS[(letter.generator_index, letter.exponent_sign)]
    except KeyError:
        raise ValueError(f"{letter} does not occur in a Conway-form braid") from None
    return step(s)


def init_twist(b1: int) -> ForkState:
    """State after ``sigma_2^b1``: |b1| generators at grading 0 (b1 > 0) or 1 (b1 < 0)."""
    if b1 == 0:
        raise ValueError("b1 must be nonzero")
    sign = 1 if b1 > 0 else -1
    s = base_state(sign)
    letter = BraidLetter(2, sign)
    for _ in range(abs(b1)):
        s = apply_letter(s, letter)
    return s


@dataclass(frozen=True)
class RunResult:
    generator_count: int
    histogram: GradedCount
    r_tilde: int
    state: ForkState
    trace: tuple[str, ...] = field(default=(), repr=False)


def run(c: ConwayNotation, trace: bool = False) -> RunResult:
    """Drive the automaton through the Conway braid of an odd-length notation."""
    word = conway_to_braid(c)
    b1 = c.entries[0]
    s = init_twist(b1)
    lines = []
    if trace:
        lines.append(f"s2^{b1}: {s.describe()}")
    prev = s.generator_count
    for letter in word.letters[abs(b1):]:
        s = apply_letter(s, letter)
        if s.generator_count < prev:
            raise IdentityViolation("generator count nondecreasing", s.generator_count, prev, str(c))
        prev = s.generator_count
        if trace:
            lines.append(f"{letter}: {s.describe()}")
    hist = s.generators
    if len(hist) != 1:
        raise IdentityViolation("grading concentrated on one level", len(hist), 1, f"{c}: {hist!r}")
    (level,) = hist
    return RunResult(hist.total, hist, level, s, tuple(lines))
