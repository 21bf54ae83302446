"""Blow-ups with locally-complete-intersection centers: K-theory
propagation, the singularities acquired from a singular center curve,
and the decision for blow-ups of smooth threefolds along nodal curves.

Blowing up a codimension-c lci center Z in X gives
K_j(X~) = K_j(X) (+) K_j(Z)^(c-1) for every j; for a codimension-2
curve with an isolated plane-germ singularity f the blow-up acquires one
threefold hypersurface point x_n x_{n+1} + f per center singularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import DualGraph, betti1, curve_k_minus_one, is_forest_of_lines
from .errors import InputError
from .exact import BiPoly, FinAbGroup
from .localsing import classify_cAn
from .verdicts import (
    Certificate,
    CertificateKind,
    Decision,
    Verdict,
    decide,
    smooth_verdict,
)


def blowup_k_theory(base: FinAbGroup, center: FinAbGroup, codim: int) -> FinAbGroup:
    """K_j of the blow-up: base (+) center^(codim - 1).  Ranks add and
    invariant factors concatenate and renormalize."""
    if codim < 2:
        raise InputError("blow-up centers have codimension >= 2")
    return base.direct_sum(center.repeated(codim - 1))


def blowup_singularities(center_germs) -> list:
    """Singularities of the blow-up of a smooth threefold along a
    codimension-2 lci curve whose isolated plane-germ singularities are
    given: one threefold germ xy + f per center germ f."""
    return [classify_cAn(f) for f in center_germs]


def node_germ() -> BiPoly:
    """The nodal plane germ z*w."""
    return BiPoly({(1, 1): Fraction(1)})


@dataclass(frozen=True)
class BlowupStep:
    """One blow-up along a nodal curve inside the current (smooth ambient)
    threefold.  center_germs optionally refines the plane germs at the
    singular points of the center; by default every node of the dual
    graph contributes the germ z*w."""

    center: DualGraph
    center_germs: tuple = ()

    def germs(self):
        if self.center_germs:
            return list(self.center_germs)
        return [node_germ() for _ in self.center.edges]


@dataclass(frozen=True)
class BlowupPipeline:
    """A smooth projective threefold blown up along a sequence of
    disjoint lci center curves."""

    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise InputError("a blow-up pipeline needs at least one step")

    def k_minus_one(self) -> FinAbGroup:
        total = FinAbGroup.trivial()
        for step in self.steps:
            total = blowup_k_theory(total, curve_k_minus_one(step.center), 2)
        return total

    def singularities(self):
        out = []
        for step in self.steps:
            out.extend(blowup_singularities(step.germs()))
        return out


def blowup_curve_verdict(curve: DualGraph) -> Verdict:
    """Decision for the blow-up of a smooth projective threefold along a
    nodal curve with rational components: Yes exactly when every
    connected component is a tree of smooth P^1; otherwise No with the
    obstruction Z^(sum of first Betti numbers) = K_-1 of the center."""
    if not all(curve.rational):
        raise InputError(
            "blowup_curve_verdict requires all center components rational; "
            "use decide() on a pipeline for the general soundness-only check")
    lam = betti1(curve)
    if lam > 0:
        return Verdict(Decision.NO, obstruction=FinAbGroup.free(lam),
                       k_minus_one=FinAbGroup.free(lam))
    if not is_forest_of_lines(curve):
        raise InputError(
            "contradictory flags: a loop-free nodal curve with rational "
            "components has smooth P^1 components")
    center = decide(curve)
    cert = Certificate(CertificateKind.BLOWUP_OF_YES_PAIR,
                       parts=(smooth_verdict(), center))
    return Verdict(Decision.YES, certificate=cert,
                   k_minus_one=FinAbGroup.trivial())
