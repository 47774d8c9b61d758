"""Checks of the Johnson filtration against the computed (co)homology action"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from ..core_model.surface import SurfaceParams
from ..fn_complex.builder import FNComplex, cochain_dual
from ..free_group.endomorphisms import FreeEndomorphism, MappingClass
from ..free_group.magnus import johnson_depth
from ..integral_linear.homology import homology, is_identity_on_homology
from .action import (
    Phi,
    action_on_cohomology,
    action_on_homology,
    cohomology_groups,
    homology_groups,
    resolve_complex,
)

logger = logging.getLogger(__name__)


def _endomorphism(phi: Phi) -> FreeEndomorphism:
    return phi.endomorphism if isinstance(phi, MappingClass) else phi


def _text(phi: Phi) -> str:
    return phi.normal_form() if isinstance(phi, MappingClass) else str(phi)


@dataclass
class VerificationReport:
    """Outcome of :func:`verify_johnson_triviality`

    ``identity`` maps every degree i to whether the class acts as the
    identity on H^i, or on H_i when ``homological`` is set. ``counterexamples``
    lists the degrees where the depth predicts a trivial action that was not
    observed; ``nontrivial`` lists the degrees above the certified range where
    the action is not the identity.
    """

    phi: str
    genus: int
    n: int
    degree: int
    depth: int
    degree_bound: int
    identity: Dict[int, bool] = field(default_factory=dict)
    counterexamples: List[int] = field(default_factory=list)
    nontrivial: List[int] = field(default_factory=list)
    homological: bool = False

    @property
    def consistent(self) -> bool:
        """True when no counterexample was found"""
        return not self.counterexamples

    def to_json(self) -> Dict:
        """``{"phi","depth","n","g","H":{"<i>":{"identity":bool}}}`` and extras"""
        return {
            "phi": self.phi,
            "depth": self.depth,
            "n": self.n,
            "g": self.genus,
            "i": self.degree,
            "D": self.degree_bound,
            "H": {
                str(i): {"identity": self.identity[i]} for i in sorted(self.identity)
            },
            "counterexamples": list(self.counterexamples),
            "nontrivial": list(self.nontrivial),
            "side": "homology" if self.homological else "cohomology",
        }


def verify_johnson_triviality(
    phi: Phi,
    params: Union[SurfaceParams, int],
    n: int,
    degree: int,
    degree_bound: Optional[int] = None,
    complex_: Optional[FNComplex] = None,
    options: Optional[Dict] = None,
    homological: bool = False,
) -> VerificationReport:
    """Compare the Johnson depth of a class with its action on (co)homology

    When the depth is at least ``degree``, the action on every H^j with
    j <= ``degree`` must be the identity; each failure is recorded as a
    counterexample.

    Args:
        phi (Phi): mapping class or endomorphism
        params (Union[SurfaceParams, int]): surface model or its genus
        n (int): number of points
        degree (int): the degree i to certify
        degree_bound (Optional[int]): Magnus truncation bound D, by default
            one more than ``max(degree, n)``
        complex_ (Optional[FNComplex]): prebuilt complex
        options (Optional[Dict]): options of the action assembly
        homological (bool): check H_j of the open configuration space instead
            of H^j

    Returns:
        VerificationReport: depth, per degree verdicts and counterexamples
    """
    if isinstance(params, int):
        params = SurfaceParams(params)
    bound = max(degree, n) + 1 if degree_bound is None else degree_bound
    depth = johnson_depth(_endomorphism(phi), bound)
    complex_ = resolve_complex(params, n, complex_)
    if homological:
        summary = homology(cochain_dual(complex_))
        groups = homology_groups(complex_, summary)
        matrices = action_on_homology(phi, params, n, complex_, summary, options)
    else:
        summary = homology(complex_)
        groups = cohomology_groups(complex_, summary)
        matrices = action_on_cohomology(phi, params, n, complex_, summary, options)

    report = VerificationReport(_text(phi), params.genus, n, degree, depth, bound)
    report.homological = homological
    for i in sorted(matrices):
        trivial = is_identity_on_homology(matrices[i], groups[i])
        report.identity[i] = trivial
        if depth >= degree and i <= degree and not trivial:
            report.counterexamples.append(i)
        if i > min(depth, degree) and not trivial:
            report.nontrivial.append(i)
    if report.counterexamples:
        logger.warning(
            "%s has depth %s but acts nontrivially on H^%s",
            report.phi,
            depth,
            report.counterexamples,
        )
    return report


@dataclass
class ProbeRecord:
    """One class and one degree of :func:`conjecture_probe`"""

    phi: str
    degree: int
    depth: int
    trivial: bool
    witness: Optional[int]

    @property
    def verdict(self) -> str:
        """``consistent`` when triviality and a depth witness agree"""
        if self.trivial == (self.witness is not None):
            return "consistent"
        return "inconsistent"

    def to_json(self) -> Dict:
        """plain data"""
        return {
            "phi": self.phi,
            "i": self.degree,
            "depth": self.depth,
            "identity": self.trivial,
            "witness": self.witness,
            "verdict": self.verdict,
        }


def _times_boundary_twist(phi: Phi, power: int) -> Phi:
    genus = phi.genus
    twist = MappingClass(genus, [("Td", power)])
    if isinstance(phi, MappingClass):
        return phi * twist
    return phi * twist.endomorphism


def conjecture_probe(
    classes: Sequence[Phi],
    params: Union[SurfaceParams, int],
    n: int,
    max_power: int = 2,
    complex_: Optional[FNComplex] = None,
    options: Optional[Dict] = None,
) -> List[ProbeRecord]:
    """Exploratory comparison of triviality on H^i with depth up to boundary twists

    For every class and every i <= n, records whether the class acts as the
    identity on H^i and the smallest |k| <= ``max_power`` (positive first)
    such that the class times T_d^k has depth at least i. No claim is made
    about the outcome.

    Returns:
        List[ProbeRecord]: one record per class and degree
    """
    if isinstance(params, int):
        params = SurfaceParams(params)
    complex_ = resolve_complex(params, n, complex_)
    summary = homology(complex_)
    groups = cohomology_groups(complex_, summary)
    powers = [0]
    if params.genus:
        powers += [s * k for k in range(1, max_power + 1) for s in (1, -1)]

    records = []
    for phi in classes:
        matrices = action_on_cohomology(phi, params, n, complex_, summary, options)
        bound = n + 1
        depths = {
            k: johnson_depth(_endomorphism(_times_boundary_twist(phi, k)), bound)
            for k in powers
        }
        for i in sorted(matrices):
            witness = next((k for k in powers if depths[k] >= i), None)
            records.append(
                ProbeRecord(
                    _text(phi),
                    i,
                    depths[0],
                    is_identity_on_homology(matrices[i], groups[i]),
                    witness,
                )
            )
    return records
