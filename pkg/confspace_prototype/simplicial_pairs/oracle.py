"""Relative homology of product models, independent of the cell complex"""

import logging
from typing import Dict, Optional

from ..exceptions import GuardrailError
from ..integral_linear.homology import HomologySummary, homology
from .one_complex import WEDGE, OneComplexModel, surface_model, wedge_model
from .product_complex import (
    BASEPOINT_MODE,
    BOUNDARY_MODE,
    SimplicialPairComplex,
    estimate_simplices,
)

logger = logging.getLogger(__name__)

default_oracle_options = {
    "max_wedge_points": 3,
    "max_surface_points": 2,
    "max_simplices": 200000,
    "progress": False,
}


def _validate_oracle_options(options: Optional[Dict]) -> Dict:
    """validate the options

    Args:
        options (Optional[Dict]): options
    """
    valid_keys = default_oracle_options.keys()
    if options is None:
        return dict(default_oracle_options)
    for k in options:
        if k not in valid_keys:
            raise ValueError(
                f"Option {k} not recognized, valid keys are {list(valid_keys)}"
            )
    return {**default_oracle_options, **options}


def relative_homology_oracle(
    model: OneComplexModel,
    n: int,
    mode: str = BOUNDARY_MODE,
    options: Optional[Dict] = None,
) -> HomologySummary:
    """Homology of (Y^n, diagonals + locus) from normalized product chains

    For the surface model in mode ``"A'"`` this is the homology of the one
    point compactified configuration space relative to infinity; for the
    wedge in mode ``"A"`` it is concentrated in degree n.

    Args:
        model (OneComplexModel): wedge or surface model
        n (int): number of points
        mode (str): ``"A"`` removes the basepoint, ``"A'"`` the marked
            subcomplex
        options (Optional[Dict]): caps ``max_wedge_points``,
            ``max_surface_points`` and ``max_simplices``, and ``progress``.
            Defaults to None.

    Raises:
        GuardrailError: if n or the estimated simplex count exceeds a cap

    Returns:
        HomologySummary: homology in every degree 0..n dim(model)
    """
    options = _validate_oracle_options(options)
    cap = (
        options["max_wedge_points"]
        if model.role == WEDGE
        else options["max_surface_points"]
    )
    estimate = estimate_simplices(model, n, mode)
    logger.info("estimated product simplices : %s", estimate)
    if n > cap:
        raise GuardrailError(
            f"{n} points exceed the cap of {cap} for a {model.role} model "
            f"(about {estimate} product simplices)",
            estimate=estimate,
        )
    if estimate > options["max_simplices"]:
        raise GuardrailError(
            f"about {estimate} product simplices exceed the cap of "
            f"{options['max_simplices']}",
            estimate=estimate,
        )
    complex_ = SimplicialPairComplex(
        model, n, mode, options={"progress": options["progress"]}
    )
    return homology(complex_)


def surface_oracle(
    genus: int, n: int, options: Optional[Dict] = None
) -> HomologySummary:
    """homology of (M^n, diagonals + boundary locus) on the surface model"""
    return relative_homology_oracle(surface_model(genus), n, BOUNDARY_MODE, options)


def wedge_oracle(genus: int, n: int, options: Optional[Dict] = None) -> HomologySummary:
    """homology of (X^n, diagonals + basepoint locus) on the wedge"""
    return relative_homology_oracle(wedge_model(genus), n, BASEPOINT_MODE, options)


def oracle_report(
    summary: HomologySummary, model: OneComplexModel, n: int, mode: str
) -> Dict:
    """JSON-ready report in the homology schema, with the model attached"""
    return {
        "model": model.role,
        "mode": mode,
        "n": n,
        "counts": model.counts(),
        "betti": {str(d): summary[d].betti for d in summary.degrees},
        "torsion": {str(d): list(summary[d].torsion) for d in summary.degrees},
    }


def matches_cell_homology(oracle: HomologySummary, cells: HomologySummary) -> bool:
    """True if Betti numbers and torsion agree in every degree of either side

    Degrees missing on one side count as the zero group.
    """
    degrees = set(oracle.degrees) | set(cells.degrees)
    for degree in degrees:
        left = oracle.groups.get(degree)
        right = cells.groups.get(degree)
        left_data = (left.betti, list(left.torsion)) if left else (0, [])
        right_data = (right.betti, list(right.torsion)) if right else (0, [])
        if left_data != right_data:
            return False
    return True
