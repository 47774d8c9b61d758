"""Acceptance checks run by ``confspace selftest``

Every check raises ``AssertionError`` (through ``numpy.testing.assert_``) or a
:class:`ConfspaceError` on failure and returns a one line summary otherwise.
"""

import logging
from typing import Callable, Dict, List, Tuple

from numpy.testing import assert_

from ..core_model.surface import SurfaceParams, rising_factorial
from ..exceptions import ConfspaceError
from ..fn_complex.builder import build_complex
from ..free_group.fixtures import FIXTURE_DEPTHS, fixture_classes
from ..free_group.lie_algebra import (
    boundary_twist_class,
    expected_boundary_twist_class,
)
from ..free_group.magnus import johnson_depth
from ..free_group.parser import parse_mapping_class
from ..integral_linear.homology import homology
from ..mcg_action.verification import verify_johnson_triviality
from ..simplicial_pairs.moriyama import mor_action, pure_arc_basis
from ..simplicial_pairs.oracle import (
    matches_cell_homology,
    surface_oracle,
    wedge_oracle,
)

logger = logging.getLogger(__name__)

Check = Callable[[bool], str]


def check_square_zero(quick: bool) -> str:
    """d o d = 0 on every complex in range"""
    max_genus, max_points = (2, 3) if quick else (3, 4)
    built = 0
    for genus in range(max_genus + 1):
        for n in range(1, max_points + 1):
            build_complex(genus, n)
            built += 1
    return f"{built} complexes, g <= {max_genus}, n <= {max_points}"


def check_oracle(quick: bool) -> str:
    """cell homology against the product model of the surface"""
    cases = [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2)]
    if not quick:
        cases += [(2, 1), (2, 2)]
    for genus, n in cases:
        oracle = surface_oracle(genus, n, {"max_surface_points": 3})
        cells = homology(build_complex(genus, n))
        assert_(
            matches_cell_homology(oracle, cells),
            f"oracle disagrees with the cell complex for g={genus}, n={n}",
        )
    return f"{len(cases)} cases agree"


def check_wedge_ranks(quick: bool) -> str:
    """H_*(X^n, diagonals + basepoint) is free of rank rising(2g, n) in degree n"""
    max_points = 2 if quick else 3
    for genus in (1, 2):
        for n in range(1, max_points + 1):
            summary = wedge_oracle(genus, n)
            expected = {d: 0 for d in summary.degrees}
            expected[n] = rising_factorial(2 * genus, n)
            assert_(summary.betti() == expected, f"wedge ranks for g={genus}, n={n}")
            assert_(
                not any(summary.torsion().values()), f"torsion for g={genus}, n={n}"
            )
            assert_(
                len(pure_arc_basis(SurfaceParams(genus), n)) == expected[n],
                f"pure arc count for g={genus}, n={n}",
            )
    return f"g <= 2, n <= {max_points}"


def check_johnson_depths(quick: bool) -> str:
    """fixture depths and the Lie class of the boundary twist"""
    del quick
    for genus in (1, 2):
        for text, depth in FIXTURE_DEPTHS.items():
            phi = fixture_classes(genus)[text]
            found = johnson_depth(phi.endomorphism, 4)
            assert_(found == depth, f"{text} at g={genus}: depth {found} != {depth}")
        for power in range(-3, 4):
            assert_(
                boundary_twist_class(genus, power)
                == expected_boundary_twist_class(genus, power),
                f"boundary twist class for g={genus}, k={power}",
            )
    return "fixtures and boundary twist classes, g <= 2"


def check_moriyama_kernel(quick: bool) -> str:
    """the boundary twist acts trivially up to n = 2 and not at n = 3"""
    del quick
    twist = parse_mapping_class("Td", 1)
    for n in (1, 2):
        assert_(mor_action(twist, n).is_identity(), f"Td acts at n={n}")
    assert_(not mor_action(twist, 3).is_identity(), "Td trivial at n=3")
    assert_(
        not mor_action(parse_mapping_class("Ta1", 1), 1).is_identity(),
        "Ta1 trivial at n=1",
    )
    return "Td: identity for n <= 2, nontrivial for n = 3; Ta1 nontrivial at n = 1"


def check_functoriality(quick: bool) -> str:
    """Mor of a composite equals the product of the Mor of its factors"""
    n = 1 if quick else 2
    for text in ("Ta1 Tb1", "Tb1 Td", "Ta1^-1 Tsep1"):
        left, right = text.split()
        composite = parse_mapping_class(text, 1)
        direct = mor_action(composite.endomorphism, n)
        product = mor_action(parse_mapping_class(left, 1), n) @ mor_action(
            parse_mapping_class(right, 1), n
        )
        assert_(direct == product, f"functoriality fails for {text} at n={n}")
    return f"three composites at n = {n}"


def check_boundary_twist_action(quick: bool) -> str:
    """the boundary twist acts as the identity on every cohomology group"""
    cases = [(1, 1), (1, 2)] if quick else [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]
    for genus, n in cases:
        twist = parse_mapping_class("Td", genus)
        report = verify_johnson_triviality(twist, genus, n, n)
        assert_(
            all(report.identity.values()), f"Td acts on H^* for g={genus}, n={n}"
        )
    return f"{len(cases)} cases"


def check_fixture_triviality(quick: bool) -> str:
    """every fixture acts as the identity on H^j for j up to its depth"""
    cases = [(1, 1), (1, 2)] if quick else [(g, n) for g in (1, 2) for n in (1, 2, 3)]
    for genus, n in cases:
        complex_ = build_complex(genus, n)
        for text, phi in fixture_classes(genus).items():
            degree = min(FIXTURE_DEPTHS[text], n)
            report = verify_johnson_triviality(phi, genus, n, degree, complex_=complex_)
            assert_(
                report.consistent,
                f"{text} at g={genus}, n={n}: H^{report.counterexamples}",
            )
    return f"{len(FIXTURE_DEPTHS)} fixtures on {len(cases)} complexes"


def check_sharpness(quick: bool) -> str:
    """a separating twist of genus 2 acts on H^3 of three points, not below"""
    if quick:
        return "skipped in quick mode"
    phi = parse_mapping_class("Tsep1", 2)
    report = verify_johnson_triviality(phi, 2, 3, 2)
    assert_(report.depth >= 2, f"depth {report.depth}")
    assert_(report.consistent, f"counterexamples {report.counterexamples}")
    assert_(not report.identity[3], "Tsep1 acts trivially on H^3")
    return "Tsep1, g = 2, n = 3: identity on H^0..H^2, not on H^3"


CHECKS: List[Tuple[str, Check]] = [
    ("square_zero", check_square_zero),
    ("oracle", check_oracle),
    ("wedge_ranks", check_wedge_ranks),
    ("johnson_depths", check_johnson_depths),
    ("moriyama_kernel", check_moriyama_kernel),
    ("functoriality", check_functoriality),
    ("boundary_twist_action", check_boundary_twist_action),
    ("fixture_triviality", check_fixture_triviality),
    ("sharpness", check_sharpness),
]


def run_selftest(quick: bool = False) -> Dict[str, Dict]:
    """Run every check and collect ``{name: {"passed", "detail"}}``"""
    results = {}
    for name, check in CHECKS:
        logger.info("selftest : %s", name)
        try:
            detail = check(quick)
            passed = True
        except (AssertionError, ConfspaceError) as err:
            detail = f"{type(err).__name__}: {err}"
            passed = False
        results[name] = {"passed": passed, "detail": detail}
    return results
