import concurrent.futures
import itertools
import logging
from dataclasses import dataclass

import numpy as np

import openbilliard as ob
from openbilliard.geometry import Billiard, ConvexPolytope, convex_hull

from .periodic import ClosestPairs, PeriodicOrbit, all_closest_pairs, find_periodic_orbit
from .symbols import SymbolSequence, enumerate_periodic_sequences, random_periodic_sequences

_logger = logging.getLogger(__name__)


def hull_H(
    billiard: Billiard,
    pairs: ClosestPairs | None = None,
    tolerances: ob.Tolerances | None = None,
) -> ConvexPolytope:
    """
    Returns the convex hull H of all closest-pair points p_ij.

    A planar hull of a 3D billiard is returned flagged as degenerate.

    Parameters
    ----------
    billiard : Billiard
        The billiard table.
    pairs : ClosestPairs | None, default=None
        Precomputed closest pairs; computed if not given.
    tolerances : ob.Tolerances | None, default=None
        Solver tolerances.

    Raises
    ------
    ob.DegenerateHullError
        If all points p_ij lie on a line.
    """
    tolerances = tolerances or ob.Tolerances()
    pairs = pairs if pairs is not None else all_closest_pairs(billiard, tolerances)

    hull = convex_hull(pairs.all_points(), tolerances.hull)
    if hull.affine_dimension <= 1:
        raise ob.DegenerateHullError(
            f"The closest-pair points span only an affine space of dimension "
            f"{hull.affine_dimension}."
        )
    return hull


@dataclass(frozen=True)
class HullConjectureReport:
    """
    The outcome of testing whether periodic orbits stay inside the hull H.

    Attributes
    ----------
    orbits_tested : int
        The number of orbits that were found and checked.
    failures : int
        The number of sequences for which the orbit finder failed.
    max_signed_distance : float
        The largest signed distance of an orbit point to H; negative if all points are
        strictly inside.
    max_violation : float
        The largest distance of an orbit point outside H, zero if there is none.
    worst_sequence : SymbolSequence | None
        The sequence attaining the largest signed distance.
    sequences_sampled : bool
        True if random sequences replaced the full enumeration.
    """

    orbits_tested: int
    failures: int
    max_signed_distance: float
    max_violation: float
    worst_sequence: SymbolSequence | None
    sequences_sampled: bool

    def as_dict(self) -> dict:
        return {
            "orbits_tested": self.orbits_tested,
            "failures": self.failures,
            "max_signed_distance": self.max_signed_distance,
            "max_violation": self.max_violation,
            "worst_sequence": (
                None if self.worst_sequence is None else list(self.worst_sequence.symbols)
            ),
            "sequences_sampled": self.sequences_sampled,
        }


def _select_sequences(
    size: int, max_period: int, samples: int, rng: np.random.Generator
) -> tuple[list[SymbolSequence], bool]:
    enumerated = list(
        itertools.islice(enumerate_periodic_sequences(size, max_period), samples + 1)
    )
    if len(enumerated) <= samples:
        return enumerated, False

    _logger.info("more than %d sequences up to period %d, sampling", samples, max_period)
    return random_periodic_sequences(size, max_period, samples, rng), True


def test_hull_conjecture(
    billiard: Billiard,
    max_period: int,
    samples: int,
    seed: int | None = None,
    tolerances: ob.Tolerances | None = None,
    hull: ConvexPolytope | None = None,
    max_workers: int | None = None,
) -> HullConjectureReport:
    """
    Checks empirically that the points of periodic orbits lie inside the hull H.

    All admissible periodic sequences up to max_period are solved if there are at most
    `samples` of them; otherwise `samples` random admissible sequences are drawn. The
    sequences are solved concurrently, and the result does not depend on the solving order.

    Parameters
    ----------
    billiard : Billiard
        The billiard table.
    max_period : int
        The largest period to test, at least 2.
    samples : int
        The maximum number of sequences to solve.
    seed : int | None, default=None
        Seed of the random sequence generator.
    tolerances : ob.Tolerances | None, default=None
        Solver tolerances.
    hull : ConvexPolytope | None, default=None
        A precomputed hull H.
    max_workers : int | None, default=None
        Worker thread count; defaults to the ``OPENBILLIARD_THREADS`` setting.

    Returns
    -------
    HullConjectureReport
        The number of orbits, solver failures and the largest violation. Solver failures
        are counted, not raised.
    """
    if max_period < 2 or samples < 1:
        raise ob.InvalidValueError(
            f"Need max_period >= 2 and samples >= 1, got {max_period} and {samples}."
        )
    tolerances = tolerances or ob.Tolerances()
    hull = hull if hull is not None else hull_H(billiard, tolerances=tolerances)

    sequences, sampled = _select_sequences(
        billiard.size, max_period, samples, np.random.default_rng(seed)
    )

    def solve(sequence: SymbolSequence) -> PeriodicOrbit | None:
        try:
            return find_periodic_orbit(billiard, sequence, tolerances)
        except (ob.NoConvergenceError, ob.DegeneratePointError) as error:
            _logger.warning("orbit %s failed: %s", sequence.one_based(), error)
            return None

    workers = max_workers or ob.config.thread_count()
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        orbits = list(executor.map(solve, sequences))

    tested = 0
    worst_distance = -np.inf
    worst_sequence = None
    for sequence, orbit in zip(sequences, orbits):
        if orbit is None:
            continue
        tested += 1
        distance = float(np.max(hull.signed_distance(orbit.points)))
        if distance > worst_distance:
            worst_distance, worst_sequence = distance, sequence

    failures = len(sequences) - tested
    _logger.info(
        "hull test: %d orbits, %d failures, max signed distance %.3g",
        tested,
        failures,
        worst_distance,
    )
    return HullConjectureReport(
        tested,
        failures,
        float(worst_distance),
        max(0.0, float(worst_distance)),
        worst_sequence,
        sampled,
    )


# not a pytest test despite its name
test_hull_conjecture.__test__ = False
