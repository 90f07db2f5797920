"""
Seeded random rational data for randomized exact checks
"""
from fractions import Fraction
from typing import List, Optional

import numpy as np

from immgeo.config.settings import get_config


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """numpy Generator seeded from ``seed`` (or the configured default)"""
    if seed is None:
        seed = get_config().DEFAULT_SEED
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, numerator_bound: int = None,
                    denominator_bound: int = None) -> Fraction:
    """Uniform numerator in [-B, B] over a denominator in [1, D]"""
    settings = get_config()
    if numerator_bound is None:
        numerator_bound = settings.SAMPLE_NUMERATOR_BOUND
    if denominator_bound is None:
        denominator_bound = settings.SAMPLE_DENOMINATOR_BOUND
    numerator = int(rng.integers(-numerator_bound, numerator_bound + 1))
    denominator = int(rng.integers(1, denominator_bound + 1))
    return Fraction(numerator, denominator)


def random_rational_grid(rng: np.random.Generator, rows: int, cols: int) -> List[List[Fraction]]:
    return [[random_rational(rng) for _ in range(cols)] for _ in range(rows)]
