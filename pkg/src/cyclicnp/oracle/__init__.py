from .field import FiniteField, build_field
from .zeta import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    CrossCheck,
    LPolynomial,
    WeilBoundError,
    coefficients_from_power_sums,
    count_points,
    cross_check,
    l_polynomial,
    l_polynomial_from_counts,
    newton_polygon_of_l,
)
