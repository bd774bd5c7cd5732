"""Exact matrix groups over Laurent polynomial rings with certificate-backed
ideal membership, truncated (t-1)-adic expansions, and an exponent-q
verification harness."""

from .laurent import ExponentSpec, LaurentPoly, Ring, format_poly, parse_poly
from .ideal import (
    Budget,
    Certificate,
    IdealSpec,
    Obstruction,
    Verdict,
    decide,
    find_certificate,
    find_obstruction,
    generators,
)
from .matgroup import (
    GroupWord,
    MatPoly,
    NormalForm,
    eval_word,
    fast_power,
    make_generators,
    normal_form,
    parse_word,
)
from .series import TruncSeries, coeff_sigma_floor, expand, min_order

__version__ = "0.1.0"
