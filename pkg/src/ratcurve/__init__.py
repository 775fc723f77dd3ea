"""Exact classification of 1-dimensional polynomial images of balls and spheres.

Given a proper rational parameterization of a curve, this package decides
which compact one-dimensional semialgebraic subsets of its real trace are
polynomial/regular/regulous images of [-1,1], the circle and the higher
spheres, constructs explicit witness maps for each positive answer, and
validates every claim with a floating-point oracle.
"""

from .classify import INF, CaseLabel, Classification, classify
from .errors import (ArcMeetsInfinity, ConstantParameterization,
                     ImproperParameterization, MathRejection,
                     UnsupportedExtension, WrongCase)
from .analysis import (CoincidenceData, InfinityFiber, InfinityReport,
                       implicitize_plane, infinity_fibers, is_real_trace_bounded,
                       properness_check)
from .param import (Mobius, Mode, ProjParam, SemialgInput, apply_mobius,
                    conjugate_param, param_from_affine, param_from_strings,
                    reduce_components)
from .qmath import HPoly2, QuadExt, Rat, UPoly
from .witness import (LaurentPoly, RealPolyMap, Source, laurent_from_real,
                      real_from_laurent, verify_witness, witness_circle,
                      witness_interval, witness_sphere_k)

__version__ = "0.1.0"

__all__ = [
    "INF", "CaseLabel", "Classification", "classify",
    "MathRejection", "ImproperParameterization", "ConstantParameterization",
    "ArcMeetsInfinity", "UnsupportedExtension", "WrongCase",
    "CoincidenceData", "InfinityFiber", "InfinityReport",
    "implicitize_plane", "infinity_fibers", "is_real_trace_bounded",
    "properness_check",
    "Mobius", "Mode", "ProjParam", "SemialgInput", "apply_mobius",
    "conjugate_param", "param_from_affine", "param_from_strings",
    "reduce_components",
    "HPoly2", "QuadExt", "Rat", "UPoly",
    "LaurentPoly", "RealPolyMap", "Source", "laurent_from_real",
    "real_from_laurent", "verify_witness", "witness_circle",
    "witness_interval", "witness_sphere_k",
    "__version__",
]
