"""Exact toolkit for elementary symmetric polynomials.

Modules
-------
scalar    complex arithmetic in exact, wrap64 and float modes
esp       recurrence-table evaluation plus the direct oracle
symalg    symbolic generator algebra (shift, extension, morphism)
polyzero  single-variable polynomials built from their zeroes
cli       command line, including the legacy-compatible mode
"""

from elemsym._backend import COMPILED
from elemsym.esp import Assignment, EpsTable, build_table, direct_eps, eps_omit_identity
from elemsym.polyzero import Poly1
from elemsym.scalar import ExactComplex, FloatComplex, Wrap64Complex, parse_complex
from elemsym.symalg import (
    GenPoly,
    VarSet,
    alpha_gen,
    eval_extended,
    eval_genpoly,
    generator_partition,
    merge_varsets,
    phi,
    shift_U,
    split_by_top_generator,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "COMPILED",
    "EpsTable",
    "ExactComplex",
    "FloatComplex",
    "GenPoly",
    "Poly1",
    "VarSet",
    "Wrap64Complex",
    "alpha_gen",
    "build_table",
    "direct_eps",
    "eps_omit_identity",
    "eval_extended",
    "eval_genpoly",
    "generator_partition",
    "merge_varsets",
    "parse_complex",
    "phi",
    "shift_U",
    "split_by_top_generator",
]
