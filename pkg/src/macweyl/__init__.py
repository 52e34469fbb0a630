"""Exact computations with nonsymmetric Macdonald polynomials, alcove walks,
the quantum Bruhat graph and graded characters of generalized Weyl modules."""
from __future__ import annotations

from .affine_weyl import AffineWeylElement, AffineWeylGroup, ReducedWord, affine_weyl_group
from .algebra import CharacterSeries, CoefficientScalar, LaurentPolynomial, series_divide
from .hecke import E_via_T, apply_T, apply_Y, y_eigenvalue
from .macdonald import norm_squared, ram_yip
from .qbg import QuantumBruhatGraph, build_qbg
from .rootdata import RootDatum, build
from .weyl_characters import (
    WeylModuleSpec,
    filtration_report,
    global_char,
    local_char,
    local_char_macdonald,
    local_char_recursion,
    verify_m1_lemma,
)
from .whittaker import a1_toda_apply, omega_component, verify_rr

__version__ = "0.1.0"

__all__ = [
    "AffineWeylElement",
    "AffineWeylGroup",
    "ReducedWord",
    "affine_weyl_group",
    "CharacterSeries",
    "CoefficientScalar",
    "LaurentPolynomial",
    "series_divide",
    "E_via_T",
    "apply_T",
    "apply_Y",
    "y_eigenvalue",
    "norm_squared",
    "ram_yip",
    "QuantumBruhatGraph",
    "build_qbg",
    "RootDatum",
    "build",
    "WeylModuleSpec",
    "filtration_report",
    "global_char",
    "local_char",
    "local_char_macdonald",
    "local_char_recursion",
    "verify_m1_lemma",
    "a1_toda_apply",
    "omega_component",
    "verify_rr",
]
