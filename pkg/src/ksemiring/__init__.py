"""Subtractive ideals, Bourne congruences and quotients of finite semirings."""

from .kernel import (
    AxiomError,
    AxiomReport,
    FiniteSemiring,
    PreconditionError,
    ScanLimitError,
    StructuralError,
    find_identity,
    find_zero,
    validate,
)
from .specfmt import load_fixture, parse_semiring, render, zn_ring

__version__ = "0.1.0"
