"""Orbit geometry, Arthur pairs and microlocal packets for abelian nilradicals."""

from __future__ import annotations

from .parabolic import NonAbelianRadical, ParabolicDatum, is_abelian_radical, parabolic_from_node
from .rootsys import RootSystem, RootSystemError, build_root_system

__version__ = "0.1.0"

__all__ = [
    "NonAbelianRadical",
    "ParabolicDatum",
    "RootSystem",
    "RootSystemError",
    "build_root_system",
    "is_abelian_radical",
    "parabolic_from_node",
]
