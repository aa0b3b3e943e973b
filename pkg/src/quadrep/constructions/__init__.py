"""Surfaces whose projection is a quadratic form value, and the maps from
genus-1 auxiliary curves onto them."""

from __future__ import annotations

import inspect

from ..exact_arith import DomainError, Q
from .base import (
    PROJ_X,
    PROJ_Y,
    Construction,
    Model,
    QuadForm,
    SurfacePoint,
    apply_psi,
    fiber_polynomial,
    reduced_model,
)
from .sec2 import build_sec2, derive_G_sec2, descent_nonempty_criterion, psi_sec2, sec2_aux, sec2_surface
from .sec3 import L4, build_sec3_case1, build_sec3_case2, build_sec3_case3, psi_sec3, sextic_F2F4
from .sec4 import H_sec4, build_sec4_case1, build_sec4_case2, derive_F_sec4, psi_sec4
from .sec5 import build_sec5, derive_H1H2_sec5, psi_sec5

BUILDERS = {
    "Sec2": build_sec2,
    "Sec3Case1": build_sec3_case1,
    "Sec3Case2": build_sec3_case2,
    "Sec3Case3": build_sec3_case3,
    "Sec4CaseI": build_sec4_case1,
    "Sec4CaseII": build_sec4_case2,
    "Sec5Case2": lambda **kw: build_sec5(1, **kw),
    "Sec5Case3": lambda **kw: build_sec5(2, **kw),
    "Sec5Case4": lambda **kw: build_sec5(3, **kw),
    "Sec5Case5": lambda **kw: build_sec5(4, **kw),
}

SEC5_KEYS = {"Sec5Case2": {"t"}, "Sec5Case3": {"y0", "Y0"}, "Sec5Case4": {"v"}, "Sec5Case5": {"Z"}}


def family_params(family: str) -> set[str]:
    """Accepted parameter names for a family tag."""
    if family not in BUILDERS:
        raise DomainError(f"unknown family {family!r}")
    if family in SEC5_KEYS:
        return {"a", "b", "p0", "q0", "Y0"} | SEC5_KEYS[family]
    return set(inspect.signature(BUILDERS[family]).parameters)


def build(family: str, params: dict) -> Construction:
    """Build a construction from a family tag and a parameter mapping;
    unknown keys are rejected."""
    allowed = family_params(family)
    extra = set(params) - allowed
    if extra:
        raise DomainError(f"unknown parameters for {family}: {sorted(extra)}")
    return BUILDERS[family](**{k: Q(v) for k, v in params.items()})


__all__ = [
    "BUILDERS", "Construction", "Model", "PROJ_X", "PROJ_Y", "QuadForm", "SurfacePoint",
    "L4", "H_sec4", "apply_psi", "build", "build_sec2", "build_sec3_case1", "build_sec3_case2",
    "build_sec3_case3", "build_sec4_case1", "build_sec4_case2", "build_sec5", "derive_F_sec4",
    "derive_G_sec2", "derive_H1H2_sec5", "descent_nonempty_criterion", "family_params",
    "fiber_polynomial", "psi_sec2", "psi_sec3", "psi_sec4", "psi_sec5", "reduced_model",
    "sec2_aux", "sec2_surface", "sextic_F2F4",
]
