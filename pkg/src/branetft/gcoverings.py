"""Principal G-coverings and the S_d correspondence.

The engine in :mod:`branetft.coverings` already works with principal data
(group elements on incidences, the group acting on itself).  This module is
the G-facing front end: classes, Hurwitz numbers, and the passage from an
``S_d``-bundle to its associated d-sheeted covering.
"""
from __future__ import annotations

from typing import Mapping

from .complex import ColoredComplex, canonical_form
from .coverings import (
    DEFAULT_BOUNDS,
    Covering,
    CoveringClass,
    HurwitzValue,
    SearchBounds,
    classify,
    enumerate_classes,
    hurwitz,
    sector_classes,
    sector_covering,
    sector_theory,
    symmetric_cached,
)
from .groups import FiniteGroup, NotSymmetricGroup
from .surgery import BraneComplex

GCoveringClass = CoveringClass


def g_covering_classes(sigma: ColoredComplex, group: FiniteGroup) -> list[CoveringClass]:
    """Classes of principal G-coverings of a connected vertex complex."""
    return sector_classes(sigma, group)


def enumerate_g_coverings(bc: BraneComplex | ColoredComplex, group: FiniteGroup,
                          constraints: Mapping | None = None,
                          bounds: SearchBounds = DEFAULT_BOUNDS) -> list[CoveringClass]:
    return enumerate_classes(bc, group, constraints, bounds)


def hurwitz_g(bc: BraneComplex | ColoredComplex, group: FiniteGroup,
              constraints: Mapping | None = None,
              bounds: SearchBounds = DEFAULT_BOUNDS) -> HurwitzValue:
    return hurwitz(bc, group, constraints, bounds)


def associated_covering(cov: Covering) -> dict:
    """Sheet bijections of the d-covering associated to an ``S_d``-bundle."""
    g = cov.group
    if g.perms is None:
        raise NotSymmetricGroup(f"{g.name} has no defining permutation action")
    return {arc: g.perms[x] for arc, x in cov.values.items()}


def sd_correspondence(beta: CoveringClass, group: FiniteGroup) -> CoveringClass:
    """Degree-d class of the covering associated to an ``S_d`` class over a sector.

    The principal representative is pushed through the defining action, the
    resulting bijections are re-encoded in the degree-d symmetric group and
    classified there.
    """
    if group.perms is None:
        raise NotSymmetricGroup(f"{group.name} is not a symmetric group")
    d = len(group.perms[0])
    target = symmetric_cached(d)
    rep = sector_covering(beta, group)
    index = {p: i for i, p in enumerate(target.perms)}
    values = {arc: index[tuple(p)] for arc, p in associated_covering(rep).items()}
    return classify(Covering(rep.base, target, values, kind="graph"))


def sd_class_map(sigma: ColoredComplex, group: FiniteGroup) -> dict[CoveringClass, CoveringClass]:
    """``sd_correspondence`` on every class over ``sigma``; bijective by construction checks."""
    out = {b: sd_correspondence(b, group) for b in sector_classes(sigma, group)}
    if len(set(out.values())) != len(out):
        raise AssertionError("correspondence is not injective")
    d = len(group.perms[0])
    if set(out.values()) != set(sector_theory(canonical_form(sigma).complex, symmetric_cached(d)).classes):
        raise AssertionError("correspondence is not surjective")
    return out
