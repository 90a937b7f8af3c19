"""Tensor-product Hilbert spaces built from spin, fermion-pair and boson sites."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import TYPE_CHECKING

from pydantic import BaseModel, ConfigDict, Field, model_validator

from laser_sl.core.exceptions import DimensionCapError, SiteMismatchError
from laser_sl.core.settings import get_settings

if TYPE_CHECKING:
    from laser_sl.operators.algebra import SparseOp

logger = logging.getLogger(__name__)


class SiteKind(str, Enum):
    """Kind of a single tensor factor."""

    SPIN = "spin"
    FERMION_PAIR = "fermion_pair"
    BOSON = "boson"


class Site(BaseModel):
    """One tensor factor of a space."""

    model_config = ConfigDict(frozen=True)

    kind: SiteKind
    cutoff: int | None = Field(default=None, description="Maximum occupation M of a boson mode")

    @model_validator(mode="after")
    def check_cutoff(self) -> Site:
        if self.kind is SiteKind.BOSON:
            if self.cutoff is None or self.cutoff < 1:
                raise ValueError("boson sites need a cutoff M >= 1")
        elif self.cutoff is not None:
            raise ValueError(f"{self.kind.value} sites take no cutoff")
        return self

    @property
    def dim(self) -> int:
        if self.kind is SiteKind.SPIN:
            return 2
        if self.kind is SiteKind.FERMION_PAIR:
            return 4
        assert self.cutoff is not None
        return self.cutoff + 1

    def label(self) -> str:
        if self.kind is SiteKind.BOSON:
            return f"boson(M={self.cutoff})"
        return self.kind.value


class HilbertSpec(BaseModel):
    """Declarative ordered list of sites.

    Example:
        >>> spec = HilbertSpec.laser(n_atoms=3, n_modes=1, cutoff=2)
        >>> spec.dimension
        24
    """

    model_config = ConfigDict(frozen=True)

    sites: tuple[Site, ...] = Field(min_length=1)

    @classmethod
    def laser(
        cls,
        n_atoms: int,
        n_modes: int,
        cutoff: int,
        matter: SiteKind = SiteKind.SPIN,
    ) -> HilbertSpec:
        """Atoms first, then boson modes, the layout every builder expects."""
        atoms = [Site(kind=matter)] * n_atoms
        modes = [Site(kind=SiteKind.BOSON, cutoff=cutoff)] * n_modes
        return cls(sites=tuple(atoms + modes))

    @property
    def dimension(self) -> int:
        return math.prod(site.dim for site in self.sites)


@dataclass(frozen=True)
class SpaceHandle:
    """Validated space with cached per-site layout.

    Attributes:
        spec: The declarative site list.
        dims: Local dimension of every site.
        dimension: Total dimension d.
    """

    spec: HilbertSpec
    dims: tuple[int, ...]
    dimension: int

    @property
    def sites(self) -> tuple[Site, ...]:
        return self.spec.sites

    def left_dim(self, site: int) -> int:
        """Dimension of all factors before ``site``."""
        return math.prod(self.dims[:site])

    def right_dim(self, site: int) -> int:
        """Dimension of all factors after ``site``."""
        return math.prod(self.dims[site + 1 :])

    def require(self, site: int, kind: SiteKind) -> Site:
        """Return the site, raising SiteMismatchError if it is not of ``kind``."""
        if not 0 <= site < len(self.dims):
            raise SiteMismatchError(site, kind.value, "out of range")
        found = self.spec.sites[site]
        if found.kind is not kind:
            raise SiteMismatchError(site, kind.value, found.label())
        return found

    def indices(self, kind: SiteKind) -> list[int]:
        """Indices of all sites of one kind, in order."""
        return [i for i, s in enumerate(self.spec.sites) if s.kind is kind]

    @cached_property
    def identity(self) -> SparseOp:
        from laser_sl.operators.algebra import identity

        return identity(self)


def build_space(spec: HilbertSpec, cap: int | None = None) -> SpaceHandle:
    """Validate the dimension cap and cache the layout.

    Args:
        spec: Site list.
        cap: Dimension cap; defaults to the ``dimension_cap`` setting.

    Returns:
        The space handle.

    Raises:
        DimensionCapError: If the total dimension exceeds the cap.
    """
    cap = cap if cap is not None else get_settings().dimension_cap
    dimension = spec.dimension
    if dimension > cap:
        raise DimensionCapError(dimension, cap)
    logger.debug("Built space %s with dimension %d", [s.label() for s in spec.sites], dimension)
    return SpaceHandle(spec=spec, dims=tuple(s.dim for s in spec.sites), dimension=dimension)


def single_site_space(site: Site) -> SpaceHandle:
    """Space made of one site, the home of local operators."""
    return build_space(HilbertSpec(sites=(site,)))
