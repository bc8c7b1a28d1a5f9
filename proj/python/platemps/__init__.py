"""Plate eigenfrequencies and eigenmodes by the method of particular solutions."""

from ._core import (
    BcTag,
    ConfigError,
    Mode,
    PlateMaterial,
    RunConfig,
    RunSummary,
    SplitWavenumbers,
    StarDomain,
    bessel_i,
    bessel_j,
    disk_eigenvalues,
    disk_mode_coefficients,
    interior_points,
    make_circle,
    make_paper_shape2,
    omega_from_scan_k,
    parse_config_file,
    parse_config_text,
    run,
    serialize_config,
    split_wavenumbers,
)

__all__ = [
    "BcTag",
    "ConfigError",
    "Mode",
    "PlateMaterial",
    "RunConfig",
    "RunSummary",
    "SplitWavenumbers",
    "StarDomain",
    "bessel_i",
    "bessel_j",
    "disk_eigenvalues",
    "disk_mode_coefficients",
    "interior_points",
    "make_circle",
    "make_paper_shape2",
    "omega_from_scan_k",
    "parse_config_file",
    "parse_config_text",
    "run",
    "serialize_config",
    "split_wavenumbers",
]

__version__ = "0.1.0"
