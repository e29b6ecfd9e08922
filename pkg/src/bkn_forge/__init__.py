"""Exact root-datum, cone and monoid computations for BKN triples."""

__version__ = "0.1.0"

from .bkn import build_bkn, product_decomposition_check, validate_l_triple, verify_bkn
from .cones import cone_from_generators, cones_equal, dual_cone, hilbert_basis
from .config import RunConfig
from .monoid import putcha_renner, theorem_monoids_certificate, vinberg_slice
from .rootdata import RootDatum, base, dual, gl, gm, pgl, sl, so_odd, sp, torus, validate_root_datum

__all__ = [
    "RootDatum", "base", "dual", "gl", "gm", "pgl", "sl", "so_odd", "sp", "torus", "validate_root_datum",
    "cone_from_generators", "cones_equal", "dual_cone", "hilbert_basis",
    "build_bkn", "product_decomposition_check", "validate_l_triple", "verify_bkn",
    "putcha_renner", "theorem_monoids_certificate", "vinberg_slice", "RunConfig",
]
