"""Polyominoes with many holes: constructions, bounds and exhaustive census."""
from .bounds import (
    b_min,
    bounds_report,
    exact_formula,
    g_of_hk,
    hk,
    nk,
    p_max_upper,
    p_min,
    theorem1_values,
    theorem2_check,
    ub_fixed_point,
    ub_from_lb,
)
from .constructions import build_A, build_R, build_R_ext, build_R_prime, build_S
from .enumeration import census, enumerate_fixed, g_table, search_g
from .grid import (
    MetricsReport,
    Polyomino,
    count_holes,
    from_cells,
    holes,
    metrics,
    random_polyomino,
    rotate_about_tile_center,
    transform,
)
from .io import parse, render_ascii, render_svg, serialize

__version__ = "0.1.0"
