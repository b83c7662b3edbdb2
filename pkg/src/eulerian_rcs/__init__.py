"""Exact relaxation bounds for the extreme roots of Eulerian polynomials."""
from .bounds import (BoundReport, Status, b11_bound, bound_report, colucci_bound, laguerre_upper,
                     mult_det_bound, mult_DN, mult_v_bound, optimal_y, ratio_diagnostics, un_bound,
                     vector_bound)
from .counting import (alpha_tuple, beta_hat_factorial, eulerian_number, eulerian_poly, p_exact, p_full,
                       r_count)
from .exact import DyadicInterval, Ordering, RadicalExpr, compare
from .lform import (Trunc3Polynomial, lform_closed, lform_eulerian_multi, lform_eulerian_uni, lform_series,
                    trunc3_eulerian)
from .oracle import RootInterval, UniPoly, extreme_root, is_palindromic, is_real_rooted, sturm_count
from .pencil import (DiagonalPencil, Pencil, build_pencil, det_diagonal_poly, diagonal, eulerian_pencil,
                     evaluate, membership, psd, univariate_pencil)
from .perms import descent_histogram, eulerian_bruteforce, rz_direction_check

__version__ = "0.1.0"
