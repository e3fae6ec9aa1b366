"""Exact elementary-divisor profiles and centralizer-algebra equivalence.

Thin re-export of the compiled extension. The main entry points:

    Field.rationals(), Field.finite(p, k)   -- the exact ground fields
    poly(field, "x^2 + 1"), factor, cyclotomic, is_irreducible
    Matrix(field, rows), char_poly, nullity
    profile(matrix), cycle_type_profile("15,4", field)
    decide("derived", a, b), decide_all(a, b)
    structure_report(profile)
    p_split, rep_finite_perm, fixed_point_extension_equivalent
"""

try:
    # installed layout: the extension lives inside the package
    from ._cendiv import *  # noqa: F401,F403
except ImportError:
    # in-tree layout: the extension sits on PYTHONPATH next to the build
    from _cendiv import *  # noqa: F401,F403
