"""Exact middle-convolution calculus on monodromy tuples and theta-form
differential operators.

Structured values are JSON strings in the same encodings the command-line
tool uses; :func:`json.loads` turns them into plain dictionaries.  Roots of
unity are exponent strings: ``"p/q"`` stands for ``exp(2*pi*i*p/q)``, so
``"1/2"`` is -1.
"""

from ._core import (
    CalcError,
    ParseError,
    adjoint,
    catalog,
    convolution_ca,
    divide_left,
    equal_up_to_scalar,
    equivalent,
    invariant_forms,
    is_irreducible,
    katz_reduce,
    levelt,
    local_data,
    mc_numerology,
    middle_convolution,
    multiply,
    remark_family,
    reproduce,
    riemann_scheme,
    scalar_twist,
    scott_bound,
    shift_theta,
    wedge_square,
)

__all__ = [
    "CalcError",
    "ParseError",
    "adjoint",
    "catalog",
    "convolution_ca",
    "divide_left",
    "equal_up_to_scalar",
    "equivalent",
    "invariant_forms",
    "is_irreducible",
    "katz_reduce",
    "levelt",
    "local_data",
    "mc_numerology",
    "middle_convolution",
    "multiply",
    "remark_family",
    "reproduce",
    "riemann_scheme",
    "scalar_twist",
    "scott_bound",
    "shift_theta",
    "wedge_square",
]
