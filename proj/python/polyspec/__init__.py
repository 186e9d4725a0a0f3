"""Exact construction, verification and spectral analysis of self-adjoint
differential operators with polynomial coefficients.

The compiled core exchanges operators and reports as JSON strings with all
rationals encoded as "p/q" strings; the helpers here accept and return plain
python structures instead.
"""

import json as _json

try:
    from . import _polyspec as _core  # installed package layout
except ImportError:  # pragma: no cover - build-tree layout used by the tests
    import _polyspec as _core

ConstraintViolation = _core.ConstraintViolation
IrreducibleFactorError = _core.IrreducibleFactorError
UnknownFamilyError = _core.UnknownFamilyError
UnsupportedWeightClassError = _core.UnsupportedWeightClassError

__all__ = [
    "apply",
    "catalog",
    "compose",
    "eigen",
    "eigenvalues",
    "family",
    "gram",
    "verify",
    "ConstraintViolation",
    "IrreducibleFactorError",
    "UnknownFamilyError",
    "UnsupportedWeightClassError",
]


def catalog():
    return _json.loads(_core.catalog())


def family(family_id, params):
    params = {key: str(value) for key, value in params.items()}
    return _json.loads(_core.family(family_id, params))


def verify(op, lo="-inf", hi="+inf"):
    return _json.loads(_core.verify(_json.dumps(op), str(lo), str(hi)))


def eigenvalues(op, max_degree=8):
    return _core.eigenvalues(_json.dumps(op), max_degree)


def eigen(op, max_degree=8, lo="-inf", hi="+inf"):
    return _json.loads(_core.eigen(_json.dumps(op), max_degree, str(lo), str(hi)))


def gram(op, max_degree=8, lo="-inf", hi="+inf"):
    return _json.loads(_core.gram(_json.dumps(op), max_degree, str(lo), str(hi)))


def compose(op1, op2):
    return _json.loads(_core.compose(_json.dumps(op1), _json.dumps(op2)))


def apply(op, poly_coeffs):
    return _core.apply(_json.dumps(op), [str(c) for c in poly_coeffs])
