"""Hand-transcribed value tables from the source, kept separate from computation."""

import json
from fractions import Fraction
from importlib import resources

from hni.cyclotomic import CyclotomicNumber

_CACHE = {}


def load(name):
    if name not in _CACHE:
        path = resources.files("hni.fixtures").joinpath(f"{name}.json")
        _CACHE[name] = json.loads(path.read_text())
    return _CACHE[name]


def scalar(obj, order=4):
    """Decode a fixture coefficient: [num, den] or {re: [n,d], im: [n,d]}."""
    if isinstance(obj, dict):
        re = Fraction(*obj.get("re", [0, 1]))
        im = Fraction(*obj.get("im", [0, 1]))
        return CyclotomicNumber.from_rational(re, order) + CyclotomicNumber.i(order) * im
    return CyclotomicNumber.from_rational(Fraction(*obj), order)


def sparse_vector(cell, basis, order=4):
    """Decode a {label: coeff} cell into a dense coefficient vector over basis."""
    vec = [CyclotomicNumber.zero(order) for _ in basis]
    for label, c in cell.items():
        vec[basis.index(label)] = scalar(c, order)
    return vec


def table_tensor(fixture, order=4):
    """Decode a multiplication-table fixture into a dense rank-3 list."""
    basis = fixture["basis"]
    return [
        [sparse_vector(fixture["rows"][x][y], basis, order) for y in basis]
        for x in basis
    ]
