"""Exact-arithmetic engine for the quantum groups H_N^i = U_i(sl2)/(E^2, F^2, K^{2N}-1)."""

from hni.cyclotomic import CyclotomicNumber, field_order

__all__ = ["CyclotomicNumber", "field_order"]
