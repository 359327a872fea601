"""Hand-transcribed generic adjoint-action formulas for N=2, as printed.

These are transcriptions, not computations: each function returns the printed
right-hand side as a sparse {label: CyclotomicNumber} dict over the named basis
of H_2^i, so the computed adjoint action can be diffed against it.
"""

from fractions import Fraction

from hni.cyclotomic import CyclotomicNumber

_ORDER = 8  # field order of H_2^i scalars


def _zero():
    return {}


def _c(re=0, im=0):
    val = CyclotomicNumber.from_rational(Fraction(re), _ORDER)
    if im:
        val = val + CyclotomicNumber.i(_ORDER) * Fraction(im)
    return val


def _ipow(e):
    e %= 4
    re, im = [(1, 0), (0, 1), (-1, 0), (0, -1)][e]
    return _c(re, im)


def _scaled(scale, terms):
    out = {}
    for label, coeff in terms.items():
        val = coeff * scale
        if not val.is_zero():
            out[label] = val
    return out


def _delta(a, b):
    return 1 if a % 4 == b % 4 else 0


def adjoint_on_idempotent_basis(family_a, m, family_x, j):
    """Printed mu(a_m) x_j for families in {e, E, F, P}, indices mod 4."""
    quarter = _c(Fraction(1, 4))
    jj = j % 4
    if family_a == "e":
        wanted = 2 if family_x == "F" else 0
        if m % 4 != wanted:
            return _zero()
        return {f"{family_x}{jj}": quarter}
    if family_a == "E":
        if family_x == "E" or m % 4 != 0:
            return _zero()
        if family_x == "e":
            return {f"E{(jj + 2) % 4}": quarter, f"E{jj}": quarter}
        if family_x == "F":
            if jj == 1:
                return {"e1": quarter}
            if jj == 3:
                return {"e3": -quarter}
            return _zero()
        # family_x == "P"
        if jj == 1:
            return {"E1": quarter}
        if jj == 3:
            return {"E3": -quarter}
        return _zero()
    if family_a == "F":
        if family_x == "F":
            return _zero()
        if family_x == "e":
            if m % 4 != 2:
                return _zero()
            return _scaled(
                quarter,
                {f"F{(jj + 2) % 4}": _ipow(jj), f"F{jj}": _ipow(-jj)},
            )
        if m % 4 != 0:
            return _zero()
        if family_x == "E":
            out = {f"P{jj}": (_ipow(jj) + _ipow(-jj)) * quarter}
            if jj == 1:
                out["e1"] = _c(0, Fraction(1, 4))
            if jj == 3:
                out["e3"] = _c(0, Fraction(1, 4))
            return {k: v for k, v in out.items() if not v.is_zero()}
        # family_x == "P"
        return {f"P{jj}": _ipow(jj) * quarter}
    # family_a == "P"
    if family_x in ("F", "P") or m % 4 != 0:
        return _zero()
    if family_x == "e":
        if jj in (1, 3):
            return {"e1": _c(0, Fraction(1, 4)), "e3": _c(0, Fraction(1, 4))}
        return _zero()
    # family_x == "E"
    if jj == 1:
        return {"E1": -quarter}
    if jj == 3:
        return {"E3": quarter}
    return _zero()


def adjoint_of_generator(generator, family_x, j):
    """Printed mu(E) x_j and mu(F) x_j on the idempotent basis of H_2^i."""
    jj = j % 4
    if generator == "E":
        if family_x == "E":
            return _zero()
        if family_x == "e":
            return {f"E{(jj + 2) % 4}": _c(1), f"E{jj}": _c(1)}
        if family_x == "F":
            if jj == 1:
                return {"e1": _c(-1)}
            if jj == 3:
                return {"e3": _c(1)}
            return _zero()
        if jj == 1:
            return {"E1": _c(-1)}
        if jj == 3:
            return {"E3": _c(1)}
        return _zero()
    if generator == "F":
        if family_x == "F":
            return _zero()
        if family_x == "e":
            return {f"F{(jj + 2) % 4}": _ipow(jj), f"F{jj}": _ipow(-jj)}
        if family_x == "E":
            out = {f"P{jj}": -(_ipow(jj) + _ipow(-jj))}
            if jj == 1:
                out["e1"] = -_ipow(jj)
            if jj == 3:
                out["e3"] = _ipow(jj)
            return {k: v for k, v in out.items() if not v.is_zero()}
        # family_x == "P"
        return {"E1": _c(0, -1), "E3": _c(0, -1)}
    raise ValueError(f"unknown generator {generator!r}")


def adjoint_of_ef(family_x, j):
    """Printed mu(EF) x_j on the idempotent basis of H_2^i."""
    jj = j % 4
    if family_x == "e":
        if jj in (1, 3):
            return {"e1": _c(0, 1), "e3": _c(0, 1)}
        return _zero()
    if family_x == "E":
        return {"E1": _c(0, 2), "E3": _c(0, 2)}
    return _zero()
