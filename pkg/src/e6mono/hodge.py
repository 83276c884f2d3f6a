"""Chern, Euler and Hodge numbers of the surfaces Y and Y+ for a ppav of dimension 4.

Y is the intersection of the theta divisor with a general translate; it
carries a free involution with quotient Y+. Everything here is integer
arithmetic on a handful of topological inputs, each recorded with its
origin in :data:`CONSTANTS`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exterior import deg_top, power, theta_class


@dataclass(frozen=True)
class Constant:
    name: str
    value: int
    origin: str


# g = 4 inputs of the derivation chain
CONSTANTS = (
    Constant("h0(Y)", 1, "Y is connected"),
    Constant("h1(Y)", 8, "weak Lefschetz: H^1(Y) = H^1(X), rank 2g"),
    Constant("h10(Y)", 4, "half of h1(Y)"),
    Constant("h1(Y+)", 0, "H^1(Y)^+ = 0, the whole of H^1(Y) is anti-invariant"),
    Constant("h20(X)", 6, "dim of the (2,0) part of the second exterior power of a 4-dim space"),
    Constant("h11(X)", 16, "4 x 4 block of (1,1) forms"),
    Constant("cover degree", 2, "Y -> Y+ is an etale double cover"),
)


def constant(name: str) -> int:
    for c in CONSTANTS:
        if c.name == name:
            return c.value
    raise KeyError(name)


def chern_coefficient(i: int) -> int:
    """c_i(Y) = chern_coefficient(i) * theta^i."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    return (-1) ** i * (i + 1)


def theta_degree(g: int) -> int:
    """deg of theta^g on X, from the exterior algebra model."""
    return int(deg_top(power(theta_class(g), g)))


def euler_characteristic(g: int) -> int:
    """Topological Euler characteristic of Y = Theta . Theta_x in dimension g."""
    if g < 2:
        raise ValueError("g must be at least 2")
    # deg_Y c_{g-2}(Y) = c * deg_X theta^(g-2) . theta^2
    value = chern_coefficient(g - 2) * theta_degree(g)
    assert value == (-1) ** g * (g - 1) * factorial(g)
    return value


def holomorphic_euler(g: int = 4, cover_quotient: bool = False) -> int:
    """chi(O) by Hirzebruch-Riemann-Roch; halved for the quotient Y+."""
    if g != 4:
        raise ValueError("only g = 4 is a surface")
    c1, c2 = chern_coefficient(1), chern_coefficient(2)
    val = Fraction((c1 * c1 + c2) * theta_degree(g), 12)
    if cover_quotient:
        val /= constant("cover degree")
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral chi(O) = {val}")
    return int(val)


@dataclass(frozen=True)
class HodgeDiamond:
    h00: int
    h10: int
    h20: int
    h11: int

    def __post_init__(self):
        if min(self.h00, self.h10, self.h20, self.h11) < 0:
            raise ValueError("Hodge numbers are nonnegative")

    # symmetry h^{pq} = h^{qp} and Serre duality for a surface
    @property
    def h01(self) -> int:
        return self.h10

    @property
    def h02(self) -> int:
        return self.h20

    @property
    def betti(self) -> tuple[int, int, int, int, int]:
        b1 = self.h10 + self.h01
        return (self.h00, b1, self.h20 + self.h11 + self.h02, b1, self.h00)

    @property
    def b2(self) -> int:
        return self.betti[2]

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def chi_O(self) -> int:
        return self.h00 - self.h01 + self.h02


def hodge_diamond(surface: str) -> HodgeDiamond:
    """Hodge numbers of ``"Y"`` or ``"Yplus"`` from chi, chi(O), h0 and h1."""
    if surface == "Y":
        chi = euler_characteristic(4)
        chi_o = holomorphic_euler(4)
        h1 = constant("h1(Y)")
    elif surface == "Yplus":
        deg = constant("cover degree")
        chi = euler_characteristic(4) // deg
        chi_o = holomorphic_euler(4, cover_quotient=True)
        h1 = constant("h1(Y+)")
    else:
        raise ValueError(f"unknown surface {surface!r}")
    h0 = constant("h0(Y)")
    b2 = chi - 2 * h0 + 2 * h1
    h10 = h1 // 2
    h20 = chi_o - h0 + h10
    h11 = b2 - 2 * h20
    d = HodgeDiamond(h0, h10, h20, h11)
    assert d.euler() == chi and d.chi_O() == chi_o
    return d


@dataclass(frozen=True)
class SignatureTable:
    rows: tuple[tuple[str, int, int], ...]

    def get(self, name: str) -> tuple[int, int]:
        for n, sp, sm in self.rows:
            if n == name:
                return sp, sm
        raise KeyError(name)


def hodge_index(h20: int, h11: int) -> tuple[int, int]:
    """(s+, s-) of the intersection form on H^2 of a Kahler surface."""
    return 2 * h20 + 1, h11 - 1


def signature_table() -> SignatureTable:
    y = hodge_diamond("Y")
    yp = hodge_diamond("Yplus")
    sy = hodge_index(y.h20, y.h11)
    syp = hodge_index(yp.h20, yp.h11)
    sx = hodge_index(constant("h20(X)"), constant("h11(X)"))
    # H^2(Y) = H^2(Y+) + V_-  and  H^2(Y+) = H^2(X) + V_+
    vm = (sy[0] - syp[0], sy[1] - syp[1])
    vp = (syp[0] - sx[0], syp[1] - sx[1])
    rows = (("H2(Y)",) + sy, ("H2(Y+)",) + syp, ("H2(X)",) + sx, ("V-",) + vm, ("V+",) + vp)
    assert sum(sy) == y.b2 and sum(syp) == yp.b2
    return SignatureTable(rows)


def difference_degree(n: int) -> int:
    """Degree of the difference map C_n x C_n -> Pic^0(C)."""
    if n < 1:
        raise ValueError("n must be positive")
    return comb(2 * n, n)
