"""Cohomology of the group Z/2 = <sigma> with coefficients in a free Z-module.

For an involution sigma on M = Z^n:

    H^0 = ker(sigma - 1)
    H^p = ker(sigma + 1) / im(sigma - 1)    p odd
    H^p = ker(sigma - 1) / im(sigma + 1)    p even > 0
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from . import intmat
from .errors import NotInvolutionError


@dataclass(frozen=True)
class AbelianGroupShape:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(sorted(self.torsion))
        if any(d <= 1 for d in t):
            raise ValueError("torsion divisors must exceed 1")
        object.__setattr__(self, "torsion", _invariant_factors(t))

    @property
    def torsion_order(self) -> int:
        return reduce(lambda a, b: a * b, self.torsion, 1)

    def __add__(self, other: "AbelianGroupShape") -> "AbelianGroupShape":
        return AbelianGroupShape(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        counts: dict[int, int] = {}
        for d in self.torsion:
            counts[d] = counts.get(d, 0) + 1
        for d, k in counts.items():
            parts.append(f"Z/{d}" if k == 1 else f"(Z/{d})^{k}")
        return " + ".join(parts) if parts else "0"


def _invariant_factors(divs: tuple[int, ...]) -> tuple[int, ...]:
    """Normalize a list of cyclic orders to invariant factors d1 | d2 | ..."""
    if not divs:
        return ()
    d = intmat.elementary_divisors([[x if i == j else 0 for j in range(len(divs))]
                                    for i, x in enumerate(divs)])
    return tuple(x for x in d if x > 1)


@dataclass(frozen=True)
class InvolutionModule:
    sigma: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        S = [list(r) for r in self.sigma]
        n = len(S)
        if intmat.matmul(S, S) != intmat.identity(n):
            raise NotInvolutionError("sigma^2 != 1")

    @classmethod
    def of(cls, sigma: Sequence[Sequence[int]]) -> "InvolutionModule":
        return cls(tuple(tuple(int(x) for x in r) for r in sigma))

    @classmethod
    def scalar(cls, sign: int, rank: int) -> "InvolutionModule":
        return cls.of([[sign * int(i == j) for j in range(rank)] for i in range(rank)])

    @property
    def rank(self) -> int:
        return len(self.sigma)

    def shifted(self, eps: int) -> list[list[int]]:
        """sigma + eps * 1"""
        return [[x + eps * int(i == j) for j, x in enumerate(row)] for i, row in enumerate(self.sigma)]


def _quotient(kernel_of: list[list[int]], image_of: list[list[int]]) -> AbelianGroupShape:
    kb = intmat.kernel_basis(kernel_of)
    k = len(kb)
    if k == 0:
        return AbelianGroupShape()
    gens = intmat.transpose(image_of)  # columns of the map
    gens = [v for v in gens if any(v)]
    if not gens:
        return AbelianGroupShape(k)
    # coordinates of each image vector in the kernel basis (exact, normal equations)
    KtK = [[intmat.dot(a, b) for b in kb] for a in kb]
    inv = intmat.inverse(KtK)
    coords = []
    for w in gens:
        c = intmat.matvec(inv, [intmat.dot(a, w) for a in kb])
        if not intmat.is_integral(c):
            raise ArithmeticError("image not contained in the kernel lattice")
        coords.append([int(x) for x in c])
    divs = intmat.elementary_divisors(intmat.transpose(coords))
    return AbelianGroupShape(k - len(divs), tuple(d for d in divs if d > 1))


def h_p(M: InvolutionModule, p: int) -> AbelianGroupShape:
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p == 0:
        return AbelianGroupShape(len(intmat.kernel_basis(M.shifted(-1))))
    if p % 2:
        return _quotient(M.shifted(+1), M.shifted(-1))
    return _quotient(M.shifted(-1), M.shifted(+1))


def eigen_ranks(M: InvolutionModule) -> tuple[int, int]:
    """(rank ker(sigma - 1), rank ker(sigma + 1))"""
    return len(intmat.kernel_basis(M.shifted(-1))), len(intmat.kernel_basis(M.shifted(+1)))


def e2_tableau(modules, p_max: int) -> dict[tuple[int, int], AbelianGroupShape | str]:
    """E_2^{pq} = H^p(<sigma>, H^q) for ``p <= p_max``.

    ``modules`` is a list of ``(q, InvolutionModule | None)``; ``None`` marks a
    row known only by name, whose entries are reported symbolically
    (``H^q(Y)^+`` at p = 0 and ``*`` otherwise).
    """
    out: dict[tuple[int, int], AbelianGroupShape | str] = {}
    for q, M in modules:
        for p in range(p_max + 1):
            if M is None:
                out[(p, q)] = f"H^{q}(Y)^+" if p == 0 else "*"
            else:
                out[(p, q)] = h_p(M, p)
    return out


ASSEMBLY_NOTE = ("assembly for Y+: zeros at E2^{21}, E2^{30} give Gr_0 = E2^{20}, "
                 "Gr_1 = E2^{11}, Gr_2 = H^2(Y)^+; the kernel has exponent 2 since q_! q^* = 2")


def assemble_h2_quotient(top_free_rank: int, graded: Sequence[AbelianGroupShape],
                         kernel_exponent: int = 2) -> AbelianGroupShape:
    """Shape of H^2(Y^+, Z) from the graded pieces of its limit filtration.

    ``graded`` lists the finite pieces below the free top quotient of rank
    ``top_free_rank``. The free quotient splits off; the finite kernel has
    order equal to the product of the piece orders, and with exponent 2 it
    is elementary abelian.
    """
    order = 1
    for piece in graded:
        if piece.free_rank:
            raise ValueError("lower graded pieces must be finite")
        order *= piece.torsion_order
    if order == 1:
        return AbelianGroupShape(top_free_rank)
    if kernel_exponent != 2:
        raise NotImplementedError("only exponent-2 kernels are classified")
    k = order.bit_length() - 1
    if 1 << k != order:
        raise ValueError(f"order {order} is not a power of 2")
    return AbelianGroupShape(top_free_rank, (2,) * k)
