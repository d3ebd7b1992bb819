"""Real 2x2 matrices with closed-form linear algebra.

Everything the planar profile analysis needs from a 2x2 matrix (determinant,
trace, adjugate, inverse, eigen-decomposition) has a short closed form, so
this avoids pulling dense-array machinery into the innermost loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError


@dataclass(frozen=True)
class Mat2:
    a00: float
    a01: float
    a10: float
    a11: float

    @property
    def det(self) -> float:
        return self.a00 * self.a11 - self.a01 * self.a10

    @property
    def trace(self) -> float:
        return self.a00 + self.a11

    def adjugate(self) -> "Mat2":
        """Adjugate matrix, satisfying M @ adj(M) = det(M) * I."""
        return Mat2(self.a11, -self.a01, -self.a10, self.a00)

    def inverse(self) -> "Mat2":
        d = self.det
        if d == 0.0:
            raise InvalidInputError("matrix is singular")
        return Mat2(self.a11 / d, -self.a01 / d, -self.a10 / d, self.a00 / d)

    def matvec(self, x: tuple[float, float]) -> tuple[float, float]:
        return (self.a00 * x[0] + self.a01 * x[1],
                self.a10 * x[0] + self.a11 * x[1])

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a00 * other.a00 + self.a01 * other.a10,
            self.a00 * other.a01 + self.a01 * other.a11,
            self.a10 * other.a00 + self.a11 * other.a10,
            self.a10 * other.a01 + self.a11 * other.a11,
        )

    def scaled(self, c: float) -> "Mat2":
        return Mat2(c * self.a00, c * self.a01, c * self.a10, c * self.a11)

    def plus(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a00 + other.a00, self.a01 + other.a01,
                    self.a10 + other.a10, self.a11 + other.a11)

    def max_abs(self) -> float:
        return max(abs(self.a00), abs(self.a01), abs(self.a10), abs(self.a11))

    def frobenius_sq(self) -> float:
        return (self.a00 * self.a00 + self.a01 * self.a01
                + self.a10 * self.a10 + self.a11 * self.a11)

    def eigenvalues(self) -> tuple[complex, complex]:
        """Both eigenvalues (complex-capable), ordered by real part then imag."""
        tr = self.trace
        disc = tr * tr - 4.0 * self.det
        if disc >= 0.0:
            s = math.sqrt(disc)
            return complex((tr - s) / 2.0), complex((tr + s) / 2.0)
        s = math.sqrt(-disc)
        return complex(tr / 2.0, -s / 2.0), complex(tr / 2.0, s / 2.0)

    def eigenvector(self, lam: float) -> tuple[float, float]:
        """Unit eigenvector for a real eigenvalue ``lam``.

        Picks the better-conditioned of the two null-space formulas for
        (M - lam I); for a defective or near-scalar matrix the result
        degrades gracefully to a coordinate axis.
        """
        c1 = (self.a01, lam - self.a00)
        c2 = (lam - self.a11, self.a10)
        n1 = math.hypot(*c1)
        n2 = math.hypot(*c2)
        if n1 == 0.0 and n2 == 0.0:
            return (1.0, 0.0)
        vx, vy = c1 if n1 >= n2 else c2
        n = math.hypot(vx, vy)
        return (vx / n, vy / n)
