"""Exact arithmetic in the ring of dyadic rationals and its extension by
the primitive eighth root of unity.

Every scalar appearing in the diagram semantics lives in ``D[w]`` where
``D = Z[1/2]`` and ``w = exp(i*pi/4)``.  Both rings are implemented with
arbitrary-precision integers and a structural normal form, so equality of
values is equality of representations.  There is no floating point here;
:meth:`Cyclotomic.to_complex` exists only for display and test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Dyadic:
    """A dyadic rational ``num / 2**exp`` in normal form.

    Normal form: ``num`` is odd or zero, ``exp >= 0``, and ``num == 0``
    forces ``exp == 0``.  Construction normalizes, so two equal values
    always have identical fields.
    """

    num: int
    exp: int = 0

    def __post_init__(self) -> None:
        num, exp = self.num, self.exp
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        else:
            while exp > 0 and num % 2 == 0:
                num //= 2
                exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_int(cls, n: int) -> Dyadic:
        return cls(n, 0)

    def __add__(self, other: Dyadic | int) -> Dyadic:
        if isinstance(other, int):
            other = Dyadic(other)
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    __radd__ = __add__

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.num, self.exp)

    def __sub__(self, other: Dyadic | int) -> Dyadic:
        if isinstance(other, int):
            other = Dyadic(other)
        return self + (-other)

    def __rsub__(self, other: int) -> Dyadic:
        return Dyadic(other) - self

    def __mul__(self, other: Dyadic | int) -> Dyadic:
        if isinstance(other, int):
            other = Dyadic(other)
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.num != 0

    def is_integer(self) -> bool:
        return self.exp == 0

    def halved(self, k: int = 1) -> Dyadic:
        """Divide by ``2**k`` (stays in the ring for any ``k >= 0``)."""
        return Dyadic(self.num, self.exp + k)

    def doubled(self, k: int = 1) -> Dyadic:
        return Dyadic(self.num << k, self.exp)

    def to_float(self) -> float:
        return self.num / (1 << self.exp)

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


@dataclass(frozen=True)
class Cyclotomic:
    """An element ``a + b*w + c*w**2 + d*w**3`` of ``D[w]``, ``w = e^{i pi/4}``.

    The coefficient representation is unique, so ``==`` decides equality
    of values.  Multiplication reduces powers by ``w**4 = -1``.
    """

    a: Dyadic = ZERO
    b: Dyadic = ZERO
    c: Dyadic = ZERO
    d: Dyadic = ZERO

    @classmethod
    def from_int(cls, n: int) -> Cyclotomic:
        return cls(Dyadic(n))

    @classmethod
    def from_dyadic(cls, x: Dyadic) -> Cyclotomic:
        return cls(x)

    @classmethod
    def zeta_pow(cls, k: int) -> Cyclotomic:
        """The root of unity ``w**k`` (``k`` taken mod 8)."""
        k %= 8
        sign = 1 if k < 4 else -1
        coeffs = [ZERO] * 4
        coeffs[k % 4] = Dyadic(sign)
        return cls(*coeffs)

    def coeffs(self) -> tuple[Dyadic, Dyadic, Dyadic, Dyadic]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: Cyclotomic | int) -> Cyclotomic:
        if isinstance(other, int):
            other = Cyclotomic.from_int(other)
        return Cyclotomic(self.a + other.a, self.b + other.b,
                          self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: Cyclotomic | int) -> Cyclotomic:
        if isinstance(other, int):
            other = Cyclotomic.from_int(other)
        return self + (-other)

    def __rsub__(self, other: int) -> Cyclotomic:
        return Cyclotomic.from_int(other) - self

    def __mul__(self, other: Cyclotomic | int) -> Cyclotomic:
        if isinstance(other, int):
            other = Cyclotomic.from_int(other)
        sa, sb, sc, sd = self.a, self.b, self.c, self.d
        oa, ob, oc, od = other.a, other.b, other.c, other.d
        # Convolution of coefficients, folded back with w**4 = -1.
        a = sa * oa - sb * od - sc * oc - sd * ob
        b = sa * ob + sb * oa - sc * od - sd * oc
        c = sa * oc + sb * ob + sc * oa - sd * od
        d = sa * od + sb * oc + sc * ob + sd * oa
        return Cyclotomic(a, b, c, d)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def conj(self) -> Cyclotomic:
        """Complex conjugate: (a, b, c, d) -> (a, -d, -c, -b)."""
        return Cyclotomic(self.a, -self.d, -self.c, -self.b)

    def halved(self, k: int = 1) -> Cyclotomic:
        return Cyclotomic(self.a.halved(k), self.b.halved(k),
                          self.c.halved(k), self.d.halved(k))

    def is_dyadic(self) -> bool:
        """True when the w, w**2 and w**3 components vanish."""
        return not (self.b or self.c or self.d)

    def is_real(self) -> bool:
        # Im(x) = (b + d)/sqrt(2) + c; real iff c = 0 and b = -d.
        return not self.c and not (self.b + self.d)

    def to_complex(self) -> complex:
        r = 2 ** -0.5
        w = complex(r, r)
        return (self.a.to_float() + self.b.to_float() * w
                + self.c.to_float() * w * w + self.d.to_float() * w ** 3)

    def __str__(self) -> str:
        parts = []
        for coef, sym in zip(self.coeffs(), ("", "w", "w2", "w3")):
            if not coef:
                continue
            term = str(coef) if not sym else (f"{coef}*{sym}" if coef != ONE else sym)
            parts.append(term)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> list[list[int]]:
        """Four ``[num, exp]`` pairs in order (a, b, c, d)."""
        return [[x.num, x.exp] for x in self.coeffs()]

    @classmethod
    def from_json(cls, data: list[list[int]]) -> Cyclotomic:
        if len(data) != 4:
            raise ValueError("cyclotomic JSON needs four [num, exp] pairs")
        return cls(*(Dyadic(int(n), int(e)) for n, e in data))


C_ZERO = Cyclotomic()
C_ONE = Cyclotomic.from_int(1)
C_TWO = Cyclotomic.from_int(2)
C_HALF = Cyclotomic(HALF)


def from_phase(k: int) -> Cyclotomic:
    """The phase ``exp(i k pi / 4)`` as a ring element, i.e. ``w**k``."""
    return Cyclotomic.zeta_pow(k)


def sqrt2_constants() -> tuple[Cyclotomic, Cyclotomic]:
    """``(sqrt 2, 1/sqrt 2)`` via ``sqrt 2 = w - w**3``."""
    root2 = Cyclotomic(ZERO, ONE, ZERO, Dyadic(-1))
    return root2, root2.halved()


SQRT2, INV_SQRT2 = sqrt2_constants()


#: the fixed 4x4 integer companion-style matrix with M**4 = -I, encoding w
COMPANION_ROWS: tuple[tuple[int, ...], ...] = (
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 0, 0),
)


def _mat4_mul(x: tuple[tuple[Dyadic, ...], ...],
              y: tuple[tuple[Dyadic, ...], ...]) -> tuple[tuple[Dyadic, ...], ...]:
    return tuple(
        tuple(sum((x[i][k] * y[k][j] for k in range(4)), ZERO) for j in range(4))
        for i in range(4)
    )


def _companion_powers() -> list[tuple[tuple[Dyadic, ...], ...]]:
    ident = tuple(tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4))
    m1 = tuple(tuple(Dyadic(v) for v in row) for row in COMPANION_ROWS)
    powers = [ident, m1]
    for _ in range(2):
        powers.append(_mat4_mul(powers[-1], m1))
    return powers


_M_POWERS = _companion_powers()


def psi_scalar(x: Cyclotomic) -> list[list[Dyadic]]:
    """Encode a scalar as the 4x4 dyadic matrix ``aI + bM + cM^2 + dM^3``."""
    out = [[ZERO] * 4 for _ in range(4)]
    for coef, power in zip(x.coeffs(), _M_POWERS):
        if not coef:
            continue
        for i in range(4):
            for j in range(4):
                if power[i][j]:
                    out[i][j] = out[i][j] + coef * power[i][j]
    return out


def all_phases() -> Iterator[int]:
    return iter(range(8))
