"""Dense exact matrices over the cyclotomic ring, indexed by wire counts.

A map with ``n`` input wires and ``m`` output wires is a ``2**m x 2**n``
matrix.  Bit convention, used consistently everywhere: the leftmost wire
is the most significant index bit.  A ``0 -> 0`` matrix is a single
scalar.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import (
    C_ONE,
    C_ZERO,
    Cyclotomic,
    Dyadic,
    from_phase,
    psi_scalar,
)


class DimensionError(ValueError):
    """Raised when wire counts of composed matrices do not line up."""


@dataclass(frozen=True)
class RingMatrix:
    """Row-major ``2**out_wires x 2**in_wires`` matrix of ring scalars."""

    out_wires: int
    in_wires: int
    entries: tuple[Cyclotomic, ...]

    def __post_init__(self) -> None:
        if self.out_wires < 0 or self.in_wires < 0:
            raise DimensionError("negative wire count")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @property
    def rows(self) -> int:
        return 1 << self.out_wires

    @property
    def cols(self) -> int:
        return 1 << self.in_wires

    def __getitem__(self, idx: tuple[int, int]) -> Cyclotomic:
        i, j = idx
        return self.entries[i * self.cols + j]

    @classmethod
    def from_rows(cls, out_wires: int, in_wires: int,
                  rows: list[list[Cyclotomic]]) -> RingMatrix:
        flat = tuple(x for row in rows for x in row)
        return cls(out_wires, in_wires, flat)

    @classmethod
    def from_int_rows(cls, out_wires: int, in_wires: int,
                      rows: list[list[int]]) -> RingMatrix:
        return cls.from_rows(out_wires, in_wires,
                             [[Cyclotomic.from_int(v) for v in row] for row in rows])

    @classmethod
    def identity(cls, wires: int) -> RingMatrix:
        dim = 1 << wires
        flat = tuple(C_ONE if i == j else C_ZERO
                     for i in range(dim) for j in range(dim))
        return cls(wires, wires, flat)

    @classmethod
    def scalar(cls, value: Cyclotomic) -> RingMatrix:
        return cls(0, 0, (value,))

    @classmethod
    def zero(cls, out_wires: int, in_wires: int) -> RingMatrix:
        return cls(out_wires, in_wires,
                   (C_ZERO,) * ((1 << out_wires) * (1 << in_wires)))

    def is_dyadic(self) -> bool:
        return all(x.is_dyadic() for x in self.entries)

    def scalar_value(self) -> Cyclotomic:
        if self.out_wires or self.in_wires:
            raise DimensionError("not a 0 -> 0 matrix")
        return self.entries[0]

    def transpose(self) -> RingMatrix:
        flat = tuple(self[j, i] for i in range(self.cols) for j in range(self.rows))
        return RingMatrix(self.in_wires, self.out_wires, flat)

    def conj_entrywise(self) -> RingMatrix:
        return RingMatrix(self.out_wires, self.in_wires,
                          tuple(x.conj() for x in self.entries))

    def scalar_mul(self, s: Cyclotomic | int) -> RingMatrix:
        return RingMatrix(self.out_wires, self.in_wires,
                          tuple(s * x for x in self.entries))

    def __add__(self, other: RingMatrix) -> RingMatrix:
        if (self.out_wires, self.in_wires) != (other.out_wires, other.in_wires):
            raise DimensionError(
                f"shape mismatch: {self.shape_str()} vs {other.shape_str()}")
        return RingMatrix(self.out_wires, self.in_wires,
                          tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.out_wires == other.out_wires
                and self.in_wires == other.in_wires
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.out_wires, self.in_wires, self.entries))

    def shape_str(self) -> str:
        return f"{self.in_wires}->{self.out_wires} ({self.rows}x{self.cols})"

    def to_json(self) -> dict:
        return {
            "out": self.out_wires,
            "in": self.in_wires,
            "entries": [[self[i, j].to_json() for j in range(self.cols)]
                        for i in range(self.rows)],
        }

    @classmethod
    def from_json(cls, data: dict) -> RingMatrix:
        rows = [[Cyclotomic.from_json(cell) for cell in row]
                for row in data["entries"]]
        return cls.from_rows(int(data["out"]), int(data["in"]), rows)

    def render(self) -> str:
        lines = []
        for i in range(self.rows):
            lines.append("  ".join(str(self[i, j]) for j in range(self.cols)))
        return "\n".join(lines)


def compose(f: RingMatrix, g: RingMatrix) -> RingMatrix:
    """Matrix product ``f . g`` (apply ``g`` first)."""
    if g.out_wires != f.in_wires:
        raise DimensionError(
            f"cannot compose {f.shape_str()} after {g.shape_str()}")
    rows, inner, cols = f.rows, f.cols, g.cols
    out = [C_ZERO] * (rows * cols)
    for i in range(rows):
        base = i * inner
        for k in range(inner):
            fik = f.entries[base + k]
            if not fik:
                continue
            gbase = k * cols
            for j in range(cols):
                gkj = g.entries[gbase + j]
                if gkj:
                    out[i * cols + j] = out[i * cols + j] + fik * gkj
    return RingMatrix(f.out_wires, g.in_wires, tuple(out))


def tensor(f: RingMatrix, g: RingMatrix) -> RingMatrix:
    """Kronecker product; the left operand owns the most significant bits."""
    rows = f.rows * g.rows
    cols = f.cols * g.cols
    out = [C_ZERO] * (rows * cols)
    for i1 in range(f.rows):
        for j1 in range(f.cols):
            x = f.entries[i1 * f.cols + j1]
            if not x:
                continue
            for i2 in range(g.rows):
                base = ((i1 * g.rows + i2) * cols) + j1 * g.cols
                grow = i2 * g.cols
                for j2 in range(g.cols):
                    y = g.entries[grow + j2]
                    if y:
                        out[base + j2] = x * y
    return RingMatrix(f.out_wires + g.out_wires, f.in_wires + g.in_wires,
                      tuple(out))


def tensor_power(f: RingMatrix, k: int) -> RingMatrix:
    out = RingMatrix.scalar(C_ONE)
    for _ in range(k):
        out = tensor(out, f)
    return out


def permutation_matrix(perm: list[int]) -> RingMatrix:
    """Matrix routing input wire ``i`` to output wire ``perm[i]``."""
    n = len(perm)
    dim = 1 << n
    flat = [C_ZERO] * (dim * dim)
    for col in range(dim):
        row = 0
        for i in range(n):
            bit = (col >> (n - 1 - i)) & 1
            row |= bit << (n - 1 - perm[i])
        flat[row * dim + col] = C_ONE
    return RingMatrix(n, n, tuple(flat))


#: theta column (1, w, w^2, w^3)^T as a 0 -> 2 matrix
THETA = RingMatrix(2, 0, tuple(from_phase(k) for k in range(4)))


def psi_matrix(a: RingMatrix) -> RingMatrix:
    """Blockwise scalar encoding; every entry becomes its 4x4 dyadic block.

    Equals ``A0 (x) I4 + A1 (x) M + A2 (x) M^2 + A3 (x) M^3`` for the unique
    coefficient decomposition of ``a``, with the block index in the least
    significant bits (the two extra wires sit rightmost).
    """
    rows = a.rows * 4
    cols = a.cols * 4
    flat = [C_ZERO] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a[i, j]
            if not x:
                continue
            block = psi_scalar(x)
            for r in range(4):
                for s in range(4):
                    v = block[r][s]
                    if v:
                        flat[(4 * i + r) * cols + 4 * j + s] = Cyclotomic(v)
    return RingMatrix(a.out_wires + 2, a.in_wires + 2, tuple(flat))


class PsiImageError(ValueError):
    """Raised when a matrix is not in the image of the scalar encoding."""


def theta_recover(y: RingMatrix, out_wires: int, in_wires: int) -> RingMatrix:
    """Left inverse of :func:`psi_matrix`.

    Applies ``y`` to ``I (x) theta`` and reads the coefficient block
    against the theta basis; raises :class:`PsiImageError` when the four
    candidate rows of any block disagree.
    """
    if y.out_wires != out_wires + 2 or y.in_wires != in_wires + 2:
        raise DimensionError(
            f"expected {out_wires + 2}->{in_wires + 2} wires, got {y.shape_str()}")
    applied = compose(y, tensor(RingMatrix.identity(in_wires), THETA))
    rows = 1 << out_wires
    cols = 1 << in_wires
    flat = [C_ZERO] * (rows * cols)
    for i in range(rows):
        for j in range(cols):
            x = applied[4 * i, j]
            for r in range(1, 4):
                if applied[4 * i + r, j] != x * from_phase(r):
                    raise PsiImageError(
                        f"block ({i},{j}) is not a theta multiple")
            flat[i * cols + j] = x
    return RingMatrix(out_wires, in_wires, tuple(flat))
