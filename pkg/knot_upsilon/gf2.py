"""Sparse linear algebra over the two-element field.

Vectors and matrices are described by the positions holding 1. Internally each
vector (and each matrix column) is packed into a Python int, bit ``k`` standing
for position ``k``.
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple


class GF2DimensionError(ValueError):
    """Raised when positions fall outside a vector or matrix, or sizes disagree."""


def _pack(positions: Iterable[int]) -> int:
    bits = 0
    for position in positions:
        bits |= 1 << position
    return bits


def _unpack(bits: int) -> FrozenSet[int]:
    positions = []
    while bits:
        low = bits & -bits
        positions.append(low.bit_length() - 1)
        bits ^= low
    return frozenset(positions)


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


class GF2Vector:
    """Vector over GF(2) given by its length and the positions holding 1."""

    __slots__ = ("_length", "_bits")

    def __init__(self, length: int, support: Iterable[int] = ()):
        if length < 0:
            raise GF2DimensionError("Vector length must be non-negative")
        support = tuple(support)
        for position in support:
            if not 0 <= position < length:
                raise GF2DimensionError(
                    f"Position {position} outside vector of length {length}"
                )
        self._length = length
        self._bits = _pack(support)

    @classmethod
    def from_bits(cls, length: int, bits: int) -> "GF2Vector":
        """Build a vector from a packed int."""
        if bits < 0 or bits.bit_length() > length:
            raise GF2DimensionError(f"Bits {bits:b} do not fit length {length}")
        vector = cls(length)
        vector._bits = bits
        return vector

    @property
    def length(self) -> int:
        """Number of coordinates."""
        return self._length

    @property
    def support(self) -> FrozenSet[int]:
        """Positions holding 1."""
        return _unpack(self._bits)

    @property
    def bits(self) -> int:
        """Packed representation."""
        return self._bits

    def is_zero(self) -> bool:
        return not self._bits

    def __add__(self, other: "GF2Vector") -> "GF2Vector":
        if not isinstance(other, GF2Vector):
            return NotImplemented
        if other.length != self.length:
            raise GF2DimensionError("Cannot add vectors of different lengths")
        return GF2Vector.from_bits(self.length, self._bits ^ other.bits)

    def __eq__(self, other):
        if not isinstance(other, GF2Vector):
            return False
        return self._length == other._length and self._bits == other._bits

    def __hash__(self):
        return hash((self._length, self._bits))

    def __repr__(self):
        return "GF2Vector({}, {})".format(self._length, sorted(self.support))


class GF2Matrix:
    """Matrix over GF(2) given by its shape and the (row, col) positions holding 1."""

    __slots__ = ("_rows", "_cols", "_columns")

    def __init__(self, rows: int, cols: int, entries: Iterable[Tuple[int, int]] = ()):
        if rows < 0 or cols < 0:
            raise GF2DimensionError("Matrix dimensions must be non-negative")
        entries = list(entries)
        if len(set(entries)) != len(entries):
            raise GF2DimensionError("Duplicate matrix entry")

        columns = [0] * cols
        for row, col in entries:
            if not (0 <= row < rows and 0 <= col < cols):
                raise GF2DimensionError(
                    f"Entry ({row}, {col}) outside {rows}x{cols} matrix"
                )
            columns[col] |= 1 << row

        self._rows = rows
        self._cols = cols
        self._columns = tuple(columns)

    @classmethod
    def from_columns(
        cls, rows: int, columns: Sequence[Iterable[int]]
    ) -> "GF2Matrix":
        """Build a matrix from the supports of its columns."""
        return cls(
            rows,
            len(columns),
            ((row, col) for col, support in enumerate(columns) for row in support),
        )

    @classmethod
    def _from_packed(cls, rows: int, columns: Sequence[int]) -> "GF2Matrix":
        matrix = cls(rows, 0)
        matrix._cols = len(columns)
        matrix._columns = tuple(columns)
        return matrix

    @classmethod
    def identity(cls, size: int) -> "GF2Matrix":
        return cls(size, size, ((k, k) for k in range(size)))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> FrozenSet[Tuple[int, int]]:
        """Positions holding 1."""
        return frozenset(
            (row, col)
            for col, bits in enumerate(self._columns)
            for row in _unpack(bits)
        )

    @property
    def column_bits(self) -> Tuple[int, ...]:
        """Packed columns."""
        return self._columns

    def column(self, index: int) -> GF2Vector:
        return GF2Vector.from_bits(self._rows, self._columns[index])

    def columns(self) -> List[GF2Vector]:
        return [self.column(index) for index in range(self._cols)]

    def restrict(self, indices: Sequence[int]) -> "GF2Matrix":
        """Submatrix on the given columns, in the given order."""
        return GF2Matrix._from_packed(
            self._rows, [self._columns[index] for index in indices]
        )

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix(self._cols, self._rows, ((c, r) for r, c in self.entries))

    def apply(self, vector: GF2Vector) -> GF2Vector:
        """Matrix-vector product."""
        if vector.length != self._cols:
            raise GF2DimensionError(
                f"Vector of length {vector.length} for {self._cols} columns"
            )
        bits = 0
        for col in vector.support:
            bits ^= self._columns[col]
        return GF2Vector.from_bits(self._rows, bits)

    def is_zero(self) -> bool:
        return not any(self._columns)

    def __eq__(self, other):
        if not isinstance(other, GF2Matrix):
            return False
        return (self._rows, self._cols, self._columns) == (
            other._rows,
            other._cols,
            other._columns,
        )

    def __hash__(self):
        return hash((self._rows, self._cols, self._columns))

    def __repr__(self):
        return "GF2Matrix({}x{}, {})".format(
            self._rows, self._cols, sorted(self.entries)
        )


def compose(left: GF2Matrix, right: GF2Matrix) -> GF2Matrix:
    """Matrix product ``left @ right``."""
    if left.cols != right.rows:
        raise GF2DimensionError(
            f"Cannot compose {left.rows}x{left.cols} with {right.rows}x{right.cols}"
        )
    columns = []
    for bits in right.column_bits:
        product = 0
        for row in _unpack(bits):
            product ^= left.column_bits[row]
        columns.append(product)
    return GF2Matrix._from_packed(left.rows, columns)


class GF2Span:
    """Echelon basis of a subspace, each basis vector keyed by its lowest position."""

    def __init__(self, length: int, vectors: Iterable[GF2Vector] = ()):
        self.length = length
        self._pivots: Dict[int, int] = {}
        for vector in vectors:
            self.add(vector)

    @classmethod
    def of_columns(cls, matrix: GF2Matrix) -> "GF2Span":
        """Column space of a matrix."""
        span = cls(matrix.rows)
        for bits in matrix.column_bits:
            span._add_bits(bits)
        return span

    def _check(self, vector: GF2Vector):
        if vector.length != self.length:
            raise GF2DimensionError(
                f"Vector of length {vector.length} in a span of length {self.length}"
            )

    def reduce_bits(self, bits: int) -> int:
        """Residue of packed ``bits`` modulo the span; 0 iff contained."""
        while bits:
            basis = self._pivots.get(_lowest(bits))
            if basis is None:
                return bits
            bits ^= basis
        return 0

    def _add_bits(self, bits: int) -> bool:
        residue = self.reduce_bits(bits)
        if not residue:
            return False
        self._pivots[_lowest(residue)] = residue
        return True

    def add(self, vector: GF2Vector) -> bool:
        """Add a vector; return whether the span grew."""
        self._check(vector)
        return self._add_bits(vector.bits)

    def contains(self, vector: GF2Vector) -> bool:
        self._check(vector)
        return not self.reduce_bits(vector.bits)

    def __contains__(self, vector: GF2Vector) -> bool:
        return self.contains(vector)

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def __len__(self) -> int:
        return self.dim

    def copy(self) -> "GF2Span":
        span = GF2Span(self.length)
        span._pivots = dict(self._pivots)
        return span


def rank(matrix: GF2Matrix) -> int:
    """Rank over GF(2).

    >>> rank(GF2Matrix.identity(2))
    2
    >>> rank(GF2Matrix(3, 3))
    0
    """
    return GF2Span.of_columns(matrix).dim


def kernel_basis(matrix: GF2Matrix) -> List[GF2Vector]:
    """Basis of the null space; its size is ``cols - rank``."""
    pivots: Dict[int, Tuple[int, int]] = {}
    kernel = []
    for index, column in enumerate(matrix.column_bits):
        image, combination = column, 1 << index
        while image:
            low = _lowest(image)
            if low not in pivots:
                pivots[low] = (image, combination)
                break
            pivot_image, pivot_combination = pivots[low]
            image ^= pivot_image
            combination ^= pivot_combination
        else:
            kernel.append(GF2Vector.from_bits(matrix.cols, combination))
    return kernel


def quotient_dim(space: Sequence[GF2Vector], sub: Sequence[GF2Vector]) -> int:
    """Dimension of span(space) / (span(space) & span(sub)).

    Zero exactly when span(space) is contained in span(sub).
    """
    lengths = {vector.length for vector in space} | {vector.length for vector in sub}
    if len(lengths) > 1:
        raise GF2DimensionError(f"Vectors of mixed lengths {sorted(lengths)}")
    if not lengths:
        return 0

    span = GF2Span(lengths.pop(), sub)
    return sum(1 for vector in space if span.add(vector))


def first_escape(
    matrix: GF2Matrix, order: Sequence[int], sub: GF2Span
) -> Optional[int]:
    """First position in ``order`` at which the kernel escapes ``sub``.

    Columns of ``matrix`` are taken one at a time in ``order``. Returns the
    smallest ``p`` such that the kernel of the columns ``order[:p + 1]``
    (embedded in the full column space) is not contained in ``sub``, or None
    when even the kernel of all listed columns lies in ``sub``.
    """
    if sub.length != matrix.cols:
        raise GF2DimensionError(
            f"Span of length {sub.length} for a matrix with {matrix.cols} columns"
        )

    pivots: Dict[int, Tuple[int, int]] = {}
    for position, index in enumerate(order):
        image, combination = matrix.column_bits[index], 1 << index
        while image:
            low = _lowest(image)
            if low not in pivots:
                pivots[low] = (image, combination)
                break
            pivot_image, pivot_combination = pivots[low]
            image ^= pivot_image
            combination ^= pivot_combination
        else:
            if sub.reduce_bits(combination):
                return position
    return None
