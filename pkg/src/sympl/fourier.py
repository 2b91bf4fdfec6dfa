"""Formal Fourier expansions indexed by rational symmetric matrices.

Exact predicates on the index matrices (rank, semidefiniteness, zero-block
shape), the GL coefficient transform, the Siegel operator, support
filtration, weight rigidity, and the positive-definite evaluation grid
with polynomial identity testing. All arithmetic is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import (
    DegreeExceedsGrid,
    IndexOutOfRange,
    MatrixTooLarge,
    NotUnimodular,
    RankMismatch,
    ShapeMismatch,
    Singular,
    SizeOne,
)
from .laurent import LaurentPoly
from .scalars import as_scalar, format_scalar, is_integer
from .weights import Weight

PSD_SIZE_CAP = 6


def _as_rows(rows):
    out = tuple(tuple(as_scalar(v) for v in row) for row in rows)
    if any(len(row) != len(out) for row in out):
        raise ShapeMismatch("matrix must be square")
    return out


def _det(rows):
    """Determinant by fraction elimination with partial pivoting."""
    m = [list(row) for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def _matrix_rank(rows):
    m = [list(row) for row in rows]
    if not m:
        return 0
    height, width = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(width):
        pivot = next((r for r in range(row, height) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = Fraction(1) / m[row][col]
        for r in range(row + 1, height):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, width):
                m[r][c] -= factor * m[row][c]
        rank += 1
        row += 1
        if row == height:
            break
    return rank


def _inverse(rows):
    n = len(rows)
    m = [list(row) + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise Singular("matrix is not invertible")
        m[col], m[pivot] = m[pivot], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r == col or m[r][col] == 0:
                continue
            factor = m[r][col]
            m[r] = [v - factor * p for v, p in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def _matmul(a, b):
    return tuple(
        tuple(sum(a[r][t] * b[t][c] for t in range(len(b))) for c in range(len(b[0])))
        for r in range(len(a))
    )


def _transpose(a):
    return tuple(tuple(a[r][c] for r in range(len(a))) for c in range(len(a[0])))


@dataclass(frozen=True)
class SymMatrix:
    entries: tuple

    def __post_init__(self):
        rows = _as_rows(self.entries)
        for r in range(len(rows)):
            for c in range(r + 1, len(rows)):
                if rows[r][c] != rows[c][r]:
                    raise ShapeMismatch(f"entry ({r},{c}) breaks symmetry")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, rows):
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def diag(cls, values):
        values = tuple(as_scalar(v) for v in values)
        n = len(values)
        return cls(
            tuple(
                tuple(values[r] if r == c else Fraction(0) for c in range(n))
                for r in range(n)
            )
        )

    @classmethod
    def zero(cls, n):
        return cls.diag([0] * n)

    @classmethod
    def identity(cls, n):
        return cls.diag([1] * n)

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def upper_triangle(self):
        return tuple(
            self.entries[r][c] for r in range(self.n) for c in range(r, self.n)
        )

    def drop_first(self):
        return SymMatrix(tuple(row[1:] for row in self.entries[1:]))

    def __str__(self):
        return "[" + "; ".join(
            ", ".join(format_scalar(v) for v in row) for row in self.entries
        ) + "]"


def rank(h: SymMatrix) -> int:
    return _matrix_rank(h.entries)


def corank(h: SymMatrix) -> int:
    return h.n - rank(h)


def is_psd(h: SymMatrix) -> bool:
    """Every principal minor is nonnegative (exhaustive, so size-capped)."""
    n = h.n
    if n > PSD_SIZE_CAP:
        raise MatrixTooLarge(f"semidefinite check is capped at size {PSD_SIZE_CAP}")
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            sub = tuple(tuple(h.entries[r][c] for c in subset) for r in subset)
            if _det(sub) < 0:
                return False
    return True


def is_pd(h: SymMatrix) -> bool:
    """Every leading principal minor is positive."""
    for size in range(1, h.n + 1):
        sub = tuple(row[:size] for row in h.entries[:size])
        if _det(sub) <= 0:
            return False
    return True


def in_sym_j(h: SymMatrix, j: int) -> bool:
    """First j rows and columns vanish identically."""
    j = int(j)
    if not 0 <= j <= h.n:
        raise IndexOutOfRange(f"need 0 <= j <= {h.n}, got {j}")
    return all(
        h.entries[r][c] == 0
        for r in range(h.n)
        for c in range(h.n)
        if r < j or c < j
    )


def gl_transform(h: SymMatrix, a) -> SymMatrix:
    """Index transform under the weight-k action, h -> (a^-t) h (a^-1)."""
    rows = _as_rows(a)
    if len(rows) != h.n:
        raise ShapeMismatch(f"expected size {h.n}, got {len(rows)}")
    a_inv = _inverse(rows)
    return SymMatrix(_matmul(_transpose(a_inv), _matmul(h.entries, a_inv)))


class FourierExpansion:
    """Finitely supported coefficient map on size-n symmetric matrices."""

    __slots__ = ("n", "k", "support")

    def __init__(self, n, k, support=None):
        n = int(n)
        if n < 1:
            raise ValueError("size must be at least 1")
        if not is_integer(as_scalar(k)):
            raise ValueError("weight k must be an integer")
        cleaned = {}
        for h, coeff in (support or {}).items():
            if not isinstance(h, SymMatrix):
                h = SymMatrix.of(h)
            if h.n != n:
                raise ShapeMismatch(f"support key of size {h.n} in a size-{n} expansion")
            coeff = as_scalar(coeff)
            if coeff != 0:
                cleaned[h] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "support", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("FourierExpansion is immutable")

    def coefficient(self, h) -> Fraction:
        if not isinstance(h, SymMatrix):
            h = SymMatrix.of(h)
        return self.support.get(h, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, FourierExpansion):
            return NotImplemented
        return (self.n, self.k, self.support) == (other.n, other.k, other.support)

    def __repr__(self):
        return f"FourierExpansion(n={self.n}, k={self.k}, {len(self.support)} coefficients)"


def slash_invariance_check(f: FourierExpansion, a) -> bool:
    """Coefficients transform correctly under an integer unimodular a."""
    rows = _as_rows(a)
    if len(rows) != f.n:
        raise ShapeMismatch(f"expected size {f.n}, got {len(rows)}")
    if not all(is_integer(v) for row in rows for v in row):
        raise NotUnimodular("matrix entries must be integers")
    det = _det(rows)
    if det not in (1, -1):
        raise NotUnimodular(f"determinant {det} is not a unit")
    a_inv = _inverse(rows)
    scale = det ** f.k

    def forward(h):
        # index of the coefficient that must match c(h), namely (t a) h a
        return SymMatrix(_matmul(_transpose(rows), _matmul(h.entries, rows)))

    def backward(h):
        return SymMatrix(_matmul(_transpose(a_inv), _matmul(h.entries, a_inv)))

    indices = set(f.support)
    indices.update(backward(h) for h in f.support)
    return all(f.coefficient(h) == scale * f.coefficient(forward(h)) for h in indices)


def siegel_phi(f: FourierExpansion) -> FourierExpansion:
    """Degree-lowering operator: keep indices diag(0, h), reindex by h."""
    if f.n == 1:
        raise SizeOne("cannot lower a size-1 expansion")
    support = {}
    for h, coeff in f.support.items():
        if in_sym_j(h, 1):
            support[h.drop_first()] = coeff
    return FourierExpansion(f.n - 1, f.k, support)


def cusp_condition_check(f: FourierExpansion) -> bool:
    return all(is_psd(h) for h in f.support)


def is_cuspidal(f: FourierExpansion) -> bool:
    return all(is_pd(h) for h in f.support)


def filtration_index(f: FourierExpansion) -> int:
    """1 + the largest corank met in the support, 0 when nothing survives."""
    if not f.support:
        return 0
    return 1 + max(corank(h) for h in f.support)


def rigidity_check(w: Weight, f_or_support, j: int) -> bool:
    """Weight shape forced by a support element of corank at least j.

    Vacuously true when the support has no such element. Otherwise the
    bottom entry must be constant across places and the last j entries
    equal within each place.
    """
    if isinstance(f_or_support, FourierExpansion):
        if f_or_support.n != w.n:
            raise RankMismatch(f"weight rank {w.n} next to size {f_or_support.n}")
        keys = list(f_or_support.support)
    else:
        keys = [h if isinstance(h, SymMatrix) else SymMatrix.of(h) for h in f_or_support]
        if any(h.n != w.n for h in keys):
            raise RankMismatch("support size differs from weight rank")
    j = int(j)
    if not 0 <= j <= w.n:
        raise IndexOutOfRange(f"need 0 <= j <= {w.n}, got {j}")
    if not any(corank(h) >= j for h in keys):
        return True
    if len({row[-1] for row in w.rows}) != 1:
        return False
    n = w.n
    return all(all(row[t] == row[-1] for t in range(n - j, n)) for row in w.rows)


def grid_variable(i: int, j: int, k: int = 1) -> str:
    """Name of the matrix-entry variable at (i, j) for the k-th factor."""
    i, j, k = int(i), int(j), int(k)
    if i > j:
        i, j = j, i
    return f"x_{i}_{j}_{k}"


@dataclass(frozen=True)
class PdGrid:
    n: int
    d: int
    bounds: dict
    points: tuple
    diagonal_offsets: tuple
    nominal_offsets: tuple
    deviation: bool
    deviation_witnesses: tuple
    bad_point_count: int


def _normalize_bounds(n, d, degree_bounds):
    positions = [(k, i, j) for k in range(1, d + 1) for i in range(1, n + 1) for j in range(i, n + 1)]
    if isinstance(degree_bounds, dict):
        bounds = {}
        for key, t in degree_bounds.items():
            k, i, j = key
            if i > j:
                i, j = j, i
            if not (1 <= k <= d and 1 <= i <= j <= n):
                raise ValueError(f"bound position {key} outside the grid")
            bounds[(k, i, j)] = int(t)
        for pos in positions:
            bounds.setdefault(pos, 1)
    else:
        t = int(degree_bounds)
        bounds = {pos: t for pos in positions}
    if any(t < 1 for t in bounds.values()):
        raise ValueError("degree bounds must be at least 1")
    return bounds


def _factor_matrices(n, k, bounds, offset):
    positions = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    value_sets = []
    for i, j in positions:
        t = bounds[(k, i, j)]
        if i == j:
            value_sets.append(range(offset, offset + t + 1))
        else:
            value_sets.append(range(1, t + 2))
    matrices = []
    for choice in product(*value_sets):
        vals = dict(zip(positions, choice))
        rows = tuple(
            tuple(Fraction(vals[(min(r, c) + 1, max(r, c) + 1)]) for c in range(n))
            for r in range(n)
        )
        matrices.append(SymMatrix(rows))
    return matrices


def build_pd_grid(n, d, degree_bounds) -> PdGrid:
    """Evaluation grid of positive-definite integer matrices.

    Off-diagonal value sets are {1..t+1}. Diagonal sets start at
    n*(max off-diagonal bound)^2 as stated in the source lemma; since
    that offset does admit degenerate points for small bounds, every
    point is verified and the offset is raised to n*(max+1)^2 when
    needed, with the offending matrices kept as witnesses.
    """
    n = int(n)
    d = int(d)
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    bounds = _normalize_bounds(n, d, degree_bounds)

    per_factor = []
    diagonal_offsets = []
    nominal_offsets = []
    witnesses = []
    bad_count = 0
    for k in range(1, d + 1):
        off_diag = [bounds[(k, i, j)] for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        biggest = max(off_diag) if off_diag else 1
        offset = n * biggest ** 2
        nominal_offsets.append(offset)
        matrices = _factor_matrices(n, k, bounds, offset)
        bad = [h for h in matrices if not is_pd(h)]
        if bad:
            bad_count += len(bad)
            witnesses.extend(bad)
            offset = n * (biggest + 1) ** 2
            matrices = _factor_matrices(n, k, bounds, offset)
            still_bad = [h for h in matrices if not is_pd(h)]
            if still_bad:
                raise AssertionError("inflated diagonal offset still admits a degenerate point")
        diagonal_offsets.append(offset)
        per_factor.append(matrices)

    points = tuple(product(*per_factor))
    return PdGrid(
        n=n,
        d=d,
        bounds=bounds,
        points=points,
        diagonal_offsets=tuple(diagonal_offsets),
        nominal_offsets=tuple(nominal_offsets),
        deviation=bad_count > 0,
        deviation_witnesses=tuple(witnesses),
        bad_point_count=bad_count,
    )


def _variable_position(name, grid):
    parts = name.split("_")
    if len(parts) == 4 and parts[0] == "x":
        try:
            i, j, k = int(parts[1]), int(parts[2]), int(parts[3])
        except ValueError:
            i = j = k = 0
        if i > j:
            i, j = j, i
        if 1 <= k <= grid.d and 1 <= i <= j <= grid.n:
            return k, i, j
    raise DegreeExceedsGrid(f"variable {name} does not index a grid entry")


def pit_vanishes(p: LaurentPoly, grid: PdGrid) -> bool:
    """Evaluate p on every grid point; all zero certifies p = 0.

    The certificate is only valid when each variable's degree stays
    within the bound the grid was built for, so that is enforced.
    """
    positions = {}
    for name in p.gens:
        pos = _variable_position(name, grid)
        k = p.gens.index(name)
        if p.terms and min(e[k] for e in p.terms) < 0:
            raise ValueError(f"negative exponent of {name}: not a polynomial")
        if p.degree(name) > grid.bounds[pos]:
            raise DegreeExceedsGrid(
                f"degree {p.degree(name)} of {name} exceeds bound {grid.bounds[pos]}"
            )
        positions[name] = pos
    for point in grid.points:
        assignment = {
            name: point[k - 1][(i - 1, j - 1)] for name, (k, i, j) in positions.items()
        }
        if p.evaluate(assignment) != 0:
            return False
    return True


def format_expansion(f: FourierExpansion) -> str:
    """Render as the line-oriented text format (see parse_expansion)."""
    lines = [f"n={f.n} k={f.k}"]
    for h in sorted(f.support, key=lambda h: h.upper_triangle()):
        cells = ",".join(format_scalar(v) for v in h.upper_triangle())
        lines.append(f"{cells} : {format_scalar(f.support[h])}")
    return "\n".join(lines) + "\n"


def parse_expansion(text: str) -> FourierExpansion:
    """Read the text format: a header "n=... k=..." and one line per
    coefficient, "upper-triangle entries, comma separated : value".
    Blank lines and lines starting with # are skipped.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty expansion text")
    header = lines[0].split()
    fields = dict(part.split("=", 1) for part in header if "=" in part)
    if sorted(fields) != ["k", "n"]:
        raise ValueError(f"bad header {lines[0]!r}, expected n=... k=...")
    n = int(fields["n"])
    k = int(fields["k"])
    expected = n * (n + 1) // 2
    support = {}
    for line in lines[1:]:
        if ":" not in line:
            raise ValueError(f"missing ':' in {line!r}")
        left, right = line.rsplit(":", 1)
        cells = [as_scalar(cell.strip()) for cell in left.strip().split(",")]
        if len(cells) != expected:
            raise ValueError(f"expected {expected} entries in {line!r}")
        rows = [[Fraction(0)] * n for _ in range(n)]
        pos = 0
        for r in range(n):
            for c in range(r, n):
                rows[r][c] = cells[pos]
                rows[c][r] = cells[pos]
                pos += 1
        h = SymMatrix.of(rows)
        if h in support:
            raise ValueError(f"repeated index {h}")
        support[h] = as_scalar(right.strip())
    return FourierExpansion(n, k, support)
