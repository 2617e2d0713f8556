"""Kirillov-Reshetikhin crystals of type A_n^(1) as rectangular tableaux.

Elements of B^{r,s} are r x s semistandard rectangles over {1, ..., n+1}.
Classical operators use the bracketing rule on the row reading word (bottom
row first, rows left to right); the affine operators conjugate node 1 through
Schuetzenberger promotion, which realizes the Dynkin rotation j -> j + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanA, ClWeight
from .crystal import CrystalElt, ModelConsistencyError, TensorElt, eps


@dataclass(frozen=True)
class RectTableau(CrystalElt):
    cartan: CartanA
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in row)
                                               for row in self.rows))
        r = len(self.rows)
        if r < 1:
            raise ValueError("tableau needs at least one row")
        if r > self.cartan.n:
            raise ValueError(f"{r} rows exceed the rank {self.cartan.n}")
        s = len(self.rows[0])
        if any(len(row) != s for row in self.rows):
            raise ValueError("ragged tableau")
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if not 1 <= v <= self.cartan.m:
                    raise ValueError(f"entry {v} outside 1..{self.cartan.m}")
                if j > 0 and row[j - 1] > v:
                    raise ValueError(f"row {i} not weakly increasing")
                if i > 0 and self.rows[i - 1][j] >= v:
                    raise ValueError(f"column {j} not strictly increasing")

        object.__setattr__(self, "_hash", hash((self.cartan.n, self.rows)))

    def __hash__(self):
        return self._hash

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def content(self) -> tuple[int, ...]:
        counts = [0] * self.cartan.m
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    @lru_cache(maxsize=None)
    def clweight(self) -> ClWeight:
        c = self.content()
        m = self.cartan.m
        return ClWeight(tuple(c[i - 1] - c[i % m] for i in range(m)))

    @lru_cache(maxsize=None)
    def e(self, i):
        if i == 0:
            t = classical_e(1, promotion(self))
            return None if t is None else promotion_inverse(t)
        return classical_e(i, self)

    @lru_cache(maxsize=None)
    def f(self, i):
        if i == 0:
            t = classical_f(1, promotion(self))
            return None if t is None else promotion_inverse(t)
        return classical_f(i, self)

    def sort_key(self):
        return (self.shape, self.rows)

    def text(self) -> str:
        if self.shape[1] == 0:
            return "-"
        sep = "," if self.cartan.m > 9 else ""
        return "/".join(sep.join(str(v) for v in row) for row in self.rows)

    def __repr__(self):
        return f"RectTableau(n={self.cartan.n}, {self.text()!r})"


def _reading_cells(T: RectTableau):
    r, s = T.shape
    return [(i, j) for i in range(r - 1, -1, -1) for j in range(s)]


def _unmatched(T: RectTableau, i: int):
    """Bracket entries i+1 (as '(') against later entries i (as ')') in the
    reading word; return the leftover (opens, closes) cell lists."""
    opens, closes = [], []
    for cell in _reading_cells(T):
        v = T.rows[cell[0]][cell[1]]
        if v == i + 1:
            opens.append(cell)
        elif v == i:
            if opens:
                opens.pop()
            else:
                closes.append(cell)
    return opens, closes


def _with_entry(T: RectTableau, cell, v) -> RectTableau:
    i, j = cell
    row = T.rows[i][:j] + (v,) + T.rows[i][j + 1:]
    return RectTableau(T.cartan, T.rows[:i] + (row,) + T.rows[i + 1:])


def classical_f(i: int, T: RectTableau):
    """Lower the last unbracketed i to i+1, or None."""
    T.cartan.check_classical(i)
    closes = _unmatched(T, i)[1]
    if not closes:
        return None
    return _with_entry(T, closes[-1], i + 1)


def classical_e(i: int, T: RectTableau):
    """Raise the first unbracketed i+1 to i, or None."""
    T.cartan.check_classical(i)
    opens = _unmatched(T, i)[0]
    if not opens:
        return None
    return _with_entry(T, opens[0], i)


@lru_cache(maxsize=None)
def promotion(T: RectTableau) -> RectTableau:
    """Schuetzenberger promotion on a rectangle: delete the entries equal to
    n+1 (a suffix of the bottom row), slide the holes to the upper left by
    jeu de taquin (leftmost hole first; ties slide the cell above), increment
    everything else, and fill the holes with 1."""
    r, s = T.shape
    if s == 0:
        return T
    m = T.cartan.m
    grid = [list(row) for row in T.rows]
    hole_cols = [j for j in range(s) if grid[r - 1][j] == m]
    for j in hole_cols:
        grid[r - 1][j] = None
    for j in hole_cols:
        i, k = r - 1, j
        while True:
            above = grid[i - 1][k] if i > 0 else None
            left = grid[i][k - 1] if k > 0 else None
            if above is None and left is None:
                break
            if left is None or (above is not None and above >= left):
                grid[i][k], grid[i - 1][k] = above, None
                i -= 1
            else:
                grid[i][k], grid[i][k - 1] = left, None
                k -= 1
    rows = tuple(tuple(1 if v is None else v + 1 for v in row) for row in grid)
    return RectTableau(T.cartan, rows)


@lru_cache(maxsize=None)
def promotion_inverse(T: RectTableau) -> RectTableau:
    """Inverse promotion: delete the 1s (a prefix of the top row), slide the
    holes to the lower right (rightmost hole first; ties slide the cell
    below), decrement everything else, and fill the holes with n+1."""
    r, s = T.shape
    if s == 0:
        return T
    m = T.cartan.m
    grid = [list(row) for row in T.rows]
    hole_cols = [j for j in range(s) if grid[0][j] == 1]
    for j in hole_cols:
        grid[0][j] = None
    for j in reversed(hole_cols):
        i, k = 0, j
        while True:
            below = grid[i + 1][k] if i < r - 1 else None
            right = grid[i][k + 1] if k < s - 1 else None
            if below is None and right is None:
                break
            if right is None or (below is not None and below <= right):
                grid[i][k], grid[i + 1][k] = below, None
                i += 1
            else:
                grid[i][k], grid[i][k + 1] = right, None
                k += 1
    rows = tuple(tuple(m if v is None else v - 1 for v in row) for row in grid)
    return RectTableau(T.cartan, rows)


def promote_k(T: RectTableau, k: int) -> RectTableau:
    for _ in range(k % T.cartan.m):
        T = promotion(T)
    return T


def twist(k: int, x: TensorElt) -> TensorElt:
    """The Dynkin-rotation twist by k: promotion^k on every factor."""
    return TensorElt(tuple(promote_k(b, k) for b in x.factors))


@lru_cache(maxsize=None)
def generate(c: CartanA, r: int, s: int) -> tuple[RectTableau, ...]:
    """All of B^{r,s}, sorted canonically.  s = 0 gives the trivial crystal."""
    c.check_classical(r)
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s == 0:
        return (RectTableau(c, ((),) * r),)
    grid = [[0] * s for _ in range(r)]
    out = []

    def fill(pos):
        if pos == r * s:
            out.append(RectTableau(c, tuple(tuple(row) for row in grid)))
            return
        i, j = divmod(pos, s)
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, c.m + 1):
            grid[i][j] = v
            fill(pos + 1)
        grid[i][j] = 0

    fill(0)
    return tuple(sorted(out, key=lambda t: t.sort_key()))


@lru_cache(maxsize=None)
def find_b_rs(c: CartanA, r: int, s: int) -> RectTableau:
    """The unique element with eps_0 = s and eps_i = 0 for classical i,
    located by exhaustive scan.  Non-uniqueness means broken 0-arrows."""
    hits = [T for T in generate(c, r, s)
            if eps(T, 0) == s and all(eps(T, i) == 0 for i in c.classical_nodes)]
    if len(hits) != 1:
        raise ModelConsistencyError(
            f"expected one distinguished element in B^{{{r},{s}}}, found {len(hits)}")
    return hits[0]


def tableau_text(T: RectTableau) -> str:
    return T.text()


def parse_tableau(c: CartanA, text: str, r: int | None = None) -> RectTableau:
    """Inverse of tableau_text.  '-' is the trivial element (r defaults to 1)."""
    text = text.strip()
    if text == "-":
        return RectTableau(c, ((),) * (r if r is not None else 1))
    rows = []
    for part in text.split("/"):
        if "," in part:
            rows.append(tuple(int(v) for v in part.split(",")))
        else:
            rows.append(tuple(int(ch) for ch in part))
    return RectTableau(c, tuple(rows))


def parse_tensor(c: CartanA, text: str) -> TensorElt:
    """Tensor elements as factor texts joined by '|'."""
    return TensorElt(tuple(parse_tableau(c, part) for part in text.split("|")))
