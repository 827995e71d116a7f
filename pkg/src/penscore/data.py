"""Dataset representation and standardization.

All downstream statistics assume the convention that the response is
centered and every feature column x_j satisfies x_j' 1 = 0 and
x_j' x_j = n.  ``standardize`` enforces it; ``Dataset`` re-checks it at
construction time so invalid objects cannot circulate.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CsvParseError,
    IndexOutOfRange,
    NonFiniteInput,
    PenscoreError,
    ZeroVarianceColumn,
)

# Relative tolerance for the standardization invariants.
INVARIANT_RTOL = 1e-9


@dataclass(frozen=True)
class Dataset:
    """Standardized design matrix and centered response.

    Attributes
    ----------
    X : (n, d) ndarray
        Feature columns, each centered and scaled so that x_j' x_j = n.
    y : (n,) ndarray
        Centered response, in its original units.
    names : tuple of str
        One label per feature column.
    """

    X: np.ndarray
    y: np.ndarray
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        X = np.ascontiguousarray(np.asarray(self.X, dtype=np.float64))
        y = np.ascontiguousarray(np.asarray(self.y, dtype=np.float64)).ravel()
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)
        if X.ndim != 2:
            raise PenscoreError("X must be a 2-d array")
        n, d = X.shape
        if n < 2 or y.shape[0] != n:
            raise PenscoreError(f"need n >= 2 samples with matching response, got X {X.shape}, y {y.shape}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{j}" for j in range(d)))
        elif len(self.names) != d:
            raise PenscoreError("names length does not match number of columns")
        if not np.isfinite(X).all() or not np.isfinite(y).all():
            raise NonFiniteInput("dataset contains non-finite entries")
        if abs(y.sum()) > INVARIANT_RTOL * n * (y.std() + 1e-300):
            raise PenscoreError("response is not centered")
        if d > 0:
            col_sums = X.sum(axis=0)
            col_sq = (X * X).sum(axis=0)
            if np.abs(col_sums).max() > INVARIANT_RTOL * n:
                raise PenscoreError("feature columns are not centered")
            if np.abs(col_sq - n).max() > INVARIANT_RTOL * n:
                raise PenscoreError("feature columns are not scaled to x'x = n")

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def d(self) -> int:
        return self.X.shape[1]


@dataclass(frozen=True)
class FeatureSplit:
    """One feature singled out for testing, with the remaining columns.

    ``x`` is column ``j`` of the parent dataset and ``Z`` holds the other
    d - 1 columns in their original order.
    """

    x: np.ndarray
    Z: np.ndarray
    j: int
    name: str = ""


def standardize(raw_X: np.ndarray, raw_y: np.ndarray, names: tuple[str, ...] = ()) -> Dataset:
    """Center the response and scale each column so that x_j' x_j = n.

    Columns are scaled by sqrt(n / sum((x_ij - mean_j)^2)), the
    population-style factor that makes the normalization exact.  The
    response is centered but never rescaled, so penalty levels refer to
    the response's native units.

    Parameters
    ----------
    raw_X : (n, d) array
        Feature columns; each must have nonzero sample variance.
    raw_y : (n,) array
        Response.

    Raises
    ------
    ZeroVarianceColumn
        If a column is constant.
    NonFiniteInput
        If any entry is NaN or infinite.
    """
    X = np.asarray(raw_X, dtype=np.float64)
    y = np.asarray(raw_y, dtype=np.float64).ravel()
    if X.ndim != 2:
        raise PenscoreError("raw_X must be a 2-d array")
    n, d = X.shape
    if n < 2:
        raise PenscoreError("need at least 2 samples")
    if d < 1:
        raise PenscoreError("need at least 1 feature column")
    if y.shape[0] != n:
        raise PenscoreError("raw_y length does not match raw_X")
    if not np.isfinite(X).all() or not np.isfinite(y).all():
        raise NonFiniteInput("input contains non-finite entries")

    Xc = X - X.mean(axis=0)
    ss = (Xc * Xc).sum(axis=0)
    for j in np.flatnonzero(ss == 0.0):
        raise ZeroVarianceColumn(int(j), names[j] if names else None)
    Xs = Xc * np.sqrt(n / ss)
    yc = y - y.mean()
    return Dataset(X=Xs, y=yc, names=tuple(names))


def split(dataset: Dataset, j: int) -> FeatureSplit:
    """Partition the columns of ``dataset`` into feature ``j`` and the rest."""
    if not 0 <= j < dataset.d:
        raise IndexOutOfRange(f"feature index {j} outside [0, {dataset.d})")
    x = dataset.X[:, j].copy()
    Z = np.delete(dataset.X, j, axis=1)
    return FeatureSplit(x=x, Z=Z, j=j, name=dataset.names[j])


def load_csv(path: str, response: str) -> tuple[np.ndarray, np.ndarray, tuple[str, ...]]:
    """Read a numeric CSV with a header row.

    The ``response`` column becomes the raw response; every other column
    is a raw feature.  Any unparseable cell aborts with a row/column
    diagnostic (rows are numbered from 1, excluding the header).

    Returns
    -------
    (raw_X, raw_y, feature_names)
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise PenscoreError(f"{path}: empty file") from None
        header = [h.strip() for h in header]
        if response not in header:
            raise PenscoreError(f"{path}: response column {response!r} not in header {header}")
        resp_idx = header.index(response)
        feat_names = tuple(h for i, h in enumerate(header) if i != resp_idx)
        rows_X: list[list[float]] = []
        rows_y: list[float] = []
        for i, row in enumerate(reader, start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue  # skip blank lines
            if len(row) != len(header):
                raise PenscoreError(
                    f"{path}: row {i} has {len(row)} cells, expected {len(header)}"
                )
            vals = []
            for k, cell in enumerate(row):
                try:
                    v = float(cell)
                except ValueError:
                    raise CsvParseError(i, header[k], cell) from None
                vals.append(v)
            rows_y.append(vals[resp_idx])
            del vals[resp_idx]
            rows_X.append(vals)
    if not rows_X:
        raise PenscoreError(f"{path}: no data rows")
    return np.asarray(rows_X), np.asarray(rows_y), feat_names


def load_dataset(path: str, response: str) -> Dataset:
    """Read a CSV and standardize it in one step."""
    raw_X, raw_y, names = load_csv(path, response)
    return standardize(raw_X, raw_y, names)
