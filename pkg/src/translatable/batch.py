"""Vectorised sweeps over every candidate first row at once.

The per-table checkers in properties stay the reference definition; the
mask functions here re-evaluate the same identities with numpy across a
whole batch of tables so that exhaustive campaigns over n! or n^n first
rows finish in seconds.  Tables are stored as a (B, n, n) array of 0-based
entries; every mask returns one boolean per table and is computed cell by
cell, never through a closed form.
"""

from __future__ import annotations

import itertools

import numpy as np

ROW_CHUNK = 4096


def row_array(n: int, permutation_only: bool) -> np.ndarray:
    """All first rows as a (B, n) array of 0-based values, lexicographic."""
    if permutation_only:
        rows = list(itertools.permutations(range(n)))
    else:
        rows = list(itertools.product(range(n), repeat=n))
    return np.array(rows, dtype=np.int8)


def product_tables(rows: np.ndarray, k: int) -> np.ndarray:
    """(B, n, n) tables generated by each row under step k, 0-based.

    Row i of a generated table reads the first row at position j - k*i
    modulo n, which is the rotation description written per cell.
    """
    b, n = rows.shape
    i = np.arange(n).reshape(n, 1)
    j = np.arange(n).reshape(1, n)
    idx = (j - k * i) % n
    return rows[:, idx]


def compose(tables: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Per-table products tables[b, x[b...], y[b...]] for index arrays."""
    b, n, _ = tables.shape
    x = np.asarray(x, dtype=np.int32)
    y = np.asarray(y, dtype=np.int32)
    x, y = np.broadcast_arrays(x, y)
    flat = tables.reshape(b, n * n)
    idx = (x * n + y).reshape(b, -1)
    return np.take_along_axis(flat, idx, axis=1).reshape(x.shape)


def _elements(tables: np.ndarray, *axes: int) -> list[np.ndarray]:
    """Broadcast element index grids (B, n, n, ...) for the given arity."""
    b, n, _ = tables.shape
    arity = len(axes)
    out = []
    for pos in axes:
        shape = [1] * (arity + 1)
        shape[pos + 1] = n
        grid = np.arange(n, dtype=np.int32).reshape(shape)
        out.append(np.broadcast_to(grid, (b,) + (n,) * arity))
    return out


def _chunked(mask_fn, tables: np.ndarray) -> np.ndarray:
    parts = [
        mask_fn(tables[start:start + ROW_CHUNK])
        for start in range(0, tables.shape[0], ROW_CHUNK)
    ]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=bool)


def idempotent_mask(tables: np.ndarray) -> np.ndarray:
    n = tables.shape[1]
    diag = tables[:, np.arange(n), np.arange(n)]
    return (diag == np.arange(n)).all(axis=1)


def commutative_mask(tables: np.ndarray) -> np.ndarray:
    return (tables == tables.transpose(0, 2, 1)).all(axis=(1, 2))


def associative_mask(tables: np.ndarray) -> np.ndarray:
    """(x*y)*z == x*(y*z), one x slice at a time to bound memory."""
    b, n, _ = tables.shape
    z = np.arange(n, dtype=np.int32).reshape(1, 1, n)
    ok = np.ones(b, dtype=bool)
    for x in range(n):
        xy = tables[:, x, :].astype(np.int32)[:, :, None]
        left = compose(tables, xy, z)
        right = compose(tables, x, tables)
        ok &= (left == right).all(axis=(1, 2))
    return ok


def elastic_mask(tables: np.ndarray) -> np.ndarray:
    i, j = _elements(tables, 0, 1)
    left = compose(tables, i, compose(tables, j, i))
    right = compose(tables, tables, i)
    return (left == right).all(axis=(1, 2))


def strongly_elastic_mask(tables: np.ndarray) -> np.ndarray:
    i, j = _elements(tables, 0, 1)
    mid = compose(tables, tables, i)
    right = compose(tables, compose(tables, j, i), j)
    return elastic_mask(tables) & (mid == right).all(axis=(1, 2))


def bookend_mask(tables: np.ndarray) -> np.ndarray:
    i, j = _elements(tables, 0, 1)
    prod = compose(tables, compose(tables, j, i), tables)
    return (prod == i).all(axis=(1, 2))


def left_distributive_mask(tables: np.ndarray) -> np.ndarray:
    def fn(chunk):
        x, y, z = _elements(chunk, 0, 1, 2)
        left = compose(chunk, x, compose(chunk, y, z))
        right = compose(chunk, compose(chunk, x, y), compose(chunk, x, z))
        return (left == right).all(axis=(1, 2, 3))

    return _chunked(fn, tables)


def right_distributive_mask(tables: np.ndarray) -> np.ndarray:
    def fn(chunk):
        x, y, z = _elements(chunk, 0, 1, 2)
        left = compose(chunk, compose(chunk, x, y), z)
        right = compose(chunk, compose(chunk, x, z), compose(chunk, y, z))
        return (left == right).all(axis=(1, 2, 3))

    return _chunked(fn, tables)


def left_modular_mask(tables: np.ndarray) -> np.ndarray:
    def fn(chunk):
        i, j, z = _elements(chunk, 0, 1, 2)
        left = compose(chunk, compose(chunk, i, j), z)
        right = compose(chunk, compose(chunk, z, j), i)
        return (left == right).all(axis=(1, 2, 3))

    return _chunked(fn, tables)


def right_modular_mask(tables: np.ndarray) -> np.ndarray:
    def fn(chunk):
        i, j, z = _elements(chunk, 0, 1, 2)
        left = compose(chunk, i, compose(chunk, j, z))
        right = compose(chunk, z, compose(chunk, j, i))
        return (left == right).all(axis=(1, 2, 3))

    return _chunked(fn, tables)


def medial_mask(tables: np.ndarray) -> np.ndarray:
    def fn(chunk):
        i, j, w, z = _elements(chunk, 0, 1, 2, 3)
        left = compose(chunk, compose(chunk, i, j), compose(chunk, w, z))
        right = compose(chunk, compose(chunk, i, w), compose(chunk, j, z))
        return (left == right).all(axis=(1, 2, 3, 4))

    return _chunked(fn, tables)


def paramedial_mask(tables: np.ndarray) -> np.ndarray:
    def fn(chunk):
        i, j, w, z = _elements(chunk, 0, 1, 2, 3)
        left = compose(chunk, compose(chunk, i, j), compose(chunk, w, z))
        right = compose(chunk, compose(chunk, z, j), compose(chunk, w, i))
        return (left == right).all(axis=(1, 2, 3, 4))

    return _chunked(fn, tables)


def alterable_mask(tables: np.ndarray) -> np.ndarray:
    """i*j == w*z implies j*w == z*i, over all quadruples."""

    def fn(chunk):
        c, n, _ = chunk.shape
        same = chunk[:, :, :, None, None] == chunk[:, None, None, :, :]
        jw = chunk[:, None, :, :, None]
        zi = chunk.transpose(0, 2, 1)[:, :, None, None, :]
        implied = np.broadcast_to(jw, same.shape) == np.broadcast_to(zi, same.shape)
        return ~(same & ~implied).any(axis=(1, 2, 3, 4))

    return _chunked(fn, tables)


def left_cancellative_mask(tables: np.ndarray) -> np.ndarray:
    n = tables.shape[1]
    return (np.sort(tables, axis=2) == np.arange(n)).all(axis=(1, 2))


def right_cancellative_mask(tables: np.ndarray) -> np.ndarray:
    n = tables.shape[1]
    return (np.sort(tables, axis=1) == np.arange(n).reshape(n, 1)).all(axis=(1, 2))


def quasigroup_mask(tables: np.ndarray) -> np.ndarray:
    return left_cancellative_mask(tables) & right_cancellative_mask(tables)


def left_neutral_mask(tables: np.ndarray) -> np.ndarray:
    """Tables having at least one e with e*x = x for all x."""
    n = tables.shape[1]
    return (tables == np.arange(n)).all(axis=2).any(axis=1)


def unitary_mask(tables: np.ndarray) -> np.ndarray:
    """Tables having a two-sided neutral element."""
    n = tables.shape[1]
    rows_ok = (tables == np.arange(n)).all(axis=2)
    cols_ok = (tables == np.arange(n).reshape(n, 1)).all(axis=1)
    return (rows_ok & cols_ok).any(axis=1)


def translatable_mask(tables: np.ndarray, k: int) -> np.ndarray:
    """Cell-by-cell rotation test T[i][j] == T[i+1][j+k]."""
    shifted = np.roll(np.roll(tables, -1, axis=1), -k, axis=2)
    return (tables == shifted).all(axis=(1, 2))


MASKS = {
    "idempotent": idempotent_mask,
    "commutative": commutative_mask,
    "associative": associative_mask,
    "elastic": elastic_mask,
    "strongly-elastic": strongly_elastic_mask,
    "bookend": bookend_mask,
    "left-distributive": left_distributive_mask,
    "right-distributive": right_distributive_mask,
    "left-modular": left_modular_mask,
    "right-modular": right_modular_mask,
    "medial": medial_mask,
    "paramedial": paramedial_mask,
    "alterable": alterable_mask,
    "left-cancellative": left_cancellative_mask,
    "right-cancellative": right_cancellative_mask,
    "quasigroup": quasigroup_mask,
}
