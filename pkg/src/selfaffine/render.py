"""Rasterize T(A, D v) and count its connected pieces on the pixel grid.

Points are the depth-n partial sums sum_{i<=n} A^{-i} d_i v, with v = (1, 0)
and A the companion matrix of x^2 + b x + c, mapped through a fixed linear
normalization (``embedding_matrix``). They all lie in T because 0 is a digit.
The window is the exact bounding box of T from its support function, so it
does not depend on the depth.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy import ndimage

from .algebra import CollinearDigitSet, Quadratic, ResourceLimitError, companion_matrix, require_expanding

MAX_POINTS = 2 * 10**7
_CHUNK = 1 << 20
_EIGHT = np.ones((3, 3), dtype=bool)


@dataclass(frozen=True)
class RasterConfig:
    size: int = 512
    depth: int | None = None  # None picks the depth automatically
    margin: float = 0.05
    max_points: int = MAX_POINTS
    embedding: str = "whitened"  # or "companion"
    method: str = "grid"  # or "exact"
    subpixel: int = 4


@dataclass(frozen=True)
class RasterResult:
    bitmap: np.ndarray = field(repr=False)  # bool, row 0 at the top
    labels: np.ndarray = field(repr=False)
    component_count: int
    bounds: tuple[float, float, float, float]  # xmin, xmax, ymin, ymax
    depth: int
    cell_diameter: float  # in pixels
    points: int
    rounding_error: float = 0.0  # in pixels, grid method only


def _columns(q: Quadratic, W: np.ndarray, tol: float = 1e-15, limit: int = 100000) -> np.ndarray:
    """Rows are W A^{-i} v for i = 1, 2, ... until they become negligible."""
    A_inv = np.linalg.inv(companion_matrix(q).astype(float))
    w = np.array([1.0, 0.0])
    out = []
    small = 0
    for _ in range(limit):
        w = A_inv @ w
        out.append(W @ w)
        small = small + 1 if np.linalg.norm(out[-1]) < tol else 0
        if small >= 4:
            break
    return np.array(out)


def embedding_matrix(q: Quadratic, digits, kind: str = "whitened") -> np.ndarray:
    """Linear map W applied to the companion-matrix picture.

    "whitened" uses W = C^{-1/2}, C the covariance of the uniform measure on
    T, so the picture is roughly round instead of a thin sliver. Any
    invertible W leaves connectedness unchanged.
    """
    if kind == "companion":
        return np.eye(2)
    if kind != "whitened":
        raise ValueError(f"unknown embedding {kind!r}")
    ds = np.asarray(list(digits), dtype=float)
    if len(ds) < 2:
        return np.eye(2)
    cols = _columns(q, np.eye(2))
    cov = ds.var() * cols.T @ cols
    vals, vecs = np.linalg.eigh(cov)
    W = vecs @ np.diag(vals**-0.5) @ vecs.T
    # rotate so the long axis of the first-level pieces is vertical; gaps
    # between them then run along pixel columns
    M = W @ np.linalg.inv(companion_matrix(q).astype(float)) @ np.linalg.inv(W)
    _, pvecs = np.linalg.eigh(M @ M.T)
    ux, uy = pvecs[:, 1]
    if ux < 0 or (ux == 0 and uy < 0):
        ux, uy = -ux, -uy
    R = np.array([[uy, -ux], [ux, uy]])
    return R @ W


@dataclass(frozen=True)
class _Geometry:
    digits: np.ndarray
    W: np.ndarray
    cols: np.ndarray  # W A^{-i} v, i >= 1
    bounds: tuple[float, float, float, float]
    tails: np.ndarray  # tails[n] bounds the diameter of a depth-n cell
    M: np.ndarray  # W A^{-1} W^{-1}

    @classmethod
    def build(cls, q: Quadratic, digits, kind: str) -> "_Geometry":
        ds = np.asarray(list(digits), dtype=float)
        W = embedding_matrix(q, ds, kind)
        cols = _columns(q, W)
        # support function of T in each axis direction
        contrib = ds[None, :, None] * cols[:, None, :]
        lo = contrib.min(axis=1).sum(axis=0)
        hi = contrib.max(axis=1).sum(axis=0)
        norms = np.linalg.norm(cols, axis=1)
        suffix = np.concatenate([np.cumsum(norms[::-1])[::-1], [0.0]])
        tails = (ds.max() - ds.min()) * suffix
        M = W @ np.linalg.inv(companion_matrix(q).astype(float)) @ np.linalg.inv(W)
        return cls(ds, W, cols, (lo[0], hi[0], lo[1], hi[1]), tails, M)

    def error_gain(self, n: int) -> float:
        """sum_{j<n} ||M^j||: amplification of per-level rounding errors."""
        total, P = 0.0, np.eye(2)
        for _ in range(n):
            total += np.linalg.norm(P, 2)
            P = self.M @ P
        return total

    def cell_diameter(self, n: int) -> float:
        return float(self.tails[min(n, len(self.tails) - 1)])

    def column(self, i: int) -> np.ndarray:
        if i <= len(self.cols):
            return self.cols[i - 1]
        return np.zeros(2)


def attractor_bounds(q: Quadratic, digits, embedding: str = "whitened") -> tuple[float, float, float, float]:
    """Bounding box (xmin, xmax, ymin, ymax) of T in the chosen embedding."""
    return tuple(map(float, _Geometry.build(q, digits, embedding).bounds))


def diameter_bound(q: Quadratic, digits, embedding: str = "whitened") -> float:
    return _Geometry.build(q, digits, embedding).cell_diameter(0)


def _window(bounds, margin):
    xmin, xmax, ymin, ymax = bounds
    side = max(xmax - xmin, ymax - ymin)
    if side == 0:
        side = 1.0
    side *= 1 + 2 * margin
    cx, cy = (xmin + xmax) / 2, (ymin + ymax) / 2
    return cx - side / 2, cy - side / 2, side


def _auto_depth(geo: _Geometry, cfg: RasterConfig) -> int:
    k = len(geo.digits)
    if k == 1:
        return 0
    _, _, side = _window(geo.bounds, cfg.margin)
    pixel = side / cfg.size
    if cfg.method == "grid":
        target = pixel / cfg.subpixel
        n_cap = 10_000
    else:
        target = pixel
        n_cap = int(math.floor(math.log(cfg.max_points) / math.log(k)))
    for n in range(1, n_cap + 1):
        if geo.cell_diameter(n) < target:
            return n
    return n_cap


def auto_depth(q: Quadratic, digits, cfg: RasterConfig = RasterConfig()) -> int:
    """Depth at which every cell is smaller than the target resolution.

    For the grid method the target is 1/subpixel of a pixel; for exact
    enumeration it is one pixel, capped so that |D|^n <= max_points.
    """
    return _auto_depth(_Geometry.build(q, digits, cfg.embedding), cfg)


def _exact_points(geo: _Geometry, depth: int):
    """Yield chunks of all depth-n partial sums, lexicographic in the digits."""
    digits = geo.digits
    k = len(digits)
    inner = depth
    while inner > 0 and k**inner > _CHUNK:
        inner -= 1
    outer = depth - inner
    base = np.zeros((1, 2))
    for i in range(outer + 1, depth + 1):
        step = np.outer(digits, geo.column(i))
        base = (base[:, None, :] + step[None, :, :]).reshape(-1, 2)
    steps = [np.outer(digits, geo.column(i)) for i in range(1, outer + 1)]
    for idx in itertools.product(range(k), repeat=outer):
        offset = np.zeros(2)
        for step, j in zip(steps, idx):
            offset = offset + step[j]
        yield base + offset


def _grid_points(geo: _Geometry, depth: int, x0: float, y0: float, eps: float, cells: int) -> np.ndarray:
    """Depth-n points via P_k = A^{-1}(P_{k-1} + D v), snapped to an eps-grid.

    Snapping merges coincident points so each level holds at most cells^2
    points regardless of depth.
    """
    M = geo.M
    shift = geo.W @ np.array([1.0, 0.0])
    origin = np.array([x0, y0])
    pts = np.zeros((1, 2))
    grid = np.zeros((cells, cells), dtype=bool)
    for _ in range(depth):
        grid[:] = False
        for d in geo.digits:
            nxt = (pts + d * shift) @ M.T
            ij = np.rint((nxt - origin) / eps).astype(np.int64)
            np.clip(ij, 0, cells - 1, out=ij)
            grid[ij[:, 1], ij[:, 0]] = True
        iy, ix = np.nonzero(grid)
        pts = origin + eps * np.column_stack((ix, iy)).astype(float)
    return pts


def rasterize(q: Quadratic, digits, cfg: RasterConfig = RasterConfig()) -> RasterResult:
    """Plot depth-n points of T and label 8-connected foreground pixels.

    The component count is an empirical indicator; it is reported with the
    depth, the cell diameter and the rounding error (both in pixels) so the
    resolution can be judged.
    """
    require_expanding(q)
    ds = list(digits.digits) if isinstance(digits, CollinearDigitSet) else sorted(set(digits))
    if not ds:
        raise ValueError("empty digit set")
    if cfg.method not in ("grid", "exact"):
        raise ValueError(f"unknown method {cfg.method!r}")
    geo = _Geometry.build(q, ds, cfg.embedding)
    depth = cfg.depth if cfg.depth is not None else _auto_depth(geo, cfg)
    x0, y0, side = _window(geo.bounds, cfg.margin)
    n = cfg.size
    scale = n / side
    bitmap = np.zeros((n, n), dtype=bool)

    def mark(chunk):
        px = np.floor((chunk[:, 0] - x0) * scale).astype(np.int64)
        py = np.floor((chunk[:, 1] - y0) * scale).astype(np.int64)
        np.clip(px, 0, n - 1, out=px)
        np.clip(py, 0, n - 1, out=py)
        bitmap[n - 1 - py, px] = True

    if cfg.method == "exact":
        npts = len(ds) ** depth
        if npts > cfg.max_points:
            raise ResourceLimitError(f"{len(ds)}^{depth} = {npts} points exceeds cap {cfg.max_points}")
        for chunk in _exact_points(geo, depth):
            mark(chunk)
        rounding = 0.0
    else:
        cells = n * cfg.subpixel
        if cells * cells > cfg.max_points:
            raise ResourceLimitError(f"{cells}x{cells} point grid exceeds cap {cfg.max_points}")
        eps = side / cells
        # centre the snapping grid on pixel centres
        pts = _grid_points(geo, depth, x0 + eps / 2, y0 + eps / 2, eps, cells)
        mark(pts)
        npts = len(pts)
        rounding = geo.error_gain(depth) * (math.sqrt(2) / 2) / cfg.subpixel
    labels, count = ndimage.label(bitmap, structure=_EIGHT)
    return RasterResult(
        bitmap, labels, int(count), tuple(map(float, geo.bounds)), depth,
        geo.cell_diameter(depth) * scale, npts, rounding,
    )


def encode_pgm(bitmap: np.ndarray) -> bytes:
    """Binary P5: foreground 0 (black), background 255."""
    h, w = bitmap.shape
    pixels = np.where(bitmap, 0, 255).astype(np.uint8)
    return f"P5\n{w} {h}\n255\n".encode("ascii") + pixels.tobytes()


def _palette(k: int) -> np.ndarray:
    # fixed, deterministic colours; index 0 is the white background
    rng = np.random.default_rng(12345)
    cols = rng.integers(0, 200, size=(max(k, 1) + 1, 3), dtype=np.uint8)
    cols[0] = 255
    return cols


def encode_ppm(labels: np.ndarray, count: int) -> bytes:
    """Binary P6 with one colour per component."""
    h, w = labels.shape
    rgb = _palette(count)[labels]
    return f"P6\n{w} {h}\n255\n".encode("ascii") + rgb.astype(np.uint8).tobytes()


def write_image(result: RasterResult, path, color: bool = False) -> None:
    path = Path(path)
    data = encode_ppm(result.labels, result.component_count) if color else encode_pgm(result.bitmap)
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise OSError(f"cannot write image to {path}: {exc}") from exc


def read_pgm(path) -> np.ndarray:
    """Read a binary P5 file back into a boolean foreground mask."""
    data = Path(path).read_bytes()
    fields = []
    pos = 0
    while len(fields) < 4:
        while data[pos : pos + 1].isspace():
            pos += 1
        if data[pos : pos + 1] == b"#":
            pos = data.index(b"\n", pos) + 1
            continue
        end = pos
        while not data[end : end + 1].isspace():
            end += 1
        fields.append(data[pos:end])
        pos = end
    pos += 1  # single whitespace after maxval
    if fields[0] != b"P5":
        raise ValueError("not a binary PGM file")
    w, h, maxval = map(int, fields[1:])
    if maxval > 255:
        raise ValueError("16-bit PGM not supported")
    pixels = np.frombuffer(data, dtype=np.uint8, count=w * h, offset=pos).reshape(h, w)
    return pixels < 128
