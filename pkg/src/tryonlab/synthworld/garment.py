"""Garment specs and flat-lay garment rendering."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tryonlab.errors import ConfigError

PATTERNS = ("solid", "stripes", "checker", "two_tone")

# fraction of the canvas occupied by the flat-lay garment rectangle
_BOX_H_FRAC = 0.75
_BOX_W_FRAC = 0.80

_BACKDROP_GRAY = 0.72  # neutral backdrop, [0,1] scale


@dataclass(frozen=True)
class GarmentSpec:
    """One catalog garment: a flat pattern over a two-color palette."""

    garment_id: int
    pattern: str
    palette: tuple[tuple[int, int, int], tuple[int, int, int]]
    stripe_period: int = 4

    def validate(self, garment_width: int | None = None) -> None:
        if self.pattern not in PATTERNS:
            raise ConfigError(f"unknown pattern {self.pattern!r}; expected one of {PATTERNS}")
        if len(self.palette) != 2 or any(len(c) != 3 for c in self.palette):
            raise ConfigError("palette must be two RGB triples")
        for color in self.palette:
            if any(not (0 <= v <= 255) for v in color):
                raise ConfigError(f"palette values must lie in [0,255], got {color}")
        a, b = (np.asarray(c, dtype=np.int64) for c in self.palette)
        if int(np.max(np.abs(a - b))) < 32:
            raise ConfigError(
                "palette colors must differ by >= 32 in at least one channel, "
                f"got {self.palette[0]} vs {self.palette[1]}"
            )
        if self.stripe_period < 2:
            raise ConfigError(f"stripe_period must be >= 2, got {self.stripe_period}")
        if garment_width is not None and self.stripe_period >= garment_width:
            raise ConfigError(
                f"stripe_period {self.stripe_period} must be smaller than the "
                f"garment width {garment_width}"
            )


def flat_garment_box(height: int, width: int) -> tuple[int, int, int, int]:
    """(top, bottom, left, right) of the flat-lay rectangle, end-exclusive."""
    box_h = int(round(height * _BOX_H_FRAC))
    box_w = int(round(width * _BOX_W_FRAC))
    top = (height - box_h) // 2
    left = (width - box_w) // 2
    return top, top + box_h, left, left + box_w


def pattern_colors(
    spec: GarmentSpec, rows: np.ndarray, cols: np.ndarray, pattern_width: float
) -> np.ndarray:
    """Garment color at local texture coordinates, in [0,1].

    rows/cols are float arrays of any (matching) shape measured in garment
    pixels from the top-left of the pattern; the same function textures both
    the flat-lay render and the worn garment, so patterns track the body.
    pattern_width is the full garment width in those units (two-tone split).
    """
    pal = np.asarray(spec.palette, dtype=np.float64) / 255.0
    period = spec.stripe_period
    r_idx = np.floor_divide(np.floor(rows).astype(np.int64), period)
    c_idx = np.floor_divide(np.floor(cols).astype(np.int64), period)
    if spec.pattern == "solid":
        select = np.zeros(rows.shape, dtype=np.int64)
    elif spec.pattern == "stripes":
        select = c_idx % 2
    elif spec.pattern == "checker":
        select = (r_idx + c_idx) % 2
    elif spec.pattern == "two_tone":
        select = (cols >= pattern_width / 2.0).astype(np.int64)
    else:  # pragma: no cover - validate() rejects earlier
        raise ConfigError(f"unknown pattern {spec.pattern!r}")
    return pal[select]


def generate_garment(spec: GarmentSpec, rng_seed: int, height: int = 48, width: int = 32) -> np.ndarray:
    """Render the flat-lay garment image, shape (3, height, width), in [-1,1].

    Deterministic given (spec, rng_seed). The seed only textures the neutral
    backdrop (like a photo background); garment pixels are an exact function
    of the spec so pattern geometry is testable.
    """
    top, bottom, left, right = flat_garment_box(height, width)
    spec.validate(garment_width=right - left)
    rng = np.random.default_rng(rng_seed)
    noise = rng.normal(0.0, 0.01, size=(height, width))
    img = np.clip(_BACKDROP_GRAY + noise, 0.0, 1.0)[None, :, :].repeat(3, axis=0)

    rr, cc = np.meshgrid(
        np.arange(bottom - top, dtype=np.float64),
        np.arange(right - left, dtype=np.float64),
        indexing="ij",
    )
    colors = pattern_colors(spec, rr, cc, pattern_width=float(right - left))  # (gh, gw, 3)
    img[:, top:bottom, left:right] = np.transpose(colors, (2, 0, 1))
    return (img * 2.0 - 1.0).astype(np.float32)


def random_garment_specs(count: int, seed: int) -> list[GarmentSpec]:
    """Catalog of distinct garments with valid palettes, deterministic in seed."""
    rng = np.random.default_rng(seed)
    specs = []
    for gid in range(count):
        pattern = PATTERNS[int(rng.integers(0, len(PATTERNS)))]
        while True:
            a = tuple(int(v) for v in rng.integers(20, 236, size=3))
            b = tuple(int(v) for v in rng.integers(20, 236, size=3))
            if max(abs(x - y) for x, y in zip(a, b)) >= 32:
                break
        period = int(rng.integers(2, 7))
        specs.append(GarmentSpec(garment_id=gid, pattern=pattern, palette=(a, b), stripe_period=period))
    return specs
