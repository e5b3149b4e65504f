"""Rasterizer for worn-garment videos with exact segmentation ground truth."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from tryonlab.errors import RenderError
from tryonlab.synthworld.edge import sobel_edge
from tryonlab.synthworld.garment import GarmentSpec, flat_garment_box, pattern_colors
from tryonlab.synthworld.pose import (
    N_JOINTS,
    PoseSequence,
    body_proportions,
    joint_positions,
    joints_in_canvas,
)

LABEL_BACKGROUND = 0
LABEL_SKIN = 1
LABEL_GARMENT = 2

AGNOSTIC_FILL = 0.0  # mid-gray in [-1,1]
AGNOSTIC_DILATION_RADIUS = 2  # pixels, Chebyshev

_SKIN = np.array([0.82, 0.64, 0.47])


@dataclass
class RenderedSample:
    """One synthetic video with every conditioning channel, [-1,1] images."""

    frames: np.ndarray        # (N,3,H,W) float32
    agnostic: np.ndarray      # (N,3,H,W) float32
    pose_maps: np.ndarray     # (N,K,H,W) float32, one-hot joints
    seg: np.ndarray           # (N,H,W) uint8 labels
    garment_image: np.ndarray  # (3,H,W) float32 flat-lay
    edge_map: np.ndarray      # (1,H,W) float32 in [0,1]
    garment_mask: np.ndarray  # (N,H,W) bool

    @property
    def n_frames(self) -> int:
        return int(self.frames.shape[0])

    @property
    def height(self) -> int:
        return int(self.frames.shape[2])

    @property
    def width(self) -> int:
        return int(self.frames.shape[3])


def dilate_mask(mask: np.ndarray, radius: int = AGNOSTIC_DILATION_RADIUS) -> np.ndarray:
    """Binary dilation by a (2r+1)^2 square structuring element."""
    if radius <= 0:
        return mask.astype(bool)
    struct = np.ones((2 * radius + 1, 2 * radius + 1), dtype=bool)
    return ndimage.binary_dilation(mask.astype(bool), structure=struct)


def _capsule_mask(xs: np.ndarray, ys: np.ndarray, p0: np.ndarray, p1: np.ndarray, radius: float) -> np.ndarray:
    # distance from each pixel to the segment p0-p1
    d = p1 - p0
    len_sq = float(d @ d)
    px = xs - p0[0]
    py = ys - p0[1]
    if len_sq < 1e-12:
        dist_sq = px**2 + py**2
    else:
        t = np.clip((px * d[0] + py * d[1]) / len_sq, 0.0, 1.0)
        dist_sq = (px - t * d[0]) ** 2 + (py - t * d[1]) ** 2
    return dist_sq <= radius * radius


def _disk_mask(xs: np.ndarray, ys: np.ndarray, center: np.ndarray, radius: float) -> np.ndarray:
    return (xs - center[0]) ** 2 + (ys - center[1]) ** 2 <= radius * radius


def _make_background(rng: np.random.Generator, height: int, width: int) -> np.ndarray:
    """Static scene backdrop: smooth gradient plus a few colored blobs."""
    top = rng.uniform(0.25, 0.75, size=3)
    bot = rng.uniform(0.25, 0.75, size=3)
    t = np.linspace(0.0, 1.0, height)[:, None, None]
    bg = (1 - t) * top[None, None, :] + t * bot[None, None, :]  # (H,1,3)
    bg = np.repeat(bg, width, axis=1)  # (H,W,3)
    ys, xs = np.meshgrid(np.arange(height, dtype=np.float64), np.arange(width, dtype=np.float64), indexing="ij")
    for _ in range(int(rng.integers(3, 6))):
        color = rng.uniform(0.15, 0.85, size=3)
        cx = rng.uniform(0, width)
        cy = rng.uniform(0, height)
        r = rng.uniform(2.0, 5.0)
        blob = _disk_mask(xs, ys, np.array([cx, cy]), r)
        bg[blob] = color
    return bg


def render_sequence(
    spec: GarmentSpec,
    pose: PoseSequence,
    rng_seed: int,
    height: int = 48,
    width: int = 32,
) -> RenderedSample:
    """Render a worn-garment video with exact masks, poses and agnostic frames.

    Painter's order per frame: background, legs, torso (garment), head, arms;
    so raised arms occlude the garment and the segmentation records it.
    """
    pose.validate()
    spec.validate()
    n = pose.n_frames
    prop = body_proportions(height, width)
    rng = np.random.default_rng(rng_seed)
    background = _make_background(rng, height, width)

    gh_top, gh_bot, gw_left, gw_right = flat_garment_box(height, width)
    pat_h, pat_w = float(gh_bot - gh_top), float(gw_right - gw_left)

    ys, xs = np.meshgrid(np.arange(height, dtype=np.float64), np.arange(width, dtype=np.float64), indexing="ij")

    frames = np.zeros((n, 3, height, width), dtype=np.float32)
    seg = np.zeros((n, height, width), dtype=np.uint8)
    pose_maps = np.zeros((n, N_JOINTS, height, width), dtype=np.float32)

    for i in range(n):
        angles = pose.joint_angles[i]
        center = pose.torso_center[i]
        joints = joint_positions(angles, center, height, width)
        if not joints_in_canvas(joints, height, width):
            raise RenderError(f"frame {i}: joint outside the {height}x{width} canvas")

        rgb = background.copy()
        labels = np.full((height, width), LABEL_BACKGROUND, dtype=np.uint8)
        lean = float(angles[4])

        l_sh, l_el, l_wr, r_sh, r_el, r_wr = joints

        # legs hang from the lower torso corners, leaning with it
        c, s = np.cos(lean), np.sin(lean)
        rot = np.array([[c, -s], [s, c]])
        hip_l = center + rot @ np.array([-prop.torso_w * 0.25, prop.torso_h / 2 - 1.0])
        hip_r = center + rot @ np.array([prop.torso_w * 0.25, prop.torso_h / 2 - 1.0])
        for hip in (hip_l, hip_r):
            foot = hip + np.array([0.0, prop.leg_len])
            m = _capsule_mask(xs, ys, hip, foot, prop.leg_radius)
            rgb[m] = _SKIN
            labels[m] = LABEL_SKIN

        # torso: rotated rectangle textured with the garment pattern
        rel_x = xs - center[0]
        rel_y = ys - center[1]
        loc_x = c * rel_x + s * rel_y     # inverse rotation
        loc_y = -s * rel_x + c * rel_y
        torso = (np.abs(loc_x) <= prop.torso_w / 2) & (np.abs(loc_y) <= prop.torso_h / 2)
        tex_rows = (loc_y[torso] + prop.torso_h / 2) * (pat_h / prop.torso_h)
        tex_cols = (loc_x[torso] + prop.torso_w / 2) * (pat_w / prop.torso_w)
        rgb[torso] = pattern_colors(spec, tex_rows, tex_cols, pattern_width=pat_w)
        labels[torso] = LABEL_GARMENT

        # head above the torso top edge
        head_c = center + rot @ np.array([0.0, -(prop.torso_h / 2 + prop.head_radius + 0.5)])
        m = _disk_mask(xs, ys, head_c, prop.head_radius)
        rgb[m] = _SKIN
        labels[m] = LABEL_SKIN

        # arms on top: they occlude the garment
        for a, b in ((l_sh, l_el), (l_el, l_wr), (r_sh, r_el), (r_el, r_wr)):
            m = _capsule_mask(xs, ys, a, b, prop.arm_radius)
            rgb[m] = _SKIN
            labels[m] = LABEL_SKIN

        frames[i] = np.transpose(rgb * 2.0 - 1.0, (2, 0, 1)).astype(np.float32)
        seg[i] = labels

        claimed = np.zeros((height, width), dtype=bool)
        for j in range(N_JOINTS):
            px = int(round(joints[j, 0]))
            py = int(round(joints[j, 1]))
            px = min(max(px, 0), width - 1)
            py = min(max(py, 0), height - 1)
            if not claimed[py, px]:
                pose_maps[i, j, py, px] = 1.0
                claimed[py, px] = True

    garment_mask = seg == LABEL_GARMENT
    agnostic = frames.copy()
    for i in range(n):
        dil = dilate_mask(garment_mask[i])
        agnostic[i, :, dil] = AGNOSTIC_FILL

    garment_image = _flat_garment(spec, rng_seed, height, width)
    edge_map = sobel_edge(garment_image)

    return RenderedSample(
        frames=frames,
        agnostic=agnostic,
        pose_maps=pose_maps,
        seg=seg,
        garment_image=garment_image,
        edge_map=edge_map,
        garment_mask=garment_mask,
    )


def _flat_garment(spec: GarmentSpec, rng_seed: int, height: int, width: int) -> np.ndarray:
    from tryonlab.synthworld.garment import generate_garment

    return generate_garment(spec, rng_seed, height, width)
