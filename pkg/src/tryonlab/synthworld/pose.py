"""Stick-figure pose sequences with motion-continuity guarantees."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_ANGLE_DELTA = 0.35  # radians between adjacent frames

# joint channel order used everywhere (pose maps, oracles)
JOINT_NAMES = (
    "left_shoulder",
    "left_elbow",
    "left_wrist",
    "right_shoulder",
    "right_elbow",
    "right_wrist",
)
N_JOINTS = len(JOINT_NAMES)

# angle rows: [left_upper, left_lower, right_upper, right_lower, torso_lean]
N_ANGLES = 5

_UPPER_RANGE = (-1.2, 1.2)
_LOWER_RANGE = (-1.5, 1.5)
_LEAN_RANGE = (-0.18, 0.18)


@dataclass(frozen=True)
class BodyProportions:
    torso_w: float
    torso_h: float
    arm_upper: float
    arm_lower: float
    arm_radius: float
    head_radius: float
    leg_len: float
    leg_radius: float


def body_proportions(height: int, width: int) -> BodyProportions:
    return BodyProportions(
        torso_w=0.38 * width,
        torso_h=0.42 * height,
        arm_upper=0.15 * height,
        arm_lower=0.13 * height,
        arm_radius=max(1.3, 0.045 * width + 0.6),
        head_radius=0.09 * height,
        leg_len=0.17 * height,
        leg_radius=max(1.5, 0.055 * width + 0.5),
    )


@dataclass
class PoseSequence:
    """Per-frame joint angles (N,5) and torso centers (N,2) as (x,y) pixels."""

    joint_angles: np.ndarray
    torso_center: np.ndarray

    @property
    def n_frames(self) -> int:
        return int(self.joint_angles.shape[0])

    def validate(self) -> None:
        if self.joint_angles.ndim != 2 or self.joint_angles.shape[1] != N_ANGLES:
            raise ValueError(f"joint_angles must be (N,{N_ANGLES}), got {self.joint_angles.shape}")
        if self.torso_center.shape != (self.n_frames, 2):
            raise ValueError(f"torso_center must be (N,2), got {self.torso_center.shape}")
        if self.n_frames < 1:
            raise ValueError("pose sequence needs at least one frame")
        if self.n_frames > 1:
            deltas = np.abs(np.diff(self.joint_angles, axis=0))
            worst = float(deltas.max())
            if worst > MAX_ANGLE_DELTA + 1e-9:
                frame = int(np.unravel_index(np.argmax(deltas), deltas.shape)[0]) + 1
                raise ValueError(
                    f"pose continuity violated at frame {frame}: "
                    f"|angle delta| = {worst:.3f} > {MAX_ANGLE_DELTA}"
                )


def _rot(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def _dir(angle: float) -> np.ndarray:
    # 0 rad hangs straight down (image coords: x right, y down)
    return np.array([np.sin(angle), np.cos(angle)])


def joint_positions(
    angles: np.ndarray, center: np.ndarray, height: int, width: int
) -> np.ndarray:
    """(6,2) array of (x,y) joint pixels for a single frame, JOINT_NAMES order."""
    prop = body_proportions(height, width)
    l_up, l_lo, r_up, r_lo, lean = (float(a) for a in angles)
    rot = _rot(lean)
    c = np.asarray(center, dtype=np.float64)
    shoulder_local = np.array([prop.torso_w / 2 - 0.5, -(prop.torso_h / 2 - 1.0)])
    l_sh = c + rot @ (shoulder_local * np.array([-1.0, 1.0]))
    r_sh = c + rot @ shoulder_local
    l_el = l_sh + prop.arm_upper * _dir(l_up)
    l_wr = l_el + prop.arm_lower * _dir(l_lo)
    r_el = r_sh + prop.arm_upper * _dir(r_up)
    r_wr = r_el + prop.arm_lower * _dir(r_lo)
    return np.stack([l_sh, l_el, l_wr, r_sh, r_el, r_wr])


def joints_in_canvas(joints: np.ndarray, height: int, width: int, margin: float = 0.0) -> bool:
    x, y = joints[:, 0], joints[:, 1]
    return bool(
        (x >= margin).all()
        and (x <= width - 1 - margin).all()
        and (y >= margin).all()
        and (y <= height - 1 - margin).all()
    )


def random_pose_sequence(
    n_frames: int, rng_seed: int, height: int = 48, width: int = 32
) -> PoseSequence:
    """Smooth random motion whose joints provably stay inside the canvas.

    Deterministic given the seed: out-of-canvas proposals are rejected and
    re-drawn from the same generator stream.
    """
    if n_frames < 1:
        raise ValueError("n_frames must be >= 1")
    rng = np.random.default_rng(rng_seed)
    prop = body_proportions(height, width)
    margin = prop.arm_radius + 1.0

    lo = np.array([_UPPER_RANGE[0], _LOWER_RANGE[0], _UPPER_RANGE[0], _LOWER_RANGE[0], _LEAN_RANGE[0]])
    hi = np.array([_UPPER_RANGE[1], _LOWER_RANGE[1], _UPPER_RANGE[1], _LOWER_RANGE[1], _LEAN_RANGE[1]])

    base_center = np.array([width / 2.0, height * 0.48])

    def propose_start() -> tuple[np.ndarray, np.ndarray]:
        ang = rng.uniform(-0.25, 0.25, size=N_ANGLES)
        ang[4] = rng.uniform(-0.08, 0.08)
        ctr = base_center + rng.uniform(-1.0, 1.0, size=2)
        return ang, ctr

    angles = np.zeros((n_frames, N_ANGLES))
    centers = np.zeros((n_frames, 2))

    ang, ctr = propose_start()
    for _ in range(200):
        if joints_in_canvas(joint_positions(ang, ctr, height, width), height, width, margin):
            break
        ang, ctr = propose_start()
    angles[0], centers[0] = ang, ctr

    for i in range(1, n_frames):
        for _ in range(200):
            step = rng.uniform(-0.3, 0.3, size=N_ANGLES)
            step[4] = rng.uniform(-0.05, 0.05)
            cand = np.clip(angles[i - 1] + step, lo, hi)
            cctr = centers[i - 1] + rng.uniform(-0.7, 0.7, size=2)
            cctr[0] = np.clip(cctr[0], base_center[0] - 1.5, base_center[0] + 1.5)
            cctr[1] = np.clip(cctr[1], base_center[1] - 1.5, base_center[1] + 1.5)
            if joints_in_canvas(joint_positions(cand, cctr, height, width), height, width, margin):
                angles[i], centers[i] = cand, cctr
                break
        else:
            # freeze motion rather than fail: previous frame is known-valid
            angles[i], centers[i] = angles[i - 1], centers[i - 1]

    seq = PoseSequence(joint_angles=angles, torso_center=centers)
    seq.validate()
    return seq
