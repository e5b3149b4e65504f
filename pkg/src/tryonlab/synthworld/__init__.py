"""Procedural try-on world: garments, poses, rendering, dataset files.

Everything here is pure numpy and deterministic given (spec, pose, seed),
which is what makes golden-file tests and exact ground-truth supervision
possible downstream.
"""

from tryonlab.synthworld.dataset import (
    DatasetConfig,
    SampleRecord,
    load_manifest,
    load_record,
    make_dataset,
    save_record,
)
from tryonlab.synthworld.edge import sobel_edge, sobel_magnitude
from tryonlab.synthworld.garment import GarmentSpec, flat_garment_box, generate_garment
from tryonlab.synthworld.pose import PoseSequence, joint_positions, random_pose_sequence
from tryonlab.synthworld.render import (
    RenderedSample,
    dilate_mask,
    render_sequence,
)

__all__ = [
    "DatasetConfig",
    "GarmentSpec",
    "PoseSequence",
    "RenderedSample",
    "SampleRecord",
    "dilate_mask",
    "flat_garment_box",
    "generate_garment",
    "joint_positions",
    "load_manifest",
    "load_record",
    "make_dataset",
    "random_pose_sequence",
    "render_sequence",
    "save_record",
    "sobel_edge",
    "sobel_magnitude",
]
