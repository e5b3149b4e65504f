"""Desk-scale video virtual try-on laboratory.

A small, fully inspectable stack for garment-conditioned latent diffusion on
procedurally generated videos: synthetic world with exact ground truth,
frame autoencoder with mask-aware skip decoding, a conditional denoising
UNet, temporal guidance losses, and a guided DDIM video sampler with
co-denoising for long sequences.
"""

__version__ = "0.1.0"

from tryonlab.errors import (
    ConfigError,
    ConsistencyError,
    DependencyError,
    DimensionError,
    NumericError,
    RenderError,
    TryonlabError,
)

__all__ = [
    "ConfigError",
    "ConsistencyError",
    "DependencyError",
    "DimensionError",
    "NumericError",
    "RenderError",
    "TryonlabError",
    "__version__",
]
