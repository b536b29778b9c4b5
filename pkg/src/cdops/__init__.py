"""Operads of causally disjoint discs and diamonds in Minkowski space."""
from .errors import CdopsError
from .instances import cd, cdiam, diam, disc, epsilon_embed, forget_omega
from .minkowski import MinkPoint, mink_inner
from .ortho import MultiMorphism, OrthoInstance, evaluate, multi_compose, multi_permute, multi_validate
from .rect import RectMap
from .shapes import Kind, Shape, Status, Ternary, ball, diamond

__all__ = [
    "CdopsError", "Kind", "MinkPoint", "MultiMorphism", "OrthoInstance", "RectMap", "Shape", "Status",
    "Ternary", "ball", "cd", "cdiam", "diam", "diamond", "disc", "epsilon_embed", "evaluate",
    "forget_omega", "mink_inner", "multi_compose", "multi_permute", "multi_validate",
]
__version__ = "0.1.0"
