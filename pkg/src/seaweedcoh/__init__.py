"""Exact-arithmetic cohomology of seaweed subalgebras of simple Lie algebras."""

from . import (casimir, chevalley, cochain, deform, exactlin, gerstenhaber,
               rootsystem, seaweed)

__all__ = ["casimir", "chevalley", "cochain", "deform", "exactlin",
           "gerstenhaber", "rootsystem", "seaweed"]
__version__ = "0.1.0"
