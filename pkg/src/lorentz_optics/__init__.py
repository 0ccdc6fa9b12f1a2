"""Lorentz-group numerics for two-by-two optics.

Submodules
----------
sl2
    SL(2,C) and four-by-four Lorentz representations, generators, little groups.
polarization
    Jones, coherency, Stokes and Mueller calculus; decoherence.
lens
    ABCD ray matrices, the one-lens core matrix and laser cavities.
decompositions
    Bargmann, polar and Iwasawa factorisations; SU(1,1) conjugation; lens synthesis.
multilayer
    Periodic two-medium stacks in the S-matrix picture.
oscillator
    Squeezed covariant oscillator and its paired Hermite expansion.
"""

from . import decompositions, kernels, lens, multilayer, oscillator, polarization, sl2

__version__ = "0.1.0"

__all__ = [
    "sl2",
    "polarization",
    "lens",
    "decompositions",
    "multilayer",
    "oscillator",
    "kernels",
    "__version__",
]
