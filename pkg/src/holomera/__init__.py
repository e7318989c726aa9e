from __future__ import annotations

"""
holomera: entanglement-renormalization toy model of AdS/CFT.

Builds the exact wavelet MERA for a critical Ising-type chain, measures bulk
excitation (hologron) energetics and compares them with closed-form AdS3
gravity predictions.
"""

from holomera.domain.constants import __version__

__all__ = ["__version__"]
