from __future__ import annotations

"""
Network Serialization.

JSON-ready description of a network: depth, gate matrices, gauge angles
and core amplitudes, complex numbers as ``[re, im]`` pairs.
"""

from typing import Any, Dict, List

import numpy as np

from holomera.core.network.gates import GateSet
from holomera.core.network.gauge import HologronGauge
from holomera.core.network.mera import MeraNetwork
from holomera.domain.constants import __version__
from holomera.domain.errors import ConfigError


def _encode(arr: np.ndarray) -> List[Any]:
    flat = np.asarray(arr).reshape(-1)
    return [[float(z.real), float(z.imag)] for z in flat]


def _decode(items: List[Any], shape: tuple) -> np.ndarray:
    data = np.array([complex(re, im) for re, im in items], dtype=np.complex128)
    if data.size != int(np.prod(shape)):
        raise ConfigError(f"Serialized array has {data.size} entries, expected shape {shape}")
    return data.reshape(shape)


def network_to_dict(net: MeraNetwork) -> Dict[str, Any]:
    """Serialize a homogeneous network (noisy overrides are not serialized)."""
    if net.overrides:
        raise ConfigError("Networks with per-position gate overrides cannot be serialized")
    return {
        "version": __version__,
        "depth": net.depth,
        "gates": {"w": _encode(net.gates.w), "u": _encode(net.gates.u)},
        "gauge": {"theta": list(net.gauge.theta), "phi": net.gauge.phi},
        "core": _encode(net.core),
    }


def network_from_dict(data: Dict[str, Any]) -> MeraNetwork:
    """
    Rebuild a network from :func:`network_to_dict` output.

    Raises:
        ConfigError: On missing keys or malformed arrays.
    """
    try:
        gates = GateSet(
            w=_decode(data["gates"]["w"], (2, 2, 2, 2)),
            u=_decode(data["gates"]["u"], (2, 2, 2, 2)),
        )
        theta = tuple(float(t) for t in data["gauge"]["theta"])
        gauge = HologronGauge(theta=(theta[0], theta[1], theta[2]), phi=float(data["gauge"]["phi"]))
        core = _decode(data["core"], (2, 2, 2, 2))
        depth = int(data["depth"])
    except (KeyError, TypeError, IndexError, ValueError) as e:
        raise ConfigError(f"Malformed network document: {e}") from e
    return MeraNetwork(depth=depth, gates=gates, core=core, gauge=gauge)
