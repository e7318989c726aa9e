from __future__ import annotations

"""
Support-Tracking Operator Ascent.

Pulls an arbitrary local operator up through the network layer by layer,
growing its support only where gates touch it, and evaluates it in the core
state. Used for observables beyond three sites and for two-point functions,
whose two clusters stay separate until their past cones merge.
"""

import itertools
import logging
from typing import Dict, List, Sequence, Set

import numpy as np

from holomera.core.network.mera import BulkCoordinate, MeraNetwork, flips_by_layer
from holomera.core.tensor import LocalOperator
from holomera.domain.constants import CORE_SITES

logger = logging.getLogger(__name__)


def _labels() -> "itertools.count[int]":
    return itertools.count()


def _disentangler_step(op: LocalOperator, net: MeraNetwork, rho: int) -> LocalOperator:
    """Conjugate by the disentanglers of layer ``rho`` that touch the support."""
    n_c = 2 ** rho
    n_f = 2 * n_c
    u = net.layer(rho).u
    pairs = sorted({((x - 1) // 2) % n_c for x in op.sites})

    lab = _labels()
    out_lab: Dict[int, int] = {x: next(lab) for x in op.sites}
    in_lab: Dict[int, int] = {x: next(lab) for x in op.sites}
    operands: List = [op.tensor, [out_lab[x] for x in op.sites] + [in_lab[x] for x in op.sites]]

    new_out: Dict[int, int] = {}
    new_in: Dict[int, int] = {}
    for p in pairs:
        a, b = 2 * p + 1, (2 * p + 2) % n_f
        for y in (a, b):
            if y not in out_lab:
                shared = next(lab)
                out_lab[y] = in_lab[y] = shared
        na, nb, ma, mb = next(lab), next(lab), next(lab), next(lab)
        operands += [np.conj(u[p]), [out_lab[a], out_lab[b], na, nb]]
        operands += [u[p], [in_lab[a], in_lab[b], ma, mb]]
        new_out.update({a: na, b: nb})
        new_in.update({a: ma, b: mb})

    sites = sorted(new_out)
    result = np.einsum(*operands, [new_out[x] for x in sites] + [new_in[x] for x in sites], optimize=True)
    return LocalOperator(tuple(sites), result)


def _isometry_step(op: LocalOperator, net: MeraNetwork, rho: int, flipped: Set[int]) -> LocalOperator:
    """Contract the isometries of layer ``rho`` under the support: ``V^dagger O V``."""
    w = net.layer(rho).w
    coarse = sorted({x // 2 for x in op.sites})

    lab = _labels()
    out_lab: Dict[int, int] = {x: next(lab) for x in op.sites}
    in_lab: Dict[int, int] = {x: next(lab) for x in op.sites}
    operands: List = [op.tensor, [out_lab[x] for x in op.sites] + [in_lab[x] for x in op.sites]]

    new_out: Dict[int, int] = {}
    new_in: Dict[int, int] = {}
    for j in coarse:
        for y in (2 * j, 2 * j + 1):
            if y not in out_lab:
                shared = next(lab)
                out_lab[y] = in_lab[y] = shared
        iso = w[j, :, :, :, 1 if j in flipped else 0]
        new_out[j], new_in[j] = next(lab), next(lab)
        operands += [np.conj(iso), [out_lab[2 * j], out_lab[2 * j + 1], new_out[j]]]
        operands += [iso, [in_lab[2 * j], in_lab[2 * j + 1], new_in[j]]]

    result = np.einsum(*operands, [new_out[j] for j in coarse] + [new_in[j] for j in coarse], optimize=True)
    return LocalOperator(tuple(coarse), result)


def ascend_to_core(
        net: MeraNetwork,
        op: LocalOperator,
        flips: Sequence[BulkCoordinate] = (),
) -> LocalOperator:
    """
    Heisenberg-pull a boundary operator to the core.

    Args:
        net: Network.
        op: Boundary operator.
        flips: Hologron insertions (already validated).

    Returns:
        LocalOperator: Operator on a subset of the four core sites.
    """
    by_layer = flips_by_layer(flips)
    current = op
    for rho in reversed(net.layers):
        current = _disentangler_step(current, net, rho)
        current = _isometry_step(current, net, rho, set(by_layer.get(rho, frozenset())))
    return current


def core_expectation(core: np.ndarray, op: LocalOperator) -> complex:
    """``<psi_core| O |psi_core>`` for an operator on core sites."""
    lab = _labels()
    bra = [0] * CORE_SITES
    ket = [0] * CORE_SITES
    out_lab = {x: next(lab) for x in op.sites}
    in_lab = {x: next(lab) for x in op.sites}
    for q in range(CORE_SITES):
        if q in out_lab:
            bra[q], ket[q] = out_lab[q], in_lab[q]
        else:
            bra[q] = ket[q] = next(lab)
    return complex(
        np.einsum(
            np.conj(core), bra,
            op.tensor, [out_lab[x] for x in op.sites] + [in_lab[x] for x in op.sites],
            core, ket,
            [],
            optimize=True,
        )
    )
