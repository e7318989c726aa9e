from __future__ import annotations

"""Tabular export of scaling spectra."""

from typing import Any, Dict, List, Mapping, Optional

from holomera.core.spectra.decomposition import ScalingSpectrum


def spectrum_rows(
        spectrum: ScalingSpectrum,
        labels: Optional[Mapping[int, str]] = None,
) -> List[Dict[str, Any]]:
    """
    One record per eigenvalue, in spectrum order.

    Columns: ``k, variant, re_lambda, im_lambda, delta, charge, label``.
    The identity is labeled ``identity``; other entries ``op<i>`` unless
    ``labels`` overrides them.
    """
    labels = dict(labels or {})
    ident = spectrum.identity_index()
    labels.setdefault(ident, "identity")
    deltas = spectrum.deltas

    rows: List[Dict[str, Any]] = []
    for i, lam in enumerate(spectrum.eigenvalues):
        rows.append({
            "k": spectrum.k,
            "variant": spectrum.variant,
            "re_lambda": float(lam.real),
            "im_lambda": float(lam.imag),
            "delta": float(deltas[i]),
            "charge": int(spectrum.charges[i]),
            "label": labels.get(i, f"op{i}"),
        })
    return rows
