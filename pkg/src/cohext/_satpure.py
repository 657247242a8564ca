"""Pure-Python saturation kernel (numpy), used when the compiled core is absent.

Same contract as ``cohext._satcore.saturate_inplace``: mutate the uint8
matrices W and D to the least fixpoint of the selected rules.
"""

from __future__ import annotations

import numpy as np


def _bool_mm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # int32 accumulators: uint8 would wrap for n >= 256
    return (a.astype(np.int32) @ b.astype(np.int32)) > 0


def saturate_inplace(
    W: np.ndarray,
    D: np.ndarray,
    tables: np.ndarray,
    use_trans: bool,
    use_coh: bool,
    strong: bool,
) -> None:
    n = W.shape[0]
    gmats = []
    for row in tables:
        src = np.nonzero(row >= 0)[0]
        G = np.zeros((n, n), dtype=np.uint8)
        G[src, row[src]] = 1
        gmats.append(G)

    while True:
        w_before = int(W.sum())
        d_before = int(D.sum())

        if use_trans:
            W |= _bool_mm(W, W).view(np.uint8)
            D |= _bool_mm(D, W).view(np.uint8)
            D |= _bool_mm(W, D).view(np.uint8)

        if use_coh:
            for G in gmats:
                Gt = G.T
                # (G^T A G)[u,v] collects A[x,y] over all x,y with g(x)=u, g(y)=v
                W |= _bool_mm(_bool_mm(Gt, W), G).view(np.uint8)
                D |= _bool_mm(_bool_mm(Gt, D), G).view(np.uint8)
                if strong:
                    # (G A G^T)[x,y] reads back A[g(x),g(y)]
                    W |= _bool_mm(_bool_mm(G, W), Gt).view(np.uint8)
                    D |= _bool_mm(_bool_mm(G, D), Gt).view(np.uint8)

        W |= D

        if int(W.sum()) == w_before and int(D.sum()) == d_before:
            return
