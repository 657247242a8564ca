# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled saturation kernel.

Runs the transitivity and coherency rules to their least fixpoint in place.
Semantics must stay in lockstep with ``cohext._satpure``; the test suite
cross-checks the two on random states.
"""


def saturate_inplace(unsigned char[:, ::1] W, unsigned char[:, ::1] D,
                     long long[:, ::1] tables,
                     bint use_trans, bint use_coh, bint strong):
    cdef Py_ssize_t n = W.shape[0]
    cdef Py_ssize_t k = tables.shape[0]
    cdef Py_ssize_t i, j, m, g
    cdef long long gi, gj
    cdef unsigned char wim, dim
    cdef bint changed = True

    while changed:
        changed = False

        if use_trans:
            # one Floyd-Warshall-style sweep per outer pass; the outer loop
            # repeats until nothing moves, so the least fixpoint is reached
            for m in range(n):
                for i in range(n):
                    wim = W[i, m]
                    dim = D[i, m]
                    if not wim and not dim:
                        continue
                    for j in range(n):
                        if wim and W[m, j] and not W[i, j]:
                            W[i, j] = 1
                            changed = True
                        if (dim and W[m, j]) or (wim and D[m, j]):
                            if not D[i, j]:
                                D[i, j] = 1
                                W[i, j] = 1
                                changed = True

        if use_coh:
            for g in range(k):
                for i in range(n):
                    gi = tables[g, i]
                    if gi < 0:
                        continue
                    for j in range(n):
                        gj = tables[g, j]
                        if gj < 0:
                            continue
                        if W[i, j] and not W[gi, gj]:
                            W[gi, gj] = 1
                            changed = True
                        if D[i, j] and not D[gi, gj]:
                            D[gi, gj] = 1
                            W[gi, gj] = 1
                            changed = True
                        if strong:
                            if W[gi, gj] and not W[i, j]:
                                W[i, j] = 1
                                changed = True
                            if D[gi, gj] and not D[i, j]:
                                D[i, j] = 1
                                W[i, j] = 1
                                changed = True
