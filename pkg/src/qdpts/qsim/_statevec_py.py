"""Pure-numpy statevector kernels (fallback when the compiled extension is absent).

All kernels mutate ``amps`` in place. ``amps`` is a contiguous complex128
vector of length 2**n; wire ``i`` is bit ``i`` of the basis index
(little-endian).
"""

import numpy as np

BACKEND = "python"


def apply_1q(amps, target, m00, m01, m10, m11):
    s = 1 << target
    v = amps.reshape(-1, 2, s)
    a0 = v[:, 0, :].copy()
    a1 = v[:, 1, :]
    v[:, 0, :] = m00 * a0 + m01 * a1
    v[:, 1, :] = m10 * a0 + m11 * a1


def apply_cnot(amps, control, target):
    hi, lo = (control, target) if control > target else (target, control)
    gap = (1 << hi) >> (lo + 1)
    v = amps.reshape(-1, 2, gap, 2, 1 << lo)
    # axis 1 is bit `hi`, axis 3 is bit `lo`
    if control > target:
        tmp = v[:, 1, :, 0, :].copy()
        v[:, 1, :, 0, :] = v[:, 1, :, 1, :]
        v[:, 1, :, 1, :] = tmp
    else:
        tmp = v[:, 0, :, 1, :].copy()
        v[:, 0, :, 1, :] = v[:, 1, :, 1, :]
        v[:, 1, :, 1, :] = tmp


def deriv_overlap(lam, phi, target, d00, d01, d10, d11):
    """2 * Re <lam| D |phi> for a one-wire operator D, without materializing D|phi>."""
    s = 1 << target
    lv = lam.reshape(-1, 2, s)
    pv = phi.reshape(-1, 2, s)
    z0 = d00 * pv[:, 0, :] + d01 * pv[:, 1, :]
    z1 = d10 * pv[:, 0, :] + d11 * pv[:, 1, :]
    acc = np.vdot(lv[:, 0, :], z0) + np.vdot(lv[:, 1, :], z1)
    return 2.0 * acc.real
