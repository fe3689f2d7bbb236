# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled statevector kernels: in-place one-wire gate application, CNOT,
and the derivative overlap used by the reverse gradient sweep.

Little-endian convention throughout: wire i is bit i of the basis index.
"""

BACKEND = "cython"


def apply_1q(double complex[::1] amps, int target,
             double complex m00, double complex m01,
             double complex m10, double complex m11):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t s = (<Py_ssize_t>1) << target
    cdef Py_ssize_t nblocks = n >> (target + 1)
    cdef Py_ssize_t b, base, j
    cdef double complex a0, a1
    with nogil:
        for b in range(nblocks):
            base = b << (target + 1)
            for j in range(base, base + s):
                a0 = amps[j]
                a1 = amps[j + s]
                amps[j] = m00 * a0 + m01 * a1
                amps[j + s] = m10 * a0 + m11 * a1


def apply_cnot(double complex[::1] amps, int control, int target):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t cbit = (<Py_ssize_t>1) << control
    cdef Py_ssize_t tbit = (<Py_ssize_t>1) << target
    cdef Py_ssize_t i
    cdef double complex tmp
    with nogil:
        for i in range(n):
            if (i & cbit) != 0 and (i & tbit) == 0:
                tmp = amps[i]
                amps[i] = amps[i | tbit]
                amps[i | tbit] = tmp


def deriv_overlap(double complex[::1] lam, double complex[::1] phi, int target,
                  double complex d00, double complex d01,
                  double complex d10, double complex d11):
    """2 * Re <lam| D |phi> for a one-wire operator D."""
    cdef Py_ssize_t n = lam.shape[0]
    cdef Py_ssize_t s = (<Py_ssize_t>1) << target
    cdef Py_ssize_t nblocks = n >> (target + 1)
    cdef Py_ssize_t b, base, j
    cdef double complex l0, l1, z0, z1
    cdef double acc = 0.0
    with nogil:
        for b in range(nblocks):
            base = b << (target + 1)
            for j in range(base, base + s):
                l0 = lam[j]
                l1 = lam[j + s]
                z0 = d00 * phi[j] + d01 * phi[j + s]
                z1 = d10 * phi[j] + d11 * phi[j + s]
                acc += l0.real * z0.real + l0.imag * z0.imag
                acc += l1.real * z1.real + l1.imag * z1.imag
    return 2.0 * acc
