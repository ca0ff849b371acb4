# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled binomial backward-induction kernel.

Same contract as ``_crr_numpy.induct``; the pure-numpy module is the
fallback when this extension is not built.
"""

from libc.math cimport NAN, fmax, pow

import numpy as np

NAME = "cython"


def induct(double spot, double strike, double up, double prob_up,
           double discount, int steps, bint is_call, bint american):
    """Backward induction over a recombining tree.

    Returns (v00, v10, v11, v20, v21, v22); step-2 slots are NaN when
    steps < 2.
    """
    values_arr = np.empty(steps + 1, dtype=np.float64)
    prices_arr = np.empty(steps + 1, dtype=np.float64)
    cdef double[::1] values = values_arr
    cdef double[::1] prices = prices_arr
    cdef double sign = 1.0 if is_call else -1.0
    cdef double p = prob_up
    cdef double q = 1.0 - prob_up
    cdef double v00 = NAN, v10 = NAN, v11 = NAN
    cdef double v20 = NAN, v21 = NAN, v22 = NAN
    cdef Py_ssize_t i, j

    for j in range(steps + 1):
        prices[j] = spot * pow(up, 2.0 * j - steps)
        values[j] = fmax(sign * (prices[j] - strike), 0.0)
    if steps == 1:
        v10 = values[0]
        v11 = values[1]
    elif steps == 2:
        v20 = values[0]
        v21 = values[1]
        v22 = values[2]

    for i in range(steps - 1, -1, -1):
        # ascending j keeps values[j + 1] at the previous step's content
        for j in range(i + 1):
            values[j] = discount * (p * values[j + 1] + q * values[j])
            prices[j] = prices[j] * up
            if american:
                values[j] = fmax(values[j], sign * (prices[j] - strike))
        if i == 2:
            v20 = values[0]
            v21 = values[1]
            v22 = values[2]
        elif i == 1:
            v10 = values[0]
            v11 = values[1]
    v00 = values[0]
    return v00, v10, v11, v20, v21, v22
