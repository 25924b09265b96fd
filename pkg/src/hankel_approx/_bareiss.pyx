# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled fraction-free elimination kernel.

Same one-step Bareiss scheme as the pure backend; entries stay arbitrary
Python integers, the C layer removes interpreter overhead from the O(n^3)
loop nest. Pays off most while entries are still small.
"""


def bareiss_det(list rows):
    """Exact determinant of a square integer matrix; mutates ``rows``.

    Returns (determinant, number of row swaps performed).
    """
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, r
    cdef int sign = 1
    cdef int swaps = 0
    cdef list rk, ri
    if n == 0:
        return 1, 0
    prev = 1
    for k in range(n - 1):
        rk = <list>rows[k]
        if rk[k] == 0:
            for r in range(k + 1, n):
                if (<list>rows[r])[k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    swaps += 1
                    break
            else:
                return 0, swaps
            rk = <list>rows[k]
        pivot = rk[k]
        for i in range(k + 1, n):
            ri = <list>rows[i]
            head = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - head * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * (<list>rows[n - 1])[n - 1], swaps
