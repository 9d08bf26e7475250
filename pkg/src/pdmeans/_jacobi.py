"""Cyclic Jacobi eigensolver for dense complex Hermitian matrices.

The kernel is compiled with numba; every call works on a private copy of
its input.
"""
import numba
import numpy as np


@numba.njit(cache=True)
def _off_norm(a):
    n = a.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j].real ** 2 + a[i, j].imag ** 2
    return np.sqrt(acc)


@numba.njit(cache=True)
def _fro_norm(a):
    n = a.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(n):
            acc += a[i, j].real ** 2 + a[i, j].imag ** 2
    return np.sqrt(acc)


@numba.njit(cache=True)
def jacobi_hermitian(h, tol, max_sweeps):
    """Diagonalise the Hermitian matrix ``h`` by cyclic Jacobi sweeps.

    Returns ``(eigenvalues, eigenvectors, sweeps, converged)``. Eigenvalues
    come back in diagonal order; sorting is the caller's job.
    """
    n = h.shape[0]
    a = h.copy()
    v = np.eye(n, dtype=np.complex128)
    for i in range(n):
        a[i, i] = a[i, i].real
    scale = _fro_norm(a)
    if scale == 0.0:
        w = np.zeros(n)
        return w, v, 0, True

    sweeps = 0
    converged = False
    while sweeps <= max_sweeps:
        if _off_norm(a) <= tol * scale:
            converged = True
            break
        if sweeps == max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                z = a[p, q]
                r = abs(z)
                if r == 0.0:
                    continue
                # phase e^{-i phi} turns the (p, q) block real symmetric
                ph = np.conj(z) / r
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # G = [[c, s], [-s ph, c ph]] on the (p, q) plane
                g00 = c + 0j
                g01 = s + 0j
                g10 = -s * ph
                g11 = c * ph
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = akp * g00 + akq * g10
                    a[k, q] = akp * g01 + akq * g11
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = np.conj(g00) * apk + np.conj(g10) * aqk
                    a[q, k] = np.conj(g01) * apk + np.conj(g11) * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = vkp * g00 + vkq * g10
                    v[k, q] = vkp * g01 + vkq * g11

    w = np.empty(n)
    for i in range(n):
        w[i] = a[i, i].real
    return w, v, sweeps, converged


@numba.njit(cache=True)
def jacobi_right_svd(y, tol, max_sweeps):
    """One-sided (Hestenes) Jacobi on the columns of ``y``.

    Returns ``(singular_values, right_vectors, sweeps, converged)`` with
    ``y = U diag(s) V*``. Columns are rotated pairwise until every pair is
    orthogonal to ``tol`` relative to the product of their norms, so small
    singular values keep high relative accuracy and ``(y* y)^{1/2}`` can be
    assembled as ``V diag(s) V*`` without forming ``y* y``.
    """
    n = y.shape[1]
    u = y.copy()
    v = np.eye(n, dtype=np.complex128)
    sweeps = 0
    converged = False
    while sweeps < max_sweeps:
        sweeps += 1
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = 0.0
                beta = 0.0
                gamma = 0j
                for k in range(u.shape[0]):
                    alpha += u[k, p].real ** 2 + u[k, p].imag ** 2
                    beta += u[k, q].real ** 2 + u[k, q].imag ** 2
                    gamma += np.conj(u[k, p]) * u[k, q]
                r = abs(gamma)
                if r == 0.0 or r <= tol * np.sqrt(alpha * beta):
                    continue
                rotated = True
                ph = np.conj(gamma) / r
                theta = (beta - alpha) / (2.0 * r)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                g00 = c + 0j
                g01 = s + 0j
                g10 = -s * ph
                g11 = c * ph
                for k in range(u.shape[0]):
                    ukp = u[k, p]
                    ukq = u[k, q]
                    u[k, p] = ukp * g00 + ukq * g10
                    u[k, q] = ukp * g01 + ukq * g11
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = vkp * g00 + vkq * g10
                    v[k, q] = vkp * g01 + vkq * g11
        if not rotated:
            converged = True
            break

    sv = np.empty(n)
    for j in range(n):
        acc = 0.0
        for k in range(u.shape[0]):
            acc += u[k, j].real ** 2 + u[k, j].imag ** 2
        sv[j] = np.sqrt(acc)
    return sv, v, sweeps, converged
