"""Reference computations shared by the tests (dense 1-D integration, closed forms)."""

import numpy as np
from scipy import integrate


def dense_log_partition(theta, family, lo=-6.0, hi=6.0, n=20000):
    """``psi`` and the normalized density of a 1-D family by the trapezoid rule on a dense grid."""
    x = np.linspace(lo, hi, n)
    v = family.evaluate(x[:, None], extended=False) @ np.asarray(theta, dtype=float)
    shift = v.max()
    w = np.exp(v - shift)
    z = integrate.trapezoid(w, x)
    return shift + np.log(z), x, w / z


def dense_moment(theta, family, f, **kw):
    _, x, p = dense_log_partition(theta, family, **kw)
    return integrate.trapezoid(f(x) * p, x)


def gaussian_psi(theta):
    """Closed-form log-partition of ``c = (x, x**2)``."""
    t1, t2 = theta
    return t1 * t1 / (-4.0 * t2) + 0.5 * np.log(np.pi / -t2)


def gaussian_theta_1d(mu, var):
    return np.array([mu / var, -0.5 / var])
