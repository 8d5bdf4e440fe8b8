# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for atom sums, Poisson-power weights and the
Blaschke kernel-norm series.  Mirrors ``fallback.py`` bit-for-bit in intent;
the test suite checks agreement to machine precision on random inputs."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, sin, sqrt

cnp.import_array()

IMPL = "cython"


cdef inline double _abs2_one_minus_conj(double a_omr, double a_theta,
                                        double z_omr, double z_theta) nogil:
    cdef double p = a_omr + z_omr - a_omr * z_omr
    cdef double rr = (1.0 - a_omr) * (1.0 - z_omr)
    cdef double s = sin(0.5 * (z_theta - a_theta))
    return p * p + 4.0 * rr * s * s


cdef inline double _ipow(double base, int n) nogil:
    cdef double out = 1.0
    cdef int i
    for i in range(n):
        out *= base
    return out


def powered_atom_sum(const double[::1] a_omr, const double[::1] a_theta, const double[::1] masses,
                     double z_omr, double z_theta, int m):
    cdef Py_ssize_t i, n = a_omr.shape[0]
    cdef double acc = 0.0, d2
    with nogil:
        for i in range(n):
            d2 = _abs2_one_minus_conj(a_omr[i], a_theta[i], z_omr, z_theta)
            acc += masses[i] / _ipow(d2, m + 1)
    return acc


def poisson_power_weights(const double[::1] thetas, double z_omr, double z_theta, int m):
    cdef Py_ssize_t i, n = thetas.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double d2
    with nogil:
        for i in range(n):
            d2 = _abs2_one_minus_conj(0.0, thetas[i], z_omr, z_theta)
            out[i] = 1.0 / _ipow(d2, m + 1)
    return out_arr


def herglotz_atom_sum(const double[::1] thetas, const double[::1] masses,
                      double z_omr, double z_theta):
    cdef Py_ssize_t i, n = thetas.shape[0]
    cdef double r = 1.0 - z_omr
    cdef double z_re = r * cos(z_theta), z_im = r * sin(z_theta)
    cdef double acc_re = 0.0, acc_im = 0.0
    cdef double d, s, om_re, om_im, den_re, den_im, num_re, num_im
    cdef double ct, st, d2
    with nogil:
        for i in range(n):
            ct = cos(thetas[i])
            st = sin(thetas[i])
            d = z_theta - thetas[i]
            s = sin(0.5 * d)
            om_re = z_omr + 2.0 * r * s * s
            om_im = -r * sin(d)
            # denom = e^{i theta} * (1 - e^{-i theta} z)
            den_re = ct * om_re - st * om_im
            den_im = ct * om_im + st * om_re
            num_re = ct + z_re
            num_im = st + z_im
            d2 = den_re * den_re + den_im * den_im
            acc_re += masses[i] * (num_re * den_re + num_im * den_im) / d2
            acc_im += masses[i] * (num_im * den_re - num_re * den_im) / d2
    return complex(acc_re, acc_im)


def cauchy_power_atom_sum(const double[::1] thetas, const double[::1] masses,
                          double z_omr, double z_theta, int rpow):
    cdef Py_ssize_t i, n = thetas.shape[0]
    cdef double r = 1.0 - z_omr
    cdef double acc_re = 0.0, acc_im = 0.0
    cdef double d, s, om_re, om_im, den_re, den_im, p_re, p_im, t_re
    cdef double ct, st, d2, num_re, num_im
    cdef int k
    with nogil:
        for i in range(n):
            ct = cos(thetas[i])
            st = sin(thetas[i])
            d = z_theta - thetas[i]
            s = sin(0.5 * d)
            om_re = z_omr + 2.0 * r * s * s
            om_im = -r * sin(d)
            den_re = ct * om_re - st * om_im
            den_im = ct * om_im + st * om_re
            # (zeta - z)^rpow by repeated multiplication
            p_re = 1.0
            p_im = 0.0
            for k in range(rpow):
                t_re = p_re * den_re - p_im * den_im
                p_im = p_re * den_im + p_im * den_re
                p_re = t_re
            num_re = 2.0 * masses[i] * ct
            num_im = 2.0 * masses[i] * st
            d2 = p_re * p_re + p_im * p_im
            acc_re += (num_re * p_re + num_im * p_im) / d2
            acc_im += (num_im * p_re - num_re * p_im) / d2
    return complex(acc_re, acc_im)


def blaschke_norm_series_m0(const double[::1] a_re, const double[::1] a_im,
                            const double[::1] a_omr, const double[::1] a_theta,
                            double z_re, double z_im,
                            double z_omr, double z_theta):
    cdef Py_ssize_t j, n = a_re.shape[0]
    cdef double acc = 0.0, prefix_sq = 1.0
    cdef double mod_a, f_re, f_im, num_re, num_im, den_re, den_im, d2, mass
    cdef double s_re, s_im, t_re, scale, sc_re, sc_im
    with nogil:
        for j in range(n):
            mass = a_omr[j] * (2.0 - a_omr[j])
            d2 = _abs2_one_minus_conj(a_omr[j], a_theta[j], z_omr, z_theta)
            acc += prefix_sq * mass / d2
            # factor_j = sign * (a - z) / (1 - conj(a) z); rescale by the
            # larger component so the squares cannot underflow for tiny a
            scale = fabs(a_re[j])
            if fabs(a_im[j]) > scale:
                scale = fabs(a_im[j])
            if scale > 0.0:
                sc_re = a_re[j] / scale
                sc_im = a_im[j] / scale
                d2 = sc_re * sc_re + sc_im * sc_im
                mod_a = sqrt(d2)
                s_re = mod_a * sc_re / d2
                s_im = -mod_a * sc_im / d2
            else:
                s_re = -1.0
                s_im = 0.0
            num_re = a_re[j] - z_re
            num_im = a_im[j] - z_im
            t_re = s_re * num_re - s_im * num_im
            num_im = s_re * num_im + s_im * num_re
            num_re = t_re
            den_re = 1.0 - (a_re[j] * z_re + a_im[j] * z_im)
            den_im = -(a_re[j] * z_im - a_im[j] * z_re)
            d2 = den_re * den_re + den_im * den_im
            f_re = (num_re * den_re + num_im * den_im) / d2
            f_im = (num_im * den_re - num_re * den_im) / d2
            prefix_sq *= f_re * f_re + f_im * f_im
    return acc
