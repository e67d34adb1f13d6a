#include "jeft/kernels.hpp"

#include <cmath>
#include <vector>

// Compiled with -ffast-math (see CMakeLists.txt) so exp/sin/cos/log calls
// vectorize through libmvec.  sin and cos live in separate passes over
// scratch buffers: gcc otherwise fuses the pair into scalar sincos, which
// the vectorizer cannot handle.  Work is blocked into L1-sized chunks so
// the multi-frequency loops stream each input array from memory only once.
// All loops are fixed-order with fixed block size: results are identical
// from run to run at any thread count.

namespace jeft::kernels {

namespace {

constexpr std::size_t kBlock = 1024;

struct Scratch {
    double e[kBlock];
    double c[kBlock];
    double s[kBlock];
};

thread_local Scratch scratch;

}  // namespace

complex_t exp_sum(std::size_t n, const double* a, const double* wf,
                  double s_re, double s_im) {
    complex_t out;
    exp_sum_multi(n, a, wf, s_re, 1, &s_im, &out);
    return out;
}

void exp_sum_multi(std::size_t n, const double* a, const double* wf,
                   double s_re, std::size_t nl, const double* s_im,
                   complex_t* out) {
    std::vector<double> acc_re(nl, 0.0), acc_im(nl, 0.0);
    double* e = scratch.e;
    double* c = scratch.c;
    double* s = scratch.s;
    for (std::size_t k0 = 0; k0 < n; k0 += kBlock) {
        std::size_t m = std::min(kBlock, n - k0);
        const double* ab = a + k0;
        for (std::size_t k = 0; k < m; ++k) e[k] = std::exp(s_re * ab[k]);
        if (wf)
            for (std::size_t k = 0; k < m; ++k) e[k] *= wf[k0 + k];
        for (std::size_t l = 0; l < nl; ++l) {
            double lam = s_im[l];
            for (std::size_t k = 0; k < m; ++k) c[k] = std::cos(lam * ab[k]);
            for (std::size_t k = 0; k < m; ++k) s[k] = std::sin(lam * ab[k]);
            double re = 0.0, im = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                re += e[k] * c[k];
                im += e[k] * s[k];
            }
            acc_re[l] += re;
            acc_im[l] += im;
        }
    }
    for (std::size_t l = 0; l < nl; ++l) out[l] = {acc_re[l], acc_im[l]};
}

void exp_sum_c_multi(std::size_t n, const double* a, double s_re,
                     std::size_t nl, const double* s_im, const double* wr,
                     const double* wi, complex_t* out) {
    std::vector<double> acc_re(nl, 0.0), acc_im(nl, 0.0);
    double* e = scratch.e;
    double* c = scratch.c;
    double* s = scratch.s;
    for (std::size_t k0 = 0; k0 < n; k0 += kBlock) {
        std::size_t m = std::min(kBlock, n - k0);
        const double* ab = a + k0;
        for (std::size_t k = 0; k < m; ++k) e[k] = std::exp(s_re * ab[k]);
        for (std::size_t l = 0; l < nl; ++l) {
            double lam = s_im[l];
            const double* wrb = wr + l * n + k0;
            const double* wib = wi + l * n + k0;
            for (std::size_t k = 0; k < m; ++k) c[k] = std::cos(lam * ab[k]);
            for (std::size_t k = 0; k < m; ++k) s[k] = std::sin(lam * ab[k]);
            double re = 0.0, im = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                re += e[k] * (wrb[k] * c[k] - wib[k] * s[k]);
                im += e[k] * (wrb[k] * s[k] + wib[k] * c[k]);
            }
            acc_re[l] += re;
            acc_im[l] += im;
        }
    }
    for (std::size_t l = 0; l < nl; ++l) out[l] = {acc_re[l], acc_im[l]};
}

void azim_corr(std::size_t na, const double* d2, double log1mt2, double s_re,
               std::size_t nl, const double* s_im, const double* wf,
               double* acc_re, double* acc_im) {
    thread_local std::vector<double> buf;
    buf.resize(6 * na);
    double* a = buf.data();
    double* e = a + na;
    double* kr2 = e + na;  // kernel row duplicated to length 2*na so the
    double* ki2 = kr2 + 2 * na;  // (q'-q) mod na lookup becomes a plain shift
    for (std::size_t q = 0; q < na; ++q) a[q] = log1mt2 - std::log(d2[q]);
    for (std::size_t q = 0; q < na; ++q) e[q] = std::exp(s_re * a[q]);
    for (std::size_t l = 0; l < nl; ++l) {
        double lam = s_im[l];
        for (std::size_t q = 0; q < na; ++q)
            kr2[q] = std::cos(lam * a[q]);
        for (std::size_t q = 0; q < na; ++q)
            ki2[q] = std::sin(lam * a[q]);
        for (std::size_t q = 0; q < na; ++q) {
            kr2[q] *= e[q];
            ki2[q] *= e[q];
        }
        for (std::size_t q = 0; q < na; ++q) {
            kr2[na + q] = kr2[q];
            ki2[na + q] = ki2[q];
        }
        double* ar = acc_re + l * na;
        double* ai = acc_im + l * na;
        for (std::size_t q = 0; q < na; ++q) {
            const double* kr = kr2 + (na - q);
            const double* ki = ki2 + (na - q);
            double sr = 0.0, si = 0.0;
            for (std::size_t k = 0; k < na; ++k) {
                sr += wf[k] * kr[k];
                si += wf[k] * ki[k];
            }
            ar[q] += sr;
            ai[q] += si;
        }
    }
}

void bracket_from_logs(std::size_t n, const double* la, const double* d2,
                       double* a) {
    for (std::size_t k = 0; k < n; ++k) a[k] = la[k] - std::log(d2[k]);
}

void bracket_from_logs_const(std::size_t n, double la, const double* d2,
                             double* a) {
    for (std::size_t k = 0; k < n; ++k) a[k] = la - std::log(d2[k]);
}

complex_t phi_h2_sum(int n, double t, double log1mt2, double s_re,
                     double s_im) {
    std::vector<double> a(static_cast<std::size_t>(n));
    double c0 = 1.0 + t * t;
    double dth = 2.0 * kPi / n;
    for (int j = 0; j < n; ++j)
        a[j] = log1mt2 - std::log(c0 - 2.0 * t * std::cos(dth * j));
    return exp_sum(static_cast<std::size_t>(n), a.data(), nullptr, s_re, s_im);
}

}  // namespace jeft::kernels
