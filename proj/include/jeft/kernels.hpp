#pragma once

#include <cstddef>

#include "jeft/geometry.hpp"

// Hot inner loops, isolated in one translation unit compiled with
// -ffast-math so gcc can vectorize exp/sin/cos/log through libmvec.  Every
// kernel is a fixed-order, fixed-blocking loop over plain arrays: results
// are identical from run to run and independent of the thread count.

namespace jeft::kernels {

// sum_k wf[k] * exp(s_re * a[k]) * (cos(s_im * a[k]) + i sin(s_im * a[k]));
// wf may be null (weight 1).
complex_t exp_sum(std::size_t n, const double* a, const double* wf,
                  double s_re, double s_im);

// Multi-frequency version sharing one exp pass: for each l,
//   out[l] = sum_k wf[k] * exp(s_re * a[k]) * cis(s_im[l] * a[k]).
// Blocked so a stays in L1 across the l loop.
void exp_sum_multi(std::size_t n, const double* a, const double* wf,
                   double s_re, std::size_t nl, const double* s_im,
                   complex_t* out);

// Complex weights, one pair of weight arrays per frequency:
//   out[l] = sum_k exp(s_re*a[k]) * (wr[l*n+k] + i wi[l*n+k]) * cis(s_im[l]*a[k])
void exp_sum_c_multi(std::size_t n, const double* a, double s_re,
                     std::size_t nl, const double* s_im, const double* wr,
                     const double* wi, complex_t* out);

// Azimuthal correlation block of the H^3 product-grid Helgason fill.  The
// bracket between an interior node and a boundary node on the same polar
// product grid depends on azimuth only through the difference Delta, so one
// kernel row serves a whole ring of boundary columns:
//   acc_re/acc_im[l*na + q] += sum_{q'} wf[q'] * Re/Im of
//       exp((s_re + i s_im[l]) * (log1mt2 - log(d2[(q'-q) mod na])))
// d2 is indexed by the azimuth difference Delta = 0..na-1.
void azim_corr(std::size_t na, const double* d2, double log1mt2, double s_re,
               std::size_t nl, const double* s_im, const double* wf,
               double* acc_re, double* acc_im);

// a[k] = la[k] - log(d2[k])   (horocycle bracket from cached log(1-|y|^2))
void bracket_from_logs(std::size_t n, const double* la, const double* d2,
                       double* a);
void bracket_from_logs_const(std::size_t n, double la, const double* d2,
                             double* a);

// Unnormalized n=2 spherical-function trapezoid sum at Euclidean radius t:
//   sum_j exp(s * (log(1-t^2) - log(1 + t^2 - 2 t cos(2 pi j / n))))
complex_t phi_h2_sum(int n, double t, double log1mt2, double s_re, double s_im);

}  // namespace jeft::kernels
