#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "erg/operator_core.hpp"
#include "erg/ratmat.hpp"
#include "erg/seq.hpp"

namespace erg {

// ---------------------------------------------------------------------------
// Noerlund means of operator powers:
//   M_n = (1/s(n)) sum_{k=0}^n (Delta s)(n-k) T^k.
// The weighted sum S_n obeys S_n = T S_{n-1} + (Delta s)(n) I, so each step
// costs one multiplication by T.
// ---------------------------------------------------------------------------

std::vector<Operator> noerlund_means(const Operator& T, const RealSeq& s, std::size_t N);

/// (C, alpha) means: Noerlund means with s = A_alpha (Delta A_alpha = A_{alpha-1}).
std::vector<Operator> cesaro_means(const Operator& T, double alpha, std::size_t N);

// ---------------------------------------------------------------------------
// The algebra identity relating weighted power sums to difference transforms:
//   (sum_{k<=n} a(n-k) tau^k)(1 - tau)^m
//     = (-1)^m sum_{k<=n+m} (Delta^m a)(n+m-k) tau^k
//       + sum_{j<m} (-1)^j (Delta^j a)(n+j+1) (1 - tau)^{m-1-j}.
// Both sides are assembled independently; the residual is LHS - RHS.
// ---------------------------------------------------------------------------

template <class Alg, class F>
Alg lemma64_residual(const Alg& tau, const Alg& one, const std::vector<F>& a, std::size_t m,
                     std::size_t n) {
    if (m < 1) throw std::invalid_argument("lemma64_residual: m must be >= 1");
    // largest index touched is n + m, via the Delta^m weighted sum and the
    // boundary coefficients (Delta^j a)(n + j + 1) for j < m
    if (a.size() < n + m + 1) throw std::invalid_argument("lemma64_residual: insufficient horizon");

    auto weighted_sum = [&](const std::vector<F>& w, std::size_t top) {
        // sum_{k=0}^{top} w(top - k) tau^k
        Alg acc = w[0] * one;  // Horner in tau
        for (std::size_t j = 1; j <= top; ++j) acc = acc * tau + w[j] * one;
        return acc;
    };

    Alg one_minus_tau = one - tau;
    Alg lhs = weighted_sum(a, n);
    for (std::size_t i = 0; i < m; ++i) lhs = lhs * one_minus_tau;

    std::vector<std::vector<F>> diffs(m + 1);  // Delta^j a for j = 0..m
    diffs[0] = a;
    for (std::size_t j = 1; j <= m; ++j) diffs[j] = delta(diffs[j - 1]);

    Alg rhs = weighted_sum(diffs[m], n + m);
    if (m % 2 == 1) rhs = F(-1) * rhs;
    for (std::size_t j = 0; j < m; ++j) {
        Alg pw = one;
        for (std::size_t i = 0; i + j + 1 < m; ++i) pw = pw * one_minus_tau;
        F coeff = diffs[j][n + j + 1];
        if (j % 2 == 1) coeff = F(-1) * coeff;
        rhs = rhs + coeff * pw;
    }
    return lhs - rhs;
}

/// Float-path check: ||LHS - RHS|| in the operator's norm.
double lemma64_check(const Operator& T, const RealSeq& a, std::size_t m, std::size_t n);

/// Exact-path check over Gaussian rationals; zero iff the identity holds.
Rational lemma64_check_exact(const GaussMat& tau, const RatSeq& a, std::size_t m, std::size_t n);

// ---------------------------------------------------------------------------
// Convergence diagnostics against the spectral projection.
// ---------------------------------------------------------------------------

enum class ConvergenceStatus { converged, diverged, undetermined };

struct ReportOptions {
    std::optional<double> atol;            // default 1e-6 * (1 + ||P||)
    double limit_stability_tol = std::numeric_limits<double>::infinity();
    double classify_tol = 1e-10;
};

struct ConvergenceReport {
    RealSeq distances;              // ||M_n - P|| per n
    Operator target;                // P from classify_one (zero when non-simple)
    ConvergenceStatus status = ConvergenceStatus::undetermined;
    double final_distance = 0.0;
    double norm_ratio_tail = 0.0;   // max over [N/2, N] of ||T^n|| / s(n)
    double fixed_point_residual = 0.0;  // ||(I - T) M_N||
    Operator empirical_limit;       // extrapolated from dyadic tail checkpoints
    double empirical_limit_distance = 0.0;  // ||empirical_limit - P||
    double limit_stability = 0.0;   // distance between two extrapolation windows
    double power_drift = 0.0;       // T^N, iterated multiply vs repeated squaring
    SpectralClassification classification;
    double atol_used = 0.0;
    bool power_overflow = false;
};

ConvergenceReport convergence_report(const Operator& T, const RealSeq& s, std::size_t N,
                                     const ReportOptions& opts = {});

}  // namespace erg
