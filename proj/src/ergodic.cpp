#include "erg/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace erg {

namespace {

std::vector<double> weight_deltas(const RealSeq& s, std::size_t N) {
    if (s.horizon() < N) throw std::invalid_argument("noerlund_means: s horizon < N");
    std::vector<double> sv(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        sv[n] = s[n];
        if (!std::isfinite(sv[n]) || sv[n] <= 0.0)
            throw std::invalid_argument("noerlund_means: s must be positive and finite");
        if (n > 0 && sv[n] < sv[n - 1])
            throw std::invalid_argument("noerlund_means: s must be nondecreasing");
    }
    return delta(sv);
}

}  // namespace

std::vector<Operator> noerlund_means(const Operator& T, const RealSeq& s, std::size_t N) {
    auto ds = weight_deltas(s, N);
    std::vector<Operator> out;
    out.reserve(N + 1);
    Matrix I = Matrix::Identity(T.dim(), T.dim());
    Matrix S = ds[0] * I;
    out.emplace_back(Matrix(S / s[0]), T.norm_kind);
    for (std::size_t n = 1; n <= N; ++n) {
        S = T.entries * S + ds[n] * I;
        out.emplace_back(Matrix(S / s[n]), T.norm_kind);
    }
    return out;
}

std::vector<Operator> cesaro_means(const Operator& T, double alpha, std::size_t N) {
    return noerlund_means(T, cesaro_numbers(alpha, N).values, N);
}

double lemma64_check(const Operator& T, const RealSeq& a, std::size_t m, std::size_t n) {
    std::vector<double> av(a.horizon() + 1);
    for (std::size_t i = 0; i < av.size(); ++i) av[i] = a[i];
    Matrix I = Matrix::Identity(T.dim(), T.dim());
    Matrix r = lemma64_residual<Matrix, double>(T.entries, I, av, m, n);
    return operator_norm(r, T.norm_kind);
}

Rational lemma64_check_exact(const GaussMat& tau, const RatSeq& a, std::size_t m, std::size_t n) {
    std::vector<Rational> av(a.horizon() + 1);
    for (std::size_t i = 0; i < av.size(); ++i) av[i] = a[i];
    GaussMat r =
        lemma64_residual<GaussMat, Rational>(tau, GaussMat::identity(tau.dim()), av, m, n);
    return r.abs_row_sum_max();
}

namespace {

/// Entrywise Aitken extrapolation from three checkpoints x0, x1, x2 taken at
/// geometrically spaced indices.  Exact for x_n = E + c/n decay; falls back
/// to the last value where the difference ratio is degenerate.
Matrix aitken(const Matrix& x0, const Matrix& x1, const Matrix& x2) {
    Matrix out = x2;
    for (Eigen::Index i = 0; i < x0.rows(); ++i)
        for (Eigen::Index j = 0; j < x0.cols(); ++j) {
            std::complex<double> d0 = x1(i, j) - x0(i, j);
            std::complex<double> d1 = x2(i, j) - x1(i, j);
            if (std::abs(d0) < 1e-300) continue;
            std::complex<double> r = d1 / d0;
            if (std::abs(1.0 - r) < 1e-6) continue;  // no contraction to exploit
            out(i, j) = x2(i, j) + d1 * r / (1.0 - r);
        }
    return out;
}

double window_max(const RealSeq& d, std::size_t lo, std::size_t hi) {
    double m = 0.0;
    for (std::size_t n = lo; n <= hi; ++n) m = std::max(m, d[n]);
    return m;
}

}  // namespace

ConvergenceReport convergence_report(const Operator& T, const RealSeq& s, std::size_t N,
                                     const ReportOptions& opts) {
    if (N < 16) throw std::invalid_argument("convergence_report: N < 16");
    auto ds = weight_deltas(s, N);

    ConvergenceReport rep;
    rep.classification = classify_one(T, opts.classify_tol);
    const Eigen::Index d = T.dim();
    Matrix P = rep.classification.projection ? rep.classification.projection->entries
                                             : Matrix::Zero(d, d);
    rep.target = Operator(P, T.norm_kind);
    rep.atol_used = opts.atol.value_or(1e-6 * (1.0 + operator_norm(P, T.norm_kind)));

    // One pass maintaining the weighted sum, the running power T^n, and the
    // dyadic checkpoints used for extrapolation.
    const Matrix I = Matrix::Identity(d, d);
    Matrix S = ds[0] * I;
    Matrix Tn = I;
    std::vector<double> dist(N + 1);
    dist[0] = operator_norm(S / s[0] - P, T.norm_kind);
    rep.norm_ratio_tail = 0.0;
    std::vector<std::size_t> cps = {N / 8, N / 4, N / 2, N};
    std::vector<Matrix> cpm(cps.size());
    if (cps[0] == 0) cpm[0] = S / s[0];
    Matrix M = S / s[0];
    for (std::size_t n = 1; n <= N; ++n) {
        S = T.entries * S + ds[n] * I;
        Tn = T.entries * Tn;
        M = S / s[n];
        dist[n] = operator_norm(M - P, T.norm_kind);
        double tn_norm = operator_norm(Tn, T.norm_kind);
        if (!std::isfinite(tn_norm)) rep.power_overflow = true;
        if (n >= N / 2 && n >= 1) rep.norm_ratio_tail = std::max(rep.norm_ratio_tail, tn_norm / s[n]);
        for (std::size_t c = 0; c < cps.size(); ++c)
            if (cps[c] == n) cpm[c] = M;
    }
    rep.distances = RealSeq(std::move(dist));
    rep.final_distance = rep.distances[N];
    rep.fixed_point_residual = operator_norm((I - T.entries) * M, T.norm_kind);

    // Drift of the iterated power against an independent repeated-squaring
    // recomputation (skipped when the power over- or underflows).
    double tn_norm = operator_norm(Tn, T.norm_kind);
    if (std::isfinite(tn_norm) && tn_norm > 1e-100) {
        Matrix sq = I, base = T.entries;
        std::size_t e = N;
        while (e > 0) {
            if (e & 1) sq = sq * base;
            base = base * base;
            e >>= 1;
        }
        rep.power_drift = operator_norm(Tn - sq, T.norm_kind) / tn_norm;
    }

    Matrix E = aitken(cpm[1], cpm[2], cpm[3]);
    Matrix E_prev = aitken(cpm[0], cpm[1], cpm[2]);
    rep.empirical_limit = Operator(E, T.norm_kind);
    rep.empirical_limit_distance = operator_norm(E - P, T.norm_kind);
    rep.limit_stability = operator_norm(E - E_prev, T.norm_kind);

    // Status: converged needs the whole last quarter below atol with
    // non-increasing dyadic window maxima (and, when requested, a stable
    // extrapolated limit); diverged needs the tail to sit well above the
    // global minimum.
    double w1 = window_max(rep.distances, N / 8, N / 4 - 1);
    double w2 = window_max(rep.distances, N / 4, N / 2 - 1);
    double w3 = window_max(rep.distances, N / 2, N);
    double tail_max = window_max(rep.distances, 3 * N / 4, N);
    double tail_min = rep.distances[3 * N / 4];
    double global_min = rep.distances[0];
    for (std::size_t n = 0; n <= N; ++n) global_min = std::min(global_min, rep.distances[n]);
    for (std::size_t n = 3 * N / 4; n <= N; ++n) tail_min = std::min(tail_min, rep.distances[n]);

    if (tail_max < rep.atol_used && w3 <= w2 && w2 <= w1 &&
        rep.limit_stability <= opts.limit_stability_tol) {
        rep.status = ConvergenceStatus::converged;
    } else if (global_min > 0.0 && tail_min > 10.0 * global_min) {
        rep.status = ConvergenceStatus::diverged;
    } else {
        rep.status = ConvergenceStatus::undetermined;
    }
    return rep;
}

}  // namespace erg
