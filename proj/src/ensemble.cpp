#include "erg/ensemble.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "erg/builder.hpp"

namespace erg {

const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::resolvent_disk: return "resolvent_disk";
        case Stratum::semisimple_one: return "semisimple_one";
        case Stratum::jordan_one: return "jordan_one";
    }
    return "?";
}

namespace {

using Cplx = std::complex<double>;

Matrix random_matrix(std::mt19937_64& rng, std::size_t d) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = Cplx(g(rng), g(rng));
    return m;
}

Matrix random_unitary(std::mt19937_64& rng, std::size_t d) {
    return Eigen::HouseholderQR<Matrix>(random_matrix(rng, d)).householderQ();
}

Cplx disk_eigenvalue(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = radius * std::sqrt(u(rng));
    double th = 2.0 * M_PI * u(rng);
    return std::polar(r, th);
}

}  // namespace

std::vector<EnsembleMember> generate_ensemble(std::uint64_t seed, std::size_t count,
                                              std::size_t d_max, NormKind nk) {
    if (d_max < 2) throw std::invalid_argument("generate_ensemble: d_max < 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dims(2, d_max);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<EnsembleMember> out;
    out.reserve(count);
    std::size_t semisimple_seen = 0;
    for (std::size_t i = 0; i < count; ++i) {
        auto stratum = static_cast<Stratum>(i % 3);
        std::size_t d = dims(rng);
        Matrix T;
        switch (stratum) {
            case Stratum::resolvent_disk: {
                // Spectrum inside the open disk: scale to sup-norm 0.7.
                T = random_matrix(rng, d);
                T *= 0.7 / operator_norm(T, NormKind::induced_sup);
                break;
            }
            case Stratum::semisimple_one: {
                // Unitary conjugation of a diagonal with one or two 1's,
                // the rest in the disk of radius 0.6; every third member
                // carries one unimodular eigenvalue kept away from 1.
                std::size_t ones = 1 + (d > 2 && u(rng) < 0.4 ? 1 : 0);
                Matrix D = Matrix::Zero(d, d);
                for (std::size_t k = 0; k < ones; ++k) D(k, k) = 1.0;
                bool unimodular = (semisimple_seen++ % 3 == 2) && d > ones;
                std::size_t k = ones;
                if (unimodular) {
                    double th = M_PI / 3.0 + u(rng) * 4.0 * M_PI / 3.0;
                    D(k, k) = std::polar(1.0, th);
                    ++k;
                }
                for (; k < d; ++k) D(k, k) = disk_eigenvalue(rng, 0.6);
                Matrix Q = random_unitary(rng, d);
                T = Q * D * Q.adjoint();
                break;
            }
            case Stratum::jordan_one: {
                Matrix J = Matrix::Zero(d, d);
                J(0, 0) = 1.0;
                J(0, 1) = 1.0;
                J(1, 1) = 1.0;
                for (std::size_t k = 2; k < d; ++k) J(k, k) = disk_eigenvalue(rng, 0.6);
                Matrix Q = random_unitary(rng, d);
                T = Q * J * Q.adjoint();
                break;
            }
        }
        out.push_back({Operator(std::move(T), nk), stratum, i, d});
    }
    return out;
}

std::vector<WeightSpec> standard_weights(std::size_t N) {
    std::vector<WeightSpec> w;
    for (double alpha : {0.5, 1.0, 2.0}) {
        w.push_back({"A_" + std::to_string(alpha).substr(0, 3),
                     cesaro_numbers(alpha, N).values});
    }
    // A dipped sequence of quadratic growth (unboundedness index 2) pushed
    // through the constructive pipeline with p = 1.  The transform of the
    // even-index points is collinear, so the hull is exactly c(n) = 2n + 1
    // and s(n) = (n + 1)^2; the odd points sit strictly below the hull, which
    // keeps the majorant step nontrivial while the resulting weight stays
    // smooth enough for the limit extrapolation used by the reports.
    std::vector<double> b(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        double q = double(n + 1) * double(n + 1);
        b[n] = (n % 2 == 0) ? q : q / 2.0;
    }
    auto built = build_majorant(RealSeq(std::move(b)), 1);
    w.push_back({"built_p1", built.s});
    return w;
}

EnsembleSummary run_ensemble(const std::vector<EnsembleMember>& members,
                             const std::vector<WeightSpec>& weights, std::size_t N,
                             const ReportOptions& opts) {
    EnsembleSummary sum;
    sum.runs.reserve(members.size() * weights.size());
    for (const auto& m : members) {
        for (const auto& w : weights) {
            auto rep = convergence_report(m.T, w.s, N, opts);
            EnsembleRun run;
            run.member_index = m.index;
            run.stratum = m.stratum;
            run.dim = m.dim;
            run.weight_name = w.name;
            run.verdict = rep.classification.verdict;
            run.status = rep.status;
            run.final_distance = rep.final_distance;
            run.empirical_limit_distance = rep.empirical_limit_distance;
            run.limit_stability = rep.limit_stability;
            if (run.status == ConvergenceStatus::undetermined) {
                ++sum.undetermined;
                run.agree = true;
            } else {
                auto expected = run.verdict == SpectralVerdict::non_simple
                                    ? ConvergenceStatus::diverged
                                    : ConvergenceStatus::converged;
                run.agree = run.status == expected;
                if (!run.agree) ++sum.disagreements;
                if (run.status == ConvergenceStatus::converged)
                    sum.max_converged_limit_distance = std::max(
                        sum.max_converged_limit_distance, run.empirical_limit_distance);
            }
            sum.runs.push_back(std::move(run));
        }
    }
    return sum;
}

}  // namespace erg
