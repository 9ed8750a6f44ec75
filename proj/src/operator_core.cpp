#include "erg/operator_core.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>

namespace erg {

Operator::Operator(Matrix m, NormKind nk) : entries(std::move(m)), norm_kind(nk) {
    if (entries.rows() < 1 || entries.rows() != entries.cols())
        throw std::invalid_argument("Operator: entries must be a nonempty square matrix");
    if (!entries.allFinite()) throw std::invalid_argument("Operator: non-finite entries");
}

double operator_norm(const Matrix& m, NormKind nk) {
    switch (nk) {
        case NormKind::induced_sup:
            return m.cwiseAbs().rowwise().sum().maxCoeff();
        case NormKind::induced_l1:
            return m.cwiseAbs().colwise().sum().maxCoeff();
        case NormKind::spectral_l2:
            return m.jacobiSvd().singularValues()(0);
    }
    return 0.0;
}

double Operator::norm() const { return operator_norm(entries, norm_kind); }

PowerNorms power_norms(const Operator& T, std::size_t N) {
    PowerNorms out;
    std::vector<double> v(N + 1);
    Matrix P = Matrix::Identity(T.dim(), T.dim());
    v[0] = operator_norm(P, T.norm_kind);
    for (std::size_t n = 1; n <= N; ++n) {
        if (P.allFinite()) P = P * T.entries;
        double nm = P.allFinite() ? operator_norm(P, T.norm_kind)
                                  : std::numeric_limits<double>::infinity();
        if (!std::isfinite(nm)) out.overflowed = true;
        v[n] = nm;
    }
    out.norms = RealSeq(std::move(v));
    return out;
}

RealSeq running_max(const RealSeq& norms) {
    std::vector<double> v(norms.size());
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < norms.size(); ++n) {
        m = std::max(m, norms[n]);
        v[n] = m;
    }
    return RealSeq(std::move(v));
}

Operator resolvent(const Operator& T, std::complex<double> lambda) {
    const auto d = T.dim();
    Matrix A = lambda * Matrix::Identity(d, d) - T.entries;
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(d - 1);
    double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    double eps = std::numeric_limits<double>::epsilon();
    if (!(cond < 1.0 / (100.0 * eps)))
        throw SpectrumProximityError("resolvent: lambda too close to the spectrum", cond);
    Matrix R = A.partialPivLu().solve(Matrix::Identity(d, d));
    double residual = operator_norm(A * R - Matrix::Identity(d, d), T.norm_kind);
    if (residual > 1e-8 * operator_norm(R, T.norm_kind))
        throw SpectrumProximityError("resolvent: residual too large", cond);
    return Operator(std::move(R), T.norm_kind);
}

Operator abel_mean(const Operator& T, double lambda) {
    if (!(lambda > 1.0)) throw std::invalid_argument("abel_mean: lambda must exceed 1");
    // Screen r(T) <= 1 + 1e-6 from power growth.  Polynomial slack (n+1)^d
    // keeps operators with r = 1 but non-trivial Jordan structure admissible.
    const std::size_t probe = 512;
    auto pn = power_norms(T, probe);
    double d = double(T.dim());
    double bound = d * std::pow(double(probe + 1), d) * std::pow(1.0 + 1e-6, double(probe));
    if (pn.overflowed || pn.norms[probe] > bound)
        throw std::invalid_argument("abel_mean: power growth exceeds spectral-radius-1 envelope");
    Operator R = resolvent(T, std::complex<double>(lambda, 0.0));
    R.entries *= (lambda - 1.0);
    return R;
}

namespace {

// Numerical rank from singular values; throws when a value sits inside the
// ambiguity band around the cut.
std::size_t numerical_rank(const Eigen::VectorXd& sv, double tol, double smax) {
    if (smax == 0.0) return 0;
    double cut = tol * smax;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        double s = sv(i);
        if (s > cut * 10.0) ++rank;
        else if (s >= cut / 10.0)
            throw IndeterminateRankError("classify_one: singular value within 10x of the rank cut");
    }
    return rank;
}

}  // namespace

SpectralClassification classify_one(const Operator& T, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("classify_one: tol must be positive");
    const auto d = T.dim();
    Matrix B = Matrix::Identity(d, d) - T.entries;
    Matrix B2 = B * B;

    Eigen::JacobiSVD<Matrix> svd(B, Eigen::ComputeFullU | Eigen::ComputeFullV);
    double smax = svd.singularValues()(0);
    std::size_t rank_b = numerical_rank(svd.singularValues(), tol, smax);

    Eigen::JacobiSVD<Matrix> svd2(B2);
    std::size_t rank_b2 = numerical_rank(svd2.singularValues(), tol, svd2.singularValues()(0));

    SpectralClassification out;
    out.tolerance_used = tol;
    out.kernel_dim = std::size_t(d) - rank_b;
    out.range_codim = std::size_t(d) - rank_b;

    if (out.kernel_dim == 0) {
        out.verdict = SpectralVerdict::resolvent_point;
        out.projection = Operator(Matrix::Zero(d, d), T.norm_kind);
        return out;
    }
    if (rank_b != rank_b2) {
        out.verdict = SpectralVerdict::non_simple;
        return out;
    }
    out.verdict = SpectralVerdict::simple_pole;

    // Basis assembly: columns of V past the rank span ker(B); leading columns
    // of U span ran(B).  P maps the kernel block to itself and the range block
    // to zero.
    const auto k = Eigen::Index(out.kernel_dim);
    Matrix M(d, d);
    M.leftCols(k) = svd.matrixV().rightCols(k);
    M.rightCols(d - k) = svd.matrixU().leftCols(d - k);
    Matrix D = Matrix::Zero(d, d);
    D.topLeftCorner(k, k) = Matrix::Identity(k, k);
    Matrix P = M * D * M.partialPivLu().solve(Matrix::Identity(d, d));
    out.projection = Operator(std::move(P), T.norm_kind);
    return out;
}

RealSeq shift_norms_closed_form(std::size_t N) {
    std::vector<double> v(N + 1);
    double sum = 0.0;
    v[0] = 1.0;
    for (std::size_t k = 1; k <= N; ++k) {
        sum += 1.0 / std::sqrt(double(k));
        v[k] = std::exp(sum);
    }
    return RealSeq(std::move(v));
}

}  // namespace erg
