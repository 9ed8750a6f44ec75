#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "erg/seq.hpp"

namespace erg {

using Matrix = Eigen::MatrixXcd;

enum class NormKind { induced_sup, induced_l1, spectral_l2 };

/// Dense complex square matrix with a declared induced-norm convention.
/// The default is the infinity norm (max absolute row sum).
struct Operator {
    Matrix entries;
    NormKind norm_kind = NormKind::induced_sup;

    Operator() = default;
    explicit Operator(Matrix m, NormKind nk = NormKind::induced_sup);

    Eigen::Index dim() const { return entries.rows(); }
    double norm() const;
};

double operator_norm(const Matrix& m, NormKind nk);

struct PowerNorms {
    RealSeq norms;
    bool overflowed = false;  // some power reached Inf (spectral radius > 1)
};

/// (||T^n||)_{n=0..N}, powers by repeated multiplication.
PowerNorms power_norms(const Operator& T, std::size_t N);

/// Prefix maxima of a norm sequence.
RealSeq running_max(const RealSeq& norms);

struct SpectrumProximityError : std::runtime_error {
    double condition_estimate;
    SpectrumProximityError(const std::string& what, double cond)
        : std::runtime_error(what), condition_estimate(cond) {}
};

struct IndeterminateRankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (lambda I - T)^{-1}; throws SpectrumProximityError near the spectrum.
Operator resolvent(const Operator& T, std::complex<double> lambda);

/// (lambda - 1) (lambda I - T)^{-1} for real lambda > 1.
Operator abel_mean(const Operator& T, double lambda);

enum class SpectralVerdict { resolvent_point, simple_pole, non_simple };

struct SpectralClassification {
    SpectralVerdict verdict = SpectralVerdict::resolvent_point;
    std::optional<Operator> projection;  // absent iff verdict == non_simple
    std::size_t kernel_dim = 0;
    std::size_t range_codim = 0;
    double tolerance_used = 0.0;
};

/// Classifies the point 1: resolvent point, simple pole, or non-simple
/// singularity.  Simple pole <=> rank(I - T) = rank((I - T)^2) with a
/// nontrivial kernel; the projection returned has range ker(I - T) and
/// kernel ran(I - T).
SpectralClassification classify_one(const Operator& T, double tol = 1e-10);

/// Closed-form power norms of the unilateral weighted shift with weights
/// exp(1/sqrt(n+1)): ||T^k|| = exp(sum_{j=1}^k j^{-1/2}).
RealSeq shift_norms_closed_form(std::size_t N);

}  // namespace erg
