#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "erg/ergodic.hpp"

namespace erg {

// Stratified random ensemble used to exercise the ergodic equivalence at
// desk scale: 1 in the resolvent set / 1 a semisimple eigenvalue (other
// spectrum in the open disk, occasionally semisimple on the circle away
// from 1) / a Jordan block at 1.
enum class Stratum { resolvent_disk, semisimple_one, jordan_one };

const char* stratum_name(Stratum s);

struct EnsembleMember {
    Operator T;
    Stratum stratum = Stratum::resolvent_disk;
    std::size_t index = 0;
    std::size_t dim = 0;
};

/// Deterministic in (seed, count, d_max); strata cycle per index.
std::vector<EnsembleMember> generate_ensemble(std::uint64_t seed, std::size_t count,
                                              std::size_t d_max,
                                              NormKind nk = NormKind::induced_sup);

struct WeightSpec {
    std::string name;
    RealSeq s;
};

/// A_0.5, A_1, A_2 plus one Theorem-5.3-built majorant weight, horizon N.
std::vector<WeightSpec> standard_weights(std::size_t N);

struct EnsembleRun {
    std::size_t member_index = 0;
    Stratum stratum = Stratum::resolvent_disk;
    std::size_t dim = 0;
    std::string weight_name;
    SpectralVerdict verdict = SpectralVerdict::resolvent_point;
    ConvergenceStatus status = ConvergenceStatus::undetermined;
    double final_distance = 0.0;
    double empirical_limit_distance = 0.0;
    double limit_stability = 0.0;
    bool agree = true;  // undetermined always counts as agreeing
};

struct EnsembleSummary {
    std::vector<EnsembleRun> runs;
    std::size_t disagreements = 0;
    std::size_t undetermined = 0;
    double max_converged_limit_distance = 0.0;
};

/// Expected status: converged for resolvent-point / simple-pole verdicts,
/// diverged for non-simple; undetermined never disagrees.
EnsembleSummary run_ensemble(const std::vector<EnsembleMember>& members,
                             const std::vector<WeightSpec>& weights, std::size_t N,
                             const ReportOptions& opts);

}  // namespace erg
