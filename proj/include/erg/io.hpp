#pragma once

#include <string>

#include <json.hpp>

#include "erg/builder.hpp"
#include "erg/ensemble.hpp"
#include "erg/ergodic.hpp"
#include "erg/majorant.hpp"

namespace erg::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSV: one value per line, index implicit; blank lines and '#' comments
/// skipped.  Values may be decimal or exact "p/q".  Errors name the line.
RealSeq read_seq_csv(const std::string& path);
void write_seq_csv(const std::string& path, const RealSeq& a);

/// JSON: {"values": [...], "generator": optional tag} or a bare array.
RealSeq read_seq_json(const std::string& path);

/// Dispatch on extension: .json vs anything else (CSV).
RealSeq read_seq(const std::string& path);

/// Matrix JSON: {"d": n, "entries": [[re, im], ...]} row-major, or plain
/// text: d then d*d entries "a+bi" whitespace-separated.
Operator read_matrix(const std::string& path, NormKind nk = NormKind::induced_sup);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const MajorantResult<double>& r, const ContactStructure& cs);
json to_json(const Thm47Report& r);
json to_json(const BuiltMajorant<double>& r);
json to_json(const ConvergenceReport& r);

const char* status_name(ConvergenceStatus s);
const char* verdict_name(SpectralVerdict v);

/// Distances as CSV rows "n,distance".
std::string report_distances_csv(const ConvergenceReport& r);
/// Ensemble table: one row per (matrix, weight) run.
std::string ensemble_csv(const EnsembleSummary& s);
json ensemble_json(const EnsembleSummary& s);

void write_text(const std::string& path, const std::string& text);

}  // namespace erg::io
