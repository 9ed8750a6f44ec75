#include "erg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace erg::io {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_value(const std::string& tok, const std::string& path, std::size_t line) {
    try {
        if (tok.find('/') != std::string::npos) return to_double(parse_rational(tok));
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(line) + ": bad value '" + tok + "'");
    }
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

RealSeq read_seq_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<double> vals;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        vals.push_back(parse_value(t, path, lineno));
    }
    if (vals.empty()) throw ParseError(path + ": no values");
    return RealSeq(std::move(vals));
}

void write_seq_csv(const std::string& path, const RealSeq& a) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out.precision(17);
    for (std::size_t n = 0; n <= a.horizon(); ++n) out << a[n] << "\n";
}

RealSeq read_seq_json(const std::string& path) {
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    const json& arr = j.is_array() ? j : j.at("values");
    std::vector<double> vals;
    vals.reserve(arr.size());
    for (const auto& v : arr) {
        if (v.is_string()) vals.push_back(to_double(parse_rational(v.get<std::string>())));
        else vals.push_back(v.get<double>());
    }
    if (vals.empty()) throw ParseError(path + ": no values");
    return RealSeq(std::move(vals));
}

RealSeq read_seq(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return read_seq_json(path);
    return read_seq_csv(path);
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            entries.push_back({m(i, j).real(), m(i, j).imag()});
    return {{"d", m.rows()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    std::size_t d = j.at("d").get<std::size_t>();
    const json& e = j.at("entries");
    if (e.size() != d * d) throw ParseError("matrix entries: expected d*d pairs");
    Matrix m(d, d);
    for (std::size_t k = 0; k < d * d; ++k)
        m(k / d, k % d) = std::complex<double>(e[k][0].get<double>(), e[k][1].get<double>());
    return m;
}

namespace {

// "a+bi" / "a-bi" / "a" / "bi"
std::complex<double> parse_complex(const std::string& tok, const std::string& path) {
    std::string t = tok;
    bool has_i = !t.empty() && t.back() == 'i';
    if (has_i) t.pop_back();
    if (!has_i) return {std::stod(t), 0.0};
    // split at the last +/- that is not an exponent sign or leading
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    try {
        if (split == std::string::npos) {
            if (t.empty() || t == "+" || t == "-") t += "1";
            return {0.0, std::stod(t)};
        }
        std::string im = t.substr(split);
        if (im == "+" || im == "-") im += "1";
        return {std::stod(t.substr(0, split)), std::stod(im)};
    } catch (const std::exception&) {
        throw ParseError(path + ": bad complex entry '" + tok + "'");
    }
}

}  // namespace

Operator read_matrix(const std::string& path, NormKind nk) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        try {
            return Operator(matrix_from_json(json::parse(slurp(path))), nk);
        } catch (const json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    std::istringstream in(slurp(path));
    std::size_t d = 0;
    if (!(in >> d) || d == 0) throw ParseError(path + ": expected dimension");
    Matrix m(d, d);
    for (std::size_t k = 0; k < d * d; ++k) {
        std::string tok;
        if (!(in >> tok)) throw ParseError(path + ": expected " + std::to_string(d * d) + " entries");
        m(k / d, k % d) = parse_complex(tok, path);
    }
    return Operator(std::move(m), nk);
}

json to_json(const MajorantResult<double>& r, const ContactStructure& cs) {
    json j;
    j["c"] = r.c.values();
    j["contacts"] = r.contacts;
    j["nu"] = cs.nu;
    j["eventually_affine"] = cs.eventually_affine;
    if (cs.slope_tail) j["slope_tail"] = *cs.slope_tail;
    if (r.N_sup) j["N_sup"] = *r.N_sup;
    j["ell"] = r.ell;
    return j;
}

namespace {

json item_json(const Thm47Item& it) {
    return {{"pass", it.pass}, {"witness", it.witness}, {"criterion", it.criterion}};
}

}  // namespace

json to_json(const Thm47Report& r) {
    return {{"positivity", item_json(r.positivity)},
            {"strict_increase", item_json(r.strict_increase)},
            {"growth", item_json(r.growth)},
            {"bounded_above", item_json(r.bounded_above)},
            {"ratio_to_one", item_json(r.ratio_to_one)},
            {"diff_summable", item_json(r.diff_summable)},
            {"all_pass", r.all_pass()}};
}

json to_json(const BuiltMajorant<double>& r) {
    json j;
    j["p"] = r.p;
    j["a_transform"] = r.a_transform.values();
    j["c"] = r.c.values();
    j["s"] = r.s.values();
    j["ratio_window"] = r.ratio_window;
    j["h_index_mismatch"] = r.h_index_mismatch;
    return j;
}

const char* status_name(ConvergenceStatus s) {
    switch (s) {
        case ConvergenceStatus::converged: return "converged";
        case ConvergenceStatus::diverged: return "diverged";
        case ConvergenceStatus::undetermined: return "undetermined";
    }
    return "?";
}

const char* verdict_name(SpectralVerdict v) {
    switch (v) {
        case SpectralVerdict::resolvent_point: return "resolvent_point";
        case SpectralVerdict::simple_pole: return "simple_pole";
        case SpectralVerdict::non_simple: return "non_simple";
    }
    return "?";
}

json to_json(const ConvergenceReport& r) {
    json j;
    j["status"] = status_name(r.status);
    j["verdict"] = verdict_name(r.classification.verdict);
    j["final_distance"] = r.final_distance;
    j["norm_ratio_tail"] = r.norm_ratio_tail;
    j["fixed_point_residual"] = r.fixed_point_residual;
    j["empirical_limit_distance"] = r.empirical_limit_distance;
    j["limit_stability"] = r.limit_stability;
    j["power_drift"] = r.power_drift;
    j["power_overflow"] = r.power_overflow;
    j["atol_used"] = r.atol_used;
    j["kernel_dim"] = r.classification.kernel_dim;
    j["target"] = matrix_to_json(r.target.entries);
    j["empirical_limit"] = matrix_to_json(r.empirical_limit.entries);
    j["distances"] = r.distances.values();
    return j;
}

std::string report_distances_csv(const ConvergenceReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "n,distance\n";
    for (std::size_t n = 0; n <= r.distances.horizon(); ++n)
        out << n << "," << r.distances[n] << "\n";
    return out.str();
}

std::string ensemble_csv(const EnsembleSummary& s) {
    std::ostringstream out;
    out.precision(17);
    out << "member,stratum,dim,weight,verdict,status,final_distance,limit_distance,"
           "limit_stability,agree\n";
    for (const auto& r : s.runs) {
        out << r.member_index << "," << stratum_name(r.stratum) << "," << r.dim << ","
            << r.weight_name << "," << verdict_name(r.verdict) << "," << status_name(r.status)
            << "," << r.final_distance << "," << r.empirical_limit_distance << ","
            << r.limit_stability << "," << (r.agree ? 1 : 0) << "\n";
    }
    return out.str();
}

json ensemble_json(const EnsembleSummary& s) {
    json runs = json::array();
    for (const auto& r : s.runs) {
        runs.push_back({{"member", r.member_index},
                        {"stratum", stratum_name(r.stratum)},
                        {"dim", r.dim},
                        {"weight", r.weight_name},
                        {"verdict", verdict_name(r.verdict)},
                        {"status", status_name(r.status)},
                        {"final_distance", r.final_distance},
                        {"limit_distance", r.empirical_limit_distance},
                        {"limit_stability", r.limit_stability},
                        {"agree", r.agree}});
    }
    return {{"runs", runs},
            {"disagreements", s.disagreements},
            {"undetermined", s.undetermined},
            {"max_converged_limit_distance", s.max_converged_limit_distance}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << text;
}

}  // namespace erg::io
