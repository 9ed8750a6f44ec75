#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "erg/rational.hpp"

namespace erg {

// ---------------------------------------------------------------------------
// Sequence storage.  A sequence is a materialized prefix indexed from 0; an
// optional generator extends it to arbitrary indices.  All suprema over
// infinite index sets elsewhere in the library are truncated at the horizon.
// ---------------------------------------------------------------------------

template <class T>
class Seq {
public:
    Seq() = default;
    explicit Seq(std::vector<T> prefix) : prefix_(std::move(prefix)) {
        if (prefix_.empty()) throw std::invalid_argument("Seq: empty prefix");
    }
    Seq(std::initializer_list<T> xs) : Seq(std::vector<T>(xs)) {}

    static Seq from_generator(std::function<T(std::size_t)> gen, std::size_t horizon) {
        std::vector<T> p(horizon + 1);
        for (std::size_t n = 0; n <= horizon; ++n) p[n] = gen(n);
        Seq s(std::move(p));
        s.generator_ = std::move(gen);
        return s;
    }

    std::size_t horizon() const { return prefix_.size() - 1; }
    std::size_t size() const { return prefix_.size(); }
    const T& operator[](std::size_t n) const { return prefix_[n]; }
    const std::vector<T>& values() const { return prefix_; }
    bool has_generator() const { return static_cast<bool>(generator_); }
    T generate(std::size_t n) const {
        if (!generator_) throw std::logic_error("Seq: no generator");
        return generator_(n);
    }

private:
    std::vector<T> prefix_;
    std::function<T(std::size_t)> generator_;
};

using RealSeq = Seq<double>;
using RatSeq = Seq<Rational>;

// ---------------------------------------------------------------------------
// The difference calculus: Sigma maps a sequence to its partial sums, Delta is
// its inverse (backward difference, with (Delta a)(0) = a(0)).
// ---------------------------------------------------------------------------

template <class T>
std::vector<T> delta(const std::vector<T>& a) {
    std::vector<T> r(a.size());
    if (a.empty()) return r;
    r[0] = a[0];
    for (std::size_t n = 1; n < a.size(); ++n) r[n] = a[n] - a[n - 1];
    return r;
}

template <class T>
std::vector<T> sigma(const std::vector<T>& a) {
    std::vector<T> r(a.size());
    T acc{};
    for (std::size_t n = 0; n < a.size(); ++n) {
        acc += a[n];
        r[n] = acc;
    }
    return r;
}

enum class DiffOp { delta, sigma };

template <class T>
std::vector<T> iterate(DiffOp op, std::vector<T> a, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) a = (op == DiffOp::delta) ? delta(a) : sigma(a);
    return a;
}

template <class T>
Seq<T> delta(const Seq<T>& a) { return Seq<T>(delta(a.values())); }
template <class T>
Seq<T> sigma(const Seq<T>& a) { return Seq<T>(sigma(a.values())); }
template <class T>
Seq<T> iterate(DiffOp op, const Seq<T>& a, std::size_t m) {
    return Seq<T>(iterate(op, a.values(), m));
}

// ---------------------------------------------------------------------------
// Cesaro numbers A_alpha(n) = C(n + alpha, n).
// ---------------------------------------------------------------------------

struct CesaroSeq {
    double alpha = 0.0;
    RealSeq values;
};

/// A_alpha(0) = 1, A_alpha(n) = A_alpha(n-1) * (alpha + n) / n.
inline CesaroSeq cesaro_numbers(double alpha, std::size_t N) {
    std::vector<double> v(N + 1);
    v[0] = 1.0;
    for (std::size_t n = 1; n <= N; ++n) v[n] = v[n - 1] * (alpha + double(n)) / double(n);
    return CesaroSeq{alpha, RealSeq(std::move(v))};
}

/// Exact-rational Cesaro numbers for rational order.
inline RatSeq cesaro_numbers_rat(const Rational& alpha, std::size_t N) {
    std::vector<Rational> v(N + 1);
    v[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) v[n] = v[n - 1] * (alpha + int(n)) / int(n);
    return RatSeq(std::move(v));
}

/// Sum_{k=j}^n C(k, j) = C(n+1, j+1), in exact integer arithmetic.
inline BigInt hockey_stick(std::uint64_t j, std::uint64_t n) {
    if (n < j) throw std::invalid_argument("hockey_stick: n < j");
    return binomial(n + 1, j + 1);
}

// ---------------------------------------------------------------------------
// Shape predicates.
// ---------------------------------------------------------------------------

enum class Tri { yes, no, undetermined };

struct ShapeReport {
    bool nondecreasing = false;
    bool strictly_increasing = false;
    Tri concave = Tri::undetermined;
    Tri convex = Tri::undetermined;
};

namespace detail {
template <class T>
double as_double(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) return to_double(x);
    else return double(x);
}
}  // namespace detail

/// Comparisons are exact by default; rel_tol > 0 relaxes the midpoint test for
/// float-path data.
template <class T>
ShapeReport shape_check(const Seq<T>& a, double rel_tol = 0.0) {
    ShapeReport r;
    r.nondecreasing = true;
    r.strictly_increasing = a.horizon() >= 1;
    for (std::size_t n = 0; n + 1 <= a.horizon(); ++n) {
        if (a[n + 1] < a[n]) r.nondecreasing = false;
        if (!(a[n + 1] > a[n])) r.strictly_increasing = false;
    }
    if (a.horizon() < 2) return r;
    bool conc = true, conv = true;
    for (std::size_t n = 0; n + 2 <= a.horizon(); ++n) {
        T lhs = a[n + 1] + a[n + 1];
        T rhs = a[n] + a[n + 2];
        if (rel_tol > 0.0) {
            double dl = detail::as_double(lhs) - detail::as_double(rhs);
            double slack = rel_tol * (1.0 + std::max(std::abs(detail::as_double(lhs)),
                                                     std::abs(detail::as_double(rhs))));
            if (dl < -slack) conc = false;
            if (dl > slack) conv = false;
        } else {
            if (lhs < rhs) conc = false;
            if (lhs > rhs) conv = false;
        }
    }
    r.concave = conc ? Tri::yes : Tri::no;
    r.convex = conv ? Tri::yes : Tri::no;
    return r;
}

// ---------------------------------------------------------------------------
// The unboundedness index: smallest m with a(n)/n^m bounded from above.
// Only a heuristic is available from a finite prefix; the estimate carries its
// mode so callers never mistake an empirical verdict for a proof.
// ---------------------------------------------------------------------------

struct HIndexEstimate {
    std::optional<std::size_t> value;  // nullopt = "infinite/undetermined"
    std::vector<std::pair<double, double>> evidence;  // per-m window maxima (front, tail)
    enum class Mode { exact, empirical } mode = Mode::empirical;
};

/// Empirical mode: for each m, compare the max of a(n)/n^m over the dyadic
/// windows [N/4, N/2) and [N/2, N]; the value is the smallest m whose window
/// maxima are non-increasing.
inline HIndexEstimate h_index(const RealSeq& a, std::size_t m_max) {
    if (a.horizon() < 16) throw std::invalid_argument("h_index: horizon < 16");
    if (m_max < 1) throw std::invalid_argument("h_index: m_max < 1");
    const std::size_t N = a.horizon();
    HIndexEstimate est;
    for (std::size_t m = 0; m <= m_max; ++m) {
        double front = -std::numeric_limits<double>::infinity();
        double tail = front;
        for (std::size_t n = N / 4; n <= N; ++n) {
            double v = a[n] / std::pow(double(n), double(m));
            (n < N / 2 ? front : tail) = std::max(n < N / 2 ? front : tail, v);
        }
        est.evidence.emplace_back(front, tail);
        if (!est.value && tail <= front) est.value = m;
    }
    return est;
}

/// Exact mode: the caller asserts a certified closed-form bound.
inline HIndexEstimate h_index_certified(std::size_t value) {
    HIndexEstimate est;
    est.value = value;
    est.mode = HIndexEstimate::Mode::exact;
    return est;
}

// ---------------------------------------------------------------------------
// Piecewise-linear interpolant through (n, a(n)).
// ---------------------------------------------------------------------------

template <class T>
double phi_interpolant(const Seq<T>& a, double x) {
    if (x < 0.0 || x > double(a.horizon()))
        throw std::out_of_range("phi_interpolant: x outside [0, horizon]");
    if (a.horizon() == 0) return detail::as_double(a[0]);
    auto n = std::min<std::size_t>(std::size_t(x), a.horizon() - 1);
    double lo = detail::as_double(a[n]);
    double hi = detail::as_double(a[n + 1]);
    double t = x - double(n);
    return lo * (1.0 - t) + hi * t;
}

}  // namespace erg
