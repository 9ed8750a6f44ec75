#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "erg/majorant.hpp"
#include "erg/seq.hpp"

namespace erg {

// ---------------------------------------------------------------------------
// Constructive majorant pipeline: from an unbounded b with finite
// unboundedness index p + 1, build s = Sigma^p c where c is the least concave
// majorant of a(n) = (p+1) b(n) / C(n+p, p) - p b(0).
// ---------------------------------------------------------------------------

template <class T>
struct BuiltMajorant {
    std::size_t p = 0;
    Seq<T> a_transform;
    Seq<T> c;
    Seq<T> s;
    double ratio_window = 0.0;  // tail max of b(n)/s(n)
    bool h_index_mismatch = false;  // empirical h_index disagreed with p + 1
};

template <class T>
BuiltMajorant<T> build_majorant(const Seq<T>& b_in, std::size_t p) {
    if (b_in.horizon() < 16) throw std::invalid_argument("build_majorant: horizon < 16");
    // b(0) < 0 is replaced by 0; the rest of b must be admissible as is.
    std::vector<T> b = b_in.values();
    if (b[0] < T(0)) b[0] = T(0);

    std::vector<T> a(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
        T binom;
        if constexpr (std::is_same_v<T, Rational>) binom = Rational(binomial(n + p, p));
        else binom = T(binomial(n + p, p).template convert_to<double>());
        a[n] = T(int(p + 1)) * b[n] / binom - T(int(p)) * b[0];
    }
    Seq<T> a_seq(std::move(a));
    auto maj = lcm_hull_oracle(a_seq);
    auto s = iterate(DiffOp::sigma, maj.c, p);

    BuiltMajorant<T> out;
    out.p = p;
    out.a_transform = std::move(a_seq);
    out.c = maj.c;
    out.s = std::move(s);

    const std::size_t H = b_in.horizon();
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t n = std::max<std::size_t>(1, H / 2); n <= H; ++n)
        best = std::max(best, detail::as_double(b[n]) / detail::as_double(out.s[n]));
    out.ratio_window = best;

    if (H >= 16) {
        std::vector<double> bd(b.size());
        for (std::size_t n = 0; n < b.size(); ++n) bd[n] = detail::as_double(b[n]);
        auto est = h_index(RealSeq(std::move(bd)), p + 2);
        out.h_index_mismatch = !(est.value && *est.value == p + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Finite-horizon verifier for the six conclusions of the concave-difference
// theorem.  Each verdict records the exact criterion that was evaluated; the
// claims themselves are asymptotic and a prefix can only witness them.
// ---------------------------------------------------------------------------

struct Thm47Item {
    bool pass = false;
    double witness = 0.0;
    const char* criterion = "";
};

struct Thm47Report {
    Thm47Item positivity;          // s(n) > 0 for n >= 1, exact
    Thm47Item strict_increase;     // s strictly increasing, exact
    Thm47Item growth;              // s(n)/n^p increasing across dyadic windows
    Thm47Item bounded_above;       // max s(n)/n^{p+1} non-increasing across windows
    Thm47Item ratio_to_one;        // |s(N)/s(N-1) - 1| < 1e-2
    Thm47Item diff_summable;       // last-quarter share of sum |Delta^{p+2} s| < 1e-3
    bool all_pass() const {
        return positivity.pass && strict_increase.pass && growth.pass && bounded_above.pass &&
               ratio_to_one.pass && diff_summable.pass;
    }
};

inline Thm47Report verify_thm47(const RealSeq& s, std::size_t p) {
    const std::size_t N = s.horizon();
    if (N < 16) throw std::invalid_argument("verify_thm47: horizon < 16");
    Thm47Report rep;

    rep.positivity.criterion = "s(n) > 0 for all 1 <= n <= N";
    rep.positivity.pass = true;
    rep.positivity.witness = s[1];
    for (std::size_t n = 1; n <= N; ++n) {
        if (!(s[n] > 0.0)) rep.positivity.pass = false;
        rep.positivity.witness = std::min(rep.positivity.witness, s[n]);
    }

    rep.strict_increase.criterion = "s(n+1) > s(n) for all n < N";
    rep.strict_increase.pass = true;
    rep.strict_increase.witness = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < N; ++n) {
        double d = s[n + 1] - s[n];
        if (!(d > 0.0)) rep.strict_increase.pass = false;
        rep.strict_increase.witness = std::min(rep.strict_increase.witness, d);
    }

    auto window_max = [&](std::size_t lo, std::size_t hi, double expo) {
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t n = std::max<std::size_t>(1, lo); n <= hi; ++n)
            m = std::max(m, s[n] / std::pow(double(n), expo));
        return m;
    };

    rep.growth.criterion = "max s(n)/n^p over [N/2,N] > max over [N/4,N/2)";
    {
        double front = window_max(N / 4, N / 2 - 1, double(p));
        double tail = window_max(N / 2, N, double(p));
        rep.growth.pass = tail > front;
        rep.growth.witness = tail / front;
    }

    rep.bounded_above.criterion = "max s(n)/n^{p+1} over [N/2,N] <= max over [N/4,N/2)";
    {
        double front = window_max(N / 4, N / 2 - 1, double(p + 1));
        double tail = window_max(N / 2, N, double(p + 1));
        rep.bounded_above.pass = tail <= front;
        rep.bounded_above.witness = tail / front;
    }

    rep.ratio_to_one.criterion = "|s(N)/s(N-1) - 1| < 1e-2";
    rep.ratio_to_one.witness = std::abs(s[N] / s[N - 1] - 1.0);
    rep.ratio_to_one.pass = rep.ratio_to_one.witness < 1e-2;

    rep.diff_summable.criterion = "sum |Delta^{p+2} s| over (3N/4, N] < 1e-3 of total";
    {
        auto d = iterate(DiffOp::delta, s.values(), p + 2);
        // Nested differencing of a polynomially growing s cancels catastrophically;
        // entries below the rounding-noise envelope of that cancellation carry no
        // information and are treated as exact zeros.
        double smax = 0.0;
        for (std::size_t n = 0; n <= N; ++n) smax = std::max(smax, std::abs(s[n]));
        const double noise_floor =
            std::ldexp(smax * std::numeric_limits<double>::epsilon(), int(p) + 6);
        double total = 0.0, tail = 0.0;
        for (std::size_t n = 2; n <= N; ++n) {  // skip boundary indices 0, 1
            double v = std::abs(d[n]);
            if (v <= noise_floor) continue;
            total += v;
            if (n > 3 * N / 4) tail += v;
        }
        rep.diff_summable.witness = total > 0.0 ? tail / total : 0.0;
        rep.diff_summable.pass = rep.diff_summable.witness < 1e-3;
    }
    return rep;
}

}  // namespace erg
