#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "erg/builder.hpp"

using namespace erg;

namespace {

void check_pipeline_contract(const RealSeq& b, const BuiltMajorant<double>& out) {
    const std::size_t H = b.horizon();
    for (std::size_t n = 0; n <= H; ++n) CHECK(out.s[n] >= b[n] - 1e-9 * (1.0 + std::abs(b[n])));
    if (b[0] >= 0.0) CHECK(out.s[0] == doctest::Approx(b[0]));
    // Delta^p s = c round trip
    auto back = iterate(DiffOp::delta, out.s, out.p);
    for (std::size_t n = 0; n <= H; ++n)
        CHECK(back[n] == doctest::Approx(out.c[n]).epsilon(1e-9));
    CHECK(shape_check(out.c, 1e-9).concave == Tri::yes);
    CHECK(out.ratio_window >= 1.0 / double(out.p + 1) - 1e-3);
    CHECK(out.ratio_window <= 1.0 + 1e-9);
}

}  // namespace

TEST_CASE("identity case: concave linear input, p = 0") {
    std::vector<double> b(65);
    for (std::size_t n = 0; n <= 64; ++n) b[n] = double(n);
    auto out = build_majorant(RealSeq(b), 0);
    for (std::size_t n = 0; n <= 64; ++n) {
        CHECK(out.a_transform[n] == doctest::Approx(b[n]));
        CHECK(out.c[n] == doctest::Approx(b[n]));
        CHECK(out.s[n] == doctest::Approx(b[n]));
    }
    CHECK(out.ratio_window == doctest::Approx(1.0));
}

TEST_CASE("quadratic with dips, p = 1") {
    const std::size_t H = 2048;
    std::vector<double> b(H + 1);
    for (std::size_t n = 0; n <= H; ++n) {
        double q = double(n) * double(n);
        b[n] = (n % 2 == 0) ? q : q / 2.0;
    }
    auto out = build_majorant(RealSeq(b), 1);
    check_pipeline_contract(RealSeq(b), out);
    CHECK(shape_check(iterate(DiffOp::delta, out.s, 1), 1e-9).concave == Tri::yes);
    CHECK(out.ratio_window >= 0.5 - 1e-3);
    CHECK(!out.h_index_mismatch);
}

TEST_CASE("cubic input, p = 2") {
    const std::size_t H = 1024;
    std::vector<double> b(H + 1);
    for (std::size_t n = 0; n <= H; ++n) b[n] = std::pow(double(n + 1), 3.0);
    auto out = build_majorant(RealSeq(b), 2);
    check_pipeline_contract(RealSeq(b), out);
    CHECK(shape_check(iterate(DiffOp::delta, out.s, 2), 1e-9).concave == Tri::yes);
}

TEST_CASE("negative b(0) replaced by zero") {
    std::vector<double> b(33);
    b[0] = -5.0;
    for (std::size_t n = 1; n <= 32; ++n) b[n] = double(n);
    auto out = build_majorant(RealSeq(b), 0);
    CHECK(out.s[0] == doctest::Approx(0.0));
    for (std::size_t n = 1; n <= 32; ++n) CHECK(out.s[n] >= b[n] - 1e-9);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(build_majorant(RealSeq{1, 2, 3}, 0), std::invalid_argument);
}

TEST_CASE("exact rational pipeline") {
    const std::size_t H = 64;
    std::vector<Rational> b(H + 1);
    for (std::size_t n = 0; n <= H; ++n) {
        Rational q = Rational(int(n)) * Rational(int(n));
        b[n] = (n % 2 == 0) ? q : q / 2;
    }
    auto out = build_majorant(RatSeq(b), 1);
    for (std::size_t n = 0; n <= H; ++n) CHECK(out.s[n] >= b[n]);
    CHECK(iterate(DiffOp::delta, out.s, 1).values() == out.c.values());
    CHECK(shape_check(out.c).concave == Tri::yes);
}

TEST_CASE("h_index mismatch warning") {
    // linear growth but p = 2 claims index 3
    std::vector<double> b(1025);
    for (std::size_t n = 0; n <= 1024; ++n) b[n] = double(n + 1);
    auto out = build_majorant(RealSeq(b), 2);
    CHECK(out.h_index_mismatch);
}

TEST_CASE("remark 5.2: h_index of built s equals p + 1") {
    const std::size_t H = 4096;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.3, 1.0);
    for (std::size_t p : {0u, 1u, 2u}) {
        std::vector<double> b(H + 1);
        for (std::size_t n = 0; n <= H; ++n)
            b[n] = std::pow(double(n + 1), double(p + 1)) * u(rng);
        auto out = build_majorant(RealSeq(b), p);
        auto est = h_index(out.s, p + 2);
        REQUIRE(est.value.has_value());
        CHECK(*est.value == p + 1);
    }
}

TEST_CASE("theorem 4.3 cross-check on the built majorant") {
    const std::size_t H = 512;
    std::vector<double> b(H + 1);
    for (std::size_t n = 0; n <= H; ++n)
        b[n] = double(n + 1) * double(n + 1) * (1.5 + std::cos(double(n)));
    auto out = build_majorant(RealSeq(b), 1);
    const std::size_t p = 1;
    // The upper half of the sandwich needs c nondecreasing; the hull of an
    // oscillating input may dip after its last peak, so cap at the peak.
    std::size_t cap = H;
    for (std::size_t n = 0; n < H; ++n)
        if (out.c[n + 1] < out.c[n]) {
            cap = n;
            break;
        }
    for (std::size_t n = 0; n <= H; ++n) {
        double binom = binomial(n + p, p).convert_to<double>();
        double lo = binom * (out.c[n] / double(p + 1) + double(p) / double(p + 1) * out.c[0]);
        CHECK(out.s[n] >= lo - 1e-9 * (1.0 + std::abs(lo)));
        if (n <= cap) CHECK(out.s[n] <= binom * out.c[n] * (1.0 + 1e-9));
    }
}

TEST_CASE("theorem 4.3 sandwich, exact rational, random concave") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> num(0, 40), den(1, 8);
    for (int rep = 0; rep < 25; ++rep) {
        // concave nondecreasing from nonincreasing nonnegative increments
        const std::size_t H = 96;
        std::vector<Rational> inc(H), a(H + 1);
        Rational cur(num(rng) + 40, den(rng));
        for (auto& x : inc) {
            cur = cur * Rational(9, 10);
            x = cur;
        }
        a[0] = Rational(num(rng), den(rng));
        for (std::size_t n = 1; n <= H; ++n) a[n] = a[n - 1] + inc[n - 1];
        for (std::size_t p : {0u, 1u, 2u, 3u}) {
            auto sp = iterate(DiffOp::sigma, a, p);
            for (std::size_t n = 0; n <= H; ++n) {
                Rational binom(binomial(n + p, p));
                Rational lo = binom * a[n] / int(p + 1) +
                              Rational(int(p), int(p + 1)) * binom * a[0];
                CHECK(sp[n] >= lo);
                CHECK(sp[n] <= binom * a[n]);
            }
        }
    }
}

TEST_CASE("verify_thm47 on known-good weights") {
    // The summability tail share of A_alpha decays only like N^{-1/2}, so the
    // 1e-3 criterion needs a horizon of this order to clear with margin.
    const std::size_t N = 65536;
    auto r1 = verify_thm47(cesaro_numbers(0.5, N).values, 0);
    CHECK(r1.all_pass());

    std::vector<double> lg(10001);
    for (std::size_t n = 0; n <= 10000; ++n) lg[n] = std::log(double(n) + 2.0);
    auto r2 = verify_thm47(RealSeq(lg), 0);
    CHECK(r2.all_pass());

    auto s25 = cesaro_numbers(2.5, N).values;
    auto r3 = verify_thm47(s25, 2);
    CHECK(r3.all_pass());
    // remark 4.8: Delta^j s stays admissible for j = 1, 2.  Nested float
    // differencing of s drowns the tail in rounding noise, so use the clean
    // recurrence for A_{2.5-j} (equal to Delta^j s as an exact identity) ...
    auto d1 = iterate(DiffOp::delta, s25.values(), 1);
    auto a15 = cesaro_numbers(1.5, N).values;
    for (std::size_t n = 0; n <= 64; ++n)
        CHECK(d1[n] == doctest::Approx(a15[n]).epsilon(1e-9));
    for (std::size_t j : {1u, 2u}) {
        auto dj = cesaro_numbers(2.5 - double(j), N).values;
        auto shape = shape_check(dj, 1e-9);
        CHECK(shape.strictly_increasing);
        // Delta^2 A_{alpha-j} = A_{alpha-j-2} keeps one sign: positive for
        // j = 1 (convex A_1.5), negative for j = 2 (concave A_0.5).
        CHECK((j == 1 ? shape.convex : shape.concave) == Tri::yes);
        auto rj = verify_thm47(dj, 2 - j);
        CHECK(rj.all_pass());
    }
}

TEST_CASE("verify_thm47 rejects a bounded weight") {
    const std::size_t N = 2048;
    std::vector<double> s(N + 1);
    for (std::size_t n = 0; n <= N; ++n) s[n] = 2.0 - 1.0 / double(n + 1);
    auto r = verify_thm47(RealSeq(s), 1);
    CHECK(!r.growth.pass);  // s/n^1 decays
    CHECK(!r.all_pass());
}

TEST_CASE("remark 5.6: summable first differences force boundedness") {
    // If Delta^1 b were absolutely summable, b would be bounded; an unbounded
    // corpus input must therefore need q >= 2.
    // the q = 2 tail share decays like N^{-1/2}; 2^16 clears 1e-3 with margin
    const std::size_t N = 65536;
    std::vector<double> b(N + 1);
    for (std::size_t n = 0; n <= N; ++n) b[n] = std::sqrt(double(n + 1));
    auto est = h_index(RealSeq(b), 3);
    REQUIRE(est.value.has_value());
    CHECK(*est.value == 1);  // unbounded
    auto d1 = iterate(DiffOp::delta, b, 1);
    double total = 0.0, tail = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        total += std::abs(d1[n]);
        if (n > 3 * N / 4) tail += std::abs(d1[n]);
    }
    CHECK(tail / total > 1e-3);  // q = 1 must never certify as summable
    auto d2 = iterate(DiffOp::delta, b, 2);
    total = tail = 0.0;
    for (std::size_t n = 2; n <= N; ++n) {
        total += std::abs(d2[n]);
        if (n > 3 * N / 4) tail += std::abs(d2[n]);
    }
    CHECK(tail / total < 1e-3);  // q = 2 is fine
}
