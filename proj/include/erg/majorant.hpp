#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "erg/seq.hpp"

namespace erg {

// ---------------------------------------------------------------------------
// Least concave majorant of a finite sequence prefix.
//
// With no tail slope the result is the exact LCM of the finite restriction,
// which coincides with the upper convex hull of {(n, b(n))} evaluated at
// integer abscissae.  A caller who knows a certified bound on the chord slopes
// contributed by the (unmaterialized) tail passes it as tail_slope; the
// recursion then floors every increment at that slope, reproducing the
// infinite-sequence LCM for sequences whose tail raises the sup.
// ---------------------------------------------------------------------------

template <class T>
struct MajorantResult {
    Seq<T> c;                            // the majorant prefix
    std::vector<std::size_t> contacts;   // indices with c(n) = b(n)
    std::optional<std::size_t> N_sup;    // sup of the contact-slope set within the horizon
    double ell = 0.0;                    // tail-window estimate of limsup b(n)/n
};

namespace detail {

template <class T>
bool close(const T& x, const T& y, double rel_tol) {
    if constexpr (std::is_same_v<T, Rational>) {
        (void)rel_tol;
        return x == y;
    } else {
        return std::abs(x - y) <= rel_tol * (1.0 + std::max(std::abs(x), std::abs(y)));
    }
}

constexpr double kContactRelTol = 1e-9;

template <class T>
std::vector<std::size_t> equality_contacts(const Seq<T>& b, const std::vector<T>& c) {
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n <= b.horizon(); ++n)
        if (close(c[n], b[n], kContactRelTol)) idx.push_back(n);
    return idx;
}

template <class T>
double tail_ratio_ell(const Seq<T>& b) {
    // limsup b(n)/n estimated as the max over the tail window [H/2, H].
    const std::size_t H = b.horizon();
    double ell = -std::numeric_limits<double>::infinity();
    for (std::size_t n = std::max<std::size_t>(1, H / 2); n <= H; ++n)
        ell = std::max(ell, as_double(b[n]) / double(n));
    return ell;
}

}  // namespace detail

/// The recursion c(0) = b(0), c(n+1) = c(n) + sup_{n<k<=H} (b(k)-c(n))/(k-n),
/// with the sup floored at tail_slope when one is supplied.
template <class T>
MajorantResult<T> lcm_recursive(const Seq<T>& b, std::optional<T> tail_slope = std::nullopt) {
    const std::size_t H = b.horizon();
    if (H < 1) throw std::invalid_argument("lcm_recursive: horizon 0");
    if constexpr (!std::is_same_v<T, Rational>) {
        if (tail_slope && !std::isfinite(double(*tail_slope)))
            throw std::invalid_argument("lcm_recursive: non-finite tail_slope");
    }
    std::vector<T> c(H + 1);
    c[0] = b[0];
    for (std::size_t n = 0; n < H; ++n) {
        bool have = false;
        T best{};
        for (std::size_t k = n + 1; k <= H; ++k) {
            T slope = (b[k] - c[n]) / T(int(k - n));
            if (!have || slope > best) {
                best = slope;
                have = true;
            }
        }
        if (tail_slope && *tail_slope > best) best = *tail_slope;
        c[n + 1] = c[n] + best;
    }
    MajorantResult<T> r;
    r.c = Seq<T>(std::move(c));
    r.contacts = detail::equality_contacts(b, r.c.values());
    r.N_sup = r.contacts.empty() ? std::nullopt : std::optional(r.contacts.back());
    r.ell = detail::tail_ratio_ell(b);
    return r;
}

/// Independent oracle: monotone-chain upper convex hull of {(n, b(n))},
/// evaluated at integer abscissae.  Same contract as lcm_recursive with
/// tail_slope omitted.
template <class T>
MajorantResult<T> lcm_hull_oracle(const Seq<T>& b) {
    const std::size_t H = b.horizon();
    if (H < 1) throw std::invalid_argument("lcm_hull_oracle: horizon 0");
    // Upper hull, left to right: pop while the new point is on or above the
    // segment through the last two kept vertices (right turns only).
    std::vector<std::size_t> hull;
    for (std::size_t n = 0; n <= H; ++n) {
        while (hull.size() >= 2) {
            std::size_t i = hull[hull.size() - 2], j = hull[hull.size() - 1];
            // cross(v_ij, v_in) >= 0  <=>  j lies on or below chord i..n
            T lhs = (b[j] - b[i]) * T(int(n - i));
            T rhs = (b[n] - b[i]) * T(int(j - i));
            if (lhs <= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(n);
    }
    std::vector<T> c(H + 1);
    for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
        std::size_t i = hull[seg], j = hull[seg + 1];
        for (std::size_t n = i; n <= j; ++n)
            c[n] = b[i] + (b[j] - b[i]) * T(int(n - i)) / T(int(j - i));
    }
    if (hull.size() == 1) c[hull[0]] = b[hull[0]];
    for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) c[hull[seg]] = b[hull[seg]];
    c[hull.back()] = b[hull.back()];
    MajorantResult<T> r;
    r.c = Seq<T>(std::move(c));
    r.contacts = detail::equality_contacts(b, r.c.values());
    r.N_sup = r.contacts.empty() ? std::nullopt : std::optional(r.contacts.back());
    r.ell = detail::tail_ratio_ell(b);
    return r;
}

// ---------------------------------------------------------------------------
// Contact-set structure: the nu_k recursion and the eventually-affine tail.
// ---------------------------------------------------------------------------

struct ContactStructure {
    std::vector<std::size_t> nu;
    bool eventually_affine = false;
    std::optional<double> slope_tail;
};

struct StructuralInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// nu_0 = 0; nu_{k+1} is the minimum n > nu_k whose chord slope from nu_k
/// equals the increment c(nu_k + 1) - c(nu_k).  Must reproduce the equality
/// contact set; a mismatch signals a tolerance failure.
template <class T>
ContactStructure contact_structure(const Seq<T>& b, const MajorantResult<T>& result) {
    const auto& c = result.c;
    const std::size_t H = b.horizon();
    ContactStructure cs;
    cs.nu.push_back(0);
    std::size_t cur = 0;
    while (cur < H) {
        T inc = c[cur + 1] - c[cur];
        std::optional<std::size_t> next;
        for (std::size_t n = cur + 1; n <= H; ++n) {
            T chord = (b[n] - c[cur]) / T(int(n - cur));
            if (detail::close(chord, inc, detail::kContactRelTol)) {
                next = n;
                break;
            }
        }
        if (!next) break;  // the increment is not achieved by any chord: affine tail
        cs.nu.push_back(*next);
        cur = *next;
    }
    if (cs.nu != result.contacts)
        throw StructuralInconsistency("contact_structure: nu recursion disagrees with equality contacts");
    if (cur < H) {
        cs.eventually_affine = true;
        cs.slope_tail = detail::as_double(c[H]) - detail::as_double(c[H - 1]);
    }
    return cs;
}

/// Max of b(n)/c(n) over the tail window [H/2, H].
template <class T>
double limsup_ratio(const Seq<T>& b, const Seq<T>& c) {
    const std::size_t H = b.horizon();
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t n = H / 2; n <= H; ++n) {
        double cn = detail::as_double(c[n]);
        if (!(cn > 0.0)) throw std::invalid_argument("limsup_ratio: non-positive c on window");
        best = std::max(best, detail::as_double(b[n]) / cn);
    }
    return best;
}

}  // namespace erg
