#pragma once

#include <optional>

#include "kakeya/poly.hpp"

namespace kakeya {

/// Root-inclusion radii for one polynomial. fujiwara_radius always bounds
/// every zero; subleading_term_radius is the single term 2|a_{d-1}/a_d|,
/// recorded separately because it may fall short of the full max. The
/// kakeya fields are only present when an (n, k) context is supplied.
struct BoundReport {
    double fujiwara_radius = 0.0;
    double subleading_term_radius = 0.0;
    int argmax_index = 0;  // coefficient index attaining the max; -1 if none
    std::optional<double> kakeya_radius;
    std::optional<int> n;
    std::optional<int> k;
};

/// M = 2 max_i |a_i / a_d|^(1/(d-i)) over i < d = degree(p); every zero of p
/// satisfies |z| <= M. Low-order zero coefficients are roots at the origin
/// and are excluded from the max.
BoundReport fujiwara_bound(const Poly& p);

/// Same, with the (n, k) context recorded and kakeya_radius filled in.
BoundReport fujiwara_bound(const Poly& p, int n, int k);

/// 2 (n - k + 1) / ln 2: the certified radius for a zero of the (k-1)-th
/// derivative when k zeros lie in the closed unit disc.
double kakeya_radius(int n, int k);

/// Scale the certified radius out of the normalized frame: a frame disc of
/// radius r yields a bound disc of radius r * kakeya_radius(n, k) around the
/// same center.
Disc bound_disc_for_general_frame(const Disc& d, int n, int k);

}  // namespace kakeya
