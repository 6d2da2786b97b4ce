#include "kakeya/bounds.hpp"

#include <cmath>
#include <numbers>

#include "kakeya/error.hpp"

namespace kakeya {

BoundReport fujiwara_bound(const Poly& p) {
    const auto deg = p.degree();
    if (!deg || *deg < 1)
        throw error(errc::invalid_input, "inclusion radius needs degree >= 1");
    const int n = *deg;
    const auto& c = p.coeffs();
    const double lead = std::abs(c[n]);

    BoundReport rep;
    rep.subleading_term_radius = 2.0 * std::abs(c[n - 1]) / lead;

    // Low-order zero coefficients are roots at the origin; they satisfy any
    // origin-centered disc, so the max runs over the cofactor only.
    int first = 0;
    while (c[first] == Cplx(0.0, 0.0)) ++first;
    if (first == n) {  // a_n z^n: every root at the origin
        rep.fujiwara_radius = 0.0;
        rep.argmax_index = -1;
        return rep;
    }

    double best = 0.0;
    int arg = first;
    for (int i = first; i < n; ++i) {
        const double mag = std::abs(c[i]) / lead;
        if (mag == 0.0) continue;
        const double term = std::pow(mag, 1.0 / static_cast<double>(n - i));
        if (term > best) {
            best = term;
            arg = i;
        }
    }
    rep.fujiwara_radius = 2.0 * best;
    rep.argmax_index = arg;
    return rep;
}

BoundReport fujiwara_bound(const Poly& p, int n, int k) {
    BoundReport rep = fujiwara_bound(p);
    rep.n = n;
    rep.k = k;
    rep.kakeya_radius = kakeya_radius(n, k);
    return rep;
}

double kakeya_radius(int n, int k) {
    if (k < 1 || k > n)
        throw error(errc::invalid_input, "kakeya_radius requires 1 <= k <= n");
    return 2.0 * static_cast<double>(n - k + 1) / std::numbers::ln2;
}

Disc bound_disc_for_general_frame(const Disc& d, int n, int k) {
    if (!(d.radius > 0.0))
        throw error(errc::invalid_input, "frame disc must have positive radius");
    return Disc{d.center, d.radius * kakeya_radius(n, k)};
}

}  // namespace kakeya
