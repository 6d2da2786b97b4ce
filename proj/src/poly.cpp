#include "kakeya/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "kakeya/error.hpp"

namespace kakeya {

bool is_finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Cplx z, const char* what) {
    if (!is_finite(z))
        throw error(errc::invalid_input, std::string(what) + " must have finite components");
}

bool Disc::contains(Cplx z, double rel_slack) const {
    return std::abs(z - center) <= radius * (1.0 + rel_slack);
}

Poly::Poly() : coeffs_{Cplx(0.0, 0.0)} {}

Poly::Poly(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
    for (Cplx c : coeffs_) require_finite(c, "coefficient");
    normalize();
}

void Poly::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == Cplx(0.0, 0.0)) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Cplx(0.0, 0.0));
}

Poly Poly::constant(Cplx c) { return Poly(std::vector<Cplx>{c}); }

Poly Poly::from_roots(std::span<const Cplx> roots) {
    if (roots.empty()) throw error(errc::invalid_input, "from_roots requires at least one root");
    std::vector<Cplx> c{Cplx(1.0, 0.0)};
    for (Cplx r : roots) {
        require_finite(r, "root");
        c.push_back(Cplx(0.0, 0.0));
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return Poly(std::move(c));
}

Cplx Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Cplx(0.0, 0.0);
    return coeffs_[static_cast<std::size_t>(i)];
}

std::optional<int> Poly::degree() const {
    if (is_zero()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

bool Poly::is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Cplx(0.0, 0.0); }

Cplx Poly::leading() const { return coeffs_.back(); }

Cplx Poly::operator()(Cplx z) const {
    require_finite(z, "evaluation point");
    Cplx acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double Poly::eval_magnitude(double abs_z) const {
    double acc = std::abs(coeffs_.back());
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
        acc = acc * abs_z + std::abs(*it);
    return acc;
}

double Poly::coeff_one_norm() const {
    double s = 0.0;
    for (Cplx c : coeffs_) s += std::abs(c);
    return s;
}

Poly Poly::derivative(int order) const {
    if (order < 0) throw error(errc::invalid_input, "derivative order must be nonnegative");
    std::vector<Cplx> c = coeffs_;
    for (int pass = 0; pass < order; ++pass) {
        if (c.size() == 1) {
            c[0] = Cplx(0.0, 0.0);
            break;
        }
        std::vector<Cplx> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
        c = std::move(d);
    }
    return Poly(std::move(c));
}

Poly Poly::affine_substitute(Cplx center, double radius) const {
    require_finite(center, "center");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw error(errc::invalid_input, "affine_substitute requires a positive finite radius");
    // Taylor shift by repeated synthetic division, then absorb the radius
    // into each power. The shift cancels heavily when the center is far from
    // the coefficient scale, so it runs on extended-precision accumulators.
    using CL = std::complex<long double>;
    const std::size_t n = coeffs_.size();
    const CL cl(center.real(), center.imag());
    std::vector<CL> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = CL(coeffs_[i].real(), coeffs_[i].imag());
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t i = n - 2;; --i) {
            c[i] += cl * c[i + 1];
            if (i == j) break;
        }
    }
    long double rp = 1.0L;
    std::vector<Cplx> out(n);
    out[0] = Cplx(static_cast<double>(c[0].real()), static_cast<double>(c[0].imag()));
    for (std::size_t i = 1; i < n; ++i) {
        rp *= radius;
        const CL v = c[i] * rp;
        out[i] = Cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
    return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator*(Cplx s, const Poly& p) {
    require_finite(s, "scalar");
    std::vector<Cplx> c = p.coeffs_;
    for (Cplx& x : c) x *= s;
    return Poly(std::move(c));
}

}  // namespace kakeya
