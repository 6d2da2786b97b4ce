#include "kakeya/apolarity.hpp"

#include <cmath>

#include "kakeya/binomial.hpp"
#include "kakeya/error.hpp"

namespace kakeya {

ApolarityReport apolar_operator(const Poly& a, const Poly& b, int n, double tol) {
    if (n < 0) throw error(errc::invalid_input, "apolar_operator index must be nonnegative");
    if (!(tol > 0.0)) throw error(errc::invalid_input, "tolerance must be positive");
    if (a.degree().value_or(0) > n || b.degree().value_or(0) > n)
        throw error(errc::invalid_input,
                    "apolar_operator index n must be at least both degrees");
    Cplx value(0.0, 0.0);
    double scale = 0.0;
    double sign = 1.0;
    for (int j = 0; j <= n; ++j) {
        const Cplx term = a.coeff(j) * b.coeff(n - j) / binomial(n, j);
        value += sign * term;
        scale += std::abs(term);
        sign = -sign;
    }
    ApolarityReport rep;
    rep.value = value;
    rep.scale = scale;
    rep.relative_residual = scale > 0.0 ? std::abs(value) / scale : 0.0;
    rep.apolar = rep.relative_residual <= tol;
    rep.tol = tol;
    rep.index = n;
    return rep;
}

bool is_weakly_apolar(const Poly& a, const Poly& b, double tol) {
    if (b.is_zero()) return true;  // every term of the form vanishes
    if (a.is_zero() || *b.degree() > *a.degree())
        throw error(errc::invalid_input, "is_weakly_apolar requires degree(b) <= degree(a)");
    return apolar_operator(a, b, *a.degree(), tol).apolar;
}

double derivative_identity_residual(const Poly& a, const Poly& b) {
    if (b.is_zero()) return 0.0;  // both sides are identically zero
    if (a.is_zero() || *b.degree() > *a.degree())
        throw error(errc::invalid_input,
                    "derivative_identity_residual requires degree(b) <= degree(a)");
    const int n = *a.degree();
    const int m = *b.degree();
    const ApolarityReport lhs = apolar_operator(a, b, n);
    const ApolarityReport rhs = apolar_operator(a.derivative(n - m), b, m);
    double falling = 1.0;  // n (n-1) ... (m+1); empty product when m == n
    for (int j = m + 1; j <= n; ++j) falling *= static_cast<double>(j);
    const double f = ((n - m) % 2 == 0 ? 1.0 : -1.0) / falling;
    const double scale = std::max(lhs.scale, std::abs(f) * rhs.scale);
    if (scale == 0.0) return 0.0;
    return std::abs(lhs.value - f * rhs.value) / scale;
}

}  // namespace kakeya
