#pragma once

#include "kakeya/poly.hpp"

namespace kakeya {

inline constexpr double kApolarityDefaultTol = 1e-9;

/// Evaluation of the apolarity form of two polynomials at binomial index n:
///
///   value = sum_{j=0..n} (-1)^j a_j b_{n-j} / C(n,j)
///
/// scale is the same sum with absolute values (no cancellation), so
/// relative_residual = |value| / scale measures how completely the signed
/// terms cancel; apolar holds when it is within tol.
struct ApolarityReport {
    Cplx value{0.0, 0.0};
    double scale = 0.0;
    double relative_residual = 0.0;
    bool apolar = false;
    double tol = kApolarityDefaultTol;
    int index = 0;  // the binomial index n the form was evaluated at
};

/// The index n is an explicit parameter, never inferred: weak apolarity
/// pairs a degree-n polynomial with a lower-degree one, padding the missing
/// high coefficients with zeros. Requires degree(a) <= n and degree(b) <= n.
ApolarityReport apolar_operator(const Poly& a, const Poly& b, int n,
                                double tol = kApolarityDefaultTol);

/// apolar_operator(a, b, degree(a)) within tol. Requires
/// degree(b) <= degree(a); the zero polynomial is weakly apolar to anything.
bool is_weakly_apolar(const Poly& a, const Poly& b, double tol = kApolarityDefaultTol);

/// Relative discrepancy between the apolarity form of (a, b) at index
/// n = degree(a) and its reduction through the (n-m)-th derivative of a at
/// index m = degree(b):
///
///   A_n(a, b) = (-1)^{n-m} / (n (n-1) ... (m+1)) * A_m(a^{(n-m)}, b)
///
/// The identity is exact algebra; the returned residual is rounding noise,
/// normalized against the larger cancellation-free scale of the two sides.
double derivative_identity_residual(const Poly& a, const Poly& b);

}  // namespace kakeya
