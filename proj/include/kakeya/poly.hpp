#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace kakeya {

using Cplx = std::complex<double>;

bool is_finite(Cplx z);
void require_finite(Cplx z, const char* what);

/// Closed disc |z - center| <= radius.
struct Disc {
    Cplx center{0.0, 0.0};
    double radius = 1.0;

    bool contains(Cplx z, double rel_slack = 0.0) const;
};

/// Dense complex polynomial, coefficients stored in ascending powers
/// (index == exponent).
///
/// Normal form: the stored leading coefficient is nonzero, except for the
/// zero polynomial, which is canonically the single entry [0] and reports
/// no degree. Coefficients must be finite; NaN or Inf input raises
/// errc::invalid_input.
class Poly {
  public:
    Poly();  // the zero polynomial
    explicit Poly(std::vector<Cplx> coeffs);

    static Poly constant(Cplx c);

    /// Monic polynomial with exactly the given roots (with multiplicity),
    /// expanded by iterated multiplication by (z - r) in input order.
    static Poly from_roots(std::span<const Cplx> roots);

    const std::vector<Cplx>& coeffs() const { return coeffs_; }
    /// Coefficient of z^i; zero beyond the stored degree.
    Cplx coeff(int i) const;
    std::optional<int> degree() const;
    bool is_zero() const;
    Cplx leading() const;

    /// Horner evaluation.
    Cplx operator()(Cplx z) const;

    /// Cancellation-free magnitude |c_0| + |c_1||z| + ...; the natural scale
    /// for relative residuals of evaluations.
    double eval_magnitude(double abs_z) const;
    double coeff_one_norm() const;

    /// order-fold formal derivative; the zero polynomial once order exceeds
    /// the degree.
    Poly derivative(int order = 1) const;

    /// p(center + radius*w) as a polynomial in w. The degree is preserved;
    /// z0 is a root of p iff (z0 - center)/radius is a root of the result.
    Poly affine_substitute(Cplx center, double radius) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(Cplx s, const Poly& p);

  private:
    void normalize();

    std::vector<Cplx> coeffs_;
};

}  // namespace kakeya
