#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grassbal/prime_field.hpp"

namespace grassbal {

/// Point (s : t) of the projective line over F_p.
struct LinePoint {
    Residue s = 0;
    Residue t = 1;
};

/// Homogeneous form of degree e in s, t over F_p.
///
/// coeffs()[k] is the coefficient of s^(e-k) t^k. Forms of negative degree are
/// the zero form with no coefficients; the zero form otherwise keeps a formal
/// degree so that sums stay homogeneous.
class BinaryForm {
public:
    BinaryForm(PrimeField field, int degree);
    BinaryForm(PrimeField field, int degree, std::vector<Residue> coeffs);

    /// Monomial c * s^(degree - t_power) t^t_power.
    static BinaryForm monomial(PrimeField field, int degree, int t_power, Residue c = 1);
    static BinaryForm constant(PrimeField field, Residue c);

    const PrimeField& field() const { return field_; }
    int degree() const { return degree_; }
    const std::vector<Residue>& coeffs() const { return coeffs_; }
    Residue coeff(int t_power) const;
    void set_coeff(int t_power, Residue c);

    bool is_zero() const;
    /// Nonzero form of degree zero.
    bool is_unit() const { return degree_ == 0 && !is_zero(); }

    /// Scales so that the leading (highest s-power) nonzero coefficient is 1.
    BinaryForm monic() const;

    BinaryForm& operator+=(const BinaryForm& rhs);
    BinaryForm& operator-=(const BinaryForm& rhs);
    friend BinaryForm operator+(BinaryForm lhs, const BinaryForm& rhs) { return lhs += rhs; }
    friend BinaryForm operator-(BinaryForm lhs, const BinaryForm& rhs) { return lhs -= rhs; }
    friend BinaryForm operator*(const BinaryForm& lhs, const BinaryForm& rhs);
    BinaryForm scaled(Residue c) const;

    BinaryForm derivative_s() const;
    BinaryForm derivative_t() const;
    Residue eval(LinePoint x) const;

    /// Largest k with s^k dividing the form, and likewise for t.
    int s_valuation() const;
    int t_valuation() const;

    std::string str() const;

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    PrimeField field_;
    int degree_;
    std::vector<Residue> coeffs_;
};

/// Exact quotient f / g, or nullopt if g does not divide f.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g);

/// Monic gcd of two forms: monomial content is split off, the rest is
/// dehomogenized at t = 1 and run through univariate Euclid.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

/// Monic gcd of a list of forms (zero form of degree 0 for an empty list).
BinaryForm gcd(std::span<const BinaryForm> forms);

}  // namespace grassbal
