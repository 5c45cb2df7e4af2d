#pragma once

#include <vector>

#include "binform/qpoly.hpp"
#include "binform/rational.hpp"

namespace binform {

/// A nonzero pair (alpha, beta) standing for the linear form alpha*x + beta*y.
struct LinearForm {
    Rat alpha;
    Rat beta;
};

/// Rational 2x2 coordinate-change matrix (column action on (x, y)).
struct Mat2 {
    Rat m11, m12, m21, m22;
    Rat det() const { return m11 * m22 - m12 * m21; }
    static Mat2 identity() { return {1, 0, 0, 1}; }
    Mat2 operator*(const Mat2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
};

struct Dehomogenized {
    QPoly p;              ///< f(x, 1), exact
    unsigned degree_drop; ///< multiplicity of the projective root (1:0)
};

/// Homogeneous polynomial of fixed degree n in x, y with exact rational
/// coefficients, stored on the monomial basis
///   f = sum_{i=0}^{n} c_i x^{n-i} y^i.
/// The all-zero coefficient vector is representable (the "zero form") but
/// every analytic operation rejects it. Values are immutable; all
/// operations are pure and safe to share across threads.
class BinaryForm {
public:
    BinaryForm(unsigned degree, std::vector<Rat> coeffs);
    static BinaryForm zero(unsigned degree);
    /// (alpha*x + beta*y)^n, expanded exactly.
    static BinaryForm linear_power(const LinearForm& l, unsigned n);
    /// Inverse of dehomogenize on the x-chart: sum_j p_j x^j y^{n-j}.
    static BinaryForm homogenize(const QPoly& p, unsigned degree);

    unsigned degree() const { return degree_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    /// c_i, the coefficient of x^{n-i} y^i.
    const Rat& coeff(unsigned i) const { return c_.at(i); }
    /// Binomial-scaled view a_i = c_i / C(n, i) (the paperless "apolar"
    /// normalization used by catalecticants and the Hessian-at-(1,0) rules).
    Rat binomial_coeff(unsigned i) const;

    bool is_zero() const;
    bool operator==(const BinaryForm& o) const {
        return degree_ == o.degree_ && c_ == o.c_;
    }

    Rat evaluate(const Rat& x, const Rat& y) const;

    BinaryForm partial_x() const;
    BinaryForm partial_y() const;
    /// alpha * f_x + beta * f_y; degree drops by one.
    BinaryForm directional_derivative(const LinearForm& d) const;
    /// Substitute x -> m11 x + m12 y, y -> m21 x + m22 y (M invertible).
    BinaryForm change_coordinates(const Mat2& m) const;
    Dehomogenized dehomogenize() const;
    /// f_xx f_yy - f_xy^2, a form of degree 2n-4 (requires n >= 2).
    BinaryForm hessian() const;

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;  // degree adds
    BinaryForm scaled(const Rat& s) const;

private:
    unsigned degree_;
    std::vector<Rat> c_;
};

}  // namespace binform
