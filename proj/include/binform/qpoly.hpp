#pragma once

#include <utility>
#include <vector>

#include "binform/rational.hpp"

namespace binform {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending order of power. The zero polynomial is the empty vector and
/// reports degree -1. Trailing zero coefficients are trimmed on
/// construction, so degree() always reflects the true leading term.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> ascending);
    static QPoly constant(const Rat& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const Rat& leading() const;

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;
    int sign_at(const Rat& x) const;

    QPoly derivative() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const Rat& s) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    /// Quotient/remainder over Q; divisor must be nonzero.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

    /// The positive-scalar multiple with coprime integer coefficients.
    /// Scaling factor is positive, so every sign evaluation is preserved.
    QPoly primitive_scaled() const;

    /// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
    static QPoly gcd(const QPoly& a, const QPoly& b);

    /// p / gcd(p, p'): same distinct roots, all simple.
    QPoly squarefree_part() const;

private:
    std::vector<Rat> c_;
    void trim();
};

}  // namespace binform
