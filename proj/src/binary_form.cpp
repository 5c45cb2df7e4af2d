#include "binform/binary_form.hpp"

#include <algorithm>

#include "binform/errors.hpp"

namespace binform {

BinaryForm::BinaryForm(unsigned degree, std::vector<Rat> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(degree) + 1)
        throw InputError("coefficient count must be degree + 1");
}

BinaryForm BinaryForm::zero(unsigned degree) {
    return BinaryForm(degree, std::vector<Rat>(degree + 1, Rat(0)));
}

BinaryForm BinaryForm::linear_power(const LinearForm& l, unsigned n) {
    if (sgn(l.alpha) == 0 && sgn(l.beta) == 0)
        throw InputError("linear form must be nonzero");
    std::vector<Rat> c(n + 1);
    for (unsigned i = 0; i <= n; ++i)
        c[i] = Rat(binomial(n, i)) * rat_pow(l.alpha, n - i) * rat_pow(l.beta, i);
    return BinaryForm(n, std::move(c));
}

BinaryForm BinaryForm::homogenize(const QPoly& p, unsigned degree) {
    if (p.degree() > static_cast<int>(degree))
        throw InputError("polynomial degree exceeds target form degree");
    std::vector<Rat> c(degree + 1, Rat(0));
    for (int j = 0; j <= p.degree(); ++j)
        c[degree - static_cast<unsigned>(j)] = p[static_cast<std::size_t>(j)];
    return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Rat BinaryForm::binomial_coeff(unsigned i) const {
    return coeff(i) / Rat(binomial(degree_, i));
}

Rat BinaryForm::evaluate(const Rat& x, const Rat& y) const {
    // Horner in x with a running power of y.
    Rat acc = c_[0];
    for (unsigned i = 1; i <= degree_; ++i) acc = acc * x;
    Rat ypow = 1;
    Rat result = acc;
    // Recompute term-wise; degree is small so clarity wins.
    result = 0;
    std::vector<Rat> xp(degree_ + 1), yp(degree_ + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (unsigned k = 1; k <= degree_; ++k) {
        xp[k] = xp[k - 1] * x;
        yp[k] = yp[k - 1] * y;
    }
    for (unsigned i = 0; i <= degree_; ++i) result += c_[i] * xp[degree_ - i] * yp[i];
    return result;
}

BinaryForm BinaryForm::partial_x() const {
    if (degree_ == 0) throw InputError("cannot differentiate a degree-0 form");
    std::vector<Rat> c(degree_);
    for (unsigned i = 0; i + 1 <= degree_; ++i)
        c[i] = c_[i] * Rat(static_cast<long>(degree_ - i));
    return BinaryForm(degree_ - 1, std::move(c));
}

BinaryForm BinaryForm::partial_y() const {
    if (degree_ == 0) throw InputError("cannot differentiate a degree-0 form");
    std::vector<Rat> c(degree_);
    for (unsigned j = 0; j + 1 <= degree_; ++j)
        c[j] = c_[j + 1] * Rat(static_cast<long>(j + 1));
    return BinaryForm(degree_ - 1, std::move(c));
}

BinaryForm BinaryForm::directional_derivative(const LinearForm& d) const {
    if (sgn(d.alpha) == 0 && sgn(d.beta) == 0)
        throw InputError("direction (alpha, beta) must be nonzero");
    return partial_x().scaled(d.alpha) + partial_y().scaled(d.beta);
}

BinaryForm BinaryForm::change_coordinates(const Mat2& m) const {
    if (sgn(m.det()) == 0) throw InputError("coordinate change must be invertible");
    BinaryForm u = BinaryForm(1, {m.m11, m.m12});
    BinaryForm v = BinaryForm(1, {m.m21, m.m22});
    // Powers of the two substituted linear forms, then one convolution per term.
    std::vector<BinaryForm> up{BinaryForm(0, {Rat(1)})}, vp{BinaryForm(0, {Rat(1)})};
    for (unsigned k = 1; k <= degree_; ++k) {
        up.push_back(up.back() * u);
        vp.push_back(vp.back() * v);
    }
    BinaryForm acc = BinaryForm::zero(degree_);
    for (unsigned i = 0; i <= degree_; ++i) {
        if (sgn(c_[i]) == 0) continue;
        acc = acc + (up[degree_ - i] * vp[i]).scaled(c_[i]);
    }
    return acc;
}

Dehomogenized BinaryForm::dehomogenize() const {
    if (is_zero()) throw InputError("cannot dehomogenize the zero form");
    std::vector<Rat> asc(degree_ + 1);
    for (unsigned i = 0; i <= degree_; ++i) asc[degree_ - i] = c_[i];
    QPoly p(std::move(asc));
    unsigned drop = degree_ - static_cast<unsigned>(p.degree());
    return {std::move(p), drop};
}

BinaryForm BinaryForm::hessian() const {
    if (degree_ < 2) throw InputError("hessian requires degree >= 2");
    BinaryForm fx = partial_x();
    BinaryForm fy = partial_y();
    BinaryForm fxx = fx.partial_x();
    BinaryForm fxy = fx.partial_y();
    BinaryForm fyy = fy.partial_y();
    return fxx * fyy - fxy * fxy;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree_ != o.degree_) throw InputError("degree mismatch in form addition");
    std::vector<Rat> c(c_);
    for (unsigned i = 0; i <= degree_; ++i) c[i] += o.c_[i];
    return BinaryForm(degree_, std::move(c));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    return *this + o.scaled(Rat(-1));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    unsigned n = degree_ + o.degree_;
    std::vector<Rat> c(n + 1, Rat(0));
    for (unsigned i = 0; i <= degree_; ++i)
        for (unsigned j = 0; j <= o.degree_; ++j) c[i + j] += c_[i] * o.c_[j];
    return BinaryForm(n, std::move(c));
}

BinaryForm BinaryForm::scaled(const Rat& s) const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= s;
    return BinaryForm(degree_, std::move(c));
}

}  // namespace binform
