#include "binform/qpoly.hpp"

#include <algorithm>

#include "binform/errors.hpp"

namespace binform {

QPoly::QPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& QPoly::leading() const {
    if (is_zero()) throw InputError("zero polynomial has no leading coefficient");
    return c_.back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double QPoly::eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

int QPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(d));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    int db = b.degree();
    int dq = static_cast<int>(rem.size()) - 1 - db;
    if (dq < 0) return {QPoly(), a};
    std::vector<Rat> quot(static_cast<std::size_t>(dq) + 1, Rat(0));
    for (int k = dq; k >= 0; --k) {
        std::size_t top = static_cast<std::size_t>(k + db);
        if (top >= rem.size() || sgn(rem[top]) == 0) continue;
        Rat q = rem[top] / b.leading();
        quot[static_cast<std::size_t>(k)] = q;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * b.c_[static_cast<std::size_t>(i)];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::primitive_scaled() const {
    if (is_zero()) return *this;
    Int den_lcm = 1;
    for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int num_gcd = 0;
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Rat v = c_[i] * Rat(den_lcm);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        r[i] = v;
    }
    for (auto& v : r) {
        v /= Rat(num_gcd);
        v.canonicalize();
    }
    return QPoly(std::move(r));
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a.primitive_scaled();
    QPoly y = b.primitive_scaled();
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second.primitive_scaled();
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.is_zero() && sgn(x.leading()) < 0) x = -x;
    return x;
}

QPoly QPoly::squarefree_part() const {
    if (is_zero()) throw InputError("zero polynomial has no square-free part");
    if (degree() == 0) return *this;
    QPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    auto [q, r] = divmod(*this, g);
    if (!r.is_zero()) throw InternalError("square-free reduction left a remainder");
    return q;
}

}  // namespace binform
