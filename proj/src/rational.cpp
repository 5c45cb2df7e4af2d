#include "binform/rational.hpp"

#include <cmath>

#include "binform/errors.hpp"

namespace binform {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int falling_factorial(unsigned long a, unsigned long b) {
    Int r = 1;
    for (unsigned long i = 0; i < b; ++i) r *= Int(a - i);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    // mpq accepts "p/q" directly but tolerates whitespace and bases we
    // do not want; validate the shape first.
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/') {
            if (slash || !digits) throw InputError("malformed rational literal: " + s);
            slash = true;
            digits = false;
        } else if (s[j] >= '0' && s[j] <= '9') {
            digits = true;
        } else {
            throw InputError("malformed rational literal: " + s);
        }
    }
    if (!digits) throw InputError("malformed rational literal: " + s);
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw InputError("malformed rational literal: " + s);
    if (q.get_den() == 0) throw InputError("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

Rat dyadic_from_double(double x, unsigned bits) {
    if (!std::isfinite(x)) throw InputError("non-finite coefficient sample");
    Rat exact(x);  // doubles are binary rationals, so this is lossless
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
    Rat scaled = exact * Rat(scale) + Rat(1, 2);
    Int floor_val;
    mpz_fdiv_q(floor_val.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    Rat snapped(floor_val, scale);
    snapped.canonicalize();
    return snapped;
}

}  // namespace binform
