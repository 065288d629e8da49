#include "equifreq/gaussian.hpp"

#include "equifreq/errors.hpp"

#include <utility>

namespace equifreq {

std::string GaussianInt::str() const {
    if (is_zero()) return "0";
    std::string s = re_.str();
    s += (im_ < 0) ? '-' : '+';
    s += BigInt(abs(im_)).str();
    s += 'i';
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& g) { return os << g.str(); }

GaussianInt Unit::value() const { return apply(GaussianInt(1, 0)); }

GaussianInt Unit::apply(const GaussianInt& g) const {
    switch (k_) {
        case 0: return g;
        case 1: return {-g.im(), g.re()};
        case 2: return {-g.re(), -g.im()};
        default: return {g.im(), -g.re()};
    }
}

GaussianDivMod euclid_divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw DivisionByZero("gaussian division by zero");
    // a/b = a * conj(b) / norm(b); round each component to the nearest
    // integer, halves toward +infinity. The fractional parts then have
    // absolute value <= 1/2, so norm(r) = norm(b) * |a/b - q|^2 <= norm(b)/2.
    const BigInt n = b.norm();
    const GaussianInt t = a * b.conj();
    GaussianInt q(round_half_up_div(t.re(), n), round_half_up_div(t.im(), n));
    GaussianInt r = a - q * b;
    internal_check(2 * r.norm() <= n, "euclidean remainder bound");
    return {std::move(q), std::move(r)};
}

GaussianInt gcd(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero() && b.is_zero()) throw UndefinedGcd("gcd(0, 0) is undefined");
    GaussianInt x = a;
    GaussianInt y = b;
    while (!y.is_zero()) {
        GaussianInt r = euclid_divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical_associate(x).canonical;
}

AssociateForm canonical_associate(const GaussianInt& g) {
    if (g.is_zero()) return {g, Unit::one()};
    // Exactly one of the four rotations i^k * g has re > 0 and im >= 0.
    GaussianInt c = g;
    Unit u = Unit::one();
    while (!(c.re() > 0 && c.im() >= 0)) {
        c = Unit::i().apply(c);
        u = Unit::i() * u;
    }
    return {std::move(c), u};
}

}  // namespace equifreq
