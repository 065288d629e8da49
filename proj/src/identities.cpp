#include "equifreq/identities.hpp"

#include "equifreq/errors.hpp"
#include "equifreq/gaussian.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace equifreq {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

std::array<BigInt, 2> sorted_side(BigInt x, BigInt y) {
    x = abs(x);
    y = abs(y);
    if (x < y) std::swap(x, y);
    return {std::move(x), std::move(y)};
}

}  // namespace

bool operator==(const BFParams& a, const BFParams& b) {
    return a.r == b.r && a.s == b.s && a.u == b.u && a.v == b.v;
}

SquareIdentity::SquareIdentity(BigInt a, BigInt b, BigInt c, BigInt d)
    : side1_(sorted_side(std::move(a), std::move(b))),
      side2_(sorted_side(std::move(c), std::move(d))) {
    if (side1_[0] * side1_[0] + side1_[1] * side1_[1] !=
        side2_[0] * side2_[0] + side2_[1] * side2_[1]) {
        throw NotAnIdentity("sums of squares differ: {" + side1_[0].str() + "," +
                            side1_[1].str() + "} vs {" + side2_[0].str() + "," +
                            side2_[1].str() + "}");
    }
    if (side1_ < side2_) std::swap(side1_, side2_);
}

BigInt SquareIdentity::norm() const {
    return side1_[0] * side1_[0] + side1_[1] * side1_[1];
}

std::string SquareIdentity::str() const {
    return side1_[0].str() + "^2+" + side1_[1].str() + "^2=" + side2_[0].str() +
           "^2+" + side2_[1].str() + "^2=" + norm().str();
}

bool operator==(const SquareIdentity& a, const SquareIdentity& b) {
    return a.side1() == b.side1() && a.side2() == b.side2();
}

bool operator!=(const SquareIdentity& a, const SquareIdentity& b) { return !(a == b); }

bool operator<(const SquareIdentity& a, const SquareIdentity& b) {
    BigInt na = a.norm(), nb = b.norm();
    return std::tie(na, a.side1(), a.side2()) < std::tie(nb, b.side1(), b.side2());
}

std::ostream& operator<<(std::ostream& os, const SquareIdentity& id) { return os << id.str(); }

SquareIdentity bf_expand(const BFParams& params) {
    const BigInt &r = params.r, &s = params.s, &u = params.u, &v = params.v;
    // Components of (r+is)(u+iv) and (r+is)(u-iv).
    BigInt a = r * u - s * v;
    BigInt b = r * v + s * u;
    BigInt c = r * u + s * v;
    BigInt d = s * u - r * v;
    SquareIdentity id(std::move(a), std::move(b), std::move(c), std::move(d));
    internal_check(id.norm() == (r * r + s * s) * (u * u + v * v),
                   "bf_expand norm is the product of the factor norms");
    return id;
}

SquareIdentity primitive_normalize(const SquareIdentity& id) {
    if (id.all_zero()) throw AllZero("cannot normalize the all-zero identity");
    BigInt g = gcd(gcd(id.side1()[0], id.side1()[1]), gcd(id.side2()[0], id.side2()[1]));
    return {id.side1()[0] / g, id.side1()[1] / g, id.side2()[0] / g, id.side2()[1] / g};
}

BFParams recover_params(const SquareIdentity& id) {
    if (id.norm() == 0) throw DegenerateIdentity("cannot recover parameters of the zero identity");
    const GaussianInt z(id.side1()[0], id.side1()[1]);
    const GaussianInt w(id.side2()[0], id.side2()[1]);

    const GaussianInt delta = equifreq::gcd(z, w);
    auto [z0, zr] = euclid_divmod(z, delta);
    auto [w0, wr] = euclid_divmod(w, delta);
    internal_check(zr.is_zero() && wr.is_zero(), "gcd divides both sides");

    // Unique factorization forces the coprime cofactors of equal norm to be
    // conjugate up to a unit; that is what makes z0 a genuine second factor.
    bool conjugate_up_to_unit = false;
    const GaussianInt z0c = z0.conj();
    for (Unit e : Unit::all()) {
        if (w0 == e.apply(z0c)) {
            conjugate_up_to_unit = true;
            break;
        }
    }
    internal_check(conjugate_up_to_unit, "cofactors are conjugate up to a unit");

    BFParams params{delta.re(), delta.im(), z0.re(), z0.im()};
    internal_check(bf_expand(params) == id, "recovered parameters expand back to the identity");
    return params;
}

std::vector<SquareIdentity> enumerate_identities(const BigInt& max_entry) {
    if (max_entry < 1) throw InvalidParams("enumerate_identities requires max_entry >= 1");

    // Bucket unordered pairs {a, b} by a^2 + b^2; every pair of distinct
    // representations of the same value is one nontrivial identity.
    std::map<BigInt, std::vector<std::array<BigInt, 2>>> buckets;
    for (BigInt a = 1; a <= max_entry; ++a) {
        for (BigInt b = a; b <= max_entry; ++b) {
            buckets[a * a + b * b].push_back({b, a});
        }
    }

    std::vector<SquareIdentity> out;
    for (const auto& [value, reps] : buckets) {
        for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                out.emplace_back(reps[i][0], reps[i][1], reps[j][0], reps[j][1]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace equifreq
