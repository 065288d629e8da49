#include "equifreq/cascades.hpp"

#include "equifreq/errors.hpp"
#include "equifreq/gaussian.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace equifreq {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) { return gcd(gcd(a, b), c); }
BigInt lcm3(const BigInt& a, const BigInt& b, const BigInt& c) { return lcm(lcm(a, b), c); }

}  // namespace

SquareTriple::SquareTriple(BigInt a, BigInt b, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!(a_ >= b_ && b_ >= c_ && c_ >= 1)) {
        throw InvalidTriple("triple requires A >= B >= C >= 1, got " + str());
    }
    if (a_ * a_ + c_ * c_ != 2 * b_ * b_) {
        throw InvalidTriple("A^2 + C^2 = 2 B^2 fails for " + str());
    }
}

bool SquareTriple::primitive() const { return gcd3(a_, b_, c_) == 1; }

std::string SquareTriple::str() const {
    return "A=" + a_.str() + " B=" + b_.str() + " C=" + c_.str();
}

bool operator==(const SquareTriple& a, const SquareTriple& b) {
    return a.a() == b.a() && a.b() == b.b() && a.c() == b.c();
}

bool operator!=(const SquareTriple& a, const SquareTriple& b) { return !(a == b); }

bool operator<(const SquareTriple& a, const SquareTriple& b) {
    return std::tie(a.a(), a.b(), a.c()) < std::tie(b.a(), b.b(), b.c());
}

std::ostream& operator<<(std::ostream& os, const SquareTriple& t) { return os << t.str(); }

CascadeLevels::CascadeLevels(BigInt x0, BigInt x1, BigInt x2)
    : x0_(std::move(x0)), x1_(std::move(x1)), x2_(std::move(x2)) {
    if (!(x0_ >= 1 && x0_ < x1_ && x1_ < x2_)) {
        throw NotACascade("cascade levels must satisfy 0 < x0 < x1 < x2");
    }
    // 1/x0^2 + 1/x2^2 = 2/x1^2, cross-multiplied by (x0 x1 x2)^2.
    const BigInt s0 = x0_ * x0_, s1 = x1_ * x1_, s2 = x2_ * x2_;
    if (s1 * s2 + s0 * s1 != 2 * s0 * s2) {
        throw NotACascade("equal-step condition fails for " + x0_.str() + " " +
                          x1_.str() + " " + x2_.str());
    }
}

Rational CascadeLevels::step() const {
    return Rational(1, x0_ * x0_) - Rational(1, x1_ * x1_);
}

bool CascadeLevels::primitive() const { return gcd3(x0_, x1_, x2_) == 1; }

bool operator==(const CascadeLevels& a, const CascadeLevels& b) {
    return a.x0() == b.x0() && a.x1() == b.x1() && a.x2() == b.x2();
}

bool operator<(const CascadeLevels& a, const CascadeLevels& b) {
    return std::tie(a.x0(), a.x1(), a.x2()) < std::tie(b.x0(), b.x1(), b.x2());
}

std::ostream& operator<<(std::ostream& os, const CascadeLevels& c) {
    return os << c.x0() << " -> " << c.x1() << " -> " << c.x2();
}

CirclePoint::CirclePoint(BigInt p, BigInt q, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
    if (p_ * p_ + q_ * q_ != r_ * r_) {
        throw NotPythagorean("p^2 + q^2 != r^2 for p=" + p_.str() + " q=" + q_.str() +
                             " r=" + r_.str());
    }
    if (r_ == 0) throw NotPythagorean("the zero point is not on the circle");
    if (r_ < 0) {
        // (-p - iq)/(-r) is the same point; keep the radius positive.
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    BigInt g = gcd3(abs(p_), abs(q_), r_);
    p_ /= g;
    q_ /= g;
    r_ /= g;
}

std::string CirclePoint::str() const {
    return "(" + GaussianInt(p_, q_).str() + ")/" + r_.str();
}

bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return a.p() == b.p() && a.q() == b.q() && a.r() == b.r();
}

bool operator!=(const CirclePoint& a, const CirclePoint& b) { return !(a == b); }

std::ostream& operator<<(std::ostream& os, const CirclePoint& pt) { return os << pt.str(); }

SquareTriple ap_triple(const APParams& params) {
    const BigInt &m = params.m, &n = params.n;
    if (!(m > n && n > 0)) throw InvalidParams("ap_triple requires m > n > 0");
    BigInt a = m * m + 2 * m * n - n * n;
    BigInt b = m * m + n * n;
    BigInt c = abs(m * m - 2 * m * n - n * n);
    // For m > n > 0 the raw values already satisfy a > b > c >= 1; reduction
    // preserves the ordering.
    BigInt g = gcd3(a, b, c);
    a /= g;
    b /= g;
    c /= g;
    if (a == c) throw DegenerateTriple("parametrization degenerated");  // unreachable
    return {std::move(a), std::move(b), std::move(c)};
}

CascadeLevels triple_to_cascade(const SquareTriple& t) {
    if (t.degenerate()) {
        throw DegenerateTriple("equal triple entries give no cascade: " + t.str());
    }
    const BigInt L = lcm3(t.a(), t.b(), t.c());
    BigInt x0 = L / t.a(), x1 = L / t.b(), x2 = L / t.c();
    BigInt g = gcd3(x0, x1, x2);
    return {x0 / g, x1 / g, x2 / g};
}

SquareTriple cascade_to_triple(const CascadeLevels& c) {
    const BigInt L = lcm3(c.x0(), c.x1(), c.x2());
    BigInt a = L / c.x0(), b = L / c.x1(), cc = L / c.x2();
    BigInt g = gcd3(a, b, cc);
    return {a / g, b / g, cc / g};
}

CirclePoint circle_from_triple(const SquareTriple& t) {
    BigInt g = gcd3(t.a(), t.b(), t.c());
    const BigInt a = t.a() / g, b = t.b() / g, c = t.c() / g;
    // A reduced triple has A and C odd (mixed parity breaks A^2+C^2 = 2B^2,
    // both even breaks primitivity), so the halves below are exact.
    if ((a + c) % 2 != 0) throw ParityError("A + C odd in reduced triple " + t.str());
    return {(a + c) / 2, (c - a) / 2, b};
}

SquareTriple triple_from_circle(const CirclePoint& pt) {
    BigInt lo = abs(pt.p() - pt.q());
    BigInt hi = abs(pt.p() + pt.q());
    if (lo > hi) std::swap(lo, hi);
    // (p-q)^2 + (p+q)^2 = 2 r^2, so (hi, r, lo) is a triple once reduced.
    BigInt g = gcd3(hi, pt.r(), lo);
    return {hi / g, pt.r() / g, lo / g};
}

CirclePoint compose(const CirclePoint& a, const CirclePoint& b) {
    return {a.p() * b.p() - a.q() * b.q(),
            a.p() * b.q() + b.p() * a.q(),
            a.r() * b.r()};
}

std::vector<CascadeLevels> find_cascades(const BigInt& max_level) {
    if (max_level < 3) throw InvalidParams("find_cascades requires max_level >= 3");
    std::vector<CascadeLevels> out;
    for (BigInt x0 = 1; x0 <= max_level; ++x0) {
        const BigInt s0 = x0 * x0;
        // 2/x1^2 - 1/x0^2 must stay positive, so x1^2 < 2 x0^2.
        for (BigInt x1 = x0 + 1; x1 <= max_level && x1 * x1 < 2 * s0; ++x1) {
            const BigInt s1 = x1 * x1;
            const BigInt den = 2 * s0 - s1;
            const BigInt num = s0 * s1;
            if (num % den != 0) continue;
            BigInt root;
            if (!is_perfect_square(num / den, root)) continue;
            if (root > max_level) continue;
            internal_check(root > x1, "third cascade level exceeds the second");
            out.emplace_back(x0, x1, root);
        }
    }
    return out;  // (x0, x1) loop order is already (x0, x1, x2) lexicographic
}

FourTermReport assert_no_four_term(const BigInt& max_level) {
    if (max_level < 4) throw InvalidParams("assert_no_four_term requires max_level >= 4");
    const std::vector<CascadeLevels> cascades = find_cascades(max_level);

    // A chain x0 < x1 < x2 < x3 with three equal steps is exactly two
    // cascades overlapping in their middle levels: (x0,x1,x2) and (x1,x2,x3).
    std::set<std::pair<BigInt, BigInt>> prefixes;
    for (const auto& c : cascades) prefixes.insert({c.x0(), c.x1()});
    for (const auto& c : cascades) {
        if (prefixes.count({c.x1(), c.x2()})) {
            throw TheoremViolation("four-term equal-step chain starting at " +
                                   c.x0().str() + " within " + max_level.str());
        }
    }
    return {max_level, cascades.size()};
}

}  // namespace equifreq
