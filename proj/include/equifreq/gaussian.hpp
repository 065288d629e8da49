#pragma once

#include "equifreq/numeric.hpp"

#include <array>
#include <ostream>
#include <string>
#include <utility>

namespace equifreq {

// Gaussian integer a + bi with arbitrary-precision components.
class GaussianInt {
public:
    GaussianInt() = default;
    GaussianInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

    const BigInt& re() const { return re_; }
    const BigInt& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    GaussianInt conj() const { return {re_, -im_}; }

    // norm(a + bi) = a^2 + b^2. Multiplicative: norm(zw) = norm(z) norm(w).
    BigInt norm() const { return re_ * re_ + im_ * im_; }

    // "a+bi" with no spaces and an explicit sign on the imaginary part; the
    // zero value prints as "0". The imaginary coefficient is always written
    // out ("1+1i", not "1+i") so the format parses unambiguously.
    std::string str() const;

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianInt operator-(const GaussianInt& a) { return {-a.re_, -a.im_}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

private:
    BigInt re_;
    BigInt im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianInt& g);

// One of the four Gaussian units {1, i, -1, -i}, stored as a power of i.
// They form a cyclic group of order four under multiplication.
class Unit {
public:
    Unit() = default;  // the unit 1

    static Unit one() { return Unit(0); }
    static Unit i() { return Unit(1); }
    static Unit minus_one() { return Unit(2); }
    static Unit minus_i() { return Unit(3); }
    static std::array<Unit, 4> all() { return {Unit(0), Unit(1), Unit(2), Unit(3)}; }

    GaussianInt value() const;

    // value() * g, computed as a component rotation (no multiplications).
    GaussianInt apply(const GaussianInt& g) const;

    Unit operator*(Unit other) const { return Unit((k_ + other.k_) % 4); }
    Unit inverse() const { return Unit((4 - k_) % 4); }
    bool operator==(const Unit&) const = default;

private:
    explicit Unit(int quarter_turns) : k_(quarter_turns) {}
    int k_ = 0;  // the unit is i^k_
};

struct GaussianDivMod {
    GaussianInt quotient;
    GaussianInt remainder;
};

// Euclidean division a = q*b + r with norm(r) <= norm(b)/2. The quotient is
// a/b rounded to the nearest Gaussian integer component-wise; exact halves
// round toward +infinity in each component, which pins q (and r) uniquely.
// Throws DivisionByZero when b = 0.
GaussianDivMod euclid_divmod(const GaussianInt& a, const GaussianInt& b);

// Greatest common divisor via the Euclidean algorithm, returned in canonical
// associate form. gcd(a, 0) is the canonical associate of a. Throws
// UndefinedGcd when both arguments are zero.
GaussianInt gcd(const GaussianInt& a, const GaussianInt& b);

struct AssociateForm {
    GaussianInt canonical;
    Unit unit;  // canonical == unit.apply(original)
};

// Canonical representative of {g, ig, -g, -ig}: the one with re > 0 and
// im >= 0 (first quadrant including the positive real axis, excluding the
// positive imaginary axis). Zero maps to itself with unit 1.
AssociateForm canonical_associate(const GaussianInt& g);

}  // namespace equifreq
