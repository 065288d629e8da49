#pragma once

#include "equifreq/numeric.hpp"

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace equifreq {

// Parameters of the Brahmagupta-Fibonacci two-products expansion: the pair of
// Gaussian integers r + is and u + iv.
struct BFParams {
    BigInt r;
    BigInt s;
    BigInt u;
    BigInt v;
};

bool operator==(const BFParams& a, const BFParams& b);

// A two-representation identity A^2 + B^2 = C^2 + D^2 over nonnegative
// integers. Signs and order carry no information, so values are stored
// canonically: each side sorted descending, sides ordered so that side1 is
// lexicographically the larger. Construction validates the equal-sums
// condition and throws NotAnIdentity when it fails.
class SquareIdentity {
public:
    SquareIdentity(BigInt a, BigInt b, BigInt c, BigInt d);

    // Canonical sides, each {larger, smaller}.
    const std::array<BigInt, 2>& side1() const { return side1_; }
    const std::array<BigInt, 2>& side2() const { return side2_; }

    // The common sum of squares.
    BigInt norm() const;

    // True when both sides are the same multiset (no information content).
    bool trivial() const { return side1_ == side2_; }

    bool all_zero() const { return side1_[0] == 0 && side2_[0] == 0; }

    // "A^2+B^2=C^2+D^2=N" in canonical entry order.
    std::string str() const;

private:
    std::array<BigInt, 2> side1_;
    std::array<BigInt, 2> side2_;
};

bool operator==(const SquareIdentity& a, const SquareIdentity& b);
bool operator!=(const SquareIdentity& a, const SquareIdentity& b);
// Orders by (norm, side1, side2); the enumeration order.
bool operator<(const SquareIdentity& a, const SquareIdentity& b);
std::ostream& operator<<(std::ostream& os, const SquareIdentity& id);

// Expands (r^2 + s^2)(u^2 + v^2) into its two representations as a sum of two
// squares, via (r+is)(u+iv) and (r+is)(u-iv):
//   A = ru - sv, B = rv + su, C = ru + sv, D = su - rv,
// absolute values taken. The result satisfies A^2+B^2 = C^2+D^2 = the product.
SquareIdentity bf_expand(const BFParams& params);

// Divides all four entries by their gcd. Idempotent. Throws AllZero on the
// all-zero identity.
SquareIdentity primitive_normalize(const SquareIdentity& id);

// Recovers a Brahmagupta-Fibonacci witness for an identity: with z = A + iB
// from side1 and w = C + iD from side2,
//   delta = gcd(z, w) in canonical associate form gives (r, s),
//   z0 = z / delta gives (u, v).
// The cofactor of w is checked to be a unit times conj(z0), and the roundtrip
// bf_expand(result) == id is checked before returning; both are theorems for
// a valid identity. Exactly one witness is returned (the gcd construction is
// deterministic); other valid parametrizations of the same identity exist.
// Throws DegenerateIdentity when norm(id) = 0.
BFParams recover_params(const SquareIdentity& id);

// All nontrivial identities with entries in [1, max_entry], deduplicated and
// sorted by (norm, side1, side2). Zero entries are excluded: a zero entry
// corresponds to an ionized level, which enumeration never reports.
std::vector<SquareIdentity> enumerate_identities(const BigInt& max_entry);

}  // namespace equifreq
