#pragma once

#include "equifreq/numeric.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace equifreq {

// Three squares in arithmetic progression: A >= B >= C >= 1 with
// A^2 + C^2 = 2 B^2. Equality throughout (A = B = C) is the degenerate case;
// otherwise the ordering is automatically strict. Construction validates and
// throws InvalidTriple.
class SquareTriple {
public:
    SquareTriple(BigInt a, BigInt b, BigInt c);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }

    bool degenerate() const { return a_ == c_; }
    bool primitive() const;

    std::string str() const;  // "A=.. B=.. C=.."

private:
    BigInt a_;
    BigInt b_;
    BigInt c_;
};

bool operator==(const SquareTriple& a, const SquareTriple& b);
bool operator!=(const SquareTriple& a, const SquareTriple& b);
bool operator<(const SquareTriple& a, const SquareTriple& b);
std::ostream& operator<<(std::ostream& os, const SquareTriple& t);

// Levels 0 < x0 < x1 < x2 whose reciprocal squares are in arithmetic
// progression: 1/x0^2 + 1/x2^2 = 2/x1^2, i.e. the two downward transitions
// x2 -> x1 and x1 -> x0 release the same energy. Construction checks the
// exact condition (cross-multiplied) and throws NotACascade.
class CascadeLevels {
public:
    CascadeLevels(BigInt x0, BigInt x1, BigInt x2);

    const BigInt& x0() const { return x0_; }
    const BigInt& x1() const { return x1_; }
    const BigInt& x2() const { return x2_; }

    // The common energy step 1/x0^2 - 1/x1^2, in lowest terms.
    Rational step() const;

    bool primitive() const;

private:
    BigInt x0_;
    BigInt x1_;
    BigInt x2_;
};

bool operator==(const CascadeLevels& a, const CascadeLevels& b);
bool operator<(const CascadeLevels& a, const CascadeLevels& b);
std::ostream& operator<<(std::ostream& os, const CascadeLevels& c);

// Parameters m > n > 0 of the squares-in-progression parametrization.
struct APParams {
    BigInt m;
    BigInt n;
};

// A rational point (p + iq)/r on the unit circle: p^2 + q^2 = r^2, stored in
// canonical form gcd(p, q, r) = 1, r > 0, signs of p and q preserved.
// Construction validates and throws NotPythagorean (the zero point included).
class CirclePoint {
public:
    CirclePoint(BigInt p, BigInt q, BigInt r);

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& r() const { return r_; }

    static CirclePoint identity() { return {1, 0, 1}; }

    // The group inverse (complex conjugate of the point).
    CirclePoint conjugate() const { return {p_, -q_, r_}; }

    std::string str() const;  // "(p+qi)/r"

private:
    BigInt p_;
    BigInt q_;
    BigInt r_;
};

bool operator==(const CirclePoint& a, const CirclePoint& b);
bool operator!=(const CirclePoint& a, const CirclePoint& b);
std::ostream& operator<<(std::ostream& os, const CirclePoint& pt);

// The parametrization of squares in arithmetic progression:
//   A0 = m^2 + 2mn - n^2, B0 = m^2 + n^2, C0 = |m^2 - 2mn - n^2|,
// reduced by the common gcd. For m > n > 0 the result is never degenerate.
// Throws InvalidParams unless m > n > 0.
SquareTriple ap_triple(const APParams& params);

// Levels of the cascade a strict triple generates: with L = lcm(A, B, C), the
// levels are (L/A, L/B, L/C), reduced. Throws DegenerateTriple when A = C.
CascadeLevels triple_to_cascade(const SquareTriple& t);

// Inverse direction: with L = lcm(x0, x1, x2), the triple is
// (L/x0, L/x1, L/x2), reduced. Total with triple_to_cascade on reduced data.
SquareTriple cascade_to_triple(const CascadeLevels& c);

// Maps a triple to the circle point (A + iC)/(B (1 + i)), computed as
// p = (A + C)/2, q = (C - A)/2, r = B on the reduced triple. Always lands on
// q <= 0; the degenerate triple maps to the identity point. Throws ParityError
// if A + C were odd, which a reduced triple can never produce.
CirclePoint circle_from_triple(const SquareTriple& t);

// Reverse map: A = larger of |p - q|, |p + q|; C = smaller; B = r; reduced.
// Returns the degenerate triple (1,1,1) for points with p = 0 or q = 0 (check
// degenerate() before cascading). Composed with circle_from_triple this is
// the identity on triples; the other composition returns a point in the same
// dihedral orbit {(+-p, +-q), (+-q, +-p)} rather than the argument itself.
SquareTriple triple_from_circle(const CirclePoint& pt);

// The abelian group law inherited from multiplication of unit complex
// numbers: (p1 p2 - q1 q2, p1 q2 + p2 q1, r1 r2), canonicalized. Identity
// (1, 0, 1); inverse is conjugate().
CirclePoint compose(const CirclePoint& a, const CirclePoint& b);

// Exhaustive search for all cascades with x2 <= max_level, sorted by
// (x0, x1, x2). Scaled copies of primitive cascades are included and
// distinguishable via primitive(). Throws InvalidParams when max_level < 3.
std::vector<CascadeLevels> find_cascades(const BigInt& max_level);

struct FourTermReport {
    BigInt max_level;
    std::size_t cascades_checked;  // three-term cascades the join examined
};

// Verifies there is no chain x0 < x1 < x2 < x3 <= max_level with three equal
// energy steps, by joining overlapping three-term cascades (a four-term chain
// is exactly two cascades sharing their middle two levels). Returns a report
// on success; throws TheoremViolation if a chain is found, which would mean
// four distinct integer squares in arithmetic progression exist.
FourTermReport assert_no_four_term(const BigInt& max_level);

}  // namespace equifreq
