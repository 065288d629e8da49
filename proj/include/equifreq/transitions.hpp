#pragma once

#include "equifreq/identities.hpp"
#include "equifreq/numeric.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace equifreq {

// A downward bound-bound transition N -> n between principal quantum numbers,
// with N > n >= 1. Its energy difference in Rydberg units is the exact
// rational delta = 1/n^2 - 1/N^2 > 0.
class Transition {
public:
    Transition(BigInt upper, BigInt lower);

    const BigInt& upper() const { return upper_; }
    const BigInt& lower() const { return lower_; }

    Rational delta() const;

    std::string str() const;  // "N->n"

private:
    BigInt upper_;
    BigInt lower_;
};

bool operator==(const Transition& a, const Transition& b);
bool operator!=(const Transition& a, const Transition& b);
// (lower, upper) lexicographic; the pair and enumeration order.
bool operator<(const Transition& a, const Transition& b);
std::ostream& operator<<(std::ostream& os, const Transition& t);

// Two distinct transitions with the same exact delta. Construction verifies
// equality (NotEqualFrequency otherwise), rejects identical transitions
// (InvalidTransition), and stores the two in ascending order.
class TransitionPair {
public:
    TransitionPair(const Transition& a, const Transition& b);

    const Transition& first() const { return t1_; }
    const Transition& second() const { return t2_; }
    const Rational& delta() const { return delta_; }

    // True when the four levels share no common factor.
    bool is_canonical() const;

private:
    Transition t1_;
    Transition t2_;
    Rational delta_;
};

bool operator==(const TransitionPair& a, const TransitionPair& b);
// Orders by (delta, first, second); the enumeration order.
bool operator<(const TransitionPair& a, const TransitionPair& b);
std::ostream& operator<<(std::ostream& os, const TransitionPair& p);

// The exact certificate tying a pair to its square identity: with L the least
// common multiple of the four levels, A = L/n1, B = L/N2, C = L/N1, D = L/n2
// satisfy A^2 + B^2 = C^2 + D^2 and reproduce `identity`.
struct ClearingWitness {
    SquareIdentity identity;
    BigInt scale;  // the common multiple L
    TransitionPair pair;
};

// Compares 1/n1^2 - 1/N1^2 with 1/n2^2 - 1/N2^2 exactly (integer cross
// multiplication; no floating point anywhere in this module). Returns the
// common delta in lowest terms when equal, nullopt when not. Throws
// InvalidTransition when levels violate N > n >= 1.
std::optional<Rational> verify_pair(const BigInt& n1, const BigInt& N1,
                                    const BigInt& n2, const BigInt& N2);

// Clears denominators of an equal-frequency pair into a square identity.
ClearingWitness pair_to_identity(const TransitionPair& pair);

// All equal-frequency pairs an identity generates: for each labeling of the
// sides as (A,B | C,D) with A > C and D > B, the levels are n1 = L/A,
// N1 = L/C, n2 = L/D, N2 = L/B with L = lcm of the entries. At most two
// distinct pairs result; each is canonicalized and verified. Throws ZeroEntry
// when an entry is 0 and DegenerateIdentity when no labeling yields a pair
// (trivial identities).
std::vector<TransitionPair> identity_to_pairs(const SquareIdentity& id);

// Divides the four levels by their common gcd. Idempotent; preserves
// equal-frequency because delta scales uniformly.
TransitionPair canonicalize_pair(const TransitionPair& pair);

// All canonical equal-frequency pairs whose levels are all <= max_level,
// found by grouping transitions by exact delta, deduplicated and sorted by
// (delta, first, second).
std::vector<TransitionPair> enumerate_pairs(const BigInt& max_level);

}  // namespace equifreq
