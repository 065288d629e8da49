#pragma once

#include <stdexcept>
#include <string>

namespace equifreq {

// Base class for every domain error raised by this library. The CLI maps any
// Error to exit code 2; callers who want finer handling catch the subclasses.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Gaussian division with divisor zero.
class DivisionByZero : public Error { public: using Error::Error; };

// gcd(0, 0) has no greatest common divisor.
class UndefinedGcd : public Error { public: using Error::Error; };

// Four entries that do not satisfy A^2 + B^2 = C^2 + D^2.
class NotAnIdentity : public Error { public: using Error::Error; };

// Normalizing the all-zero identity.
class AllZero : public Error { public: using Error::Error; };

// Identity that admits no transition labeling (trivial or zero norm).
class DegenerateIdentity : public Error { public: using Error::Error; };

// Levels violating N > n >= 1, or a pair built from two identical transitions.
class InvalidTransition : public Error { public: using Error::Error; };

// Two transitions whose energy differences disagree.
class NotEqualFrequency : public Error { public: using Error::Error; };

// Identity entry equal to zero where positive levels are required.
class ZeroEntry : public Error { public: using Error::Error; };

// Out-of-domain arguments (search bounds, parametrization parameters).
class InvalidParams : public Error { public: using Error::Error; };

// Triple entries breaking A >= B >= C >= 1 or A^2 + C^2 = 2 B^2.
class InvalidTriple : public Error { public: using Error::Error; };

// Triple without the strict ordering a cascade needs (A = B = C).
class DegenerateTriple : public Error { public: using Error::Error; };

// Levels that fail 0 < x0 < x1 < x2 or the exact equal-step condition.
class NotACascade : public Error { public: using Error::Error; };

// A + C odd in the triple-to-circle map; unreachable for reduced triples.
class ParityError : public Error { public: using Error::Error; };

// (p, q, r) with p^2 + q^2 != r^2, or the zero point.
class NotPythagorean : public Error { public: using Error::Error; };

// An exhaustive search contradicted a proven impossibility result. Seeing this
// means the arithmetic itself is broken, so it is fatal.
class TheoremViolation : public Error { public: using Error::Error; };

// Malformed numeric, level, or config-file input.
class ParseError : public Error { public: using Error::Error; };

// Guard for conditions that valid inputs can never break. Unlike assert() this
// stays active in release builds; exactness claims must not depend on NDEBUG.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw Error(std::string("internal check failed: ") + what);
}

}  // namespace equifreq
