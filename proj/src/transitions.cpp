#include "equifreq/transitions.hpp"

#include "equifreq/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace equifreq {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

}  // namespace

Transition::Transition(BigInt upper, BigInt lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (!(lower_ >= 1 && upper_ > lower_)) {
        throw InvalidTransition("transition requires N > n >= 1, got N=" + upper_.str() +
                                " n=" + lower_.str());
    }
}

Rational Transition::delta() const {
    return Rational(1, lower_ * lower_) - Rational(1, upper_ * upper_);
}

std::string Transition::str() const { return upper_.str() + "->" + lower_.str(); }

bool operator==(const Transition& a, const Transition& b) {
    return a.lower() == b.lower() && a.upper() == b.upper();
}

bool operator!=(const Transition& a, const Transition& b) { return !(a == b); }

bool operator<(const Transition& a, const Transition& b) {
    return std::tie(a.lower(), a.upper()) < std::tie(b.lower(), b.upper());
}

std::ostream& operator<<(std::ostream& os, const Transition& t) { return os << t.str(); }

TransitionPair::TransitionPair(const Transition& a, const Transition& b)
    : t1_(std::min(a, b)), t2_(std::max(a, b)), delta_(t1_.delta()) {
    if (a == b) throw InvalidTransition("a pair needs two distinct transitions");
    if (a.delta() != b.delta()) {
        throw NotEqualFrequency("deltas differ: " + fraction_str(a.delta()) + " vs " +
                                fraction_str(b.delta()));
    }
}

bool TransitionPair::is_canonical() const {
    BigInt g = gcd(gcd(t1_.lower(), t1_.upper()), gcd(t2_.lower(), t2_.upper()));
    return g == 1;
}

bool operator==(const TransitionPair& a, const TransitionPair& b) {
    return a.first() == b.first() && a.second() == b.second();
}

bool operator<(const TransitionPair& a, const TransitionPair& b) {
    if (a.delta() != b.delta()) return a.delta() < b.delta();
    return std::tie(a.first(), a.second()) < std::tie(b.first(), b.second());
}

std::ostream& operator<<(std::ostream& os, const TransitionPair& p) {
    return os << p.first().str() << " == " << p.second().str()
              << " (delta = " << fraction_str(p.delta()) << ")";
}

std::optional<Rational> verify_pair(const BigInt& n1, const BigInt& N1,
                                    const BigInt& n2, const BigInt& N2) {
    const Transition t1(N1, n1), t2(N2, n2);
    Rational d1 = t1.delta();
    if (d1 != t2.delta()) return std::nullopt;
    return d1;
}

ClearingWitness pair_to_identity(const TransitionPair& pair) {
    const BigInt &n1 = pair.first().lower(), &N1 = pair.first().upper();
    const BigInt &n2 = pair.second().lower(), &N2 = pair.second().upper();
    BigInt L = lcm(lcm(n1, N1), lcm(n2, N2));
    // Multiplying delta1 = delta2 through by L^2 clears all denominators.
    SquareIdentity id(L / n1, L / N2, L / N1, L / n2);
    return {std::move(id), std::move(L), pair};
}

std::vector<TransitionPair> identity_to_pairs(const SquareIdentity& id) {
    const std::array<BigInt, 2>* sides[2] = {&id.side1(), &id.side2()};
    for (const auto* side : sides) {
        if ((*side)[0] == 0 || (*side)[1] == 0) {
            throw ZeroEntry("identity entry 0 has no finite level: " + id.str());
        }
    }

    const BigInt L = lcm(lcm(id.side1()[0], id.side1()[1]),
                         lcm(id.side2()[0], id.side2()[1]));

    // Try all eight labelings (A,B | C,D) of the two sides; the constraints
    // A > C and D > B are exactly what makes the recovered levels a valid
    // ordered pair of transitions. Mirrored labelings duplicate pairs, so
    // collect into an ordered set.
    std::set<TransitionPair> found;
    for (int swap_sides = 0; swap_sides < 2; ++swap_sides) {
        const auto& ab = *sides[swap_sides];
        const auto& cd = *sides[1 - swap_sides];
        for (int ai : {0, 1}) {
            for (int ci : {0, 1}) {
                const BigInt &A = ab[ai], &B = ab[1 - ai];
                const BigInt &C = cd[ci], &D = cd[1 - ci];
                if (!(A > C && D > B)) continue;
                Transition t1(L / C, L / A);  // N1 = L/C, n1 = L/A
                Transition t2(L / B, L / D);  // N2 = L/B, n2 = L/D
                if (t1 == t2) continue;
                found.insert(canonicalize_pair(TransitionPair(t1, t2)));
            }
        }
    }
    if (found.empty()) {
        throw DegenerateIdentity("no transition labeling exists for " + id.str());
    }
    return {found.begin(), found.end()};
}

TransitionPair canonicalize_pair(const TransitionPair& pair) {
    const Transition &t1 = pair.first(), &t2 = pair.second();
    BigInt g = gcd(gcd(t1.lower(), t1.upper()), gcd(t2.lower(), t2.upper()));
    if (g == 1) return pair;
    return TransitionPair(Transition(t1.upper() / g, t1.lower() / g),
                          Transition(t2.upper() / g, t2.lower() / g));
}

std::vector<TransitionPair> enumerate_pairs(const BigInt& max_level) {
    if (max_level < 2) throw InvalidParams("enumerate_pairs requires max_level >= 2");

    std::map<Rational, std::vector<Transition>> buckets;
    for (BigInt n = 1; n < max_level; ++n) {
        for (BigInt N = n + 1; N <= max_level; ++N) {
            Transition t(N, n);
            buckets[t.delta()].push_back(std::move(t));
        }
    }

    // Every canonical pair with levels <= max_level appears in some bucket;
    // scaled copies canonicalize onto it, so the set removes them.
    std::set<TransitionPair> out;
    for (const auto& [delta, group] : buckets) {
        for (std::size_t i = 0; i + 1 < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                out.insert(canonicalize_pair(TransitionPair(group[i], group[j])));
            }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace equifreq
