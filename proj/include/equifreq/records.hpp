#pragma once

#include "equifreq/cascades.hpp"
#include "equifreq/identities.hpp"
#include "equifreq/numeric.hpp"
#include "equifreq/physics.hpp"
#include "equifreq/transitions.hpp"

#include <initializer_list>
#include <string>
#include <string_view>

// Deterministic text / JSON / CSV record emission. Every function returns a
// string without a trailing newline; callers add line separators. JSON is
// built by hand so arbitrary-precision integers print as bare integer
// literals instead of being squeezed through a 64-bit type.
namespace equifreq::records {

enum class Format { text, json, csv };

// Accepts "text", "json", "csv"; throws ParseError otherwise.
Format parse_format(const std::string& name);

// Decimal with 10 significant digits (%.10g); used for physics observables.
std::string decimal10(double value);

// Minimal JSON object builder with insertion-ordered keys.
class JsonObject {
public:
    JsonObject& field(std::string_view key, const BigInt& value);
    JsonObject& field(std::string_view key, bool value);
    JsonObject& field(std::string_view key, std::size_t value);
    JsonObject& field_decimal(std::string_view key, double value);
    JsonObject& field_string(std::string_view key, std::string_view value);
    JsonObject& field_raw(std::string_view key, std::string_view json);
    std::string str() const;

private:
    void comma();
    std::string body_;
};

std::string json_int_array(std::initializer_list<BigInt> values);

// Equal-frequency pair: {n1, N1, n2, N2, delta_num, delta_den}
inline constexpr const char* kPairCsvHeader = "n1,N1,n2,N2,delta_num,delta_den";
std::string pair_text(const TransitionPair& p);   // "N1->n1 == N2->n2 (delta = num/den)"
std::string pair_json(const TransitionPair& p);
std::string pair_csv_row(const TransitionPair& p);

// Square identity: {side1: [A, B], side2: [C, D], norm: N}
inline constexpr const char* kIdentityCsvHeader = "A,B,C,D,norm";
std::string identity_text(const SquareIdentity& id);  // "A^2+B^2=C^2+D^2=N"
std::string identity_json(const SquareIdentity& id);
std::string identity_csv_row(const SquareIdentity& id);

// Brahmagupta-Fibonacci parameters: {r, s, u, v}
inline constexpr const char* kParamsCsvHeader = "r,s,u,v";
std::string params_text(const BFParams& p);  // "r=.. s=.. u=.. v=.."
std::string params_json(const BFParams& p);
std::string params_csv_row(const BFParams& p);

// Cascade: {x0, x1, x2, delta_num, delta_den, primitive}
inline constexpr const char* kCascadeCsvHeader = "x0,x1,x2,delta_num,delta_den,primitive";
std::string cascade_text(const CascadeLevels& c);  // "x0 -> x1 -> x2 (step = num/den)[ [primitive]]"
std::string cascade_json(const CascadeLevels& c);
std::string cascade_csv_row(const CascadeLevels& c);

// Square triple: {A, B, C}
std::string triple_text(const SquareTriple& t);
std::string triple_json(const SquareTriple& t);

// Circle point: {p, q, r}
inline constexpr const char* kCircleCsvHeader = "p,q,r";
std::string circle_text(const CirclePoint& pt);  // "(p+qi)/r"
std::string circle_json(const CirclePoint& pt);
std::string circle_csv_row(const CirclePoint& pt);

// Photon observables: {n, N, delta_num, delta_den, wavelength_m, frequency_hz}
inline constexpr const char* kObserveCsvHeader = "n,N,delta_num,delta_den,wavelength_m,frequency_hz";
std::string observe_text(const Transition& t, const PhotonObservables& obs);  // multi-line
std::string observe_json(const Transition& t, const PhotonObservables& obs);
std::string observe_csv_row(const Transition& t, const PhotonObservables& obs);

}  // namespace equifreq::records
