#include "equifreq/records.hpp"

#include "equifreq/errors.hpp"

#include <cstdio>

namespace equifreq::records {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw ParseError("unknown format '" + name + "' (expected text, json or csv)");
}

std::string decimal10(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

void JsonObject::comma() {
    if (!body_.empty()) body_ += ',';
}

JsonObject& JsonObject::field(std::string_view key, const BigInt& value) {
    return field_raw(key, value.str());
}

JsonObject& JsonObject::field(std::string_view key, bool value) {
    return field_raw(key, value ? "true" : "false");
}

JsonObject& JsonObject::field(std::string_view key, std::size_t value) {
    return field_raw(key, std::to_string(value));
}

JsonObject& JsonObject::field_decimal(std::string_view key, double value) {
    return field_raw(key, decimal10(value));
}

JsonObject& JsonObject::field_string(std::string_view key, std::string_view value) {
    // Values here are plain tokens (never need escaping).
    std::string quoted = "\"";
    quoted.append(value);
    quoted += '"';
    return field_raw(key, quoted);
}

JsonObject& JsonObject::field_raw(std::string_view key, std::string_view json) {
    comma();
    body_ += '"';
    body_.append(key);
    body_ += "\":";
    body_.append(json);
    return *this;
}

std::string JsonObject::str() const { return "{" + body_ + "}"; }

std::string json_int_array(std::initializer_list<BigInt> values) {
    std::string s = "[";
    bool first = true;
    for (const BigInt& v : values) {
        if (!first) s += ',';
        first = false;
        s += v.str();
    }
    s += ']';
    return s;
}

// ---------------------------------------------------------------- pairs ----

std::string pair_text(const TransitionPair& p) {
    return p.first().str() + " == " + p.second().str() +
           " (delta = " + fraction_str(p.delta()) + ")";
}

std::string pair_json(const TransitionPair& p) {
    return JsonObject()
        .field("n1", p.first().lower())
        .field("N1", p.first().upper())
        .field("n2", p.second().lower())
        .field("N2", p.second().upper())
        .field("delta_num", numerator(p.delta()))
        .field("delta_den", denominator(p.delta()))
        .str();
}

std::string pair_csv_row(const TransitionPair& p) {
    return p.first().lower().str() + ',' + p.first().upper().str() + ',' +
           p.second().lower().str() + ',' + p.second().upper().str() + ',' +
           numerator(p.delta()).str() + ',' + denominator(p.delta()).str();
}

// ----------------------------------------------------------- identities ----

std::string identity_text(const SquareIdentity& id) { return id.str(); }

std::string identity_json(const SquareIdentity& id) {
    return JsonObject()
        .field_raw("side1", json_int_array({id.side1()[0], id.side1()[1]}))
        .field_raw("side2", json_int_array({id.side2()[0], id.side2()[1]}))
        .field("norm", id.norm())
        .str();
}

std::string identity_csv_row(const SquareIdentity& id) {
    return id.side1()[0].str() + ',' + id.side1()[1].str() + ',' +
           id.side2()[0].str() + ',' + id.side2()[1].str() + ',' + id.norm().str();
}

// --------------------------------------------------------------- params ----

std::string params_text(const BFParams& p) {
    return "r=" + p.r.str() + " s=" + p.s.str() + " u=" + p.u.str() + " v=" + p.v.str();
}

std::string params_json(const BFParams& p) {
    return JsonObject().field("r", p.r).field("s", p.s).field("u", p.u).field("v", p.v).str();
}

std::string params_csv_row(const BFParams& p) {
    return p.r.str() + ',' + p.s.str() + ',' + p.u.str() + ',' + p.v.str();
}

// ------------------------------------------------------------- cascades ----

std::string cascade_text(const CascadeLevels& c) {
    std::string s = c.x0().str() + " -> " + c.x1().str() + " -> " + c.x2().str() +
                    " (step = " + fraction_str(c.step()) + ")";
    if (c.primitive()) s += " [primitive]";
    return s;
}

std::string cascade_json(const CascadeLevels& c) {
    return JsonObject()
        .field("x0", c.x0())
        .field("x1", c.x1())
        .field("x2", c.x2())
        .field("delta_num", numerator(c.step()))
        .field("delta_den", denominator(c.step()))
        .field("primitive", c.primitive())
        .str();
}

std::string cascade_csv_row(const CascadeLevels& c) {
    return c.x0().str() + ',' + c.x1().str() + ',' + c.x2().str() + ',' +
           numerator(c.step()).str() + ',' + denominator(c.step()).str() + ',' +
           (c.primitive() ? "true" : "false");
}

// -------------------------------------------------------------- triples ----

std::string triple_text(const SquareTriple& t) {
    std::string s = t.str();
    if (t.degenerate()) s += " (degenerate)";
    return s;
}

std::string triple_json(const SquareTriple& t) {
    return JsonObject().field("A", t.a()).field("B", t.b()).field("C", t.c()).str();
}

// -------------------------------------------------------- circle points ----

std::string circle_text(const CirclePoint& pt) { return pt.str(); }

std::string circle_json(const CirclePoint& pt) {
    return JsonObject().field("p", pt.p()).field("q", pt.q()).field("r", pt.r()).str();
}

std::string circle_csv_row(const CirclePoint& pt) {
    return pt.p().str() + ',' + pt.q().str() + ',' + pt.r().str();
}

// -------------------------------------------------------------- physics ----

std::string observe_text(const Transition& t, const PhotonObservables& obs) {
    return "transition: " + t.str() + "\n" +
           "delta = " + fraction_str(obs.delta) + "\n" +
           "wavelength = " + decimal10(obs.wavelength_m) + " m\n" +
           "frequency = " + decimal10(obs.frequency_hz) + " Hz";
}

std::string observe_json(const Transition& t, const PhotonObservables& obs) {
    return JsonObject()
        .field("n", t.lower())
        .field("N", t.upper())
        .field("delta_num", numerator(obs.delta))
        .field("delta_den", denominator(obs.delta))
        .field_decimal("wavelength_m", obs.wavelength_m)
        .field_decimal("frequency_hz", obs.frequency_hz)
        .str();
}

std::string observe_csv_row(const Transition& t, const PhotonObservables& obs) {
    return t.lower().str() + ',' + t.upper().str() + ',' + numerator(obs.delta).str() +
           ',' + denominator(obs.delta).str() + ',' + decimal10(obs.wavelength_m) + ',' +
           decimal10(obs.frequency_hz);
}

}  // namespace equifreq::records
