#pragma once

#include "hensel/decide.hpp"
#include "hensel/transform.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hensel {

using Json = nlohmann::json;

/// A request that is syntactically or semantically malformed: unknown fields,
/// wrong JSON types, unparsable element text, illegal parameter combinations.
/// Distinct from SetupError (well-formed input describing a bad setup) and
/// PrecisionExhausted (well-formed input the solver cannot settle in budget).
class BadRequest : public std::runtime_error {
public:
    explicit BadRequest(const std::string& message) : std::runtime_error(message) {}
};

namespace jio {

// ---------------------------------------------------------------------------
// Strict accessors. Every object is checked against a closed key list so a
// misspelt field fails loudly instead of being silently ignored.
// ---------------------------------------------------------------------------

inline void expect_object(const Json& j, const std::string& what) {
    if (!j.is_object()) throw BadRequest(what + ": expected a JSON object");
}

inline void expect_keys(const Json& j, std::initializer_list<const char*> keys,
                        const std::string& what) {
    expect_object(j, what);
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known) throw BadRequest(what + ": unknown field \"" + item.key() + "\"");
    }
}

inline const Json& get(const Json& j, const char* key, const std::string& what) {
    expect_object(j, what);
    const auto it = j.find(key);
    if (it == j.end()) throw BadRequest(what + ": missing field \"" + key + "\"");
    return *it;
}

inline std::string get_string(const Json& j, const char* key, const std::string& what) {
    const Json& v = get(j, key, what);
    if (!v.is_string())
        throw BadRequest(what + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

inline long long get_int(const Json& j, const char* key, const std::string& what) {
    const Json& v = get(j, key, what);
    if (!v.is_number_integer())
        throw BadRequest(what + ": field \"" + key + "\" must be an integer");
    return v.get<long long>();
}

inline bool get_bool(const Json& j, const char* key, const std::string& what) {
    const Json& v = get(j, key, what);
    if (!v.is_boolean())
        throw BadRequest(what + ": field \"" + key + "\" must be a boolean");
    return v.get<bool>();
}

inline std::vector<std::string> get_string_array(const Json& j, const char* key,
                                                 const std::string& what) {
    const Json& v = get(j, key, what);
    if (!v.is_array())
        throw BadRequest(what + ": field \"" + key + "\" must be an array of strings");
    std::vector<std::string> out;
    for (const Json& e : v) {
        if (!e.is_string())
            throw BadRequest(what + ": field \"" + key + "\" must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// ---------------------------------------------------------------------------
// Values of the valuation. Finite values travel as JSON integers, the point
// at infinity as the string "inf".
// ---------------------------------------------------------------------------

inline Json value_json(const Value& v) {
    if (v.is_infinity()) return Json("inf");
    return Json(v.amount());
}

inline Value parse_value_json(const Json& j, const std::string& what) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Value::infinity();
        throw BadRequest(what + ": a value is an integer or \"inf\"");
    }
    if (!j.is_number_integer())
        throw BadRequest(what + ": a value is an integer or \"inf\"");
    return Value(j.get<long long>());
}

// ---------------------------------------------------------------------------
// Field descriptors.
//
//   {"kind": "padic", "p": 5}
//   {"kind": "tadic", "coefficients": "Q",     "var": "t"}
//   {"kind": "tadic", "coefficients": "Fq(5)", "var": "t"}
// ---------------------------------------------------------------------------

struct PadicDesc {
    long long p;
};
struct TadicQDesc {
    std::string var;
};
struct TadicFqDesc {
    long long q;
    std::string var;
};
using FieldDesc = std::variant<PadicDesc, TadicQDesc, TadicFqDesc>;

/// Accepts the printed name of a prime coefficient field, "Fq(<prime>)",
/// and returns the prime; returns -1 if the text has a different shape.
inline long long parse_fq_name(const std::string& name) {
    if (name.size() < 5 || name.compare(0, 3, "Fq(") != 0 || name.back() != ')') return -1;
    long long q = 0;
    for (std::size_t i = 3; i + 1 < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
        q = q * 10 + (name[i] - '0');
        if (q > 1000000) return -1;
    }
    return q >= 2 ? q : -1;
}

inline FieldDesc parse_field_desc(const Json& j) {
    const std::string what = "field";
    const std::string kind = get_string(j, "kind", what);
    if (kind == "padic") {
        expect_keys(j, {"kind", "p"}, what);
        const long long p = get_int(j, "p", what);
        if (p < 2) throw BadRequest(what + ": p must be a prime at least 2");
        return PadicDesc{p};
    }
    if (kind == "tadic") {
        expect_keys(j, {"kind", "coefficients", "var"}, what);
        const std::string coeff = get_string(j, "coefficients", what);
        const std::string var = get_string(j, "var", what);
        if (!is_identifier(var))
            throw BadRequest(what + ": var must be an identifier");
        if (coeff == "Q") return TadicQDesc{var};
        const long long q = parse_fq_name(coeff);
        if (q >= 2) return TadicFqDesc{q, var};
        throw BadRequest(what + ": coefficients must be \"Q\" or \"Fq(<prime>)\"");
    }
    throw BadRequest(what + ": kind must be \"padic\" or \"tadic\"");
}

inline PadicField make_field(const PadicDesc& d) {
    try {
        return PadicField(d.p);
    } catch (const std::exception& e) {
        throw BadRequest(std::string("field: ") + e.what());
    }
}

inline TadicField<RatCoeffField> make_field(const TadicQDesc& d) {
    return TadicField<RatCoeffField>(RatCoeffField{}, d.var);
}

inline TadicField<PrimeCoeffField> make_field(const TadicFqDesc& d) {
    try {
        return TadicField<PrimeCoeffField>(PrimeCoeffField(d.q), d.var);
    } catch (const std::exception& e) {
        throw BadRequest(std::string("field: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Field elements travel as {"num": <text>, "den": <text>}. For a p-adic
// field both parts are integer literals; for a t-adic field both parts are
// univariate polynomials in the field variable.
// ---------------------------------------------------------------------------

inline Rat parse_elem_json(const PadicField&, const Json& j, const std::string& what) {
    expect_keys(j, {"num", "den"}, what);
    try {
        return parse_rat_parts(get_string(j, "num", what), get_string(j, "den", what));
    } catch (const BadRequest&) {
        throw;
    } catch (const std::exception& e) {
        throw BadRequest(what + ": " + e.what());
    }
}

template <class CF>
typename TadicField<CF>::Elem parse_elem_json(const TadicField<CF>& K, const Json& j,
                                              const std::string& what) {
    expect_keys(j, {"num", "den"}, what);
    try {
        return K.parse_elem(get_string(j, "num", what), get_string(j, "den", what));
    } catch (const BadRequest&) {
        throw;
    } catch (const std::exception& e) {
        throw BadRequest(what + ": " + e.what());
    }
}

inline Json elem_json(const PadicField&, const Rat& a) {
    Json j;
    j["num"] = numerator(a).str();
    j["den"] = denominator(a).str();
    return j;
}

template <class CF>
Json elem_json(const TadicField<CF>& K, const typename TadicField<CF>::Elem& a) {
    Json j;
    j["num"] = upoly_str(a.num(), K.var());
    j["den"] = upoly_str(a.den(), K.var());
    return j;
}

// ---------------------------------------------------------------------------
// Polynomials over the field travel as arrays of elements, index = degree.
// ---------------------------------------------------------------------------

template <class F>
FieldPoly<F> parse_poly_json(const F& K, const Json& j, const std::string& what) {
    if (!j.is_array()) throw BadRequest(what + ": expected an array of field elements");
    std::vector<typename F::Elem> coeffs;
    for (const Json& e : j) coeffs.push_back(parse_elem_json(K, e, what));
    return FieldPoly<F>(std::move(coeffs));
}

template <class F>
Json poly_json(const F& K, const FieldPoly<F>& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(elem_json(K, c));
    return arr;
}

// ---------------------------------------------------------------------------
// Ring descriptors.
//
//   {"field": "Q",     "vars": ["u", "w"], "ideal": ["u*w"]}
//   {"field": "Fq(5)", "vars": ["u"],      "ideal": ["u^2"]}
// ---------------------------------------------------------------------------

struct RingDescQ {
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
};
struct RingDescFq {
    long long q;
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
};
using RingDesc = std::variant<RingDescQ, RingDescFq>;

inline RingDesc parse_ring_desc(const Json& j) {
    const std::string what = "ring";
    expect_keys(j, {"field", "vars", "ideal"}, what);
    const std::string field = get_string(j, "field", what);
    std::vector<std::string> vars = get_string_array(j, "vars", what);
    std::vector<std::string> ideal = get_string_array(j, "ideal", what);
    if (vars.empty()) throw BadRequest(what + ": vars must be non-empty");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!is_identifier(vars[i]))
            throw BadRequest(what + ": \"" + vars[i] + "\" is not a variable name");
        for (std::size_t k = 0; k < i; ++k)
            if (vars[k] == vars[i])
                throw BadRequest(what + ": duplicate variable \"" + vars[i] + "\"");
    }
    if (field == "Q") return RingDescQ{std::move(vars), std::move(ideal)};
    const long long q = parse_fq_name(field);
    if (q >= 2) return RingDescFq{q, std::move(vars), std::move(ideal)};
    throw BadRequest(what + ": field must be \"Q\" or \"Fq(<prime>)\"");
}

inline FPLocalRing<Rat> make_ring(const RingDescQ& d) {
    try {
        return FPLocalRing<Rat>(d.vars, d.ideal, Rat(1));
    } catch (const std::exception& e) {
        throw BadRequest(std::string("ring: ") + e.what());
    }
}

inline FPLocalRing<Fp> make_ring(const RingDescFq& d) {
    try {
        return FPLocalRing<Fp>(d.vars, d.ideal, Fp(1, d.q));
    } catch (const std::exception& e) {
        throw BadRequest(std::string("ring: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Ring elements travel as strings in the presentation grammar; polynomials
// over the ring as arrays of such strings, index = degree.
// ---------------------------------------------------------------------------

template <class C>
MPoly<C> parse_ring_elem(const FPLocalRing<C>& R, const Json& j, const std::string& what) {
    if (!j.is_string()) throw BadRequest(what + ": expected a ring-element string");
    try {
        return R.parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw BadRequest(what + ": " + e.what());
    }
}

template <class C>
RPoly<C> parse_rpoly_json(const FPLocalRing<C>& R, const Json& j, const std::string& what) {
    if (!j.is_array())
        throw BadRequest(what + ": expected an array of ring-element strings");
    std::vector<MPoly<C>> coeffs;
    for (const Json& e : j) coeffs.push_back(parse_ring_elem(R, e, what));
    return RPoly<C>(std::move(coeffs));
}

template <class C>
Json rpoly_json(const FPLocalRing<C>& R, const RPoly<C>& p) {
    Json arr = Json::array();
    for (const MPoly<C>& c : p.coeffs()) arr.push_back(R.str(c));
    return arr;
}

// ---------------------------------------------------------------------------
// Setup descriptors bundle a ring, a field, the images of the variables
// under theta, generators of the candidate minimal prime, and nilpotency
// witnesses for those generators.
// ---------------------------------------------------------------------------

template <class C, class F>
MinimalValuationSetup<C, F> parse_setup_with(const FPLocalRing<C>& R, const F& K,
                                             const Json& j) {
    const std::string what = "setup";
    const Json& th = get(j, "theta", what);
    if (!th.is_array())
        throw BadRequest(what + ": theta must be an array of field elements");
    std::vector<typename F::Elem> images;
    for (const Json& e : th) images.push_back(parse_elem_json(K, e, what + ".theta"));

    const Json& pg = get(j, "prime_generators", what);
    if (!pg.is_array())
        throw BadRequest(what + ": prime_generators must be an array of strings");
    std::vector<MPoly<C>> prime;
    for (const Json& e : pg) prime.push_back(parse_ring_elem(R, e, what + ".prime_generators"));

    const Json& ws = get(j, "witnesses", what);
    if (!ws.is_array()) throw BadRequest(what + ": witnesses must be an array");
    std::vector<MinimalityWitness<C>> witnesses;
    for (const Json& e : ws) {
        expect_keys(e, {"b", "N"}, what + ".witnesses");
        const long long n = get_int(e, "N", what + ".witnesses");
        if (n < 1) throw BadRequest(what + ".witnesses: N must be at least 1");
        witnesses.push_back(
            {parse_ring_elem(R, get(e, "b", what + ".witnesses"), what + ".witnesses"), n});
    }

    try {
        return MinimalValuationSetup<C, F>(R, K, std::move(images), std::move(prime),
                                           std::move(witnesses));
    } catch (const std::invalid_argument& e) {
        throw BadRequest(what + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Result serialisers. Anything that denotes a domain object is printed in
// the same grammar the request parser accepts, so results can be fed back.
// ---------------------------------------------------------------------------

inline Json reading_json(const ValueReading& r) {
    Json j;
    j["value"] = value_json(r.value);
    j["precision"] = r.precision;
    return j;
}

inline Json polygon_json(const NewtonPolygon& P) {
    Json vertices = Json::array();
    for (const PolygonPoint& v : P.vertices())
        vertices.push_back(Json::array({v.index, value_json(v.value)}));
    Json segments = Json::array();
    for (const PolygonSegment& s : P.segments()) {
        Json e;
        e["from"] = s.start_index;
        e["to"] = s.end_index;
        e["slope"] = s.slope.str();
        e["length"] = s.horizontal_length;
        segments.push_back(e);
    }
    Json isolated = Json::array();
    for (const auto& [k, slope] : P.isolated_slopes()) {
        Json e;
        e["k"] = k;
        e["slope"] = slope.str();
        e["root_valuation"] = value_json(P.root_valuation(k));
        isolated.push_back(e);
    }
    Json j;
    j["vertices"] = vertices;
    j["segments"] = segments;
    j["isolated"] = isolated;
    return j;
}

template <class F>
Json trunc_json(const F& K, const TruncElem<typename F::Rep>& z) {
    Json rep;
    rep["num"] = K.trunc_str(z.rep);
    rep["den"] = "1";
    Json j;
    j["zero"] = rep;
    j["modulus"] = K.modulus_str(z.prec);
    j["precision"] = z.prec;
    j["display"] = K.trunc_str(z.rep) + " mod " + K.modulus_str(z.prec);
    return j;
}

template <class F>
Json chain_json(const F& K, const SlopeChain<F>& ch) {
    Json j;
    j["k"] = ch.k;
    j["slope"] = ch.slope.str();
    j["root_valuation"] = value_json(ch.root_value);
    j["c0"] = elem_json(K, ch.c0);
    j["h"] = poly_json(K, ch.h);
    j["f"] = poly_json(K, ch.f);
    j["trivial"] = ch.trivial_zero;
    if (!ch.trivial_zero) {
        j["t"] = poly_json(K, ch.t);
        Json m;
        m["a"] = elem_json(K, ch.moebius->a);
        m["b"] = elem_json(K, ch.moebius->b);
        m["c"] = elem_json(K, ch.moebius->c);
        m["d"] = elem_json(K, ch.moebius->d);
        j["moebius"] = m;
    }
    return j;
}

inline Json report_json(const SetupReport& rep) {
    Json checks = Json::array();
    for (const AxiomCheck& c : rep.checks) {
        Json e;
        e["axiom"] = c.axiom;
        e["pass"] = c.pass;
        e["counterexample"] = c.counterexample;
        checks.push_back(e);
    }
    Json j;
    j["ok"] = rep.ok;
    j["checks"] = checks;
    return j;
}

template <class C, class F>
Json decision_result_json(const FPLocalRing<C>& R, const F& K, const KernelDecision<C, F>& d) {
    Json j;
    j["branch"] = d.branch;
    j["in_Sf"] = d.in_Sf;
    j["k"] = d.k;
    j["q"] = rpoly_json(R, d.q);
    j["g"] = rpoly_json(R, d.g);
    j["g1"] = poly_json(K, d.g1);
    if (d.delta) j["delta"] = reading_json(*d.delta);
    return j;
}

template <class C, class F>
Json decision_certificate_json(const FPLocalRing<C>& R, const KernelDecision<C, F>& d) {
    Json j;
    if (d.in_Sf) {
        j["type"] = "in-Sf";
        j["delta"] = reading_json(*d.delta);
        return j;
    }
    const NilpotentCertificate<C>& w = *d.witness;
    j["type"] = "nilpotent";
    j["b"] = R.str(w.b);
    j["zeta"] = rpoly_json(R, w.zeta);
    j["exponent"] = w.exponent;
    j["a_exponent"] = w.a_exponent;
    j["zeta_gamma"] = rpoly_json(R, w.zeta_gamma);
    return j;
}

}  // namespace jio
}  // namespace hensel
