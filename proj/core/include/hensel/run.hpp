#pragma once

#include "hensel/json_io.hpp"

#include <string>
#include <utility>

namespace hensel {

/// Result of serving one request: the process exit status the CLI should
/// report and the response document. Exit codes: 0 the request was served
/// (and, for decisions, the certificate replayed), 1 the setup failed an
/// axiom, 2 the precision budget ran out, 3 the request itself was bad.
struct RunOutcome {
    int exit_code;
    Json response;
};

namespace runner {

struct CommandOutput {
    Json result;
    std::optional<Json> certificate;
    Json trace = Json::array();
    std::string status = "ok";
    int exit_code = 0;
};

inline void record(Json& trace, const std::string& step, const std::string& detail) {
    Json e;
    e["step"] = step;
    e["detail"] = detail;
    trace.push_back(e);
}

inline PrecisionPolicy parse_policy(const Json& j) {
    const std::string what = "precision";
    jio::expect_keys(j, {"initial", "growth", "max"}, what);
    PrecisionPolicy policy;
    if (j.contains("initial")) {
        const long long v = jio::get_int(j, "initial", what);
        if (v < 1) throw BadRequest(what + ": initial must be at least 1");
        policy.initial = static_cast<int>(v);
    }
    if (j.contains("growth")) {
        const long long v = jio::get_int(j, "growth", what);
        if (v < 2) throw BadRequest(what + ": growth must be at least 2");
        policy.growth = static_cast<int>(v);
    }
    if (j.contains("max")) {
        const long long v = jio::get_int(j, "max", what);
        if (v < 1) throw BadRequest(what + ": max must be at least 1");
        policy.max = static_cast<int>(v);
    }
    if (policy.max < policy.initial)
        throw BadRequest(what + ": max must be at least the initial precision");
    return policy;
}

/// Runs fn with the concrete field named by payload["field"].
template <class Fn>
CommandOutput with_field(const Json& payload, const std::string& what, Fn&& fn) {
    const jio::FieldDesc desc = jio::parse_field_desc(jio::get(payload, "field", what));
    return std::visit([&](const auto& d) { return fn(jio::make_field(d)); }, desc);
}

/// Parses payload["setup"] and runs fn with a fully constructed (but not yet
/// axiom-checked) setup over the matching coefficient/field pair.
template <class Fn>
CommandOutput with_setup(const Json& sj, Fn&& fn) {
    const std::string what = "setup";
    jio::expect_keys(sj, {"ring", "field", "theta", "prime_generators", "witnesses"}, what);
    const jio::RingDesc rd = jio::parse_ring_desc(jio::get(sj, "ring", what));
    const jio::FieldDesc fd = jio::parse_field_desc(jio::get(sj, "field", what));

    if (std::holds_alternative<jio::RingDescQ>(rd)) {
        const FPLocalRing<Rat> R = jio::make_ring(std::get<jio::RingDescQ>(rd));
        if (std::holds_alternative<jio::PadicDesc>(fd))
            return fn(jio::parse_setup_with(R, jio::make_field(std::get<jio::PadicDesc>(fd)), sj));
        if (std::holds_alternative<jio::TadicQDesc>(fd))
            return fn(
                jio::parse_setup_with(R, jio::make_field(std::get<jio::TadicQDesc>(fd)), sj));
        throw BadRequest(what + ": a ring over Q pairs with a padic field or a tadic field "
                                "with coefficients \"Q\"");
    }
    const jio::RingDescFq& r = std::get<jio::RingDescFq>(rd);
    if (!std::holds_alternative<jio::TadicFqDesc>(fd) ||
        std::get<jio::TadicFqDesc>(fd).q != r.q)
        throw BadRequest(what + ": a ring over Fq(p) pairs with a tadic field with the same "
                                "coefficients");
    const FPLocalRing<Fp> R = jio::make_ring(r);
    return fn(jio::parse_setup_with(R, jio::make_field(std::get<jio::TadicFqDesc>(fd)), sj));
}

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

inline CommandOutput cmd_polygon(const Json& payload) {
    const std::string what = "polygon";
    jio::expect_keys(payload, {"field", "coefficients"}, what);
    return with_field(payload, what, [&](const auto& K) {
        const auto g = jio::parse_poly_json(K, jio::get(payload, "coefficients", what),
                                            what + ".coefficients");
        const NewtonPolygon P = NewtonPolygon::of_polynomial(g, K);
        CommandOutput out;
        out.result = jio::polygon_json(P);
        std::string verts;
        for (const PolygonPoint& v : P.vertices()) {
            if (!verts.empty()) verts += " ";
            verts += "(" + std::to_string(v.index) + ", " + v.value.str() + ")";
        }
        record(out.trace, "polygon", "lower boundary vertices: " + verts);
        for (const auto& [k, slope] : P.isolated_slopes())
            record(out.trace, "isolated-slope",
                   "k = " + std::to_string(k) + ", slope = " + slope.str() +
                       ", root valuation = " + P.root_valuation(k).str());
        return out;
    });
}

inline CommandOutput cmd_lift(const Json& payload, bool special) {
    const std::string what = special ? "special" : "lift";
    jio::expect_keys(payload, {"field", "coefficients", "N"}, what);
    const long long N = jio::get_int(payload, "N", what);
    if (N < 1 || N > 100000) throw BadRequest(what + ": N must be in [1, 100000]");
    return with_field(payload, what, [&](const auto& K) {
        const auto f = jio::parse_poly_json(K, jio::get(payload, "coefficients", what),
                                            what + ".coefficients");
        const auto z = special ? special_zero(f, K, static_cast<int>(N))
                               : hensel_lift(f, K, static_cast<int>(N));
        CommandOutput out;
        out.result = jio::trunc_json(K, z);
        record(out.trace, what,
               "unique zero " + K.trunc_str(z.rep) + " mod " + K.modulus_str(z.prec));
        return out;
    });
}

inline CommandOutput cmd_chain(const Json& payload) {
    const std::string what = "chain";
    jio::expect_keys(payload, {"field", "coefficients", "k"}, what);
    const long long k = jio::get_int(payload, "k", what);
    if (k < 0) throw BadRequest(what + ": k must be non-negative");
    return with_field(payload, what, [&](const auto& K) {
        const auto g = jio::parse_poly_json(K, jio::get(payload, "coefficients", what),
                                            what + ".coefficients");
        const auto ch = transform_chain(g, static_cast<int>(k), K);
        CommandOutput out;
        out.result = jio::chain_json(K, ch);
        record(out.trace, "segment",
               "k = " + std::to_string(ch.k) + ", slope = " + ch.slope.str() +
                   ", root valuation = " + ch.root_value.str());
        record(out.trace, "normalise", "monic depressed form h computed, then f = h(X + c0)");
        record(out.trace, "branch",
               ch.trivial_zero ? "f(0) = 0: the lifted zero is 0, no moebius step"
                               : "moebius change of variable produces the special form t");
        return out;
    });
}

inline CommandOutput cmd_extval(const Json& payload, const PrecisionPolicy& policy) {
    const std::string what = "extval";
    jio::expect_keys(payload, {"field", "f", "Q"}, what);
    return with_field(payload, what, [&](const auto& K) {
        using F = std::decay_t<decltype(K)>;
        const auto f = jio::parse_poly_json(K, jio::get(payload, "f", what), what + ".f");
        const auto Q = jio::parse_poly_json(K, jio::get(payload, "Q", what), what + ".Q");
        Extension<F> E(K, f, policy);
        const ValueReading r = E.value_of(Q);
        CommandOutput out;
        out.result = jio::reading_json(r);
        record(out.trace, "value",
               "v(Q(alpha)) = " + r.value.str() + " read at precision " +
                   std::to_string(r.precision));
        return out;
    });
}

inline CommandOutput cmd_charpoly(const Json& payload) {
    const std::string what = "charpoly";
    jio::expect_keys(payload, {"ring", "f", "q"}, what);
    const jio::RingDesc rd = jio::parse_ring_desc(jio::get(payload, "ring", what));
    return std::visit(
        [&](const auto& rdesc) {
            const auto R = jio::make_ring(rdesc);
            const auto f = jio::parse_rpoly_json(R, jio::get(payload, "f", what), what + ".f");
            const auto Rf = build_Rf(R, f);
            const auto q =
                Rf.nf(jio::parse_rpoly_json(R, jio::get(payload, "q", what), what + ".q"));
            const auto g = detail::nf_coeffs(R, char_poly(q, Rf.f, R.one()));
            CommandOutput out;
            out.result = Json::object();
            out.result["coefficients"] = jio::rpoly_json(R, g);
            record(out.trace, "char-poly",
                   "characteristic polynomial of multiplication by q on R_f, degree " +
                       std::to_string(f.degree()));
            return out;
        },
        rd);
}

inline CommandOutput cmd_validate(const Json& payload) {
    const std::string what = "validate";
    jio::expect_keys(payload, {"setup"}, what);
    return with_setup(jio::get(payload, "setup", what), [&](auto setup) {
        const SetupReport rep = validate_setup(setup);
        CommandOutput out;
        out.result = jio::report_json(rep);
        for (const AxiomCheck& c : rep.checks)
            record(out.trace, "axiom",
                   c.axiom + ": " +
                       (c.pass ? std::string("pass")
                               : "fail at " + c.counterexample));
        if (!rep.ok) {
            out.status = "invalid-setup";
            out.exit_code = 1;
        }
        return out;
    });
}

inline CommandOutput cmd_decide(const Json& payload, const PrecisionPolicy& policy) {
    const std::string what = "decide";
    jio::expect_keys(payload, {"setup", "f", "q"}, what);
    return with_setup(jio::get(payload, "setup", what), [&](auto setup) {
        const auto f =
            jio::parse_rpoly_json(setup.ring(), jio::get(payload, "f", what), what + ".f");
        CommutingSquare sq(std::move(setup), f, policy);
        const auto q =
            jio::parse_rpoly_json(sq.ring(), jio::get(payload, "q", what), what + ".q");
        auto d = kernel_decide(q, sq);
        const bool verified = verify_decision(d, sq);

        CommandOutput out;
        out.result = jio::decision_result_json(sq.ring(), sq.field(), d);
        out.certificate = jio::decision_certificate_json(sq.ring(), d);

        record(out.trace, "setup", "all axioms validated");
        std::string gs;
        for (const auto& c : d.g.coeffs()) {
            if (!gs.empty()) gs += ", ";
            gs += sq.ring().str(c);
        }
        record(out.trace, "char-poly", "g has coefficients [" + gs + "]");
        record(out.trace, "split",
               "g1 = T^" + std::to_string(d.k) + " * h1 with h1(0) != 0");
        record(out.trace, "branch", d.branch);
        if (d.in_Sf)
            record(out.trace, "delta",
                   "v(delta) = " + d.delta->value.str() + " certified at precision " +
                       std::to_string(d.delta->precision));
        else
            record(out.trace, "witness",
                   "b = " + sq.ring().str(d.witness->b) + ", (zeta*gamma)^" +
                       std::to_string(d.witness->exponent) + " = 0");
        record(out.trace, "verify", verified ? "certificate replayed" : "replay failed");
        if (!verified) {
            // Unreachable for certificates this process just produced; kept so a
            // regression cannot ship a claim its own verifier rejects.
            out.status = "bad-request";
            out.exit_code = 3;
        }
        return out;
    });
}

inline CommandOutput dispatch(const std::string& command, const Json& payload,
                              const PrecisionPolicy& policy) {
    if (command == "polygon") return cmd_polygon(payload);
    if (command == "lift") return cmd_lift(payload, false);
    if (command == "special") return cmd_lift(payload, true);
    if (command == "chain") return cmd_chain(payload);
    if (command == "extval") return cmd_extval(payload, policy);
    if (command == "charpoly") return cmd_charpoly(payload);
    if (command == "validate") return cmd_validate(payload);
    if (command == "decide") return cmd_decide(payload, policy);
    throw BadRequest("request: unknown command \"" + command + "\"");
}

}  // namespace runner

/// Serves one request document. Never throws: every failure mode is folded
/// into the response status and exit code.
inline RunOutcome run_request(const Json& request) {
    Json resp;
    try {
        jio::expect_keys(request, {"command", "payload", "precision", "trace", "seed"},
                         "request");
        const std::string command = jio::get_string(request, "command", "request");
        const Json& payload = jio::get(request, "payload", "request");
        jio::expect_object(payload, "payload");

        PrecisionPolicy policy;
        if (request.contains("precision")) policy = runner::parse_policy(request["precision"]);
        bool want_trace = false;
        if (request.contains("trace")) want_trace = jio::get_bool(request, "trace", "request");
        if (request.contains("seed")) jio::get_int(request, "seed", "request");

        runner::CommandOutput out = runner::dispatch(command, payload, policy);
        resp["status"] = out.status;
        resp["result"] = out.result;
        if (out.certificate) resp["certificate"] = *out.certificate;
        if (want_trace) resp["trace"] = out.trace;
        return {out.exit_code, resp};
    } catch (const SetupError& e) {
        resp.clear();
        resp["status"] = "invalid-setup";
        resp["error"] = e.what();
        resp["axiom"] = e.axiom();
        resp["counterexample"] = e.counterexample();
        return {1, resp};
    } catch (const PrecisionExhausted& e) {
        resp.clear();
        resp["status"] = "precision";
        resp["error"] = e.what();
        resp["needed"] = e.needed();
        resp["limit"] = e.limit();
        return {2, resp};
    } catch (const BadRequest& e) {
        resp.clear();
        resp["status"] = "bad-request";
        resp["error"] = e.what();
        return {3, resp};
    } catch (const Json::exception& e) {
        resp.clear();
        resp["status"] = "bad-request";
        resp["error"] = std::string("request: ") + e.what();
        return {3, resp};
    } catch (const std::invalid_argument& e) {
        resp.clear();
        resp["status"] = "bad-request";
        resp["error"] = e.what();
        return {3, resp};
    } catch (const std::domain_error& e) {
        resp.clear();
        resp["status"] = "bad-request";
        resp["error"] = e.what();
        return {3, resp};
    } catch (const std::exception& e) {
        resp.clear();
        resp["status"] = "bad-request";
        resp["error"] = std::string("internal error: ") + e.what();
        return {3, resp};
    }
}

/// Canonical textual form of a response: two-space indentation, keys in
/// lexicographic order, trailing newline. Byte-identical across runs.
inline std::string response_text(const Json& response) { return response.dump(2) + "\n"; }

}  // namespace hensel
