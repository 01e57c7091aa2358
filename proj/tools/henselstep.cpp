// Command-line front end. Each subcommand reads one JSON document (stdin or
// --in), serves it through run_request, and writes the canonical response
// (stdout or --out). The exit code mirrors the response status: 0 ok,
// 1 invalid-setup, 2 precision exhausted, 3 bad request.

#include <hensel/run.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Options {
    std::string in;
    std::string out;
    long long precision = 0;
    long long growth = 0;
    long long max_precision = 0;
    bool trace = false;
    long long seed = 0;
    bool have_seed = false;
};

int emit(const Options& opt, const hensel::RunOutcome& outcome) {
    const std::string text = hensel::response_text(outcome.response);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream fout(opt.out);
        fout << text;
        if (!fout) {
            std::cerr << "henselstep: cannot write " << opt.out << "\n";
            return 3;
        }
    }
    return outcome.exit_code;
}

int fail_early(const Options& opt, const std::string& message) {
    hensel::Json resp;
    resp["status"] = "bad-request";
    resp["error"] = message;
    return emit(opt, {3, resp});
}

int serve(const std::string& command, const Options& opt) {
    std::string text;
    if (opt.in.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream fin(opt.in);
        if (!fin) return fail_early(opt, "request: cannot read " + opt.in);
        std::ostringstream ss;
        ss << fin.rdbuf();
        text = ss.str();
    }

    hensel::Json payload = hensel::Json::parse(text, nullptr, false);
    if (payload.is_discarded())
        return fail_early(opt, "request: input is not valid JSON");

    // The input document is the command payload. An embedded precision
    // policy is lifted into the request proper; flags override its fields.
    hensel::Json precision;
    if (payload.is_object() && payload.contains("precision")) {
        precision = payload["precision"];
        payload.erase("precision");
    }
    if (opt.precision > 0) precision["initial"] = opt.precision;
    if (opt.growth > 0) precision["growth"] = opt.growth;
    if (opt.max_precision > 0) precision["max"] = opt.max_precision;

    hensel::Json request;
    request["command"] = command;
    request["payload"] = payload;
    if (!precision.is_null()) request["precision"] = precision;
    if (opt.trace) request["trace"] = true;
    if (opt.have_seed) request["seed"] = opt.seed;

    return emit(opt, hensel::run_request(request));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Newton polygons, one-step Hensel lifting, and certified kernel "
        "decisions over discretely valuated fields"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::pair<std::string, CLI::App*>> subs;
    const auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--in", opt.in, "read the input document from this file (default: stdin)");
        sub->add_option("--out", opt.out, "write the response to this file (default: stdout)");
        sub->add_option("--precision", opt.precision, "initial working precision (default 8)");
        sub->add_option("--growth", opt.growth, "precision growth factor (default 2)");
        sub->add_option("--max-precision", opt.max_precision, "precision ceiling (default 512)");
        sub->add_flag("--trace", opt.trace, "attach a step-by-step trace to the response");
        sub->add_option("--seed", opt.seed, "seed recorded with the request");
        subs.emplace_back(name, sub);
    };

    add("polygon", "Newton polygon of a polynomial: vertices, slopes, isolated segments");
    add("lift", "one-step Hensel lifting: the unique zero to the requested precision");
    add("special", "zero of a polynomial in special form (v(t0) > 0, v(t1) = 0)");
    add("chain", "transformation chain reducing an isolated slope to special form");
    add("extval", "valuation of Q(alpha) in the extension attached to f");
    add("charpoly", "characteristic polynomial of multiplication by q on R_f");
    add("validate", "check a setup against the valuation axioms");
    add("decide", "decide whether q lies in ker(theta_f), with certificate");

    CLI11_PARSE(app, argc, argv);

    for (const auto& [name, sub] : subs) {
        if (!app.got_subcommand(sub)) continue;
        opt.have_seed = sub->count("--seed") > 0;
        return serve(name, opt);
    }
    std::cerr << "henselstep: no subcommand\n";
    return 3;
}
