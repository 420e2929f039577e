#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "theta3/checks.hpp"
#include "theta3/report.hpp"

namespace {

using theta3::Error;
using theta3::Errc;
using theta3::Int;
using theta3::Json;
using theta3::ParsedInput;

struct Options {
    std::string format = "text";
    double tolerance = 1e-6;
    std::string batch;
};

void emit(const Json& doc, const Options& opt) {
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << theta3::render_text(doc);
}

ParsedInput parse_tokens(const std::vector<std::string>& tokens) {
    std::string line;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) line += " ";
        line += tokens[i];
    }
    return theta3::parse_input_line(line);
}

// Narrow single-invariant documents keyed by subcommand name.
Json narrow_report(const std::string& what, const ParsedInput& in, const Options& opt) {
    Json j;
    j["input"] = in.echo;
    if (what == "mubar" || what == "rochlin") {
        Int mu;
        switch (in.kind) {
            case theta3::InputKind::seifert_inline:
                mu = theta3::mubar_seifert(std::get<theta3::SeifertData>(in.value));
                break;
            case theta3::InputKind::graph_file:
                mu = theta3::mubar(std::get<theta3::PlumbingGraph>(in.value)).value;
                break;
            case theta3::InputKind::splice_file:
                mu = theta3::splice_mubar(std::get<theta3::SpliceTree>(in.value));
                break;
            default:
                theta3::fail(Errc::ParseError, what + " needs a seifert, graph or splice input");
        }
        if (what == "mubar")
            j["mubar"] = theta3::json_int(mu);
        else
            j["rochlin"] = theta3::mod_floor(mu, 2).convert_to<int>();
        return j;
    }
    if (what == "r") {
        if (in.kind != theta3::InputKind::seifert_inline)
            theta3::fail(Errc::ParseError, "r needs a seifert input");
        theta3::RValue r =
            theta3::r_invariant(std::get<theta3::SeifertData>(in.value), opt.tolerance);
        j["r"] = {{"value", theta3::json_int(r.value)}, {"residual", r.residual}};
        return j;
    }
    if (what == "casson") {
        if (in.kind == theta3::InputKind::ranks_inline) {
            j["casson"] = theta3::json_rat(
                theta3::casson_from_ranks(std::get<theta3::FloerRanks>(in.value)));
            return j;
        }
        if (in.kind == theta3::InputKind::seifert_inline) {
            const auto& s = std::get<theta3::SeifertData>(in.value);
            if (!s.is_triple())
                theta3::fail(Errc::InvalidSeifertData,
                             "casson is computed for three-fiber Seifert data only");
            theta3::CassonValue cv =
                theta3::casson_brieskorn(s.fibers()[0], s.fibers()[1], s.fibers()[2]);
            theta3::CassonBoundTest bt =
                theta3::casson_bound_test(s.fibers()[0], s.fibers()[1], s.fibers()[2]);
            j["casson"] = {{"lambda", theta3::json_int(cv.lambda)},
                           {"milnor_signature", theta3::json_int(cv.milnor_signature)},
                           {"milnor_rank", theta3::json_int(cv.milnor_rank)},
                           {"bound", theta3::json_rat(bt.bound)},
                           {"bound_violated", bt.violated},
                           {"mirror_bound_violated", bt.mirror_violated}};
            return j;
        }
        theta3::fail(Errc::ParseError, "casson needs a seifert triple or ranks input");
    }
    if (what == "nu") {
        if (in.kind != theta3::InputKind::ranks_inline)
            theta3::fail(Errc::ParseError, "nu needs a ranks input");
        theta3::NuValue nu = theta3::nu_from_ranks(std::get<theta3::FloerRanks>(in.value));
        j["nu"] = theta3::json_rat(nu.value);
        j["nu_numerator"] = theta3::json_int(nu.numerator);
        return j;
    }
    theta3::fail(Errc::ParseError, "unknown command '" + what + "'");
}

Json run_one(const std::string& cmd, const std::string& line, const Options& opt) {
    ParsedInput in = theta3::parse_input_line(line);
    if (cmd == "invariants") return theta3::build_report(in, opt.tolerance, false);
    if (cmd == "report") return theta3::build_report(in, opt.tolerance, true);
    return narrow_report(cmd, in, opt);
}

int run_value_command(const std::string& cmd, const std::vector<std::string>& tokens,
                      const Options& opt) {
    if (!opt.batch.empty()) {
        if (!tokens.empty())
            theta3::fail(Errc::ParseError, "--batch replaces the inline input");
        std::ifstream f(opt.batch);
        if (!f) theta3::fail(Errc::ParseError, "cannot open batch file '" + opt.batch + "'");
        Json batch = Json::array();
        std::string line;
        std::size_t lineno = 0;
        bool any_failed = false;
        while (std::getline(f, line)) {
            ++lineno;
            if (theta3::split_tokens(line).empty()) continue;  // blank or comment-only line
            Json entry;
            entry["line"] = lineno;
            try {
                entry["report"] = run_one(cmd, line, opt);
                entry["ok"] = true;
            } catch (const Error& e) {
                entry.update(theta3::error_json(e));
                entry["ok"] = false;
                any_failed = true;
                std::cerr << "line " << lineno << ": " << e.what() << "\n";
            }
            batch.push_back(std::move(entry));
        }
        emit(Json{{"batch", std::move(batch)}}, opt);
        return any_failed ? 1 : 0;
    }
    ParsedInput in = parse_tokens(tokens);
    Json doc = cmd == "invariants"  ? theta3::build_report(in, opt.tolerance, false)
               : cmd == "report"    ? theta3::build_report(in, opt.tolerance, true)
                                    : narrow_report(cmd, in, opt);
    emit(doc, opt);
    return 0;
}

int run_check_command(const std::string& suite, const Options& opt) {
    std::vector<theta3::CheckOutcome> outcomes = theta3::run_check(suite, opt.tolerance);
    Json arr = Json::array();
    bool all_ok = true;
    for (const auto& o : outcomes) {
        all_ok = all_ok && o.ok();
        Json j = {{"suite", o.suite},
                  {"passed", o.passed},
                  {"failed", o.failed},
                  {"ok", o.ok()}};
        if (!o.failures.empty()) j["failures"] = o.failures;
        arr.push_back(std::move(j));
        std::cerr << (o.ok() ? "PASS " : "FAIL ") << o.suite << " (" << o.passed << " passed, "
                  << o.failed << " failed)\n";
    }
    emit(Json{{"check", std::move(arr)}, {"ok", all_ok}}, opt);
    return all_ok ? 0 : 1;
}

int run_family_command(const std::string& name, const std::vector<std::string>& params,
                       long long k, const std::string& sign_s, const Options& opt) {
    std::vector<Int> base;
    for (const auto& t : params) base.emplace_back(t);
    const int sign = sign_s == "-" ? -1 : +1;
    Json j;
    if (name == "surgery") {
        theta3::SeifertData s = theta3::surgery_family(base, Int(k), sign);
        j["family"] = {{"name", "surgery"}, {"k", k}, {"sign", sign}};
        j["member"] = s.label();
        j["mubar"] = theta3::json_int(theta3::mubar_seifert(s));
    } else if (name == "torus-knot") {
        if (base.size() != 2)
            theta3::fail(Errc::InvalidSeifertData, "torus-knot family needs p and q");
        if (k < 1 || k % 2 == 0)
            theta3::fail(Errc::InvalidSeifertData, "torus-knot family needs odd k > 0");
        std::vector<Int> inv = {base[0], base[1], base[0] * base[1] * k + 1};
        theta3::SeifertData s(std::move(inv));
        j["family"] = {{"name", "torus-knot"}, {"k", k}};
        j["member"] = s.label();
        j["mubar"] = theta3::json_int(theta3::mubar_seifert(s));
        j["note"] = "neither this sphere nor any multiple bounds a smooth contractible 4-manifold";
    } else {
        theta3::fail(Errc::ParseError, "unknown family '" + name + "' (want surgery|torus-knot)");
    }
    emit(j, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homology-cobordism invariants of plumbed and Seifert fibered"
                 " homology 3-spheres"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--tolerance", opt.tolerance, "R-invariant rounding residual bound")
        ->capture_default_str();
    app.add_option("--batch", opt.batch, "file with one input per line");

    const std::vector<std::string> value_cmds = {"invariants", "report", "mubar",
                                                 "rochlin",    "r",      "casson", "nu"};
    std::map<std::string, std::vector<std::string>> inputs;
    for (const auto& name : value_cmds) {
        auto* sub = app.add_subcommand(
            name, name == "invariants" ? "all invariants for an input"
                  : name == "report"   ? "invariants plus obstruction verdicts"
                                       : "the " + name + " invariant");
        sub->fallthrough();
        sub->add_option("input", inputs[name],
                        "input: seifert a1.. | ranks r0..r7 | graph FILE | splice FILE");
    }

    auto* check = app.add_subcommand("check", "run a named property suite");
    check->fallthrough();
    std::string suite;
    check->add_option("suite", suite, "suite name or 'all'")->required();

    auto* family = app.add_subcommand("family", "generate a family member");
    family->fallthrough();
    std::string family_name, family_sign = "+";
    std::vector<std::string> family_params;
    long long family_k = 1;
    family->add_option("name", family_name, "surgery | torus-knot")->required();
    family->add_option("params", family_params, "base invariants")->required();
    family->add_option("--k", family_k, "family parameter k")->capture_default_str();
    family->add_option("--sign", family_sign, "+ or -")
        ->check(CLI::IsMember({"+", "-"}));

    try {
        app.parse(argc, argv);
        for (const auto& name : value_cmds)
            if (app.get_subcommand(name)->parsed())
                return run_value_command(name, inputs[name], opt);
        if (check->parsed()) return run_check_command(suite, opt);
        if (family->parsed())
            return run_family_command(family_name, family_params, family_k, family_sign, opt);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error [" << theta3::errc_name(e.code()) << "]: " << e.what() << "\n";
        if (opt.format == "json") std::cout << theta3::error_json(e).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
