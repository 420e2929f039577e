#include "theta3/report.hpp"

#include <limits>
#include <sstream>

namespace theta3 {

Json json_int(const Int& v) {
    static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
    static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
    if (v >= kMin && v <= kMax) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Json json_rat(const Rat& v) {
    if (denominator(v) == 1) return json_int(numerator(v));
    return Json(numerator(v).str() + "/" + denominator(v).str());
}

namespace {

Json fibers_json(const SeifertData& s) {
    Json arr = Json::array();
    for (const Int& f : s.fibers()) arr.push_back(json_int(f));
    return arr;
}

Json form_json(const FormSummary& fs) {
    Json j;
    j["rank"] = fs.rank;
    j["n_plus"] = fs.n_plus;
    j["n_minus"] = fs.n_minus;
    j["n_zero"] = fs.n_zero;
    j["signature"] = json_int(fs.signature());
    j["determinant"] = json_int(fs.determinant);
    j["parity"] = fs.parity == Parity::even ? "even" : "odd";
    return j;
}

Json verdicts_json(const std::vector<Verdict>& vs) {
    Json arr = Json::array();
    for (const Verdict& v : vs) {
        Json j;
        j["criterion"] = v.criterion;
        j["outcome"] = outcome_name(v.outcome);
        j["certificate"] = v.certificate;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

Json report_for_seifert(const SeifertData& s, double tolerance, bool with_verdicts) {
    Json j;
    j["input"] = {{"kind", "seifert"}, {"fibers", fibers_json(s)}, {"label", s.label()}};

    PlumbingGraph g = canonical_plumbing(s);
    IntersectionMatrix m = build_intersection_matrix(g);
    FormSummary fs = signature(m);
    MubarValue mu = mubar(g);
    WuClass w = wu_class(g);
    RValue r = r_invariant(s, tolerance);

    Json inv;
    inv["mubar"] = json_int(mu.value);
    inv["rochlin"] = mod_floor(mu.value, 2).convert_to<int>();
    inv["r"] = {{"value", json_int(r.value)}, {"residual", r.residual}};
    if (s.is_triple()) {
        CassonValue cv = casson_brieskorn(s.fibers()[0], s.fibers()[1], s.fibers()[2]);
        inv["casson"] = {{"lambda", json_int(cv.lambda)},
                         {"milnor_signature", json_int(cv.milnor_signature)},
                         {"milnor_rank", json_int(cv.milnor_rank)}};
    }
    j["invariants"] = std::move(inv);

    Json wj = Json::array();
    for (int c : w.coords) wj.push_back(c);
    j["diagnostics"] = {{"plumbing_vertices", g.size()},
                        {"form", form_json(fs)},
                        {"mubar_sign_term", json_int(mu.sign_term)},
                        {"mubar_ww_term", json_int(mu.ww_term)},
                        {"wu_class", std::move(wj)}};

    if (with_verdicts) {
        ObstructionReport rep = obstruction_report(s, tolerance);
        j["verdicts"] = verdicts_json(rep.verdicts);
    }
    return j;
}

Json report_for_graph(const PlumbingGraph& g) {
    Json j;
    Json verts = Json::array();
    for (const auto& v : g.vertices()) verts.push_back({{"id", v.id}, {"weight", json_int(v.weight)}});
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back({{"a", g.vertices()[a].id}, {"b", g.vertices()[b].id}});
    j["input"] = {{"kind", "graph"}, {"vertices", std::move(verts)}, {"edges", std::move(edges)}};

    IntersectionMatrix m = build_intersection_matrix(g);
    FormSummary fs = signature(m);
    j["form"] = form_json(fs);
    j["homology_sphere"] = abs_int(fs.determinant) == 1;

    if (abs_int(fs.determinant) == 1) {
        MubarValue mu = mubar(g);
        WuClass w = wu_class(g);
        Json wj = Json::array();
        for (int c : w.coords) wj.push_back(c);
        j["invariants"] = {{"mubar", json_int(mu.value)},
                           {"rochlin", mod_floor(mu.value, 2).convert_to<int>()},
                           {"mubar_sign_term", json_int(mu.sign_term)},
                           {"mubar_ww_term", json_int(mu.ww_term)},
                           {"wu_class", std::move(wj)}};
        MubarObstruction ob = mubar_obstruction(g);
        j["mubar_obstruction"] = {{"negative_definite", ob.applies},
                                  {"bounds_ball_excluded", ob.bounds_ball_excluded}};
        if (fs.parity == Parity::even && fs.n_plus > 0 && fs.n_minus > 0) {
            EvenFormClass c = even_form_classify(m);
            j["even_form"] = {{"e8_count", json_int(c.e8_count)},
                              {"h_count", json_int(c.h_count)},
                              {"ten_eighths_admissible",
                               fs.signature() == 0 ? true
                                                   : ten_eighths_check(Int(fs.rank), fs.signature())}};
        }
    }
    return j;
}

Json report_for_ranks(const FloerRanks& f) {
    Json j;
    Json arr = Json::array();
    for (const Int& r : f.ranks) arr.push_back(json_int(r));
    j["input"] = {{"kind", "ranks"}, {"ranks", std::move(arr)}};
    NuValue nu = nu_from_ranks(f);
    j["invariants"] = {{"nu", json_rat(nu.value)},
                       {"nu_numerator", json_int(nu.numerator)},
                       {"casson", json_rat(casson_from_ranks(f))},
                       {"two_periodic", is_two_periodic(f)},
                       {"four_periodic", is_four_periodic(f)}};
    return j;
}

Json report_for_splice(const SpliceTree& t) {
    Json j;
    Json nodes = Json::array();
    for (const auto& node : t.nodes)
        nodes.push_back({{"id", node.id}, {"fibers", fibers_json(node.data)}});
    Json edges = Json::array();
    for (const auto& e : t.edges)
        edges.push_back({{"a", t.nodes[e.node_a].id},
                         {"a_fiber", e.fiber_a},
                         {"b", t.nodes[e.node_b].id},
                         {"b_fiber", e.fiber_b}});
    j["input"] = {{"kind", "splice"}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};

    Json per_node = Json::array();
    Int total = 0;
    for (const auto& node : t.nodes) {
        Int mu = mubar_seifert(node.data);
        total += mu;
        per_node.push_back({{"id", node.id}, {"mubar", json_int(mu)}});
    }
    Json alg = Json::array();
    for (const auto& e : t.edges) {
        const auto& na = t.nodes[e.node_a];
        const auto& nb = t.nodes[e.node_b];
        if (na.data.is_triple() && nb.data.is_triple())
            alg.push_back({{"a", na.id},
                           {"b", nb.id},
                           {"algebraic", is_algebraic_splice(na.data, e.fiber_a, nb.data, e.fiber_b)}});
    }
    j["invariants"] = {{"mubar", json_int(total)}, {"node_mubar", std::move(per_node)}};
    if (!alg.empty()) j["algebraic_splice"] = std::move(alg);
    return j;
}

Json build_report(const ParsedInput& input, double tolerance, bool with_verdicts) {
    switch (input.kind) {
        case InputKind::seifert_inline:
            return report_for_seifert(std::get<SeifertData>(input.value), tolerance, with_verdicts);
        case InputKind::graph_file:
            return report_for_graph(std::get<PlumbingGraph>(input.value));
        case InputKind::ranks_inline:
            return report_for_ranks(std::get<FloerRanks>(input.value));
        case InputKind::splice_file:
            return report_for_splice(std::get<SpliceTree>(input.value));
    }
    throw std::logic_error("unreachable input kind");
}

Json error_json(const Error& e) {
    return Json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

namespace {

bool scalar_array(const Json& j) {
    for (const auto& v : j)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

void render(const Json& j, std::ostringstream& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !scalar_array(v))) {
                out << pad << k << ":\n";
                render(v, out, depth + 1);
            } else if (v.is_array()) {
                out << pad << k << ":";
                for (const auto& e : v) out << " " << e.dump();
                out << "\n";
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out << pad << "-\n";
                render(v, out, depth + 1);
            } else {
                out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream out;
    render(j, out, 0);
    return out.str();
}

}  // namespace theta3
