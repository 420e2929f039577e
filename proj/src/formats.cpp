#include "theta3/formats.hpp"

#include <fstream>
#include <sstream>

namespace theta3 {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
    fail(Errc::ParseError,
         "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

// Tokens with their 1-based starting columns.
std::vector<std::pair<std::string, std::size_t>> tokens_with_columns(const std::string& line) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.emplace_back(line.substr(start, i - start), start + 1);
    }
    return out;
}

Int parse_int(const std::string& tok, std::size_t line, std::size_t col) {
    try {
        // cpp_int's string ctor accepts junk-free decimal only; validate shape first
        if (tok.empty()) throw std::invalid_argument("empty");
        std::size_t pos = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (pos == tok.size()) throw std::invalid_argument("sign only");
        for (std::size_t i = pos; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw std::invalid_argument("not a digit");
        return tok[0] == '+' ? Int(tok.substr(1)) : Int(tok);
    } catch (const std::exception&) {
        parse_fail(line, col, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

PlumbingGraph parse_graph(std::istream& in) {
    PlumbingGraph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_with_columns(line);
        if (toks.empty()) continue;
        const auto& [kw, kwcol] = toks[0];
        if (kw == "v") {
            if (toks.size() != 3) parse_fail(lineno, kwcol, "expected `v <id> <weight>`");
            Int w = parse_int(toks[2].first, lineno, toks[2].second);
            try {
                g.add_vertex(toks[1].first, std::move(w));
            } catch (const Error& e) {
                parse_fail(lineno, toks[1].second, e.what());
            }
        } else if (kw == "e") {
            if (toks.size() != 3) parse_fail(lineno, kwcol, "expected `e <id> <id>`");
            try {
                g.add_edge(toks[1].first, toks[2].first);
            } catch (const Error& e) {
                parse_fail(lineno, toks[1].second, e.what());
            }
        } else {
            parse_fail(lineno, kwcol, "unknown record '" + kw + "'");
        }
    }
    return g;
}

PlumbingGraph parse_graph_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

namespace {

std::pair<std::string, std::size_t> split_fiber_ref(const std::string& tok, std::size_t line,
                                                    std::size_t col) {
    auto colon = tok.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
        parse_fail(line, col, "expected `<id>:<fiber-pos>`, got '" + tok + "'");
    Int pos = parse_int(tok.substr(colon + 1), line, col);
    if (pos < 1 || pos > 1000000) parse_fail(line, col, "fiber position out of range");
    return {tok.substr(0, colon), pos.convert_to<std::size_t>()};
}

}  // namespace

SpliceTree parse_splice(std::istream& in) {
    SpliceTree t;
    std::string line;
    std::size_t lineno = 0;
    auto node_index = [&](const std::string& id, std::size_t col) {
        for (std::size_t i = 0; i < t.nodes.size(); ++i)
            if (t.nodes[i].id == id) return i;
        parse_fail(lineno, col, "unknown splice node '" + id + "'");
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_with_columns(line);
        if (toks.empty()) continue;
        const auto& [kw, kwcol] = toks[0];
        if (kw == "node") {
            if (toks.size() < 3) parse_fail(lineno, kwcol, "expected `node <id> a1 ...`");
            std::vector<Int> inv;
            for (std::size_t i = 2; i < toks.size(); ++i)
                inv.push_back(parse_int(toks[i].first, lineno, toks[i].second));
            try {
                t.nodes.push_back(SpliceTree::Node{toks[1].first, SeifertData(std::move(inv))});
            } catch (const Error& e) {
                parse_fail(lineno, toks[2].second, e.what());
            }
        } else if (kw == "splice") {
            if (toks.size() != 3)
                parse_fail(lineno, kwcol, "expected `splice <id>:<pos> <id>:<pos>`");
            auto [ida, pa] = split_fiber_ref(toks[1].first, lineno, toks[1].second);
            auto [idb, pb] = split_fiber_ref(toks[2].first, lineno, toks[2].second);
            t.edges.push_back(SpliceTree::Edge{node_index(ida, toks[1].second), pa,
                                               node_index(idb, toks[2].second), pb});
        } else {
            parse_fail(lineno, kwcol, "unknown record '" + kw + "'");
        }
    }
    validate_splice_tree(t);
    return t;
}

SpliceTree parse_splice_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_splice(ss);
}

SeifertData parse_seifert_tokens(const std::vector<std::string>& tokens) {
    if (tokens.empty()) fail(Errc::ParseError, "seifert input needs at least one invariant");
    std::vector<Int> inv;
    for (std::size_t i = 0; i < tokens.size(); ++i) inv.push_back(parse_int(tokens[i], 1, i + 1));
    return SeifertData(std::move(inv));
}

FloerRanks parse_ranks_tokens(const std::vector<std::string>& tokens) {
    if (tokens.size() != 8) fail(Errc::ParseError, "ranks input needs exactly eight integers");
    FloerRanks f;
    for (std::size_t i = 0; i < 8; ++i) {
        f.ranks[i] = parse_int(tokens[i], 1, i + 1);
        if (f.ranks[i] < 0) fail(Errc::ParseError, "rank r" + std::to_string(i) + " is negative");
    }
    return f;
}

ParsedInput parse_input_line(const std::string& line) {
    std::vector<std::string> toks = split_tokens(line);
    if (toks.empty()) fail(Errc::ParseError, "empty input");
    const std::string kind = toks[0];
    std::vector<std::string> rest(toks.begin() + 1, toks.end());
    if (kind == "seifert")
        return ParsedInput{InputKind::seifert_inline, line, parse_seifert_tokens(rest)};
    if (kind == "ranks")
        return ParsedInput{InputKind::ranks_inline, line, parse_ranks_tokens(rest)};
    if (kind == "graph" || kind == "splice") {
        if (rest.size() != 1) fail(Errc::ParseError, "expected `" + kind + " <file>`");
        std::ifstream f(rest[0]);
        if (!f) fail(Errc::ParseError, "cannot open file '" + rest[0] + "'");
        if (kind == "graph")
            return ParsedInput{InputKind::graph_file, line, parse_graph(f)};
        return ParsedInput{InputKind::splice_file, line, parse_splice(f)};
    }
    fail(Errc::ParseError, "unknown input kind '" + kind + "' (want seifert|ranks|graph|splice)");
}

}  // namespace theta3
