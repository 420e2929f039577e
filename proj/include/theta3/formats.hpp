#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "theta3/floer.hpp"
#include "theta3/plumbing.hpp"
#include "theta3/seifert.hpp"

namespace theta3 {

/// Graph file: one record per line, `v <id> <weight>` then `e <id> <id>`;
/// `#` starts a comment; ids are ASCII tokens.
PlumbingGraph parse_graph(std::istream& in);
PlumbingGraph parse_graph_text(const std::string& text);

/// Splice-tree file: `node <id> a1 ... an`, `splice <id>:<pos> <id>:<pos>`
/// with 1-based fiber positions into the node's normalized fiber list.
SpliceTree parse_splice(std::istream& in);
SpliceTree parse_splice_text(const std::string& text);

SeifertData parse_seifert_tokens(const std::vector<std::string>& tokens);
FloerRanks parse_ranks_tokens(const std::vector<std::string>& tokens);

enum class InputKind { graph_file, seifert_inline, splice_file, ranks_inline };

struct ParsedInput {
    InputKind kind;
    std::string echo;  // the input line as given
    std::variant<PlumbingGraph, SeifertData, SpliceTree, FloerRanks> value;
};

/// One-line input: `seifert a1 ... an` | `ranks r0 ... r7` |
/// `graph <path>` | `splice <path>`. File paths are read eagerly.
ParsedInput parse_input_line(const std::string& line);

std::vector<std::string> split_tokens(const std::string& line);

}  // namespace theta3
