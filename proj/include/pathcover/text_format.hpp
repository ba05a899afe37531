#ifndef PATHCOVER_TEXT_FORMAT_HPP
#define PATHCOVER_TEXT_FORMAT_HPP

#include <string>
#include <utility>
#include <vector>

namespace pathcover::detail {

/// Shared tokenizer for the arc/edge list format: first token is the
/// order, remaining tokens come in pairs. Whitespace and ';' separate
/// tokens; '#' comments run to end of line. Labels are collected as-is;
/// remapping to dense ids happens in the graph constructors' callers.
struct PairDocument {
    int order = 0;
    std::vector<std::pair<long long, long long>> raw_pairs; // labels as written
    std::vector<std::pair<int, int>> pairs;                 // dense ids
    std::vector<long long> labels;                          // new id -> label; empty if identity
};

PairDocument parse_pair_document(const std::string& text);

} // namespace pathcover::detail

#endif
