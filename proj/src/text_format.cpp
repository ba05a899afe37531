#include "pathcover/text_format.hpp"

#include <algorithm>
#include <cctype>

#include "pathcover/errors.hpp"

namespace pathcover::detail {

namespace {

struct Token {
    long long value;
    int line;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            std::string num = text.substr(i, j - i);
            if (num.size() > 18) throw ParseError(line, "number too large: " + num);
            tokens.push_back({std::stoll(num), line});
            i = j;
        } else {
            throw ParseError(line, std::string("unexpected character '") + c + "'");
        }
    }
    return tokens;
}

} // namespace

PairDocument parse_pair_document(const std::string& text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw ParseError(1, "missing order");
    if (tokens.size() % 2 == 0)
        throw ParseError(tokens.back().line, "dangling endpoint: pairs are incomplete");

    PairDocument doc;
    if (tokens[0].value > (1 << 20)) throw ParseError(tokens[0].line, "order too large");
    doc.order = static_cast<int>(tokens[0].value);

    bool dense = true;
    for (size_t i = 1; i < tokens.size(); i += 2) {
        long long u = tokens[i].value, v = tokens[i + 1].value;
        doc.raw_pairs.emplace_back(u, v);
        if (u >= doc.order || v >= doc.order) dense = false;
    }

    if (dense) {
        for (auto& [u, v] : doc.raw_pairs)
            doc.pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        return doc;
    }

    // Non-dense labels: remap distinct labels in ascending order.
    std::vector<long long> labels;
    for (auto& [u, v] : doc.raw_pairs) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (static_cast<int>(labels.size()) > doc.order)
        throw VertexRangeError("more distinct labels than the declared order");
    auto id_of = [&](long long label) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    for (auto& [u, v] : doc.raw_pairs) doc.pairs.emplace_back(id_of(u), id_of(v));
    doc.labels = std::move(labels);
    return doc;
}

} // namespace pathcover::detail
