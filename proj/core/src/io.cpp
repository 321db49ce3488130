#include "rgt/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rgt/catalog.hpp"

namespace rgt {

namespace {

struct Token {
    std::string text;
    std::size_t line, column;
};

bool name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line = 1, col = 1;
    lines.push_back({});
    auto current = [&]() -> std::vector<Token>& { return lines.back(); };
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (c == '\n') {
            lines.push_back({});
            ++line;
            col = 1;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
        } else if (c == ':') {
            current().push_back({":", line, col});
            ++i;
            ++col;
        } else if (name_char(c) || c == '.') {
            const std::size_t start = i, startcol = col;
            while (i < text.size() && (name_char(text[i]) || text[i] == '.')) {
                ++i;
                ++col;
            }
            current().push_back({std::string(text.substr(start, i - start)), line,
                                 startcol});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line,
                             col);
        }
    }
    return lines;
}

}  // namespace

RibbonGraph parse_rg(std::string_view text) {
    std::vector<std::string> vertex_names;
    std::vector<std::vector<std::pair<Token, Token>>> raw_rotations;  // (edge, end)
    std::vector<Token> twist_tokens;

    for (const auto& toks : tokenize(text)) {
        if (toks.empty()) continue;
        const Token& head = toks[0];
        if (head.text == "vertex") {
            if (toks.size() < 3 || toks[2].text != ":")
                throw ParseError("expected 'vertex <name>:'", head.line, head.column);
            vertex_names.push_back(toks[1].text);
            raw_rotations.push_back({});
            for (std::size_t i = 3; i < toks.size(); ++i) {
                const Token& t = toks[i];
                const auto dot = t.text.rfind('.');
                if (dot == std::string::npos || dot == 0 ||
                    dot + 2 != t.text.size() ||
                    (t.text[dot + 1] != '0' && t.text[dot + 1] != '1'))
                    throw ParseError("expected dart '<edge>.0' or '<edge>.1', got '" +
                                         t.text + "'",
                                     t.line, t.column);
                Token edge{t.text.substr(0, dot), t.line, t.column};
                Token end{t.text.substr(dot + 1), t.line, t.column + dot + 1};
                raw_rotations.back().push_back({edge, end});
            }
        } else if (head.text == "twist") {
            if (toks.size() < 2)
                throw ParseError("'twist' needs at least one edge name", head.line,
                                 head.column);
            for (std::size_t i = 1; i < toks.size(); ++i)
                twist_tokens.push_back(toks[i]);
        } else {
            throw ParseError("expected 'vertex' or 'twist', got '" + head.text + "'",
                             head.line, head.column);
        }
    }

    // edge ids by first appearance
    std::vector<std::string> edge_names;
    std::map<std::string, std::uint32_t> edge_id;
    std::map<std::pair<std::string, int>, Token> seen_darts;
    std::vector<std::vector<Dart>> rotations;
    for (const auto& raw : raw_rotations) {
        rotations.push_back({});
        for (const auto& [edge, end] : raw) {
            const int endv = end.text[0] - '0';
            auto it = edge_id.find(edge.text);
            if (it == edge_id.end()) {
                it = edge_id.emplace(edge.text,
                                     static_cast<std::uint32_t>(edge_names.size()))
                         .first;
                edge_names.push_back(edge.text);
            }
            const auto key = std::make_pair(edge.text, endv);
            if (auto dup = seen_darts.find(key); dup != seen_darts.end())
                throw ParseError("duplicate half-edge '" + edge.text + "." +
                                     std::to_string(endv) + "'",
                                 edge.line, edge.column);
            seen_darts.emplace(key, edge);
            rotations.back().push_back(
                Dart{it->second, static_cast<std::uint8_t>(endv)});
        }
    }
    for (const auto& [name, id] : edge_id) {
        for (int endv = 0; endv < 2; ++endv) {
            if (!seen_darts.count({name, endv})) {
                const Token& where = seen_darts.at({name, 1 - endv});
                throw ParseError("half-edge '" + name + "." + std::to_string(endv) +
                                     "' has no partner",
                                 where.line, where.column);
            }
        }
    }

    std::vector<bool> twists(edge_names.size(), false);
    for (const Token& t : twist_tokens) {
        auto it = edge_id.find(t.text);
        if (it == edge_id.end())
            throw ParseError("twist line names unknown edge '" + t.text + "'",
                             t.line, t.column);
        twists[it->second] = true;
    }

    return RibbonGraph::from_rotations(std::move(rotations), std::move(twists),
                                       std::move(vertex_names),
                                       std::move(edge_names));
}

std::string render_rg(const RibbonGraph& g) {
    const RibbonGraph n = normalize_presentation(g);
    std::ostringstream out;
    for (std::size_t v = 0; v < n.vertex_count(); ++v) {
        out << "vertex " << n.vertex_name(v) << ":";
        for (const Dart& d : n.rotation(v))
            out << " " << n.edge_name(d.edge) << "." << unsigned(d.end);
        out << "\n";
    }
    std::vector<std::string> twisted;
    for (std::size_t e = 0; e < n.edge_count(); ++e)
        if (n.twists()[e]) twisted.push_back(n.edge_name(e));
    std::sort(twisted.begin(), twisted.end());
    for (const auto& name : twisted) out << "twist " << name << "\n";
    return out.str();
}

}  // namespace rgt
