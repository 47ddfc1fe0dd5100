#include "oct/instance_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "oct/errors.hpp"

namespace oct {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "malformed " + what + " '" + std::string(tok) + "'");
    return value;
}

// Grammar form <num>[/<den>] with integer parts; den must be positive.
Rational parse_weight(std::string_view tok, int line) {
    std::size_t slash = tok.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(tok, line, "weight"));
    long long num = parse_int(tok.substr(0, slash), line, "weight numerator");
    long long den = parse_int(tok.substr(slash + 1), line, "weight denominator");
    if (den == 0) throw ParseError(line, "weight denominator is zero");
    if (den < 0) throw ParseError(line, "weight denominator must be positive");
    return Rational(num, den);
}

}  // namespace

Instance parse_instance(std::string_view text) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> weights;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        std::string_view kind = tokens[0];
        if (kind == "c") continue;

        if (kind == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "oct")
                throw ParseError(line_no, "malformed header; expected 'p oct <n> <m>'");
            long long nn = parse_int(tokens[2], line_no, "vertex count");
            long long mm = parse_int(tokens[3], line_no, "edge count");
            if (nn < 0 || mm < 0) throw ParseError(line_no, "negative count in header");
            n = static_cast<int>(nn);
            weights.assign(n, Rational(1));
            continue;
        }
        if (n < 0) throw ParseError(line_no, "'" + std::string(kind) + "' line before header");

        if (kind == "e") {
            if (tokens.size() != 3) throw ParseError(line_no, "malformed edge line");
            long long u = parse_int(tokens[1], line_no, "vertex id");
            long long v = parse_int(tokens[2], line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
            if (u == v) throw ParseError(line_no, "self-loop rejected");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        if (kind == "w") {
            if (tokens.size() != 3) throw ParseError(line_no, "malformed weight line");
            long long v = parse_int(tokens[1], line_no, "vertex id");
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
            weights[v - 1] = parse_weight(tokens[2], line_no);
            continue;
        }
        throw ParseError(line_no, "unknown line kind '" + std::string(kind) + "'");
    }
    if (n < 0) throw ParseError(line_no, "missing header");

    return Instance{Graph::build(n, edges), Weights(std::move(weights))};
}

std::string serialize_instance(const Graph& g, const Weights& w) {
    std::ostringstream out;
    out << "p oct " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u) {
        VertexSet nb = g.neighbors(u);
        for (int v = nb.next(u); v != -1; v = nb.next(v))
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (w[v] == Rational(1)) continue;
        out << "w " << v + 1 << ' ' << w[v].num();
        if (w[v].den() != 1) out << '/' << w[v].den();
        out << '\n';
    }
    return out.str();
}

}  // namespace oct
