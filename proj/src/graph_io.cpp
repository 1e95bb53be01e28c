#include "gal/graph_io.hpp"

#include "gal/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gal {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_index(std::string_view tok, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected a vertex index, got '" + std::string(tok) + "'", line);
    return value;
}

} // namespace

WeightedGraph parse_graph(std::string_view text)
{
    int n = -1;
    Graph g;
    std::vector<Rational> weights;
    std::vector<char> weight_seen;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tok = split_ws(line);
        if (tok.empty())
            continue;

        if (tok[0] == "p") {
            if (n >= 0)
                throw ParseError("duplicate header", line_no);
            if (tok.size() != 3 || tok[1] != "gal")
                throw ParseError("header must read 'p gal <n>'", line_no);
            n = parse_index(tok[2], line_no);
            if (n < 0)
                throw ParseError("negative vertex count", line_no);
            g = Graph(n);
            weights.assign(static_cast<size_t>(n), Rational(1));
            weight_seen.assign(static_cast<size_t>(n), 0);
            continue;
        }
        if (n < 0)
            throw ParseError("'" + std::string(tok[0]) + "' line before 'p gal' header", line_no);

        if (tok[0] == "e") {
            if (tok.size() != 3)
                throw ParseError("edge line must read 'e <u> <v>'", line_no);
            int u = parse_index(tok[1], line_no), v = parse_index(tok[2], line_no);
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("vertex out of range", line_no);
            if (u == v)
                throw ParseError("loop at vertex " + std::to_string(u), line_no);
            if (g.adjacent(u, v))
                throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
            g.add_edge(u, v);
        } else if (tok[0] == "w") {
            if (tok.size() != 3)
                throw ParseError("weight line must read 'w <v> <num>/<den>'", line_no);
            int v = parse_index(tok[1], line_no);
            if (v < 0 || v >= n)
                throw ParseError("vertex out of range", line_no);
            if (weight_seen[v])
                throw ParseError("duplicate weight for vertex " + std::to_string(v), line_no);
            Rational q;
            try {
                q = parse_rational(tok[2]);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no);
            }
            if (q < 0)
                throw ParseError("negative weight", line_no);
            weights[v] = q;
            weight_seen[v] = 1;
        } else {
            throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line_no);
        }
    }
    if (n < 0)
        throw ParseError("missing 'p gal <n>' header");
    return {std::move(g), Weights::exact(std::move(weights))};
}

std::string write_graph(const Graph& g, const Weights& w)
{
    std::ostringstream out;
    out << "p gal " << g.size() << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << u << " " << v << "\n";
    if (w.size() != g.size())
        throw InvalidArgument("weight count does not match vertex count");
    if (!w.is_all_ones()) {
        for (int v = 0; v < g.size(); ++v) {
            Rational q = w.is_exact() ? w.exact_values()[v] : Rational(w.value(v));
            out << "w " << v << " " << to_string(q) << "\n";
        }
    }
    return out.str();
}

std::string write_graph(const Graph& g)
{
    return write_graph(g, Weights::ones(g.size()));
}

WeightedGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const Graph& g, const Weights& w)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidArgument("cannot write '" + path + "'");
    out << write_graph(g, w);
}

} // namespace gal
