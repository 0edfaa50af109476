#include "boxicity/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace boxicity {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 1;
    while (!text.empty()) {
        auto end = text.find('\n');
        auto line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back({number++, line});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
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

bool blank(std::string_view line) { return tokens(line).empty(); }

template <typename Int>
Int to_int(std::string_view token, std::size_t line, const char* what) {
    Int value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
    return value;
}

Vertex to_vertex_count(std::string_view token, std::size_t line) {
    auto n = to_int<long long>(token, line, "vertex count");
    if (n < 0 || n > std::numeric_limits<Vertex>::max())
        throw parse_error(line, "vertex count " + std::to_string(n) + " out of range");
    return static_cast<Vertex>(n);
}

Edge to_edge(std::string_view a, std::string_view b, Vertex n, long long base, std::size_t line) {
    auto u = to_int<long long>(a, line, "vertex") - base;
    auto v = to_int<long long>(b, line, "vertex") - base;
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw parse_error(line, "edge " + std::string(a) + " " + std::string(b) + " out of range for n=" +
                                    std::to_string(n));
    if (u == v) throw parse_error(line, "self-loop at vertex " + std::string(a));
    return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    auto it = std::find_if(lines.begin(), lines.end(), [](const Line& l) { return !blank(l.text); });
    if (it == lines.end()) throw parse_error(0, "missing \"n m\" header");
    auto head = tokens(it->text);
    if (head.size() != 2) throw parse_error(it->number, "header must be \"n m\"");
    const Vertex n = to_vertex_count(head[0], it->number);
    const auto m = to_int<long long>(head[1], it->number, "edge count");
    if (m < 0) throw parse_error(it->number, "negative edge count");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (++it; it != lines.end(); ++it) {
        auto t = tokens(it->text);
        if (t.empty()) continue;
        if (t.size() != 2) throw parse_error(it->number, "edge line must be \"u v\"");
        if (static_cast<long long>(edges.size()) == m)
            throw parse_error(it->number, "more edges than the declared " + std::to_string(m));
        Edge e = to_edge(t[0], t[1], n, 0, it->number);
        if (!seen.insert(e).second)
            throw parse_error(it->number, "repeated edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        edges.push_back(e);
    }
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(0, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

Graph parse_dimacs(std::string_view text) {
    std::optional<Vertex> n;
    std::vector<Edge> edges;
    for (const Line& l : split_lines(text)) {
        auto t = tokens(l.text);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (n) throw parse_error(l.number, "second problem line");
            if (t.size() != 4) throw parse_error(l.number, "problem line must be \"p edge n m\"");
            n = to_vertex_count(t[2], l.number);
            to_int<long long>(t[3], l.number, "edge count");
        } else if (t[0] == "e") {
            if (!n) throw parse_error(l.number, "edge before problem line");
            if (t.size() != 3) throw parse_error(l.number, "edge line must be \"e u v\"");
            edges.push_back(to_edge(t[1], t[2], *n, 1, l.number));
        } else {
            throw parse_error(l.number, "unknown line type '" + std::string(t[0]) + "'");
        }
    }
    if (!n) throw parse_error(0, "missing problem line");
    return Graph::from_edges(*n, edges);
}

Graph parse_graph(std::string_view text) {
    for (const Line& l : split_lines(text)) {
        auto t = tokens(l.text);
        if (t.empty()) continue;
        if (t[0] == "c" || t[0] == "p") return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

std::string format_representation(const BoxRepresentation& b) {
    std::string out(kRepresentationHeader);
    out += '\n';
    out += std::to_string(b.order()) + " " + std::to_string(b.dimension()) + "\n";
    for (Vertex v = 0; v < b.order(); ++v) {
        for (std::size_t j = 0; j < b.dimension(); ++j) {
            const Interval& iv = b.dims()[j][v];
            if (j) out += ' ';
            out += std::to_string(iv.lo);
            out += ' ';
            out += std::to_string(iv.hi);
        }
        out += '\n';
    }
    return out;
}

BoxRepresentation parse_representation(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty() || lines[0].text != kRepresentationHeader)
        throw parse_error(1, "expected \"" + std::string(kRepresentationHeader) + "\"");
    if (lines.size() < 2) throw parse_error(2, "missing \"n d\" line");
    auto head = tokens(lines[1].text);
    if (head.size() != 2) throw parse_error(2, "expected \"n d\"");
    const Vertex n = to_vertex_count(head[0], 2);
    const auto d = to_int<long long>(head[1], 2, "dimension");
    if (d < 0) throw parse_error(2, "negative dimension");
    if (lines.size() < static_cast<std::size_t>(n) + 2)
        throw parse_error(0, "expected " + std::to_string(n) + " vertex lines, found " +
                                 std::to_string(lines.size() - 2));
    for (std::size_t i = static_cast<std::size_t>(n) + 2; i < lines.size(); ++i)
        if (!blank(lines[i].text)) throw parse_error(lines[i].number, "unexpected content after vertex lines");

    std::vector<std::vector<Interval>> dims(static_cast<std::size_t>(d),
                                            std::vector<Interval>(static_cast<std::size_t>(n)));
    for (Vertex v = 0; v < n; ++v) {
        const Line& l = lines[static_cast<std::size_t>(v) + 2];
        auto t = tokens(l.text);
        if (static_cast<long long>(t.size()) != 2 * d)
            throw parse_error(l.number, "expected " + std::to_string(2 * d) + " integers, found " +
                                            std::to_string(t.size()));
        for (long long j = 0; j < d; ++j) {
            Interval iv{to_int<Coord>(t[2 * j], l.number, "endpoint"),
                        to_int<Coord>(t[2 * j + 1], l.number, "endpoint")};
            if (iv.lo > iv.hi) throw parse_error(l.number, "interval with lo > hi in dimension " + std::to_string(j));
            dims[j][v] = iv;
        }
    }
    std::vector<IntervalRealization> realizations;
    realizations.reserve(dims.size());
    for (auto& d_ivs : dims) realizations.emplace_back(std::move(d_ivs));
    return BoxRepresentation(n, std::move(realizations));
}

std::string render_svg(const BoxRepresentation& b) {
    const std::size_t d = b.dimension();
    if (d > 2) throw std::invalid_argument("SVG rendering needs dimension <= 2, got " + std::to_string(d));
    constexpr double unit = 40.0, pad = 30.0, bar = 14.0;
    Coord lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;
    if (d >= 1 && b.order() > 0) {
        auto ivs = b.dims()[0].intervals();
        lo0 = std::ranges::min(ivs, {}, &Interval::lo).lo;
        hi0 = std::ranges::max(ivs, {}, &Interval::hi).hi;
    }
    if (d == 2 && b.order() > 0) {
        auto ivs = b.dims()[1].intervals();
        lo1 = std::ranges::min(ivs, {}, &Interval::lo).lo;
        hi1 = std::ranges::max(ivs, {}, &Interval::hi).hi;
    }
    const double width = 2 * pad + unit * static_cast<double>(hi0 - lo0);
    const double height = d == 2 ? 2 * pad + unit * static_cast<double>(hi1 - lo1)
                                 : 2 * pad + (bar + 6) * std::max<Vertex>(b.order(), 1);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    if (d == 0) {
        svg << "  <text x=\"" << pad << "\" y=\"" << pad << "\">dimension 0: all " << b.order()
            << " boxes are the whole space</text>\n";
    }
    for (Vertex v = 0; v < b.order() && d > 0; ++v) {
        const Interval& x = b.dims()[0][v];
        double x0 = pad + unit * static_cast<double>(x.lo - lo0) - 3;
        double w = unit * static_cast<double>(x.hi - x.lo) + 6;
        double y0, h;
        if (d == 2) {
            const Interval& y = b.dims()[1][v];
            y0 = pad + unit * static_cast<double>(y.lo - lo1) - 3;
            h = unit * static_cast<double>(y.hi - y.lo) + 6;
        } else {
            y0 = pad + (bar + 6) * v;
            h = bar;
        }
        svg << "  <rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\"" << h
            << "\" fill=\"steelblue\" fill-opacity=\"0.25\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << x0 + 2 << "\" y=\"" << y0 + 12 << "\" font-size=\"11\">" << v << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace boxicity
