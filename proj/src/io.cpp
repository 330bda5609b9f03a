#include "avoidable/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>

namespace avoidable::io {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

bool skippable(std::string_view line)
{
    auto t = trim(line);
    return t.empty() || t.front() == '#';
}

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b)
{
    auto t = trim(line);
    auto read = [&](std::uint64_t& out) {
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
        if (ec != std::errc{} || ptr == t.data())
            return false;
        t.remove_prefix(static_cast<std::size_t>(ptr - t.data()));
        return true;
    };
    if (!read(a) || t.empty() || !std::isspace(static_cast<unsigned char>(t.front())))
        return false;
    t = trim(t);
    return read(b) && t.empty();
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg)
{
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

} // namespace

ParsedGraph parse_edge_list(std::string_view text)
{
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && skippable(lines[i]))
        ++i;
    if (i == lines.size())
        throw ParseError("missing header line \"n m\"");

    std::uint64_t n = 0, m = 0;
    if (!parse_pair(lines[i], n, m))
        fail(i + 1, "expected header \"n m\"");
    if (n > (std::uint64_t{1} << 24))
        fail(i + 1, "vertex count too large");

    ParsedGraph out;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (++i; i < lines.size(); ++i) {
        if (skippable(lines[i]))
            continue;
        std::uint64_t u = 0, v = 0;
        if (!parse_pair(lines[i], u, v))
            fail(i + 1, "expected edge \"u v\"");
        if (u >= n || v >= n)
            fail(i + 1, "vertex id out of range");
        if (u == v)
            fail(i + 1, "self-loop");
        Edge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
        if (!seen.insert(e).second)
            out.warnings.push_back("line " + std::to_string(i + 1) + ": duplicate edge " + std::to_string(e.first)
                + " " + std::to_string(e.second) + " collapsed");
        edges.push_back(e);
    }
    if (edges.size() != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size())
            + " were given");
    out.graph = Graph::build(n, edges);
    return out;
}

std::string serialize_edge_list(const Graph& g)
{
    auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph6(std::string_view line)
{
    line = trim(line);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    for (char c : line)
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside 63..126");

    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        if (pos + count > line.size())
            throw ParseError("graph6: truncated input");
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < count; ++i)
            value = (value << 6) | static_cast<std::uint64_t>(line[pos++] - 63);
        return value;
    };

    if (line.empty())
        throw ParseError("graph6: empty line");
    std::uint64_t n = 0;
    if (line[0] != 126) {
        n = take(1);
    } else if (line.size() > 1 && line[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > (std::uint64_t{1} << 16))
        throw ParseError("graph6: vertex count too large");

    std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++bit) {
            auto byte = static_cast<unsigned>(line[pos + bit / 6] - 63);
            if ((byte >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    return Graph::build(n, edges);
}

std::string encode_graph6(const Graph& g)
{
    auto n = static_cast<std::uint64_t>(g.order());
    std::string out;
    auto put = [&](std::uint64_t value, int groups) {
        for (int i = groups - 1; i >= 0; --i)
            out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out.push_back(126);
        put(n, 3);
    } else {
        out.append(2, 126);
        put(n, 6);
    }

    unsigned acc = 0;
    int filled = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::vector<ParsedGraph> read_graphs(std::string_view text, Format format)
{
    if (format == Format::automatic) {
        format = Format::graph6;
        for (auto line : split_lines(text)) {
            if (skippable(line))
                continue;
            auto t = trim(line);
            if (std::isdigit(static_cast<unsigned char>(t.front())))
                format = Format::edge_list;
            break;
        }
    }
    if (format == Format::edge_list)
        return {parse_edge_list(text)};

    std::vector<ParsedGraph> out;
    std::size_t line_no = 0;
    for (auto line : split_lines(text)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        try {
            out.push_back({parse_graph6(line), {}});
        } catch (const ParseError& e) {
            fail(line_no, e.what());
        }
    }
    if (out.empty())
        throw ParseError("no graph in input");
    return out;
}

std::string digest(const Graph& g)
{
    auto text = serialize_edge_list(g);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return "sha256:" + out;
}

} // namespace avoidable::io
