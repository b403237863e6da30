#include "eds/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace eds {

namespace {

// strips comments, returns false on blank-after-strip
bool significant(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError(lineno, "expected header \"n m\"");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") out of range for n=" << n;
            throw ParseError(lineno, os.str());
        }
        if (u == v) {
            std::ostringstream os;
            os << "self-loop (" << u << "," << v << ")";
            throw ParseError(lineno, os.str());
        }
        edges.emplace_back(int(u), int(v));
    }
    if (n < 0) throw ParseError(lineno, "missing header \"n m\"");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "header announced " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    return build_graph(int(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n; ++u)
        g.adj[u].for_each([&](int v) {
            if (u < v) out << u << ' ' << v << '\n';
        });
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int g6_byte(char c, int pos) {
    if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 byte at position " + std::to_string(pos));
    return c - 63;
}

}  // namespace

Graph read_graph6(std::string_view line) {
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header)
        line.remove_prefix(kGraph6Header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError(1, "empty graph6 line");

    std::size_t pos = 0;
    long long n;
    if (line[0] != '~') {
        n = g6_byte(line[pos], int(pos));
        ++pos;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4) throw ParseError(1, "truncated graph6 order");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | g6_byte(line[pos], int(pos));
    } else {
        if (line.size() < 8) throw ParseError(1, "truncated graph6 order");
        n = 0;
        for (pos = 2; pos <= 7; ++pos) n = (n << 6) | g6_byte(line[pos], int(pos));
    }

    Graph g;
    g.n = int(n);
    g.adj.assign(g.n, Bitset(g.n));
    int bit = 0;
    int cur = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                if (pos >= line.size()) throw ParseError(1, "truncated graph6 bit vector");
                cur = g6_byte(line[pos], int(pos));
                ++pos;
                bit = 6;
            }
            --bit;
            if ((cur >> bit) & 1) {
                g.adj[i].set(j);
                g.adj[j].set(i);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    long long n = g.n;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int s = 30; s >= 0; s -= 6) out.push_back(char(((n >> s) & 63) + 63));
    }
    int bit = 6;
    int cur = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            --bit;
            if (g.has_edge(i, j)) cur |= 1 << bit;
            if (bit == 0) {
                out.push_back(char(cur + 63));
                cur = 0;
                bit = 6;
            }
        }
    }
    if (bit != 6) out.push_back(char(cur + 63));
    return out;
}

Graph load_graph(const std::string& path) {
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            return read_graph6(line);
        }
        throw ParseError(1, "no graph6 line in file");
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    // peek at the first data line to pick the format
    std::string first;
    std::streampos start = in.tellg();
    while (std::getline(in, first))
        if (significant(first)) break;
    in.clear();
    in.seekg(start);
    std::istringstream probe(first);
    long long a, b;
    std::string rest;
    if (probe >> a >> b && !(probe >> rest)) return read_edge_list(in);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        return read_graph6(line);
    }
    throw ParseError(1, "empty input");
}

}  // namespace eds
