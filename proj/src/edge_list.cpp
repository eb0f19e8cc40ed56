#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "nipa/error.hpp"
#include "nipa/netgen.hpp"

namespace nipa {

namespace {

bool parse_id(const std::string& token, std::uint64_t& out) {
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph read_edge_list(std::istream& in, bool one_based) {
    const std::uint64_t base = one_based ? 1 : 0;
    std::vector<Edge> edges;
    std::uint64_t declared = 0;
    std::uint64_t max_id = 0;
    bool any = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a)) continue;
        if (a.front() == '#') {
            std::string key;
            std::istringstream comment(line.substr(line.find('#') + 1));
            if (comment >> key && key == "nodes") {
                std::string count;
                if (comment >> count) parse_id(count, declared);
            }
            continue;
        }
        if (!(tokens >> b) || (tokens >> extra)) {
            throw ParseError(line_no, "expected exactly two node ids");
        }
        std::uint64_t u = 0, v = 0;
        if (!parse_id(a, u) || !parse_id(b, v)) throw ParseError(line_no, "node id is not a nonnegative integer");
        if (u < base || v < base) throw ParseError(line_no, "node id 0 in 1-based input");
        if (u - base > 0xfffffffeULL || v - base > 0xfffffffeULL) throw ParseError(line_no, "node id too large");
        u -= base;
        v -= base;
        if (u == v) throw ParseError(line_no, "self-loop");
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        max_id = std::max({max_id, u, v});
        any = true;
    }
    if (in.bad()) throw IoError("read failure");

    std::uint64_t n = any ? max_id + 1 : 0;
    if (declared > 0) {
        if (declared < n) throw ParseError(line_no, "'# nodes' header smaller than largest id");
        n = declared;
    }
    return from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path, bool one_based) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list '" + path + "'");
    return read_edge_list(in, one_based);
}

void write_edge_list(const Graph& g, std::ostream& out, bool one_based) {
    const NodeId base = one_based ? 1 : 0;
    out << "# nodes " << g.node_count() << '\n';
    for (auto [u, v] : g.edges()) out << (u + base) << ' ' << (v + base) << '\n';
    if (!out) throw IoError("write failure");
}

}  // namespace nipa
