#include "pancyclic/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pancyclic/error.hpp"

namespace pancyclic {

namespace {

bool next_data_line(std::istream& in, std::string& line, int& line_no)
{
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return true;
    }
    return false;
}

[[noreturn]] void parse_error(int line_no, const std::string& what)
{
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::string line;
    int line_no = 0;
    if (!next_data_line(in, line, line_no))
        throw Error(ErrorKind::Parse, "missing header line 'n m'");
    long long n = -1, m = -1;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
            parse_error(line_no, "expected header 'n m'");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, line_no))
            throw Error(ErrorKind::Parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream row(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra))
            parse_error(line_no, "expected 'u v'");
        if (u < 0 || v >= n || u >= v)
            parse_error(line_no, "edge must satisfy 0 <= u < v < n");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_data_line(in, line, line_no))
        parse_error(line_no, "trailing data after " + std::to_string(m) + " edges");
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    write_edge_list(out, g);
}

} // namespace pancyclic
