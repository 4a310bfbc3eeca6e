#include "dgloc/connection_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace dgloc {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line.substr(0, line.find('#')));
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

}  // namespace

Connection parse_connection(const SemiSimplicialSet& space, std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::size_t r = 0;
    std::map<std::string, RationalMatrix> edges;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = tokenize(line);
        if (tok.empty())
            continue;
        if (r == 0) {
            if (tok[0] != "rank" || tok.size() != 2)
                throw ParseError(lineno, "expected header 'rank <r>'");
            try {
                std::size_t used = 0;
                const long v = std::stol(tok[1], &used);
                if (used != tok[1].size() || v < 1)
                    throw std::invalid_argument("rank");
                r = static_cast<std::size_t>(v);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad rank '" + tok[1] + "'");
            }
            continue;
        }
        if (tok[0] != "edge")
            throw ParseError(lineno, "unknown record '" + tok[0] + "'");
        if (tok.size() != 2 + r * r)
            throw ParseError(lineno, "edge record needs an id and " + std::to_string(r * r) + " entries");
        if (!space.find(1, tok[1]))
            throw ParseError(lineno, "unknown edge '" + tok[1] + "'");
        if (edges.contains(tok[1]))
            throw ParseError(lineno, "duplicate edge '" + tok[1] + "'");
        RationalMatrix m(r, r);
        for (std::size_t k = 0; k < r * r; ++k) {
            try {
                m(k / r, k % r) = parse_rational(tok[2 + k]);
            } catch (const std::invalid_argument&) {
                throw ParseError(lineno, "bad entry '" + tok[2 + k] + "'");
            }
        }
        edges.emplace(tok[1], std::move(m));
    }
    if (r == 0)
        throw ParseError(lineno, "missing header 'rank <r>'");
    for (auto s : space.simplices(1))
        if (!edges.contains(space.id(s)))
            throw ParseError(lineno, "no matrix for edge '" + space.id(s) + "'");
    return make_connection(space, r, edges);
}

std::string serialize_connection(const SemiSimplicialSet& space, const Connection& e)
{
    std::ostringstream out;
    out << "rank " << e.r << '\n';
    for (auto s : space.simplices(1)) {
        out << "edge " << space.id(s);
        const auto& m = e.edges.at(s.index);
        for (std::size_t a = 0; a < e.r; ++a)
            for (std::size_t b = 0; b < e.r; ++b)
                out << ' ' << format_rational(m(a, b));
        out << '\n';
    }
    return out.str();
}

Connection load_connection(const SemiSimplicialSet& space, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open connection file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_connection(space, buf.str());
}

}  // namespace dgloc
