#include "dgloc/space_io.hpp"

#include <fstream>
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

SemiSimplicialSet parse_space(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::optional<SpaceBuilder> builder;
    std::string line;
    std::size_t lineno = 0;
    bool have_basepoint = false;
    std::string basepoint;
    std::size_t basepoint_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = tokenize(line);
        if (tok.empty())
            continue;
        if (!builder) {
            if (tok[0] != "space" || tok.size() != 2)
                throw ParseError(lineno, "expected header 'space <name>'");
            builder.emplace(tok[1]);
            continue;
        }
        if (tok[0] == "simplex") {
            if (tok.size() < 3)
                throw ParseError(lineno, "expected 'simplex <id> <dim> [faces...]'");
            int dim = 0;
            try {
                std::size_t used = 0;
                dim = std::stoi(tok[2], &used);
                if (used != tok[2].size())
                    throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad dimension '" + tok[2] + "'");
            }
            try {
                builder->add(dim, tok[1], std::vector<std::string>(tok.begin() + 3, tok.end()));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (tok[0] == "basepoint") {
            if (tok.size() != 2)
                throw ParseError(lineno, "expected 'basepoint <vertex id>'");
            if (have_basepoint)
                throw ParseError(lineno, "duplicate basepoint record");
            have_basepoint = true;
            basepoint = tok[1];
            basepoint_line = lineno;
        } else if (tok[0] == "space") {
            throw ParseError(lineno, "duplicate header");
        } else {
            throw ParseError(lineno, "unknown record '" + tok[0] + "'");
        }
    }
    if (!builder)
        throw ParseError(lineno, "missing header 'space <name>'");
    if (have_basepoint)
        builder->set_basepoint(basepoint);
    try {
        return builder->build();
    } catch (const std::invalid_argument& e) {
        throw ParseError(basepoint_line, e.what());
    }
}

std::string serialize_space(const SemiSimplicialSet& space)
{
    std::ostringstream out;
    out << "space " << space.name() << '\n';
    for (int d = 0; d <= space.dimension(); ++d)
        for (const auto& s : space.simplices(d)) {
            const Simplex& x = space.simplex(s);
            out << "simplex " << x.id << ' ' << d;
            for (const auto& f : x.face_ids)
                out << ' ' << f;
            out << '\n';
        }
    if (auto b = space.basepoint())
        out << "basepoint " << space.id(*b) << '\n';
    return out.str();
}

SemiSimplicialSet load_space(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open space file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_space(buf.str());
}

}  // namespace dgloc
