// Text format for spaces.
//
//   # comment
//   space <name>
//   simplex <id> <dim> [<face id> ...]   faces d_0 first, dim+1 of them (none for vertices)
//   basepoint <vertex id>
//
// The header comes first; records may appear in any order afterwards.

#ifndef DGLOC_SPACE_IO_HPP
#define DGLOC_SPACE_IO_HPP

#include "dgloc/scomplex.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgloc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Throws ParseError. The result is not validated.
SemiSimplicialSet parse_space(std::string_view text);
/// Records in storage order, lowest dimension first.
std::string serialize_space(const SemiSimplicialSet& space);
SemiSimplicialSet load_space(const std::string& path);

}  // namespace dgloc

#endif  // DGLOC_SPACE_IO_HPP
