// Text format for connections on a given space.
//
//   # comment
//   rank <r>
//   edge <edge id> <r*r rationals, row-major>
//
// Every edge of the space must appear exactly once.

#ifndef DGLOC_CONNECTION_IO_HPP
#define DGLOC_CONNECTION_IO_HPP

#include "dgloc/moduli.hpp"
#include "dgloc/scomplex.hpp"
#include "dgloc/space_io.hpp"

#include <string>
#include <string_view>

namespace dgloc {

/// Throws ParseError. Flatness and invertibility are not checked here.
Connection parse_connection(const SemiSimplicialSet& space, std::string_view text);
/// Edges in storage order; round-trips through parse_connection.
std::string serialize_connection(const SemiSimplicialSet& space, const Connection& e);
Connection load_connection(const SemiSimplicialSet& space, const std::string& path);

}  // namespace dgloc

#endif  // DGLOC_CONNECTION_IO_HPP
