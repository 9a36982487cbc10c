#ifndef SYLV_JSON_IO_HPP
#define SYLV_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "sylv/matrix.hpp"
#include "sylv/verify.hpp"

namespace sylv {

// Matrix wire format:
//   {"rows": n, "cols": n, "entries": [["1","2"],["3","4"]]}
// Entries are decimal strings, never native JSON numbers, so arbitrary
// precision survives any tooling in between.

IntMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json matrix_to_json(const IntMatrix& m);

// Reads and parses a matrix file; throws parse_error on I/O or format
// problems.
IntMatrix read_matrix_file(const std::string& path);

// Identity report serialization.  Symbolic reports can optionally carry the
// rendered polynomials of both sides.
nlohmann::ordered_json report_to_json(const IdentityReport<MultiPoly>& rep,
                                      bool include_polys = false);
nlohmann::ordered_json report_to_json(const IdentityReport<BigInt>& rep);

} // namespace sylv

#endif
