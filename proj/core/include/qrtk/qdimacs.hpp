#pragma once

#include <iosfwd>
#include <string>

#include "qrtk/qcnf.hpp"

namespace qrtk {

/// Parses QDIMACS. Duplicate literals within a clause are dropped, adjacent
/// same-quantifier blocks merge, and variables left unquantified are bound
/// in an outermost existential block. Throws parse_error on malformed input.
Qcnf parse_qdimacs(std::istream& in);
Qcnf parse_qdimacs(const std::string& text);

/// Canonical QDIMACS: header, one quantifier block per line in prefix order,
/// one clause per line with literals sorted by variable id, LF endings.
std::string serialize_qdimacs(const Qcnf& f);

}  // namespace qrtk
