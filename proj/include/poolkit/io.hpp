#pragma once

#include <iosfwd>
#include <string>

#include "poolkit/design.hpp"

namespace poolkit {

/// A parsed design file, always carrying the dual view. `design` is only
/// populated when the file was in pool format (a degenerate dual may not
/// transpose to a valid design).
struct DesignInput {
    bool was_dual = false;
    SubsetFamily dual;
};

/// Design text format. Pool variant: line 1 = `v n`, then v pool lines of
/// ascending 1-based object indices (empty line = empty pool). Dual
/// variant: line 1 = `dual v n`, then n member lines of pool indices.
/// `#` starts a comment; lines that are pure comment are skipped.
DesignInput parse_design_text(std::istream& in);
DesignInput parse_design_file(const std::string& path);

std::string format_design(const Design& d);
std::string format_dual(const SubsetFamily& f);

}  // namespace poolkit
