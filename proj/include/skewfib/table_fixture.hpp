#pragma once

#include "skewfib/hrcore.hpp"

#include <cstdint>
#include <vector>

namespace skewfib::hrcore {

// Golden admissibility data for n = 3..80, frozen by hand from the
// published tables (admissible fiber dimensions per n, dominant entries
// flagged). Computed tables must match this data exactly.
const std::vector<TableRow>& golden_table_rows();

// FNV-1a fingerprint of the golden rows; surfaced by the CLI so a build
// can be tied to the table data it was checked against.
std::uint64_t golden_table_hash();

}  // namespace skewfib::hrcore
