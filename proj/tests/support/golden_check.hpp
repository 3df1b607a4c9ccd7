#pragma once

#include <string>
#include <vector>

#include "golden.hpp"

namespace golden {

/// Recomputes a record with the library and returns one message per
/// mismatch; empty means the record passes.
std::vector<std::string> check_record(const Record& rec);

/// The two oracle sides of a record disagree beyond 1e-35 (or, for exact
/// records, differ at all). Empty when they agree or the record is one-sided.
std::vector<std::string> check_oracle_sides(const Record& rec);

}  // namespace golden
