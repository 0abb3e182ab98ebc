#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "concov/design.hpp"

namespace concov {

// Text format, one family per file:
//
//   # comment lines and blank lines are skipped anywhere
//   12 4 3 covering        <- n k r kind   (or: n m p turan)
//   1 2 3 4                <- one block per line, ascending elements
//   1 2 3 5
//
// Parsing is strict: the element count per line must match the declared
// block size, elements must be strictly ascending and inside [1, n].
// Serialization is canonical (header, then blocks in lexicographic order),
// so parse(serialize(f)) == f and serialize respects value equality.

DesignFamily parse_design(std::istream& in);
DesignFamily parse_design(const std::string& text);
DesignFamily load_design(const std::filesystem::path& file);

void serialize_design(std::ostream& out, const DesignFamily& fam);
std::string serialize_design(const DesignFamily& fam);
void save_design(const std::filesystem::path& file, const DesignFamily& fam);

}  // namespace concov
