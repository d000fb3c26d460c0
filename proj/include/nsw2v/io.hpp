#pragma once

// Text formats for instances and allocations.
//
// Instance:              Allocation:
//   nsw2v 1                alloc 1
//   n m p q                n m
//   <B_0 indices>          <bundle 0 indices>
//   ...                    ...
//
// Indices are 0-based, sorted, separated by single spaces; an empty line is
// an empty set. Lines end with LF. Missing trailing empty lines are accepted
// on input.

#include <string>
#include <string_view>

#include "nsw2v/core.hpp"

namespace nsw2v {

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

/// Parsed allocation together with the good count from its header.
struct AllocationFile {
  Allocation allocation;
  std::size_t goods = 0;
};

AllocationFile parse_allocation(std::string_view text);
std::string serialize_allocation(const Allocation& alloc, std::size_t goods);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace nsw2v
