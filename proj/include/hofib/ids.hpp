#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hofib {

// Cell identifiers are strings. Constructed objects get canonical tuple ids
// built from the ids of their constituents, so equal constructions always
// produce byte-equal ids.
using Id = std::string;

// Escapes '(', ')', ',' and '\' so that tuple encodings nest unambiguously.
std::string escape_id(std::string_view s);

// Canonical tuple encoding: tup({"a","b"}) == "(a,b)".
Id tup(const std::vector<Id>& parts);
Id tup(std::initializer_list<std::string_view> parts);

// Packs small non-negative indices into table keys. Each index must fit in
// 21 bits (tables here never get near that).
inline std::uint64_t pack2(int a, int b) {
  return (static_cast<std::uint64_t>(a) << 21) | static_cast<std::uint64_t>(b);
}
inline std::uint64_t pack3(int a, int b, int c) {
  return (static_cast<std::uint64_t>(a) << 42) |
         (static_cast<std::uint64_t>(b) << 21) | static_cast<std::uint64_t>(c);
}

}  // namespace hofib
