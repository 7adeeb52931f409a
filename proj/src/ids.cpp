#include "hofib/ids.hpp"

namespace hofib {

std::string escape_id(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == '(' || c == ')' || c == ',') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

Id tup(const std::vector<Id>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += escape_id(parts[i]);
  }
  out.push_back(')');
  return out;
}

Id tup(std::initializer_list<std::string_view> parts) {
  std::vector<Id> v;
  v.reserve(parts.size());
  for (auto p : parts) v.emplace_back(p);
  return tup(v);
}

}  // namespace hofib
