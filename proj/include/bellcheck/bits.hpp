#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bellcheck {

// Dense index sets: points of a site or histories of a model.
using Bits = boost::dynamic_bitset<>;

inline Bits make_bits(std::size_t size, std::initializer_list<std::size_t> on) {
  Bits b(size);
  for (auto i : on) b.set(i);
  return b;
}

inline bool subset(const Bits& a, const Bits& b) { return a.is_subset_of(b); }

inline bool intersects(const Bits& a, const Bits& b) { return a.intersects(b); }

inline std::vector<std::size_t> bit_indices(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

/// Names of the set members, in index order.
inline std::vector<std::string> bit_names(const Bits& b, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(names[i]);
  return out;
}

}  // namespace bellcheck
