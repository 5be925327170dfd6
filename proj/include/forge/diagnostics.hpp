#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace forge {

/// Named warning counters. Ordered so reports are deterministic.
struct Warnings {
  std::map<std::string, std::uint64_t> counts;

  void add(const std::string& reason, std::uint64_t n = 1) { counts[reason] += n; }
  std::uint64_t get(const std::string& reason) const {
    auto it = counts.find(reason);
    return it == counts.end() ? 0 : it->second;
  }
  void merge(const Warnings& other) {
    for (const auto& [k, v] : other.counts) counts[k] += v;
  }
  bool empty() const { return counts.empty(); }
};

}  // namespace forge
