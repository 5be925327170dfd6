#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>

#include "forge/sag.hpp"

namespace forge {

/// Article id → full plain text for the second (graph) pass.
///
/// Texts are held in memory until `memory_limit` bytes have been stored;
/// after that they are appended to a spill file and read back with
/// positional reads, which are safe from several threads once sealed.
class CorpusStore {
 public:
  CorpusStore(std::filesystem::path spill_path, std::size_t memory_limit);
  ~CorpusStore();
  CorpusStore(const CorpusStore&) = delete;
  CorpusStore& operator=(const CorpusStore&) = delete;

  /// First text for an id wins; returns false on a duplicate.
  bool add(ArticleId id, std::string text);
  /// Flushes the spill file; call before concurrent reads.
  void seal();
  std::optional<std::string> text(ArticleId id) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t spilled() const { return spilled_; }
  std::size_t bytes_in_memory() const { return in_memory_; }

 private:
  struct Entry {
    std::string text;  // empty when spilled
    std::uint64_t offset = 0;
    std::uint64_t length = 0;
    bool on_disk = false;
  };

  std::filesystem::path spill_path_;
  std::size_t memory_limit_;
  std::size_t in_memory_ = 0;
  std::size_t spilled_ = 0;
  std::uint64_t spill_end_ = 0;
  std::ofstream spill_out_;
  int spill_fd_ = -1;
  std::unordered_map<ArticleId, Entry> entries_;
};

}  // namespace forge
