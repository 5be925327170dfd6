#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/diagnostics.hpp"
#include "forge/dump_reader.hpp"
#include "forge/samplers.hpp"

namespace forge {

struct PipelineConfig {
  std::string input_path = "-";
  InputFormat input_format = InputFormat::Auto;
  std::filesystem::path output_dir;
  std::vector<Task> tasks{kAllTasks, kAllTasks + 4};
  std::optional<std::size_t> max_instances_per_task;
  SamplerConfig sampler;
  std::size_t workers = 1;
  /// Article texts kept in memory for the graph pass before spilling to disk.
  std::size_t corpus_memory_limit = std::size_t{256} << 20;
  /// Articles read per parallel batch.
  std::size_t batch_size = 256;

  bool enabled(Task t) const;
  /// Throws std::invalid_argument on an empty task list or bad sampler counts.
  void validate() const;
};

struct CorpusStats {
  std::uint64_t articles_seen = 0;
  std::uint64_t articles_kept = 0;
  std::uint64_t redirects_skipped = 0;
  std::uint64_t disambig_skipped = 0;
  std::map<std::string, std::uint64_t> instances_per_task;  ///< keyed by "SRR", ...
  Warnings warnings;
  double wall_time_seconds = 0.0;  ///< reported on stderr only, so manifests stay reproducible
};

/// Dump → trees → SRR/RWI/ATI in one streaming pass, then See Also graph →
/// LTM. Writes `{task}.jsonl` for each enabled task plus `manifest.json`
/// into cfg.output_dir. Output bytes depend only on the input and the
/// config (not on `workers`).
///
/// Lines of the pass-one tasks follow dump order (ascending page id for a
/// standard export); LTM lines follow ascending article id.
CorpusStats run_pipeline(const PipelineConfig& cfg);

/// Human-readable counter table, one row per counter, warnings listed last.
std::string stats_report(const CorpusStats& stats);

/// Runs fn(i) for i in [0, n) on up to `workers` threads. The first
/// exception thrown by fn is rethrown after all threads finish.
template <class Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn);

}  // namespace forge

#include "forge/detail/parallel_for.hpp"
