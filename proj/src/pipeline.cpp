#include "forge/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "forge/article.hpp"
#include "forge/corpus_store.hpp"
#include "forge/instance_io.hpp"
#include "forge/sag.hpp"
#include "forge/wst.hpp"
#include "json.hpp"

namespace forge {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

bool PipelineConfig::enabled(Task t) const {
  return std::find(tasks.begin(), tasks.end(), t) != tasks.end();
}

void PipelineConfig::validate() const {
  if (tasks.empty()) throw std::invalid_argument("at least one task must be enabled");
  if (output_dir.empty()) throw std::invalid_argument("output directory is required");
  if (max_instances_per_task && *max_instances_per_task == 0)
    throw std::invalid_argument("max_instances_per_task must be at least 1");
  if (batch_size == 0) throw std::invalid_argument("batch_size must be at least 1");
  sampler.validate();
}

namespace {

/// Ordered writer for one task file. Lines go to "<name>.partial" and the
/// file is renamed into place by finish().
class TaskSink {
 public:
  TaskSink(Task task, const fs::path& dir, std::optional<std::size_t> cap)
      : task_(task), cap_(cap) {
    path_ = dir / (std::string(task_key(task)) + ".jsonl");
    partial_ = path_;
    partial_ += ".partial";
    out_.open(partial_, std::ios::binary | std::ios::trunc);
    if (!out_) throw std::runtime_error("cannot write " + partial_.string());
  }
  ~TaskSink() {
    if (!finished_) {
      out_.close();
      std::error_code ec;
      fs::remove(partial_, ec);
    }
  }

  Task task() const { return task_; }
  bool full() const { return cap_ && lines_ >= *cap_; }
  std::size_t lines() const { return lines_; }
  const fs::path& path() const { return path_; }

  void write(const std::vector<PseudoInstance>& batch) {
    for (const auto& inst : batch) {
      if (full()) return;
      out_ << to_json_line(inst) << '\n';
      ++lines_;
    }
    if (!out_) throw std::runtime_error("write failed on " + partial_.string());
  }

  void finish() {
    out_.close();
    if (!out_) throw std::runtime_error("cannot finish " + partial_.string());
    fs::rename(partial_, path_);
    finished_ = true;
  }

 private:
  Task task_;
  std::optional<std::size_t> cap_;
  fs::path path_, partial_;
  std::ofstream out_;
  std::size_t lines_ = 0;
  bool finished_ = false;
};

/// Everything pass one derives from a single page.
struct ArticleResult {
  ArticleFilter status = ArticleFilter::Kept;
  bool failed = false;
  Warnings warnings;
  std::vector<PseudoInstance> per_task[4];
  SagInput graph_node;
  std::string full_text;
};

ArticleResult process_article(const RawArticle& raw, const PipelineConfig& cfg) {
  ArticleResult r;
  try {
    PreparedArticle prepared = prepare_article(raw, &r.warnings);
    r.status = prepared.status;
    if (r.status != ArticleFilter::Kept) return r;
    const ParsedArticle& a = prepared.article;
    const Wst wst = build_wst(a.id, a.title, a.abstract, a.sections);
    const SamplerConfig& sc = cfg.sampler;

    if (cfg.enabled(Task::SRR)) {
      Rng rng = task_rng(sc, a.id, Task::SRR);
      r.per_task[0] = sample_srr(wst, sc, rng);
    }
    if (cfg.enabled(Task::RWI)) {
      Rng rng = task_rng(sc, a.id, Task::RWI);
      if (auto inst = sample_rwi(wst, sc, rng)) r.per_task[1].push_back(std::move(*inst));
    }
    if (cfg.enabled(Task::ATI)) {
      Rng rng = task_rng(sc, a.id, Task::ATI);
      if (auto inst = sample_ati(wst, sc, rng)) r.per_task[2].push_back(std::move(*inst));
    }
    if (cfg.enabled(Task::LTM)) {
      r.graph_node = SagInput{a.id, normalize_title(a.title), a.see_also};
      r.full_text = subtree_text(wst, 0);
    }
  } catch (const std::exception&) {
    r = ArticleResult{};
    r.failed = true;
  }
  return r;
}

ordered_json config_json(const PipelineConfig& cfg) {
  const SamplerConfig& s = cfg.sampler;
  ordered_json tasks = ordered_json::array();
  for (Task t : kAllTasks)
    if (cfg.enabled(t)) tasks.push_back(task_key(t));
  ordered_json j;
  j["input"] = cfg.input_path;
  j["tasks"] = tasks;
  j["seed"] = s.seed;
  j["max_instances_per_task"] =
      cfg.max_instances_per_task ? ordered_json(*cfg.max_instances_per_task) : ordered_json();
  j["workers"] = cfg.workers;
  j["max_query_words"] = s.max_query_words;
  j["max_doc_words"] = s.max_doc_words;
  j["ltm_max_doc_words"] = s.ltm_max_doc_words;
  j["min_content_words"] = s.min_content_words;
  j["srr_max_negatives"] = s.srr_max_negatives;
  j["rwi_negatives"] = s.rwi_num_negatives;
  j["ati_max_negatives"] = s.ati_max_negatives;
  j["ltm_negatives"] = s.ltm_num_negatives;
  j["sag_symmetric"] = s.ltm_adjacency == Adjacency::Symmetric;
  return j;
}

ordered_json stats_json(const CorpusStats& st) {
  ordered_json j;
  j["articles_seen"] = st.articles_seen;
  j["articles_kept"] = st.articles_kept;
  j["redirects_skipped"] = st.redirects_skipped;
  j["disambig_skipped"] = st.disambig_skipped;
  j["instances_per_task"] = st.instances_per_task;
  j["warnings"] = st.warnings.counts;
  return j;
}

}  // namespace

CorpusStats run_pipeline(const PipelineConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::size_t workers = std::max<std::size_t>(1, cfg.workers);

  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + cfg.output_dir.string());

  CorpusStats stats;
  std::vector<std::unique_ptr<TaskSink>> sinks;
  TaskSink* sink_for[4] = {};
  for (Task t : kAllTasks) {
    if (!cfg.enabled(t)) continue;
    sinks.push_back(std::make_unique<TaskSink>(t, cfg.output_dir, cfg.max_instances_per_task));
    sink_for[static_cast<int>(t)] = sinks.back().get();
    stats.instances_per_task[std::string(task_name(t))] = 0;
  }
  const bool want_ltm = cfg.enabled(Task::LTM);

  // Pass one: stream pages, sample the per-article tasks, collect the graph.
  auto source = open_article_source(cfg.input_path, cfg.input_format, &stats.warnings);
  CorpusStore store(cfg.output_dir / ".corpus.spill", cfg.corpus_memory_limit);
  std::vector<SagInput> graph_nodes;

  auto pass_one_saturated = [&] {
    if (want_ltm) return false;
    for (const auto& s : sinks)
      if (!s->full()) return false;
    return true;
  };

  std::vector<RawArticle> batch;
  std::vector<ArticleResult> results;
  bool done = false;
  while (!done && !pass_one_saturated()) {
    batch.clear();
    while (batch.size() < cfg.batch_size) {
      auto a = source->next();
      if (!a) {
        done = true;
        break;
      }
      batch.push_back(std::move(*a));
    }
    results.assign(batch.size(), ArticleResult{});
    parallel_for(batch.size(), workers,
                 [&](std::size_t i) { results[i] = process_article(batch[i], cfg); });

    for (auto& r : results) {
      ++stats.articles_seen;
      stats.warnings.merge(r.warnings);
      if (r.failed) {
        stats.warnings.add("article_failed");
        continue;
      }
      switch (r.status) {
        case ArticleFilter::Kept: ++stats.articles_kept; break;
        case ArticleFilter::Redirect: ++stats.redirects_skipped; continue;
        case ArticleFilter::Disambiguation: ++stats.disambig_skipped; continue;
        case ArticleFilter::NonMainNamespace: stats.warnings.add("non_main_namespace"); continue;
      }
      for (Task t : {Task::SRR, Task::RWI, Task::ATI})
        if (auto* s = sink_for[static_cast<int>(t)]) s->write(r.per_task[static_cast<int>(t)]);
      if (want_ltm) {
        if (store.add(r.graph_node.id, std::move(r.full_text)))
          graph_nodes.push_back(std::move(r.graph_node));
        else
          stats.warnings.add("duplicate_article_id");
      }
    }
  }

  // Pass two: See Also graph and LTM.
  if (want_ltm) {
    store.seal();
    const Sag sag = Sag::build(graph_nodes, &stats.warnings);
    graph_nodes.clear();
    graph_nodes.shrink_to_fit();
    TaskSink& sink = *sink_for[static_cast<int>(Task::LTM)];
    const TextLookup lookup = [&store](ArticleId id) { return store.text(id); };
    const auto vertices = sag.vertices();
    struct LtmResult {
      std::vector<PseudoInstance> instances;
      Warnings warnings;
    };
    std::vector<LtmResult> ltm;
    for (std::size_t begin = 0; begin < vertices.size() && !sink.full();
         begin += cfg.batch_size) {
      const std::size_t n = std::min(cfg.batch_size, vertices.size() - begin);
      ltm.assign(n, LtmResult{});
      parallel_for(n, workers, [&](std::size_t i) {
        const ArticleId id = vertices[begin + i];
        Rng rng = task_rng(cfg.sampler, id, Task::LTM);
        ltm[i].instances = sample_ltm(sag, lookup, id, cfg.sampler, rng, &ltm[i].warnings);
      });
      for (auto& r : ltm) {
        stats.warnings.merge(r.warnings);
        sink.write(r.instances);
      }
    }
  }

  for (auto& s : sinks) {
    s->finish();
    stats.instances_per_task[std::string(task_name(s->task()))] = s->lines();
  }
  stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  ordered_json outputs = ordered_json::object();
  for (const auto& s : sinks) {
    ordered_json entry;
    entry["lines"] = s->lines();
    entry["sha256"] = sha256_file(s->path());
    outputs[s->path().filename().string()] = entry;
  }
  ordered_json manifest;
  manifest["config"] = config_json(cfg);
  manifest["stats"] = stats_json(stats);
  manifest["outputs"] = outputs;
  std::ofstream mf(cfg.output_dir / "manifest.json", std::ios::binary | std::ios::trunc);
  mf << manifest.dump(2) << '\n';
  if (!mf) throw std::runtime_error("cannot write manifest.json");
  return stats;
}

std::string stats_report(const CorpusStats& st) {
  std::ostringstream os;
  auto row = [&os](const std::string& name, const std::string& value) {
    os << std::left << std::setw(32) << name << value << '\n';
  };
  row("counter", "value");
  row("articles_seen", std::to_string(st.articles_seen));
  row("articles_kept", std::to_string(st.articles_kept));
  row("redirects_skipped", std::to_string(st.redirects_skipped));
  row("disambig_skipped", std::to_string(st.disambig_skipped));
  for (Task t : kAllTasks) {
    auto it = st.instances_per_task.find(std::string(task_name(t)));
    if (it != st.instances_per_task.end())
      row("instances." + std::string(task_key(t)), std::to_string(it->second));
  }
  std::ostringstream wall;
  wall << std::fixed << std::setprecision(3) << st.wall_time_seconds;
  row("wall_time_seconds", wall.str());
  os << "warnings\n";
  if (st.warnings.empty()) os << "  (none)\n";
  for (const auto& [reason, n] : st.warnings.counts) row("  " + reason, std::to_string(n));
  return os.str();
}

}  // namespace forge
