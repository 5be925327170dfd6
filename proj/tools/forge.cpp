// forge: builds contrastive IR pre-training instances from a MediaWiki dump
// and scores TREC-style runs.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "forge/article.hpp"
#include "forge/dump_reader.hpp"
#include "forge/metrics.hpp"
#include "forge/pipeline.hpp"
#include "forge/sag.hpp"
#include "forge/wst.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

forge::InputFormat parse_format(const std::string& s) {
  if (s == "xml") return forge::InputFormat::Xml;
  if (s == "jsonl") return forge::InputFormat::Jsonl;
  return forge::InputFormat::Auto;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wikipedia-structure pre-training data forge"};
  app.require_subcommand(1);

  // run
  forge::PipelineConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string tasks = "srr,rwi,ati,ltm";
  std::string format = "auto";
  std::size_t max_instances = 0;
  bool symmetric = false;
  bool quiet = false;
  std::string output_dir;
  auto* run = app.add_subcommand("run", "Generate SRR/RWI/ATI/LTM instance files from a dump");
  run->add_option("--input", cfg.input_path, "Dump path, or - for standard input")->required();
  run->add_option("--output", output_dir, "Output directory")->required();
  run->add_option("--input-format", format, "xml, jsonl or auto (by extension)")
      ->check(CLI::IsMember({"auto", "xml", "jsonl"}));
  run->add_option("--tasks", tasks, "Comma-separated subset of srr,rwi,ati,ltm");
  run->add_option("--seed", cfg.sampler.seed, "Sampling seed");
  run->add_option("--max-instances-per-task", max_instances, "Stop each task file after N lines");
  run->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("--max-query-words", cfg.sampler.max_query_words, "Query truncation length in words");
  run->add_option("--max-doc-words", cfg.sampler.max_doc_words, "Document truncation length in words");
  run->add_option("--ltm-max-doc-words", cfg.sampler.ltm_max_doc_words, "Article truncation length for LTM");
  run->add_option("--srr-max-negatives", cfg.sampler.srr_max_negatives, "Sibling negatives kept per SRR instance");
  run->add_option("--rwi-negatives", cfg.sampler.rwi_num_negatives, "Negative queries per RWI instance");
  run->add_option("--ati-max-negatives", cfg.sampler.ati_max_negatives, "Section negatives kept per ATI instance");
  run->add_option("--ltm-negatives", cfg.sampler.ltm_num_negatives, "Non-neighbor articles per LTM instance");
  run->add_option("--min-content-words", cfg.sampler.min_content_words, "Words a section needs to be sampled");
  run->add_option("--corpus-memory-mb", cfg.corpus_memory_limit,
                  "Article text kept in memory before spilling (bytes, suffix k/m/g allowed)")
      ->transform(CLI::AsSizeValue(false));
  run->add_flag("--sag-symmetric", symmetric, "Treat See Also links as undirected for LTM");
  run->add_flag("--quiet", quiet, "Do not print the statistics table");

  // score-run
  std::string run_path, qrels_path, metrics = "mrr@10,mrr@100,ndcg@10,ndcg@100";
  bool per_query = false;
  auto* score = app.add_subcommand("score-run", "MRR@k / nDCG@k of a TREC run file");
  score->add_option("--run", run_path, "TREC run file: qid Q0 docid rank score tag")->required();
  score->add_option("--qrels", qrels_path, "TREC qrels file: qid 0 docid grade")->required();
  score->add_option("--metrics", metrics, "Comma-separated, e.g. mrr@10,ndcg@10");
  score->add_flag("--per-query", per_query, "Also print per-query values");

  // wst / sag debug dumps
  std::string dump_input;
  std::string dump_format = "auto";
  auto* wst_cmd = app.add_subcommand("wst", "Print the heading tree of every kept article");
  wst_cmd->add_option("--input", dump_input)->required();
  wst_cmd->add_option("--input-format", dump_format)->check(CLI::IsMember({"auto", "xml", "jsonl"}));
  auto* sag_cmd = app.add_subcommand("sag", "Print the See Also graph as a sorted edge list");
  sag_cmd->add_option("--input", dump_input)->required();
  sag_cmd->add_option("--input-format", dump_format)->check(CLI::IsMember({"auto", "xml", "jsonl"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cfg.output_dir = output_dir;
      cfg.input_format = parse_format(format);
      cfg.tasks.clear();
      for (const auto& t : split_csv(tasks)) {
        auto task = forge::parse_task(t);
        if (!cfg.enabled(task)) cfg.tasks.push_back(task);
      }
      if (max_instances) cfg.max_instances_per_task = max_instances;
      if (symmetric) cfg.sampler.ltm_adjacency = forge::Adjacency::Symmetric;
      auto stats = forge::run_pipeline(cfg);
      if (!quiet) std::cerr << forge::stats_report(stats);
      return 0;
    }

    if (*score) {
      auto rankings = forge::parse_run_file(read_file(run_path));
      auto qrels = forge::parse_qrels(read_file(qrels_path));
      for (const auto& m : split_csv(metrics)) {
        auto res = forge::evaluate(rankings, qrels, forge::parse_metric(m));
        std::cout << res.spec.name() << '\t' << std::fixed << std::setprecision(4) << res.mean
                  << '\n';
        if (per_query)
          for (const auto& [q, v] : res.per_query)
            std::cout << res.spec.name() << '\t' << q << '\t' << std::fixed
                      << std::setprecision(4) << v << '\n';
      }
      return 0;
    }

    forge::Warnings warnings;
    auto source = forge::open_article_source(dump_input, parse_format(dump_format), &warnings);
    std::vector<forge::SagInput> graph;
    while (auto raw = source->next()) {
      auto prepared = forge::prepare_article(*raw, &warnings);
      if (prepared.status != forge::ArticleFilter::Kept) continue;
      const auto& a = prepared.article;
      if (*wst_cmd) {
        std::cout << "# " << a.id << '\n'
                  << forge::debug_dump(forge::build_wst(a.id, a.title, a.abstract, a.sections));
      } else {
        graph.push_back({a.id, forge::normalize_title(a.title), a.see_also});
      }
    }
    if (*sag_cmd) std::cout << forge::Sag::build(graph, &warnings).edge_list();
    return 0;
  } catch (const forge::DumpError& e) {
    std::cerr << "forge: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "forge: " << e.what() << '\n';
    return 1;
  }
}
