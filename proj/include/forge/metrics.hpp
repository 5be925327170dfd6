#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

struct RankedDoc {
  std::string doc_id;
  double score = 0.0;
};

/// Documents for one query, best first: descending score, ties by
/// ascending doc id.
struct Ranking {
  std::string query_id;
  std::vector<RankedDoc> entries;

  /// Restores the canonical order.
  void sort();
};

/// Graded judgments; an unjudged pair has grade 0.
class Qrels {
 public:
  void set(const std::string& query_id, const std::string& doc_id, int grade);
  int grade(const std::string& query_id, const std::string& doc_id) const;
  /// All judged grades for a query (any order).
  std::vector<int> grades(const std::string& query_id) const;
  std::size_t query_count() const { return judged_.size(); }

 private:
  std::map<std::string, std::map<std::string, int>> judged_;
};

/// Reciprocal rank of the first document with grade >= 1 within the top k;
/// 0 if there is none.
double mrr_at_k(const Ranking& ranking, const Qrels& qrels, std::size_t k);

/// Exponential gain (2^g - 1) with log2(i + 1) discount, normalized by the
/// ideal ordering of the query's judged grades. 0 when that ideal is 0.
double ndcg_at_k(const Ranking& ranking, const Qrels& qrels, std::size_t k);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// TREC run format, "qid Q0 docid rank score tag". The rank column is
/// ignored; entries are re-sorted canonically. Rankings come back ordered
/// by query id. A repeated (qid, docid) is an error.
std::vector<Ranking> parse_run_file(std::string_view text);

/// "qid iter docid grade". Negative grades are read as 0.
Qrels parse_qrels(std::string_view text);

enum class MetricKind { Mrr, Ndcg };

struct MetricSpec {
  MetricKind kind = MetricKind::Mrr;
  std::size_t k = 10;
  std::string name() const;
};

/// "mrr@10", "ndcg@100", ...; throws std::invalid_argument.
MetricSpec parse_metric(std::string_view s);

struct MetricResult {
  MetricSpec spec;
  double mean = 0.0;
  std::map<std::string, double> per_query;
};

/// Per-query values over the run's queries and their arithmetic mean.
MetricResult evaluate(const std::vector<Ranking>& run, const Qrels& qrels, const MetricSpec& spec);

}  // namespace forge
