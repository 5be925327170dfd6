#include "forge/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "forge/text_util.hpp"

namespace forge {

void Ranking::sort() {
  std::sort(entries.begin(), entries.end(), [](const RankedDoc& a, const RankedDoc& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc_id < b.doc_id;
  });
}

void Qrels::set(const std::string& q, const std::string& d, int grade) {
  judged_[q][d] = std::max(grade, 0);
}

int Qrels::grade(const std::string& q, const std::string& d) const {
  auto qi = judged_.find(q);
  if (qi == judged_.end()) return 0;
  auto di = qi->second.find(d);
  return di == qi->second.end() ? 0 : di->second;
}

std::vector<int> Qrels::grades(const std::string& q) const {
  std::vector<int> out;
  if (auto qi = judged_.find(q); qi != judged_.end())
    for (const auto& [doc, g] : qi->second) out.push_back(g);
  return out;
}

double mrr_at_k(const Ranking& r, const Qrels& qrels, std::size_t k) {
  const std::size_t n = std::min(k, r.entries.size());
  for (std::size_t i = 0; i < n; ++i)
    if (qrels.grade(r.query_id, r.entries[i].doc_id) >= 1) return 1.0 / static_cast<double>(i + 1);
  return 0.0;
}

namespace {

double gain(int grade) { return std::exp2(static_cast<double>(grade)) - 1.0; }
double discount(std::size_t rank) { return std::log2(static_cast<double>(rank) + 1.0); }

}  // namespace

double ndcg_at_k(const Ranking& r, const Qrels& qrels, std::size_t k) {
  std::vector<int> ideal = qrels.grades(r.query_id);
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  double idcg = 0.0;
  for (std::size_t i = 0; i < std::min(k, ideal.size()); ++i) idcg += gain(ideal[i]) / discount(i + 1);
  if (idcg <= 0.0) return 0.0;
  double dcg = 0.0;
  for (std::size_t i = 0; i < std::min(k, r.entries.size()); ++i)
    dcg += gain(qrels.grade(r.query_id, r.entries[i].doc_id)) / discount(i + 1);
  return dcg / idcg;
}

namespace {

std::vector<std::string> fields(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string f; is >> f;) out.push_back(f);
  return out;
}

double to_double(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad number '" + s + "'", line);
}

int to_int(const std::string& s, std::size_t line) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad integer '" + s + "'", line);
  return v;
}

}  // namespace

std::vector<Ranking> parse_run_file(std::string_view text) {
  std::map<std::string, Ranking> by_query;
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto f = fields(line);
    if (f.size() != 6) throw ParseError("run line needs 6 fields, got " + std::to_string(f.size()), line_no);
    to_int(f[3], line_no);
    double score = to_double(f[4], line_no);
    if (!seen.emplace(f[0], f[2]).second)
      throw ParseError("duplicate document '" + f[2] + "' for query '" + f[0] + "'", line_no);
    Ranking& r = by_query[f[0]];
    r.query_id = f[0];
    r.entries.push_back({f[2], score});
  }
  std::vector<Ranking> out;
  for (auto& [q, r] : by_query) {
    r.sort();
    out.push_back(std::move(r));
  }
  return out;
}

Qrels parse_qrels(std::string_view text) {
  Qrels q;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto f = fields(line);
    if (f.size() != 4) throw ParseError("qrels line needs 4 fields, got " + std::to_string(f.size()), line_no);
    q.set(f[0], f[2], to_int(f[3], line_no));
  }
  return q;
}

std::string MetricSpec::name() const {
  return std::string(kind == MetricKind::Mrr ? "mrr" : "ndcg") + "@" + std::to_string(k);
}

MetricSpec parse_metric(std::string_view s) {
  const std::string lower = to_lower_ascii(trim(s));
  const auto at = lower.find('@');
  if (at == std::string::npos) throw std::invalid_argument("metric needs a cutoff: " + lower);
  MetricSpec spec;
  const std::string name = lower.substr(0, at);
  if (name == "mrr") {
    spec.kind = MetricKind::Mrr;
  } else if (name == "ndcg") {
    spec.kind = MetricKind::Ndcg;
  } else {
    throw std::invalid_argument("unknown metric: " + name);
  }
  const std::string cut = lower.substr(at + 1);
  auto [p, ec] = std::from_chars(cut.data(), cut.data() + cut.size(), spec.k);
  if (ec != std::errc() || p != cut.data() + cut.size() || spec.k == 0)
    throw std::invalid_argument("bad cutoff in metric: " + lower);
  return spec;
}

MetricResult evaluate(const std::vector<Ranking>& run, const Qrels& qrels, const MetricSpec& spec) {
  MetricResult res;
  res.spec = spec;
  double sum = 0.0;
  for (const auto& r : run) {
    double v = spec.kind == MetricKind::Mrr ? mrr_at_k(r, qrels, spec.k) : ndcg_at_k(r, qrels, spec.k);
    res.per_query[r.query_id] = v;
    sum += v;
  }
  res.mean = run.empty() ? 0.0 : sum / static_cast<double>(run.size());
  return res;
}

}  // namespace forge
