#include "forge/instance_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <memory>
#include "json.hpp"
#include <stdexcept>
#include <vector>

namespace forge {

using nlohmann::ordered_json;

std::string to_json_line(const PseudoInstance& inst) {
  ordered_json j;
  j["task"] = task_name(inst.task);
  j["article_id"] = inst.article_id;
  j["query"] = inst.query;
  j["positive"] = inst.positive;
  j["negatives"] = inst.negatives;
  ordered_json prov = ordered_json::object();
  if (inst.provenance.neighbor_id) {
    prov["neighbor_id"] = *inst.provenance.neighbor_id;
    prov["negative_ids"] = inst.provenance.negative_ids;
  } else {
    prov["node_ids"] = inst.provenance.node_ids;
  }
  j["provenance"] = std::move(prov);
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

PseudoInstance parse_json_line(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("instance line is not JSON: ") + e.what());
  }
  try {
    PseudoInstance inst;
    inst.task = parse_task(j.at("task").get<std::string>());
    inst.article_id = j.at("article_id").get<ArticleId>();
    inst.query = j.at("query").get<std::string>();
    inst.positive = j.at("positive").get<std::string>();
    inst.negatives = j.at("negatives").get<std::vector<std::string>>();
    const auto& prov = j.at("provenance");
    if (prov.contains("neighbor_id")) {
      inst.provenance.neighbor_id = prov.at("neighbor_id").get<ArticleId>();
      inst.provenance.negative_ids = prov.at("negative_ids").get<std::vector<ArticleId>>();
    } else {
      inst.provenance.node_ids = prov.at("node_ids").get<std::vector<NodeId>>();
    }
    return inst;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("instance line has bad schema: ") + e.what());
  }
}

std::size_t write_instances(std::span<const PseudoInstance> instances, std::ostream& sink) {
  std::vector<const PseudoInstance*> order;
  order.reserve(instances.size());
  for (const auto& i : instances) order.push_back(&i);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->article_id < b->article_id;
  });
  for (const auto* i : order) sink << to_json_line(*i) << '\n';
  if (!sink) throw std::runtime_error("write failed");
  return order.size();
}

std::size_t write_instances_file(std::span<const PseudoInstance> instances,
                                 const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".partial";
  std::size_t n = 0;
  try {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    n = write_instances(instances, out);
    out.close();
    if (!out) throw std::runtime_error("cannot finish writing " + tmp.string());
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
  return n;
}

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
      throw std::runtime_error("SHA-256 init failed");
  }
  void update(const void* data, std::size_t n) {
    if (EVP_DigestUpdate(ctx_.get(), data, n) != 1) throw std::runtime_error("SHA-256 failed");
  }
  std::string hex() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md, &len);
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += kDigits[md[i] >> 4];
      out += kDigits[md[i] & 0xf];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx_;
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes.data(), bytes.size());
  return h.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  Sha256 h;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return h.hex();
}

}  // namespace forge
