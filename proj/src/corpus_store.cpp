#include "forge/corpus_store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <stdexcept>

namespace forge {

CorpusStore::CorpusStore(std::filesystem::path spill_path, std::size_t memory_limit)
    : spill_path_(std::move(spill_path)), memory_limit_(memory_limit) {}

CorpusStore::~CorpusStore() {
  if (spill_fd_ >= 0) ::close(spill_fd_);
  if (spill_out_.is_open()) spill_out_.close();
  std::error_code ec;
  if (spilled_) std::filesystem::remove(spill_path_, ec);
}

bool CorpusStore::add(ArticleId id, std::string text) {
  if (entries_.count(id)) return false;
  Entry e;
  if (in_memory_ + text.size() <= memory_limit_) {
    in_memory_ += text.size();
    e.text = std::move(text);
  } else {
    if (!spill_out_.is_open()) {
      spill_out_.open(spill_path_, std::ios::binary | std::ios::trunc);
      if (!spill_out_) throw std::runtime_error("cannot create spill file " + spill_path_.string());
    }
    spill_out_.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!spill_out_) throw std::runtime_error("write to spill file failed");
    e.on_disk = true;
    e.offset = spill_end_;
    e.length = text.size();
    spill_end_ += text.size();
    ++spilled_;
  }
  entries_.emplace(id, std::move(e));
  return true;
}

void CorpusStore::seal() {
  if (!spill_out_.is_open()) return;
  spill_out_.close();
  if (!spill_out_) throw std::runtime_error("cannot flush spill file");
  spill_fd_ = ::open(spill_path_.c_str(), O_RDONLY);
  if (spill_fd_ < 0) throw std::runtime_error("cannot reopen spill file " + spill_path_.string());
}

std::optional<std::string> CorpusStore::text(ArticleId id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  const Entry& e = it->second;
  if (!e.on_disk) return e.text;
  if (spill_fd_ < 0) throw std::logic_error("corpus store read before seal()");
  std::string out(e.length, '\0');
  std::size_t done = 0;
  while (done < e.length) {
    auto n = ::pread(spill_fd_, out.data() + done, e.length - done,
                     static_cast<off_t>(e.offset + done));
    if (n <= 0) throw std::runtime_error("read from spill file failed");
    done += static_cast<std::size_t>(n);
  }
  return out;
}

}  // namespace forge
