#include "dcn/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace dcn {

SetPartition SetPartition::trusted(std::vector<std::vector<int>> canonical_blocks, int n) {
  SetPartition p;
  p.n_ = n;
  p.blocks_ = std::move(canonical_blocks);
  return p;
}

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks, int n) {
  if (n < 0) throw ValidationError("ground-set size must be nonnegative");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw ValidationError("block " + std::to_string(b + 1) + " is empty");
    for (int v : blocks[b]) {
      if (v < 1 || v > n)
        throw ValidationError("element " + std::to_string(v) + " outside [1," +
                              std::to_string(n) + "]");
      if (seen[static_cast<std::size_t>(v)])
        throw ValidationError("element " + std::to_string(v) + " appears twice");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    std::sort(blocks[b].begin(), blocks[b].end());
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw ValidationError("vertex " + std::to_string(v) + " uncovered");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return trusted(std::move(blocks), n);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{'", i + 1);
    ++i;
    std::vector<int> block;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated block", i + 1);
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(block.empty() ? "expected element" : "expected element after ','",
                         i + 1);
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw ParseError("element too large", i + 1);
        ++i;
      }
      block.push_back(static_cast<int>(v));
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated block", i + 1);
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == '}') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or '}'", i + 1);
    }
    blocks.push_back(std::move(block));
    skip_ws();
  }
  int n = 0;
  for (const auto& b : blocks)
    for (int v : b) n = std::max(n, v);
  return from_blocks(std::move(blocks), n);
}

bool SetPartition::is_matching() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const auto& b) { return b.size() == 2; });
}

std::string SetPartition::to_text() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

std::vector<Edge> edges(const SetPartition& p) {
  std::vector<Edge> es;
  for (const auto& b : p.blocks()) {
    if (b.size() == 1) {
      es.push_back({b[0], b[0]});
    } else {
      for (std::size_t i = 0; i + 1 < b.size(); ++i) es.push_back({b[i], b[i + 1]});
    }
  }
  std::sort(es.begin(), es.end());
  return es;
}

VertexClassification classify(const SetPartition& p) {
  VertexClassification c;
  c.kind.assign(static_cast<std::size_t>(p.n()) + 1, VertexKind::Opener);
  for (const auto& b : p.blocks()) {
    if (b.size() == 1) {
      c.kind[static_cast<std::size_t>(b[0])] = VertexKind::Singleton;
    } else {
      c.kind[static_cast<std::size_t>(b.front())] = VertexKind::Opener;
      c.kind[static_cast<std::size_t>(b.back())] = VertexKind::Closer;
      for (std::size_t i = 1; i + 1 < b.size(); ++i)
        c.kind[static_cast<std::size_t>(b[i])] = VertexKind::Transient;
    }
  }
  for (int v = 1; v <= p.n(); ++v) {
    switch (c.kind[static_cast<std::size_t>(v)]) {
      case VertexKind::Opener: c.openers.push_back(v); break;
      case VertexKind::Closer: c.closers.push_back(v); break;
      case VertexKind::Singleton: c.singletons.push_back(v); break;
      case VertexKind::Transient: c.transients.push_back(v); break;
    }
  }
  return c;
}

std::vector<int> closing_partner(const SetPartition& p) {
  std::vector<int> partner(static_cast<std::size_t>(p.n()) + 1, 0);
  for (const auto& b : p.blocks()) {
    if (b.size() == 1) {
      partner[static_cast<std::size_t>(b[0])] = b[0];
    } else {
      for (std::size_t i = 1; i < b.size(); ++i)
        partner[static_cast<std::size_t>(b[i])] = b[i - 1];
    }
  }
  return partner;
}

// Edges have pairwise distinct left endpoints, so sorting by (lo,hi) orders
// every unordered pair as (e,f) with e.lo < f.lo. The pair is then a k-distant
// crossing iff f.lo <= e.hi < f.hi and e.hi - f.lo >= k, and a k-distant
// nesting iff f.hi < e.hi and f.hi - f.lo >= k.
long long dcr(const SetPartition& p, int k) {
  const auto es = edges(p);
  long long count = 0;
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      const Edge& e = es[a];
      const Edge& f = es[b];
      if (f.lo <= e.hi && e.hi < f.hi && e.hi - f.lo >= k) {
        if (e.loop() || f.loop())
          throw InternalError("loop edge participated in a k-distant crossing");
        ++count;
      }
    }
  }
  return count;
}

long long dne(const SetPartition& p, int k) {
  const auto es = edges(p);
  long long count = 0;
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      const Edge& e = es[a];
      const Edge& f = es[b];
      if (f.hi < e.hi && f.hi - f.lo >= k) ++count;
    }
  }
  return count;
}

namespace {

// Chains with strictly increasing openers and closers; every opener must stay
// <= j1 - k where j1 is the first edge's closer. Loops can never qualify.
void extend_crossing(const std::vector<Edge>& arcs, std::size_t idx, int last_hi,
                     int opener_bound, int len, int& best) {
  best = std::max(best, len);
  for (std::size_t t = idx + 1; t < arcs.size(); ++t) {
    const Edge& e = arcs[t];
    if (e.lo > opener_bound) break;  // arcs sorted by lo
    if (e.hi > last_hi) extend_crossing(arcs, t, e.hi, opener_bound, len + 1, best);
  }
}

// Nested chains (openers increasing, closers decreasing); a chain of length r
// qualifies iff its innermost edge spans at least k.
void extend_nesting(const std::vector<Edge>& arcs, std::size_t idx, int k, int len,
                    int& best) {
  const Edge& inner = arcs[idx];
  if (inner.hi - inner.lo >= k) best = std::max(best, len);
  for (std::size_t t = idx + 1; t < arcs.size(); ++t) {
    const Edge& e = arcs[t];
    if (e.lo >= inner.hi) break;
    if (e.hi < inner.hi) extend_nesting(arcs, t, k, len + 1, best);
  }
}

}  // namespace

int max_crossing(const SetPartition& p, int k) {
  const auto es = edges(p);
  if (es.empty()) return 0;
  std::vector<Edge> arcs;
  for (const Edge& e : es)
    if (!e.loop()) arcs.push_back(e);
  int best = 1;
  for (std::size_t s = 0; s < arcs.size(); ++s) {
    const int bound = arcs[s].hi - k;
    if (arcs[s].lo > bound) continue;
    extend_crossing(arcs, s, arcs[s].hi, bound, 1, best);
  }
  return best;
}

int max_nesting(const SetPartition& p, int k) {
  const auto es = edges(p);
  if (es.empty()) return 0;
  int best = 1;
  for (std::size_t s = 0; s < es.size(); ++s) {
    int chain_best = 0;
    extend_nesting(es, s, k, 1, chain_best);
    if (chain_best >= 2) best = std::max(best, chain_best);
  }
  return best;
}

StatisticRecord statistics(const SetPartition& p, int k) {
  return {k, dcr(p, k), dne(p, k), max_crossing(p, k), max_nesting(p, k)};
}

// --- enumeration streams -----------------------------------------------

PartitionStream::PartitionStream(int n) : n_(n), fixed_(0) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  rgs_.assign(static_cast<std::size_t>(n), 0);
}

PartitionStream::PartitionStream(int n, std::vector<int> rgs_prefix)
    : n_(n), fixed_(rgs_prefix.size()) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  if (rgs_prefix.size() > static_cast<std::size_t>(n))
    throw ValidationError("prefix longer than n");
  int mx = -1;
  for (std::size_t i = 0; i < rgs_prefix.size(); ++i) {
    if (rgs_prefix[i] < 0 || rgs_prefix[i] > mx + 1)
      throw ValidationError("invalid restricted-growth prefix at index " + std::to_string(i));
    mx = std::max(mx, rgs_prefix[i]);
  }
  rgs_ = std::move(rgs_prefix);
  rgs_.resize(static_cast<std::size_t>(n), 0);
}

std::optional<SetPartition> PartitionStream::next() {
  if (exhausted_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    return materialize();
  }
  if (!advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  return materialize();
}

bool PartitionStream::advance() {
  const std::size_t n = rgs_.size();
  if (n == 0) return false;
  std::vector<int> pmax(n, 0);
  int mx = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) pmax[i] = mx;
    mx = std::max(mx, rgs_[i]);
  }
  for (std::size_t i = n; i-- > std::max<std::size_t>(fixed_, 1);) {
    if (rgs_[i] <= pmax[i]) {
      ++rgs_[i];
      for (std::size_t j = i + 1; j < n; ++j) rgs_[j] = 0;
      return true;
    }
  }
  return false;
}

SetPartition PartitionStream::materialize() const {
  int nb = 0;
  for (int v : rgs_) nb = std::max(nb, v + 1);
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nb));
  for (std::size_t i = 0; i < rgs_.size(); ++i)
    blocks[static_cast<std::size_t>(rgs_[i])].push_back(static_cast<int>(i) + 1);
  return SetPartition::trusted(std::move(blocks), n_);
}

MatchingStream::MatchingStream(int n) : MatchingStream(n, {}) {}

MatchingStream::MatchingStream(int n, std::vector<int> rgs_prefix)
    : n_(n), fixed_(rgs_prefix.size()) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  if (rgs_prefix.size() > static_cast<std::size_t>(n))
    throw ValidationError("prefix longer than n");
  rgs_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < rgs_prefix.size(); ++i) {
    int v = rgs_prefix[i];
    if (v < 0 || v > nblocks_)
      throw ValidationError("invalid restricted-growth prefix at index " + std::to_string(i));
    if (v < nblocks_ && block_size_[static_cast<std::size_t>(v)] >= 2)
      throw ValidationError("prefix assigns three elements to one block at index " +
                            std::to_string(i));
    assign(static_cast<int>(i), v);
  }
  if (!feasible_after(static_cast<int>(fixed_)) || !fill_from(fixed_)) exhausted_ = true;
}

bool MatchingStream::feasible_after(int assigned) const {
  const int rem = n_ - assigned;
  return open_ <= rem && (rem - open_) % 2 == 0;
}

void MatchingStream::assign(int pos, int v) {
  rgs_[static_cast<std::size_t>(pos)] = v;
  if (v == nblocks_) {
    block_size_.push_back(1);
    ++nblocks_;
    ++open_;
  } else {
    ++block_size_[static_cast<std::size_t>(v)];
    --open_;
  }
}

void MatchingStream::unassign(int pos) {
  const int v = rgs_[static_cast<std::size_t>(pos)];
  rgs_[static_cast<std::size_t>(pos)] = -1;
  if (block_size_[static_cast<std::size_t>(v)] == 1) {
    block_size_.pop_back();
    --nblocks_;
    --open_;
  } else {
    --block_size_[static_cast<std::size_t>(v)];
    ++open_;
  }
}

// Lexicographically smallest completion: join the lowest open block, else
// start a new block when two or more positions remain.
bool MatchingStream::fill_from(std::size_t pos) {
  for (std::size_t i = pos; i < static_cast<std::size_t>(n_); ++i) {
    const int rem_including = n_ - static_cast<int>(i);
    if (open_ > 0) {
      int v = -1;
      for (int b = 0; b < nblocks_; ++b)
        if (block_size_[static_cast<std::size_t>(b)] == 1) {
          v = b;
          break;
        }
      assign(static_cast<int>(i), v);
    } else if (rem_including >= 2) {
      assign(static_cast<int>(i), nblocks_);
    } else {
      return false;
    }
  }
  return open_ == 0;
}

bool MatchingStream::advance() {
  for (std::size_t pos = static_cast<std::size_t>(n_); pos-- > fixed_;) {
    const int v = rgs_[static_cast<std::size_t>(pos)];
    unassign(static_cast<int>(pos));
    const int rem_including = n_ - static_cast<int>(pos);
    for (int w = v + 1; w <= nblocks_; ++w) {
      if (w < nblocks_) {
        if (block_size_[static_cast<std::size_t>(w)] != 1) continue;
        assign(static_cast<int>(pos), w);
      } else {
        if (open_ + 2 > rem_including) break;
        assign(static_cast<int>(pos), w);
      }
      if (fill_from(pos + 1)) return true;
      unassign(static_cast<int>(pos));
    }
  }
  return false;
}

std::optional<SetPartition> MatchingStream::next() {
  if (exhausted_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    return materialize();
  }
  if (!advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  return materialize();
}

SetPartition MatchingStream::materialize() const {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks_));
  for (std::size_t i = 0; i < rgs_.size(); ++i)
    blocks[static_cast<std::size_t>(rgs_[i])].push_back(static_cast<int>(i) + 1);
  return SetPartition::trusted(std::move(blocks), n_);
}

}  // namespace dcn
