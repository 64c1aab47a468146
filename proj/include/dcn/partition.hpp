#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcn/errors.hpp"

namespace dcn {

// Arc between consecutive elements of a block; (v,v) is the loop of a singleton.
// A loop never takes part in a k-distant crossing, but it can be the inner
// edge of a 0-distant nesting.
struct Edge {
  int lo = 0;
  int hi = 0;
  bool loop() const { return lo == hi; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class VertexKind : unsigned char { Opener, Closer, Singleton, Transient };

// The four classes partition [n]. type(pi) is the 4-tuple of sets;
// type'(pi) merges singletons with transients.
struct VertexClassification {
  std::vector<int> openers;
  std::vector<int> closers;
  std::vector<int> singletons;
  std::vector<int> transients;
  std::vector<VertexKind> kind;  // indexed 1..n; kind[0] unused
};

struct StatisticRecord {
  int k = 0;
  long long dcr = 0;
  long long dne = 0;
  int max_crossing = 0;  // maximal r with a k-distant r-crossing; 1 with edges but no r>=2; 0 if edgeless
  int max_nesting = 0;
};

// Set partition of [n] in canonical form: blocks sorted by minimum,
// elements ascending, disjoint, covering exactly {1,...,n}.
class SetPartition {
 public:
  SetPartition() = default;

  // Validates and canonicalizes. Errors name the offending element or block.
  static SetPartition from_blocks(std::vector<std::vector<int>> blocks, int n);

  // Text form "{1,5}{2,4,9}{3}"; the empty partition is "". n is the largest element.
  static SetPartition parse(std::string_view text);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool is_matching() const;
  std::string to_text() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

  // Trusted constructor for enumeration streams; input must already be canonical.
  static SetPartition trusted(std::vector<std::vector<int>> canonical_blocks, int n);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

std::vector<Edge> edges(const SetPartition& p);
VertexClassification classify(const SetPartition& p);

// For each vertex v in C u S u T, the vertex its closing edge connects to
// (v itself for a singleton). Entry 0 where undefined (openers), index 1..n.
std::vector<int> closing_partner(const SetPartition& p);

// Number of k-distant crossings / nestings, by direct pair scan over edges.
long long dcr(const SetPartition& p, int k);
long long dne(const SetPartition& p, int k);

// Maximal r >= 2 admitting a k-distant r-crossing / r-nesting; 1 if the
// partition has edges but no such r; 0 for the empty partition.
int max_crossing(const SetPartition& p, int k);
int max_nesting(const SetPartition& p, int k);

StatisticRecord statistics(const SetPartition& p, int k);

// Streams all partitions of [n] exactly once, in lexicographic order of the
// restricted-growth string. Single consumer; independent streams may run in
// parallel. The prefix form enumerates only completions of a fixed RGS prefix.
class PartitionStream {
 public:
  explicit PartitionStream(int n);
  PartitionStream(int n, std::vector<int> rgs_prefix);
  std::optional<SetPartition> next();

 private:
  int n_ = 0;
  std::size_t fixed_ = 0;
  std::vector<int> rgs_;
  bool exhausted_ = false;
  bool fresh_ = true;
  bool advance();
  SetPartition materialize() const;
};

// Same contract for complete matchings of [n]; empty stream when n is odd.
class MatchingStream {
 public:
  explicit MatchingStream(int n);
  MatchingStream(int n, std::vector<int> rgs_prefix);
  std::optional<SetPartition> next();

 private:
  int n_ = 0;
  std::size_t fixed_ = 0;
  std::vector<int> rgs_;
  std::vector<int> block_size_;
  int nblocks_ = 0;
  int open_ = 0;
  bool exhausted_ = false;
  bool fresh_ = true;

  bool feasible_after(int assigned) const;
  void assign(int pos, int v);
  void unassign(int pos);
  bool fill_from(std::size_t pos);
  bool advance();
  SetPartition materialize() const;
};

}  // namespace dcn
