#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepinv/field.hpp"

namespace sepinv {

/// Permutation of {0, ..., n-1}, stored as images.
class Permutation {
 public:
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return img_.size(); }
  unsigned operator()(unsigned i) const { return img_.at(i); }
  const std::vector<unsigned>& images() const { return img_; }

  /// (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& b) const;
  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }

 private:
  std::vector<unsigned> img_;
};

/// Partition of {0, ..., n-1} into disjoint blocks. Canonical layout:
/// each block sorted, blocks ordered by least element.
class SetPartition {
 public:
  static SetPartition from_blocks(std::size_t n, std::vector<std::vector<unsigned>> blocks);
  static SetPartition singletons(std::size_t n);
  static SetPartition single_block(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
  unsigned block_of(unsigned i) const { return block_of_.at(i); }

  /// Size of the smallest block.
  std::size_t min_block() const;
  /// Order of the subgroup of permutations fixing every block setwise.
  std::uint64_t stabilizer_order() const;

  /// 1-based display, e.g. "{1,2|3,4}".
  std::string to_string() const;

  bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<unsigned>> blocks_;
  std::vector<unsigned> block_of_;
};

/// Partition of the index set by coordinate equality.
SetPartition parti(const std::vector<FieldElement>& a);

/// Common refinement: blocks are the nonempty pairwise intersections.
SetPartition meet(const SetPartition& a, const SetPartition& b);

/// True when s maps every block of a onto itself.
bool fixes(const Permutation& s, const SetPartition& a);

/// True when every block of a is contained in a block of b.
bool refines(const SetPartition& a, const SetPartition& b);

}  // namespace sepinv
