#include "sepinv/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sepinv {

Permutation::Permutation(std::vector<unsigned> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (unsigned v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("permutation: images must be a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<unsigned> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<unsigned>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& b) const {
  if (size() != b.size()) throw std::invalid_argument("permutation: size mismatch");
  std::vector<unsigned> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = img_[b.img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[img_[i]] = static_cast<unsigned>(i);
  return Permutation(std::move(img));
}

SetPartition SetPartition::from_blocks(std::size_t n, std::vector<std::vector<unsigned>> blocks) {
  SetPartition p;
  p.n_ = n;
  p.block_of_.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("partition: empty block");
    std::sort(blk.begin(), blk.end());
    for (unsigned v : blk) {
      if (v >= n || seen[v]) throw std::invalid_argument("partition: blocks must partition the index set");
      seen[v] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) throw std::invalid_argument("partition: blocks must cover the index set");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  p.blocks_ = std::move(blocks);
  for (unsigned b = 0; b < p.blocks_.size(); ++b) {
    for (unsigned v : p.blocks_[b]) p.block_of_[v] = b;
  }
  return p;
}

SetPartition SetPartition::singletons(std::size_t n) {
  std::vector<std::vector<unsigned>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {static_cast<unsigned>(i)};
  return from_blocks(n, std::move(blocks));
}

SetPartition SetPartition::single_block(std::size_t n) {
  std::vector<unsigned> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<unsigned>(i);
  return from_blocks(n, {all});
}

std::size_t SetPartition::min_block() const {
  if (blocks_.empty()) throw std::invalid_argument("partition: empty");
  std::size_t best = blocks_.front().size();
  for (const auto& blk : blocks_) best = std::min(best, blk.size());
  return best;
}

std::uint64_t SetPartition::stabilizer_order() const {
  std::uint64_t r = 1;
  for (const auto& blk : blocks_) {
    for (std::uint64_t i = 2; i <= blk.size(); ++i) r *= i;
  }
  return r;
}

std::string SetPartition::to_string() const {
  std::string s = "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(blocks_[b][i] + 1);
    }
  }
  s += '}';
  return s;
}

SetPartition parti(const std::vector<FieldElement>& a) {
  if (a.empty()) throw std::invalid_argument("parti: empty vector");
  std::map<FieldElement, std::vector<unsigned>> groups;
  for (unsigned i = 0; i < a.size(); ++i) groups[a[i]].push_back(i);
  std::vector<std::vector<unsigned>> blocks;
  blocks.reserve(groups.size());
  for (auto& [value, idxs] : groups) blocks.push_back(std::move(idxs));
  return SetPartition::from_blocks(a.size(), std::move(blocks));
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("meet: size mismatch");
  std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> groups;
  for (unsigned i = 0; i < a.n(); ++i) groups[{a.block_of(i), b.block_of(i)}].push_back(i);
  std::vector<std::vector<unsigned>> blocks;
  blocks.reserve(groups.size());
  for (auto& [key, idxs] : groups) blocks.push_back(std::move(idxs));
  return SetPartition::from_blocks(a.n(), std::move(blocks));
}

bool fixes(const Permutation& s, const SetPartition& a) {
  if (s.size() != a.n()) throw std::invalid_argument("fixes: size mismatch");
  for (unsigned i = 0; i < a.n(); ++i) {
    if (a.block_of(s(i)) != a.block_of(i)) return false;
  }
  return true;
}

bool refines(const SetPartition& a, const SetPartition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("refines: size mismatch");
  for (const auto& blk : a.blocks()) {
    const unsigned target = b.block_of(blk.front());
    for (unsigned v : blk) {
      if (b.block_of(v) != target) return false;
    }
  }
  return true;
}

}  // namespace sepinv
