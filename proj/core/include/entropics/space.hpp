#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace entropics {

class OutcomeSpace;
using SpacePtr = std::shared_ptr<const OutcomeSpace>;

// A finite set of labeled outcomes. Identity is by label sequence; spaces
// built as 2-fold products remember their factors so marginals are defined.
class OutcomeSpace {
 public:
  static SpacePtr make(std::vector<std::string> labels);
  static SpacePtr product(SpacePtr left, SpacePtr right);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t k) const { return labels_[k]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of a label; throws InvalidInput when absent.
  std::size_t index_of(const std::string& label) const;

  bool is_product() const { return left_ != nullptr; }
  const SpacePtr& left() const { return left_; }
  const SpacePtr& right() const { return right_; }

  bool same_as(const OutcomeSpace& other) const;

 private:
  explicit OutcomeSpace(std::vector<std::string> labels);
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  SpacePtr left_;
  SpacePtr right_;
};

// Lexicographic index over Omega^N (first coordinate most significant).
// Words are never materialized; callers decode indices on demand.
class ProductIndex {
 public:
  ProductIndex(SpacePtr base, std::int64_t n);

  const SpacePtr& base() const { return base_; }
  std::int64_t order() const { return n_; }
  // L^N as a double (may exceed integer range).
  double count() const { return count_; }
  bool countable() const { return countable_; }
  std::uint64_t exact_count() const { return exact_count_; }

  std::vector<int> decode(std::uint64_t index) const;
  std::uint64_t encode(const std::vector<int>& word) const;

 private:
  SpacePtr base_;
  std::int64_t n_;
  double count_;
  bool countable_;
  std::uint64_t exact_count_;
};

void require_same_space(const OutcomeSpace& a, const OutcomeSpace& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace entropics
