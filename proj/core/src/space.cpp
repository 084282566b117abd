#include "entropics/space.hpp"

#include <cmath>
#include <limits>

#include "entropics/errors.hpp"

namespace entropics {

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidInput("outcome space needs at least one outcome");
  index_.reserve(labels_.size());
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    auto [it, inserted] = index_.emplace(labels_[k], k);
    if (!inserted) throw InvalidInput("duplicate outcome label: " + labels_[k]);
  }
}

SpacePtr OutcomeSpace::make(std::vector<std::string> labels) {
  return SpacePtr(new OutcomeSpace(std::move(labels)));
}

SpacePtr OutcomeSpace::product(SpacePtr left, SpacePtr right) {
  std::vector<std::string> labels;
  labels.reserve(left->size() * right->size());
  for (const auto& l : left->labels())
    for (const auto& r : right->labels()) labels.push_back("(" + l + "," + r + ")");
  auto space = new OutcomeSpace(std::move(labels));
  space->left_ = std::move(left);
  space->right_ = std::move(right);
  return SpacePtr(space);
}

std::size_t OutcomeSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InvalidInput("unknown outcome label: " + label);
  return it->second;
}

bool OutcomeSpace::same_as(const OutcomeSpace& other) const {
  return this == &other || labels_ == other.labels_;
}

void require_same_space(const OutcomeSpace& a, const OutcomeSpace& b) {
  if (!a.same_as(b)) throw SpaceMismatch("operands live on different outcome spaces");
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!a || !b) throw SpaceMismatch("missing outcome space");
  require_same_space(*a, *b);
}

ProductIndex::ProductIndex(SpacePtr base, std::int64_t n) : base_(std::move(base)), n_(n) {
  if (n_ < 1) throw InvalidInput("product order must be positive");
  const double l = static_cast<double>(base_->size());
  count_ = std::pow(l, static_cast<double>(n_));
  countable_ = count_ < 9.2e18;
  exact_count_ = 1;
  if (countable_) {
    for (std::int64_t i = 0; i < n_; ++i) exact_count_ *= base_->size();
  } else {
    exact_count_ = std::numeric_limits<std::uint64_t>::max();
  }
}

std::vector<int> ProductIndex::decode(std::uint64_t index) const {
  std::vector<int> word(static_cast<std::size_t>(n_));
  const std::uint64_t l = base_->size();
  for (std::int64_t k = n_ - 1; k >= 0; --k) {
    word[static_cast<std::size_t>(k)] = static_cast<int>(index % l);
    index /= l;
  }
  return word;
}

std::uint64_t ProductIndex::encode(const std::vector<int>& word) const {
  const std::uint64_t l = base_->size();
  std::uint64_t index = 0;
  for (int v : word) index = index * l + static_cast<std::uint64_t>(v);
  return index;
}

}  // namespace entropics
