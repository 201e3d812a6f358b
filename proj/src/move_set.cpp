#include "mstar/move_set.hpp"

#include <stdexcept>
#include <utility>

namespace mstar {

MoveSet::MoveSet(Window window, std::string label)
    : window_(std::move(window)), members_(window_.size()), label_(std::move(label)) {}

MoveSet::MoveSet(Window window, Bits members, std::string label)
    : window_(std::move(window)), members_(std::move(members)), label_(std::move(label)) {
  if (members_.size() != window_.size())
    throw std::invalid_argument("bitset size does not match window size");
}

MoveSet MoveSet::from_vectors(Window window, const std::vector<PositionVec>& members,
                              std::string label) {
  Bits bits(window.size());
  for (const PositionVec& p : members) {
    if (p.dim() != window.dim())
      throw std::invalid_argument("member dimension does not match window");
    if (window.contains(p)) bits.set(window.index_of(p));
  }
  return MoveSet(std::move(window), std::move(bits), std::move(label));
}

bool MoveSet::contains(const PositionVec& p) const {
  if (!window_.contains(p)) return false;
  return members_.test(window_.index_of(p));
}

bool MoveSet::contains_zero() const {
  return !members_.empty() && members_.test(0);
}

std::vector<PositionVec> MoveSet::to_vectors() const {
  std::vector<PositionVec> out;
  out.reserve(count());
  for (std::size_t i = members_.find_first(); i != Bits::npos; i = members_.find_next(i))
    out.push_back(window_.position_at(i));
  return out;
}

MoveSet MoveSet::restricted_to(const Window& w) const {
  if (w.dim() != window_.dim())
    throw std::invalid_argument("restriction window has different dimension");
  Bits bits(w.size());
  for (std::size_t i = members_.find_first(); i != Bits::npos; i = members_.find_next(i)) {
    PositionVec p = window_.position_at(i);
    if (w.contains(p)) bits.set(w.index_of(p));
  }
  return MoveSet(w, std::move(bits), label_);
}

MoveSet MoveSet::relabeled(std::string label) const {
  return MoveSet(window_, members_, std::move(label));
}

bool MoveSet::same_members(const MoveSet& other) const {
  if (!(window_ == other.window_))
    throw std::invalid_argument("comparing sets over different windows");
  return members_ == other.members_;
}

}  // namespace mstar
