#include "seqcal/state_set.hpp"

#include <bit>

#include "seqcal/error.hpp"
#include "seqcal/kernels.hpp"

namespace seqcal {

StateSet::StateSet(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

StateSet::StateSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : StateSet(universe) {
  for (std::size_t m : members) {
    if (m >= universe) throw Error("element index out of range");
    set(m);
  }
}

StateSet::StateSet(std::size_t universe, const std::vector<std::size_t>& members)
    : StateSet(universe) {
  for (std::size_t m : members) {
    if (m >= universe) throw Error("element index out of range");
    set(m);
  }
}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (auto& w : s.w_) w = ~std::uint64_t{0};
  if (universe % 64 != 0) s.w_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

void StateSet::check_same(const StateSet& o) const {
  if (n_ != o.n_) throw Error("state sets over different universes");
}

bool StateSet::empty() const { return kernels::active().is_zero(w_.data(), w_.size()); }

std::size_t StateSet::count() const {
  return static_cast<std::size_t>(kernels::active().popcount(w_.data(), w_.size()));
}

bool StateSet::subset_of(const StateSet& o) const {
  check_same(o);
  return kernels::active().is_subset(w_.data(), o.w_.data(), w_.size());
}

std::vector<std::size_t> StateSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

StateSet& StateSet::operator&=(const StateSet& o) {
  check_same(o);
  kernels::active().and_words(w_.data(), w_.data(), o.w_.data(), w_.size());
  return *this;
}

StateSet& StateSet::operator|=(const StateSet& o) {
  check_same(o);
  kernels::active().or_words(w_.data(), w_.data(), o.w_.data(), w_.size());
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& o) {
  check_same(o);
  kernels::active().andnot_words(w_.data(), w_.data(), o.w_.data(), w_.size());
  return *this;
}

StateSet StateSet::operator~() const {
  StateSet all = full(n_);
  all -= *this;
  return all;
}

bool operator==(const StateSet& a, const StateSet& b) {
  return a.n_ == b.n_ && kernels::active().equal(a.w_.data(), b.w_.data(), a.w_.size());
}

std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  // Lexicographic over sorted member lists: the first differing element
  // decides, and whichever set owns it sorts first.
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    std::uint64_t diff = a.w_[i] ^ b.w_[i];
    if (diff == 0) continue;
    std::uint64_t bit = diff & (~diff + 1);
    return (a.w_[i] & bit) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace seqcal
