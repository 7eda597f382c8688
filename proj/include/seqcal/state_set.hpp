#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace seqcal {

// A subset of a finite element universe {0, ..., size-1}, stored as a bit
// vector. Used for arc labels of set graphs and for Boolean denotations,
// where element k is the state s_k of the fully populated structure.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe);
  StateSet(std::size_t universe, std::initializer_list<std::size_t> members);
  StateSet(std::size_t universe, const std::vector<std::size_t>& members);

  static StateSet full(std::size_t universe);

  std::size_t universe() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool empty() const;
  std::size_t count() const;
  bool subset_of(const StateSet& other) const;
  std::vector<std::size_t> members() const;

  StateSet& operator&=(const StateSet& o);
  StateSet& operator|=(const StateSet& o);
  StateSet& operator-=(const StateSet& o);
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }
  // Complement within the universe.
  StateSet operator~() const;

  friend bool operator==(const StateSet& a, const StateSet& b);
  // Orders by universe size, then by member list lexicographically.
  friend std::strong_ordering operator<=>(const StateSet& a, const StateSet& b);

  const std::uint64_t* words() const { return w_.data(); }
  std::uint64_t* words() { return w_.data(); }
  std::size_t word_count() const { return w_.size(); }

 private:
  void check_same(const StateSet& o) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace seqcal
