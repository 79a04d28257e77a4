#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace bribery {

// A finite set of candidate indices stored as a trimmed bitset (no trailing
// zero words), so equality and ordering do not depend on the universe size.
// Ballots, committees and distinguished sets all use this type.
class CandidateSet {
 public:
  CandidateSet() = default;
  CandidateSet(std::initializer_list<int> members);
  explicit CandidateSet(std::span<const int> members);

  static CandidateSet from_mask(std::uint64_t mask);
  // {0, ..., count - 1}.
  static CandidateSet range(int count);

  bool contains(int c) const;
  void insert(int c);
  void erase(int c);

  int size() const;
  bool empty() const { return words_.empty(); }
  // Largest member, or -1 for the empty set.
  int max_element() const;
  std::vector<int> elements() const;

  // True when every member is below 64.
  bool fits_mask() const { return words_.size() <= 1; }
  std::uint64_t to_mask() const;

  int intersection_size(const CandidateSet& other) const;
  bool intersects(const CandidateSet& other) const { return intersection_size(other) > 0; }
  bool is_subset_of(const CandidateSet& other) const;

  CandidateSet operator|(const CandidateSet& other) const;
  CandidateSet operator&(const CandidateSet& other) const;
  // Set difference.
  CandidateSet operator-(const CandidateSet& other) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
  // Orders sets by their value as binary numbers; on sets of candidates below
  // 64 this is exactly the numeric order of the bitmasks.
  friend std::strong_ordering operator<=>(const CandidateSet& a, const CandidateSet& b);

  // "{0,2,5}"
  std::string to_string() const;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

// |a \ b| + |b \ a|.
int hamming(const CandidateSet& a, const CandidateSet& b);

// Lexicographic comparison of the ascending member lists.
bool lexicographically_less(const CandidateSet& a, const CandidateSet& b);

std::ostream& operator<<(std::ostream& os, const CandidateSet& set);

using Ballot = CandidateSet;
using Committee = CandidateSet;

}  // namespace bribery
