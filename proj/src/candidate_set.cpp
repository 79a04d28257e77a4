#include "bribery/candidate_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace bribery {

CandidateSet::CandidateSet(std::initializer_list<int> members) {
  for (int c : members) insert(c);
}

CandidateSet::CandidateSet(std::span<const int> members) {
  for (int c : members) insert(c);
}

CandidateSet CandidateSet::from_mask(std::uint64_t mask) {
  CandidateSet set;
  if (mask != 0) set.words_.push_back(mask);
  return set;
}

CandidateSet CandidateSet::range(int count) {
  CandidateSet set;
  if (count <= 0) return set;
  set.words_.assign(static_cast<std::size_t>((count + 63) / 64), ~std::uint64_t{0});
  const int tail = count % 64;
  if (tail != 0) set.words_.back() = (std::uint64_t{1} << tail) - 1;
  return set;
}

bool CandidateSet::contains(int c) const {
  if (c < 0) return false;
  const auto w = static_cast<std::size_t>(c / 64);
  return w < words_.size() && ((words_[w] >> (c % 64)) & 1U) != 0;
}

void CandidateSet::insert(int c) {
  if (c < 0) throw std::out_of_range("negative candidate index");
  const auto w = static_cast<std::size_t>(c / 64);
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (c % 64);
}

void CandidateSet::erase(int c) {
  if (!contains(c)) return;
  words_[static_cast<std::size_t>(c / 64)] &= ~(std::uint64_t{1} << (c % 64));
  trim();
}

int CandidateSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

int CandidateSet::max_element() const {
  if (words_.empty()) return -1;
  const auto top = words_.size() - 1;
  return static_cast<int>(top * 64) + 63 - std::countl_zero(words_[top]);
}

std::vector<int> CandidateSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int c) { out.push_back(c); });
  return out;
}

std::uint64_t CandidateSet::to_mask() const {
  if (!fits_mask()) throw std::out_of_range("candidate set does not fit a 64-bit mask");
  return words_.empty() ? 0 : words_[0];
}

int CandidateSet::intersection_size(const CandidateSet& other) const {
  const auto n = std::min(words_.size(), other.words_.size());
  int total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(words_[i] & other.words_[i]);
  return total;
}

bool CandidateSet::is_subset_of(const CandidateSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

CandidateSet CandidateSet::operator|(const CandidateSet& other) const {
  CandidateSet out = words_.size() >= other.words_.size() ? *this : other;
  const auto& smaller = words_.size() >= other.words_.size() ? other.words_ : words_;
  for (std::size_t i = 0; i < smaller.size(); ++i) out.words_[i] |= smaller[i];
  return out;
}

CandidateSet CandidateSet::operator&(const CandidateSet& other) const {
  CandidateSet out;
  out.words_.resize(std::min(words_.size(), other.words_.size()));
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  out.trim();
  return out;
}

CandidateSet CandidateSet::operator-(const CandidateSet& other) const {
  CandidateSet out = *this;
  const auto n = std::min(out.words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) out.words_[i] &= ~other.words_[i];
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const CandidateSet& a, const CandidateSet& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

std::string CandidateSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int c) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  });
  out += '}';
  return out;
}

void CandidateSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int hamming(const CandidateSet& a, const CandidateSet& b) {
  return (a - b).size() + (b - a).size();
}

bool lexicographically_less(const CandidateSet& a, const CandidateSet& b) {
  const auto x = a.elements();
  const auto y = b.elements();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::ostream& operator<<(std::ostream& os, const CandidateSet& set) { return os << set.to_string(); }

}  // namespace bribery
