#include "flipper/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace flipper {

namespace {

std::size_t words_for(std::size_t universe) {
  return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim_tail();
  return s;
}

void VertexSet::resize(std::size_t universe) {
  universe_ = universe;
  words_.resize(words_for(universe), 0);
  trim_tail();
}

void VertexSet::trim_tail() noexcept {
  std::size_t rem = universe_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) resize(static_cast<std::size_t>(v) + 1);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) noexcept {
  if (v < universe_) words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

std::optional<Vertex> VertexSet::next_after(Vertex v) const noexcept {
  std::size_t pos = static_cast<std::size_t>(v) + 1;
  if (pos >= universe_) return std::nullopt;
  std::size_t i = pos / kWordBits;
  Word w = words_[i] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (w != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
    if (++i >= words_.size()) return std::nullopt;
    w = words_[i];
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const noexcept {
  std::size_t n = std::min(words_.size(), other.words_.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

bool VertexSet::agree_on(const VertexSet& a, const VertexSet& b, const VertexSet& mask) noexcept {
  for (std::size_t i = 0; i < mask.words_.size(); ++i) {
    Word m = mask.words_[i];
    if (m == 0) continue;
    Word x = i < a.words_.size() ? a.words_[i] : 0;
    Word y = i < b.words_.size() ? b.words_[i] : 0;
    if (((x ^ y) & m) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) resize(other.universe_);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
  if (other.universe_ > universe_) resize(other.universe_);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
  std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet::Word x = i < a.words_.size() ? a.words_[i] : 0;
    VertexSet::Word y = i < b.words_.size() ? b.words_[i] : 0;
    if (x != y) return false;
  }
  return true;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const noexcept {
  // Trailing zero words must not change the hash, since equality ignores them.
  std::size_t last = words_.size();
  while (last > 0 && words_[last - 1] == 0) --last;
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < last; ++i) {
    h ^= static_cast<std::size_t>(words_[i]);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  auto ma = a.first();
  auto mb = b.first();
  if (!ma || !mb) return !ma && mb;
  if (*ma != *mb) return *ma < *mb;
  std::size_t ca = a.count();
  std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace flipper
