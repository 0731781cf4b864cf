#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flipper {

using Vertex = std::uint32_t;

inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

// Dense bitset over vertex ids [0, universe). Inserting past the universe grows it.
// Equality and ordering look at contents only, never at the universe size.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  void resize(std::size_t universe);

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v) noexcept;
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  std::optional<Vertex> first() const noexcept;
  std::optional<Vertex> next_after(Vertex v) const noexcept;

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  std::size_t intersection_count(const VertexSet& other) const noexcept;
  // True when a and b agree on every vertex of mask.
  static bool agree_on(const VertexSet& a, const VertexSet& b, const VertexSet& mask) noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator^=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept;

  std::vector<Vertex> to_vector() const;
  std::span<const Word> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* set, std::optional<Vertex> at) : set_(set), at_(at) {}
    Vertex operator*() const { return *at_; }
    iterator& operator++() {
      at_ = set_->next_after(*at_);
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.at_ == b.at_; }

   private:
    const VertexSet* set_ = nullptr;
    std::optional<Vertex> at_;
  };

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, std::nullopt); }

 private:
  void trim_tail() noexcept;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

// Order used for canonical flips: by minimum element, then size, then elements.
// The empty set sorts first.
bool canonical_less(const VertexSet& a, const VertexSet& b);

std::string to_string(const VertexSet& s);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace flipper
