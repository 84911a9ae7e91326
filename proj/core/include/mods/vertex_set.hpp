#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace mods {

using Vertex = std::uint32_t;

// A subset of {0, ..., universe-1} stored as a packed bit mask.
//
// Binary operators require both operands to share the same universe. Bits at
// positions >= universe are kept at zero so word-wise comparisons and counts
// stay exact.
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;

    Vertex operator*() const { return static_cast<Vertex>(word_ * kWordBits + std::countr_zero(bits_)); }

    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      advance();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }

    bool operator==(const const_iterator& other) const {
      return word_ == other.word_ && bits_ == other.bits_;
    }

   private:
    friend class VertexSet;
    const_iterator(const std::uint64_t* words, std::size_t word_count, std::size_t word)
        : words_(words), word_count_(word_count), word_(word) {
      if (word_ < word_count_) bits_ = words_[word_];
      advance();
    }

    void advance() {
      while (bits_ == 0 && word_ < word_count_) {
        ++word_;
        bits_ = word_ < word_count_ ? words_[word_] : 0;
      }
    }

    const std::uint64_t* words_ = nullptr;
    std::size_t word_count_ = 0;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  // Smallest member, or universe() when empty.
  Vertex front() const noexcept;

  const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
  const_iterator end() const { return {words_.data(), words_.size(), words_.size()}; }

  std::vector<Vertex> to_vector() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const VertexSet& other) const = default;

  // Renders as "{0,2,5}".
  std::string to_string() const;

 private:
  void check_same_universe(const VertexSet& other) const;
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic order on the ascending member sequences, so {0,1,2} < {0,2}
// and {0} < {0,1}. This is the tie-breaking order used by every solver.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace mods
