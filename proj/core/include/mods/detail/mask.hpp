#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>

#include "mods/vertex_set.hpp"

namespace mods::detail {

// Fixed-width bit mask for the search kernels. Word count is a template
// parameter so the hot loops unroll; VertexSet serves as the unbounded
// fallback.
template <std::size_t W>
struct WordMask {
  std::array<std::uint64_t, W> w{};

  static WordMask from(const VertexSet& s) {
    WordMask m;
    const auto words = s.words();
    for (std::size_t i = 0; i < words.size() && i < W; ++i) m.w[i] = words[i];
    return m;
  }
};

template <std::size_t W>
inline void mask_reset(WordMask<W>& m) { m.w.fill(0); }
template <std::size_t W>
inline void mask_set(WordMask<W>& m, Vertex v) { m.w[v / 64] |= std::uint64_t{1} << (v % 64); }
template <std::size_t W>
inline void mask_or(WordMask<W>& a, const WordMask<W>& b) {
  for (std::size_t i = 0; i < W; ++i) a.w[i] |= b.w[i];
}
template <std::size_t W>
inline std::size_t mask_count(const WordMask<W>& m) {
  std::size_t c = 0;
  for (auto x : m.w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}
// |a \ b|
template <std::size_t W>
inline std::size_t mask_count_minus(const WordMask<W>& a, const WordMask<W>& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(a.w[i] & ~b.w[i]));
  return c;
}
template <std::size_t W>
inline WordMask<W> mask_from(const VertexSet& s, const WordMask<W>&) { return WordMask<W>::from(s); }

inline void mask_reset(VertexSet& m) { m.clear(); }
inline void mask_set(VertexSet& m, Vertex v) { m.insert(v); }
inline void mask_or(VertexSet& a, const VertexSet& b) { a |= b; }
inline std::size_t mask_count(const VertexSet& m) { return m.count(); }
inline std::size_t mask_count_minus(const VertexSet& a, const VertexSet& b) {
  std::size_t c = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & ~wb[i]));
  return c;
}
inline VertexSet mask_from(const VertexSet& s, const VertexSet&) { return s; }

// Invokes f(std::type_identity<Mask>{}) with the narrowest mask type that
// holds n bits.
template <class F>
decltype(auto) dispatch_mask(std::size_t n, F&& f) {
  if (n <= 64) return f(std::type_identity<WordMask<1>>{});
  if (n <= 128) return f(std::type_identity<WordMask<2>>{});
  if (n <= 256) return f(std::type_identity<WordMask<4>>{});
  if (n <= 512) return f(std::type_identity<WordMask<8>>{});
  return f(std::type_identity<VertexSet>{});
}

template <class Mask>
Mask make_mask(std::size_t n) {
  if constexpr (std::is_same_v<Mask, VertexSet>) {
    return VertexSet(n);
  } else {
    return Mask{};
  }
}

}  // namespace mods::detail
