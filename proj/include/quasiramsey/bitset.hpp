#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace quasiramsey {

/// A subset of the vertex range [0, universe) stored as a packed bitset.
///
/// Word-level operations (intersection counts, unions) are what make the
/// adjacency-row arithmetic in Graph cheap. Bits at or beyond `universe` are
/// always zero.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  // Throws InputError when a member is outside [0, universe).
  static VertexSet from_list(std::size_t universe, std::span<const int> members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const;

  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return total;
  }
  bool intersects(const VertexSet& other) const;

  // Ascending member list.
  std::vector<int> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement within the universe.
  VertexSet complemented() const;

  bool operator==(const VertexSet&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void clear_tail();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic order on ascending member lists: {0} < {0,1} < {0,2} < {1}.
bool lex_less(std::span<const int> a, std::span<const int> b);

}  // namespace quasiramsey
