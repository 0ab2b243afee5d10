#ifndef CW_BITSET_HPP
#define CW_BITSET_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cw {

// Fixed-universe vertex set backed by 64-bit words.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  void add(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void remove(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // set difference
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const { return words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return words_ != o.words_; }

  // smallest element, or -1
  int first() const { return next(-1); }

  // smallest element greater than v, or -1
  int next(int v) const {
    int start = v + 1;
    std::size_t wi = start >> 6;
    if (wi >= words_.size()) return -1;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + __builtin_ctzll(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

private:
  void trim() {
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cw

#endif
