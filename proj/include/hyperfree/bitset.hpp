#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperfree {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

// Word-span helpers shared by the row-based graph types.
namespace bits {

inline bool test(std::span<const Word> w, std::size_t i) noexcept {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> w, std::size_t i) noexcept {
  w[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void reset(std::span<Word> w, std::size_t i) noexcept {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> w) noexcept {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

// Index of the lowest set bit at position >= from, or npos.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t find_next(std::span<const Word> w, std::size_t from) noexcept {
  std::size_t wi = from / kWordBits;
  if (wi >= w.size()) return npos;
  Word cur = w[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++wi >= w.size()) return npos;
    cur = w[wi];
  }
}

template <typename F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    Word cur = w[wi];
    while (cur != 0) {
      f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
      cur &= cur - 1;
    }
  }
}

// Mask keeping bits [0, n) of a row of words_for(n) words.
inline Word tail_mask(std::size_t n) noexcept {
  std::size_t r = n % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

}  // namespace bits

// Growable-at-construction, fixed-size bit vector.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t size, bool value = false)
      : size_(size), words_(words_for(size), value ? ~Word{0} : Word{0}) {
    trim();
  }

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return bits::test(words_, i); }
  void set(std::size_t i) noexcept { bits::set(words_, i); }
  void reset(std::size_t i) noexcept { bits::reset(words_, i); }
  void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }
  std::size_t count() const noexcept { return bits::count(words_); }
  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }
  std::size_t find_first() const noexcept { return bits::find_next(words_, 0); }
  std::size_t find_next(std::size_t from) const noexcept { return bits::find_next(words_, from); }

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    bits::for_each(words_, std::forward<F>(f));
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  DynBitset& operator&=(const DynBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynBitset& operator^=(const DynBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  DynBitset& subtract(const DynBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  bool is_subset_of(const DynBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

 private:
  void trim() noexcept {
    if (!words_.empty()) words_.back() &= bits::tail_mask(size_);
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace hyperfree
