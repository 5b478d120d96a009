#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace pelljeru::detail {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline bool test_bit(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}

/// ORs the first `nbits` bits of `src` into `dst` starting at bit `offset`.
/// Bits of `src` past `nbits` must be zero.
inline void or_bits(std::span<Word> dst, std::size_t offset, std::span<const Word> src,
                    std::size_t nbits) {
  const std::size_t n_words = words_for(nbits);
  const std::size_t base = offset / kWordBits;
  const unsigned shift = offset % kWordBits;
  if (shift == 0) {
    for (std::size_t i = 0; i < n_words; ++i) dst[base + i] |= src[i];
    return;
  }
  const std::size_t last = (offset + nbits - 1) / kWordBits;
  for (std::size_t i = 0; i < n_words; ++i) {
    dst[base + i] |= src[i] << shift;
    if (base + i + 1 <= last) dst[base + i + 1] |= src[i] >> (kWordBits - shift);
  }
}

/// Copies bits [offset, offset + nbits) of `src` into the start of `dst`,
/// zeroing the unused high bits of the last destination word.
inline void extract_bits(std::span<Word> dst, std::span<const Word> src, std::size_t offset,
                         std::size_t nbits) {
  const std::size_t n_words = words_for(nbits);
  const std::size_t base = offset / kWordBits;
  const unsigned shift = offset % kWordBits;
  for (std::size_t i = 0; i < n_words; ++i) {
    Word w = src[base + i] >> shift;
    if (shift != 0 && base + i + 1 < src.size()) w |= src[base + i + 1] << (kWordBits - shift);
    dst[i] = w;
  }
  if (const std::size_t tail = nbits % kWordBits; tail != 0 && n_words != 0) {
    dst[n_words - 1] &= (Word{1} << tail) - 1;
  }
}

}  // namespace pelljeru::detail
