#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace sensedrift {

// FNV-1a over raw bytes. Used wherever a platform-independent hash is
// needed; never std::hash, whose value is implementation-defined.
std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t state = 14695981039346656037ull);

// Per-run clustering seed derived from (master_seed, slice, word, run_index).
// Stable across platforms and runs so any clustering is reproducible from
// the master seed alone.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view slice_id,
                          std::string_view word, std::uint64_t run_index);

// SplitMix64. Small, fast, and fully pinned; the standard library's
// distributions are not bit-portable, so all randomized code draws
// through this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound) via 128-bit multiply-shift.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  double unit() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace sensedrift
