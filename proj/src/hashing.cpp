#include "sensedrift/hashing.hpp"

#include <array>

namespace sensedrift {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state) {
  for (unsigned char c : bytes) {
    state ^= c;
    state *= 1099511628211ull;
  }
  return state;
}

namespace {

std::uint64_t mix_u64(std::uint64_t state, std::uint64_t value) {
  std::array<char, 8> le{};
  for (int i = 0; i < 8; ++i) le[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  return fnv1a64(std::string_view(le.data(), le.size()), state);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view slice_id,
                          std::string_view word, std::uint64_t run_index) {
  std::uint64_t h = mix_u64(14695981039346656037ull, master_seed);
  h = fnv1a64(slice_id, h);
  h = fnv1a64(std::string_view("\x1f", 1), h);
  h = fnv1a64(word, h);
  h = fnv1a64(std::string_view("\x1f", 1), h);
  h = mix_u64(h, run_index);
  // Guard against the zero state, which SplitMix64 escapes only slowly.
  return h ? h : 0x6a09e667f3bcc909ull;
}

}  // namespace sensedrift
