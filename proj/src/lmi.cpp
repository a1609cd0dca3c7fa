#include "sensedrift/lmi.hpp"

#include <cmath>
#include <stdexcept>

namespace sensedrift {

double compute_lmi(std::uint64_t c_wf, std::uint64_t c_w, std::uint64_t c_f,
                   std::uint64_t total) {
  if (total == 0 || c_w > total || c_f > total || c_wf > c_w || c_wf > c_f) {
    throw std::invalid_argument("compute_lmi: inconsistent counts");
  }
  if (c_wf == 0) return 0.0;

  // log2(num/den) computed as log1p((num-den)/den): the integer difference
  // is exact, so the sign matches the PMI sign exactly and the result keeps
  // full relative precision near the independence point.
  using u128 = unsigned __int128;
  u128 num = static_cast<u128>(c_wf) * total;
  u128 den = static_cast<u128>(c_w) * c_f;
  if (num == den) return 0.0;
  double x = num > den
                 ? static_cast<double>(num - den) / static_cast<double>(den)
                 : -(static_cast<double>(den - num) / static_cast<double>(den));
  return static_cast<double>(c_wf) * std::log1p(x) / std::log(2.0);
}

}  // namespace sensedrift
