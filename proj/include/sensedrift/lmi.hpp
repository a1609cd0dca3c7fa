#pragma once

#include <cstdint>

namespace sensedrift {

// Lexicographer's mutual information:
//   LMI(w,f) = c(w,f) * log2(c(w,f) * total / (c(w) * c(f)))
// Zero when c_wf == 0 and exactly zero at the independence point, with the
// sign always agreeing with the exact integer comparison
// c_wf*total <=> c_w*c_f. Throws std::invalid_argument unless
// total >= c_w >= c_wf, total >= c_f >= c_wf, total > 0.
double compute_lmi(std::uint64_t c_wf, std::uint64_t c_w, std::uint64_t c_f,
                   std::uint64_t total);

}  // namespace sensedrift
