#include "apv/kernels/widest_path.hpp"

#include <arm_neon.h>

#include <algorithm>
#include <stdexcept>

namespace apv::kernels {

void widest_path_neon(std::span<std::int32_t> w, std::size_t n) {
    if (w.size() != n * n) throw std::invalid_argument("widest_path: buffer is not n*n");
    std::int32_t* const data = w.data();
    const std::size_t vec_end = n - n % 4;
    for (std::size_t k = 0; k < n; ++k) {
        const std::int32_t* row_k = data + k * n;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            std::int32_t* row_i = data + i * n;
            const std::int32_t via = row_i[k];
            const int32x4_t via_v = vdupq_n_s32(via);
            std::size_t j = 0;
            for (; j < vec_end; j += 4) {
                int32x4_t alt = vminq_s32(via_v, vld1q_s32(row_k + j));
                vst1q_s32(row_i + j, vmaxq_s32(vld1q_s32(row_i + j), alt));
            }
            for (; j < n; ++j) row_i[j] = std::max(row_i[j], std::min(via, row_k[j]));
        }
    }
}

}  // namespace apv::kernels
