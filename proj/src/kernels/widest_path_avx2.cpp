#include "apv/kernels/widest_path.hpp"

#include <immintrin.h>

#include <algorithm>
#include <stdexcept>

namespace apv::kernels {

void widest_path_avx2(std::span<std::int32_t> w, std::size_t n) {
    if (w.size() != n * n) throw std::invalid_argument("widest_path: buffer is not n*n");
    std::int32_t* const data = w.data();
    const std::size_t vec_end = n - n % 8;
    for (std::size_t k = 0; k < n; ++k) {
        const std::int32_t* row_k = data + k * n;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            std::int32_t* row_i = data + i * n;
            const std::int32_t via = row_i[k];
            const __m256i via_v = _mm256_set1_epi32(via);
            std::size_t j = 0;
            for (; j < vec_end; j += 8) {
                __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_i + j));
                __m256i alt = _mm256_min_epi32(via_v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_k + j)));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(row_i + j), _mm256_max_epi32(cur, alt));
            }
            for (; j < n; ++j) row_i[j] = std::max(row_i[j], std::min(via, row_k[j]));
        }
    }
}

}  // namespace apv::kernels
