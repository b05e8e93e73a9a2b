#include "apv/kernels/widest_path.hpp"

#include <immintrin.h>

#include <stdexcept>

namespace apv::kernels {

void widest_path_avx512(std::span<std::int32_t> w, std::size_t n) {
    if (w.size() != n * n) throw std::invalid_argument("widest_path: buffer is not n*n");
    std::int32_t* const data = w.data();
    const std::size_t vec_end = n - n % 16;
    const __mmask16 tail = static_cast<__mmask16>((1u << (n % 16)) - 1u);
    for (std::size_t k = 0; k < n; ++k) {
        const std::int32_t* row_k = data + k * n;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            std::int32_t* row_i = data + i * n;
            const __m512i via_v = _mm512_set1_epi32(row_i[k]);
            std::size_t j = 0;
            for (; j < vec_end; j += 16) {
                __m512i cur = _mm512_loadu_si512(row_i + j);
                __m512i alt = _mm512_min_epi32(via_v, _mm512_loadu_si512(row_k + j));
                _mm512_storeu_si512(row_i + j, _mm512_max_epi32(cur, alt));
            }
            if (tail) {
                __m512i cur = _mm512_maskz_loadu_epi32(tail, row_i + j);
                __m512i alt = _mm512_min_epi32(via_v, _mm512_maskz_loadu_epi32(tail, row_k + j));
                _mm512_mask_storeu_epi32(row_i + j, tail, _mm512_max_epi32(cur, alt));
            }
        }
    }
}

}  // namespace apv::kernels
