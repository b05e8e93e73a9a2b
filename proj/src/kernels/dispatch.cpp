#include "apv/kernels/widest_path.hpp"

#include <stdexcept>
#include <string>

namespace apv::kernels {

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Avx512: return "avx512";
        case Isa::Neon: return "neon";
    }
    return "?";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(APV_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Avx512:
#if defined(APV_HAVE_AVX512)
            return __builtin_cpu_supports("avx512f");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(APV_HAVE_NEON)
            return true;  // mandatory on AArch64
#else
            return false;
#endif
    }
    return false;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Avx512, Isa::Neon})
        if (isa_available(isa)) out.push_back(isa);
    return out;
}

Isa best_isa() {
    static const Isa chosen = [] {
        for (Isa isa : {Isa::Avx512, Isa::Avx2, Isa::Neon})
            if (isa_available(isa)) return isa;
        return Isa::Scalar;
    }();
    return chosen;
}

WidestPathFn kernel_for(Isa isa) {
    if (!isa_available(isa))
        throw std::invalid_argument("widest-path kernel '" + std::string(to_string(isa)) + "' is not available");
    switch (isa) {
        case Isa::Scalar: return &widest_path_scalar;
#if defined(APV_HAVE_AVX2)
        case Isa::Avx2: return &widest_path_avx2;
#endif
#if defined(APV_HAVE_AVX512)
        case Isa::Avx512: return &widest_path_avx512;
#endif
#if defined(APV_HAVE_NEON)
        case Isa::Neon: return &widest_path_neon;
#endif
        default: break;
    }
    throw std::invalid_argument("widest-path kernel not compiled");
}

}  // namespace apv::kernels
