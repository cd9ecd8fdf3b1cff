// Copyright 2026 The effectkit Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "effectkit/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace effectkit::simd {

#if defined(EFFECTKIT_HAVE_AVX2)
const KernelTable *avx2_kernels_impl() noexcept;
#endif

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    }
    return "unknown";
}

const KernelTable *avx2_kernels() noexcept {
#if defined(EFFECTKIT_HAVE_AVX2)
    return avx2_kernels_impl();
#else
    return nullptr;
#endif
}

bool cpu_supports_avx2() noexcept {
#if defined(EFFECTKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const KernelTable &select() noexcept {
    if (const char *env = std::getenv("EFFECTKIT_SIMD");
        env != nullptr && std::string_view(env) == "scalar") {
        return scalar_kernels();
    }
    if (const KernelTable *t = avx2_kernels(); t && cpu_supports_avx2()) {
        return *t;
    }
    return scalar_kernels();
}

} // namespace

const KernelTable &active() noexcept {
    static const KernelTable &table = select();
    return table;
}

} // namespace effectkit::simd
