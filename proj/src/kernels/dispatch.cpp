#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"

namespace weightforge::kern {

const std::vector<const Ops*>& available_ops() {
    static const std::vector<const Ops*> sets = [] {
        std::vector<const Ops*> v{&scalar_ops()};
#ifdef WEIGHTFORGE_HAVE_AVX2
        if (avx2_supported()) v.push_back(&avx2_ops());
#endif
#ifdef WEIGHTFORGE_HAVE_NEON
        v.push_back(&neon_ops());
#endif
        return v;
    }();
    return sets;
}

const Ops& active_ops() {
    static const Ops* chosen = [] {
        const auto& sets = available_ops();
        if (const char* want = std::getenv("WEIGHTFORGE_KERNEL")) {
            for (const Ops* s : sets)
                if (std::strcmp(s->name, want) == 0) return s;
        }
        return sets.back();
    }();
    return *chosen;
}

}  // namespace weightforge::kern
