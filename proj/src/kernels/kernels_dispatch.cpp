#include "bvp/kernels.hpp"

#include <atomic>

namespace bvp::kernels {
namespace {

const Ops* detect() {
    if (const Ops* ops = avx2_ops()) return ops;
    if (const Ops* ops = neon_ops()) return ops;
    return &scalar_ops();
}

std::atomic<const Ops*> g_active{nullptr};

} // namespace

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        ops = detect();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

bool force(std::string_view name) {
    const Ops* ops = nullptr;
    if (name == "auto")
        ops = detect();
    else if (name == "scalar")
        ops = &scalar_ops();
    else if (name == "avx2")
        ops = avx2_ops();
    else if (name == "neon")
        ops = neon_ops();
    if (!ops) return false;
    g_active.store(ops, std::memory_order_release);
    return true;
}

} // namespace bvp::kernels
