// Replacement global operator new/delete that keeps a live-byte count and a
// high-water mark. Linked into the CLI so bench records have a memory figure
// even where the kernel peak-RSS reset is unavailable.

#include <malloc.h>

#include <atomic>
#include <cstdlib>
#include <new>

#include "memory.hpp"

namespace {

std::atomic<std::uint64_t> live_bytes{0};
std::atomic<std::uint64_t> peak_bytes{0};

void* tracked_alloc(std::size_t n) {
    void* p = std::malloc(n == 0 ? 1 : n);
    if (!p) throw std::bad_alloc();
    const std::uint64_t now = live_bytes.fetch_add(malloc_usable_size(p), std::memory_order_relaxed) +
                              malloc_usable_size(p);
    std::uint64_t peak = peak_bytes.load(std::memory_order_relaxed);
    while (now > peak && !peak_bytes.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
    }
    return p;
}

void tracked_free(void* p) noexcept {
    if (!p) return;
    live_bytes.fetch_sub(malloc_usable_size(p), std::memory_order_relaxed);
    std::free(p);
}

}  // namespace

void* operator new(std::size_t n) { return tracked_alloc(n); }
void* operator new[](std::size_t n) { return tracked_alloc(n); }
void operator delete(void* p) noexcept { tracked_free(p); }
void operator delete[](void* p) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::size_t) noexcept { tracked_free(p); }

namespace densewin::tools {

std::uint64_t allocator_current_bytes() { return live_bytes.load(std::memory_order_relaxed); }
std::uint64_t allocator_peak_bytes() { return peak_bytes.load(std::memory_order_relaxed); }
void allocator_reset_peak() { peak_bytes.store(live_bytes.load(std::memory_order_relaxed)); }

}  // namespace densewin::tools
