#pragma once

#include <cstdint>
#include <string>

namespace densewin::tools {

struct MemorySample {
    double peak_mib = 0.0;
    std::string source;  // "os_vmhwm", "allocator" or "os_maxrss"
};

/// Peak-memory probe for one measured run.
///
/// Prefers the kernel's resettable peak resident set (VmHWM after writing 5
/// to /proc/self/clear_refs). When the reset is refused, falls back to the
/// allocator high-water mark kept by the replacement operator new, and as a
/// last resort to the process-lifetime getrusage peak.
class PeakMemory {
public:
    /// Starts a new measurement window.
    void reset();
    MemorySample read() const;

private:
    bool os_reset_ok_ = false;
};

/// Allocator instrumentation (see alloc_tracker.cpp).
std::uint64_t allocator_current_bytes();
std::uint64_t allocator_peak_bytes();
void allocator_reset_peak();

}  // namespace densewin::tools
