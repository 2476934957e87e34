#include "memory.hpp"

#include <sys/resource.h>

#include <fstream>
#include <optional>
#include <sstream>

namespace densewin::tools {

namespace {

constexpr double kib_per_mib = 1024.0;

std::optional<double> read_vmhwm_kib() {
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            std::istringstream fields(line.substr(6));
            double kib = 0;
            if (fields >> kib) return kib;
        }
    }
    return std::nullopt;
}

bool reset_os_peak() {
    std::ofstream clear("/proc/self/clear_refs");
    if (!clear) return false;
    clear << "5";
    clear.flush();
    return static_cast<bool>(clear);
}

}  // namespace

void PeakMemory::reset() {
    allocator_reset_peak();
    os_reset_ok_ = reset_os_peak() && read_vmhwm_kib().has_value();
}

MemorySample PeakMemory::read() const {
    if (os_reset_ok_) {
        if (auto kib = read_vmhwm_kib()) return {*kib / kib_per_mib, "os_vmhwm"};
    }
    if (auto peak = allocator_peak_bytes(); peak > 0) {
        return {static_cast<double>(peak) / (1024.0 * 1024.0), "allocator"};
    }
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return {static_cast<double>(usage.ru_maxrss) / kib_per_mib, "os_maxrss"};
}

}  // namespace densewin::tools
