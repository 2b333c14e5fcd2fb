#ifndef GOLDOSC_TESTS_SUPPORT_HPP
#define GOLDOSC_TESTS_SUPPORT_HPP

#include "goldosc/zeros.hpp"

#include <filesystem>
#include <string>

namespace testsupport {

inline std::filesystem::path data_path(const std::string& name) { return std::filesystem::path(GOLDOSC_DATA_DIR) / name; }

// Loaded once per process; the big tables take a moment to parse.
inline const goldosc::ZeroTable& zeros_2k() {
    static const goldosc::ZeroTable t = goldosc::load_zero_table(data_path("zeros-2k.txt"));
    return t;
}

inline const goldosc::ZeroTable& zeros_hp() {
    static const goldosc::ZeroTable t = goldosc::load_zero_table(data_path("zeros-650-hp.txt"));
    return t;
}

}  // namespace testsupport

#endif
