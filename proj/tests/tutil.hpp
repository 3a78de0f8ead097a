#pragma once

#include <cstdlib>

#include "sewnet/scalars.hpp"

// Randomized property tests draw their seed from the environment so a run
// can be reproduced or varied; the default is fixed.
inline std::uint64_t test_seed() {
    const char* s = std::getenv("SEWNET_TEST_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 12345u;
}
