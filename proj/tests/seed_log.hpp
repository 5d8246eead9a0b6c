#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <iostream>

// Records the seed in the XML report and prints it, so failing trials can be replayed.
inline void log_seed(std::uint64_t seed) {
  ::testing::Test::RecordProperty("seed", std::to_string(seed));
  std::cout << "[   SEED   ] " << ::testing::UnitTest::GetInstance()->current_test_info()->name() << " " << seed
            << std::endl;
}
