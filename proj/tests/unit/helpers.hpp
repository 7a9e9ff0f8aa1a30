#pragma once

#include <doctest.h>

#include <random>

#include "dimers/error.hpp"

// Checks that `expr` throws dimers::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected_code)                    \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const dimers::Error& e_) {                          \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());    \
    }                                                            \
    CHECK_MESSAGE(thrown_, "no dimers::Error from " #expr);      \
  } while (0)

inline std::mt19937_64 test_rng(std::uint64_t salt = 0) { return std::mt19937_64(0xd1ce5ULL + salt); }
