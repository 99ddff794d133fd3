#pragma once

#include <initializer_list>
#include <vector>

#include "doctest.h"
#include "kcalc/error.hpp"
#include "kcalc/exact.hpp"

namespace test {

inline kcalc::Matrix mat(std::initializer_list<std::initializer_list<long>> rows,
                         kcalc::Ring ring = kcalc::Ring::integers()) {
  std::vector<std::vector<kcalc::Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return kcalc::Matrix::from_rows(r, ring);
}

inline std::vector<kcalc::Integer> ints(std::initializer_list<long> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace test

// Asserts that `expr` throws a DomainError carrying `expected_code`.
#define CHECK_DOMAIN_ERROR(expr, expected_code)                  \
  do {                                                           \
    std::string caught_code_;                                    \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const kcalc::DomainError& e) {                      \
      caught_code_ = e.code();                                   \
    }                                                            \
    CHECK_MESSAGE(caught_code_ == (expected_code), #expr);       \
  } while (0)
