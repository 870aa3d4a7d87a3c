#pragma once

#include <string>

#include "semiring/core.hpp"
#include "semiring/paper_checks.hpp"

namespace test_helpers {

inline semiring::FiniteSemiring load_fixture(const std::string& name) {
  return semiring::load_semiring_file(std::string(FIXTURES_DIR) + "/" + name + ".sr");
}

// The six-element lattice tables, hand-encoded: element order 0,a,b,c,d,1
// with 0 < a,d; d < b,c; a,b,c < 1. Multiplication sends pairs from
// {b,c,d,1} to d and everything else to 0.
inline semiring::FiniteSemiring make_fig1() {
  return semiring::FiniteSemiring(
      "fig1", {"0", "a", "b", "c", "d", "1"},
      semiring::OpTable(6, {0, 1, 2, 3, 4, 5,    //
                            1, 1, 5, 5, 5, 5,    //
                            2, 5, 2, 5, 2, 5,    //
                            3, 5, 5, 3, 3, 5,    //
                            4, 5, 2, 3, 4, 5,    //
                            5, 5, 5, 5, 5, 5}),  //
      semiring::OpTable(6, {0, 0, 0, 0, 0, 0,    //
                            0, 0, 0, 0, 0, 0,    //
                            0, 0, 4, 4, 4, 4,    //
                            0, 0, 4, 4, 4, 4,    //
                            0, 0, 4, 4, 4, 4,    //
                            0, 0, 4, 4, 4, 4}));
}

// Zero-free two-element semiring: max as both operations.
inline semiring::FiniteSemiring make_maxmax() {
  return semiring::FiniteSemiring("maxmax2", {"1", "2"}, semiring::OpTable(2, {0, 1, 1, 1}),
                                  semiring::OpTable(2, {0, 1, 1, 1}));
}

// Three-element chain 0 < m < 1 with join addition and meet multiplication.
inline semiring::FiniteSemiring make_chain3() {
  return semiring::FiniteSemiring("chain3", {"0", "m", "1"},
                                  semiring::OpTable(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}),
                                  semiring::OpTable(3, {0, 0, 0, 0, 1, 1, 0, 1, 2}));
}

// Upper-triangular 2x2 boolean matrices [[a,b],[0,c]] under entrywise OR
// and matrix multiplication; eight elements indexed by the bits (a,b,c).
inline semiring::FiniteSemiring make_upper_triangular_bool() {
  auto bit = [](int v, int pos) { return (v >> pos) & 1; };
  std::vector<std::string> names;
  for (int v = 0; v < 8; ++v) {
    names.push_back("m" + std::to_string(bit(v, 0)) + std::to_string(bit(v, 1)) +
                    std::to_string(bit(v, 2)));
  }
  semiring::OpTable add = semiring::OpTable::from_fn(8, [](int x, int y) { return x | y; });
  semiring::OpTable mul = semiring::OpTable::from_fn(8, [&](int x, int y) {
    int a = bit(x, 0) & bit(y, 0);
    int b = (bit(x, 0) & bit(y, 1)) | (bit(x, 1) & bit(y, 2));
    int c = bit(x, 2) & bit(y, 2);
    return a | (b << 1) | (c << 2);
  });
  return semiring::FiniteSemiring("ut2bool", std::move(names), std::move(add), std::move(mul));
}

}  // namespace test_helpers
