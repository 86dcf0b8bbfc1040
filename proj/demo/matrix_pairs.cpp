// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Decomposes one Wishart pair under both groups and prints the pieces.

#include <iostream>

#include "starshape/starshape.hpp"

int main() {
  using namespace starshape;
  Rng rng(42, 0);
  const auto pair = matrix::PDPair::make(matrix::wishart_sample(2, 5, rng),
                                         matrix::wishart_sample(2, 7, rng));
  const auto lt = matrix::lt_orbital_decompose(pair);
  std::cout << "W1 =\n" << pair.w1 << "\nW2 =\n" << pair.w2 << "\n\n";
  std::cout << "triangular group: T =\n" << lt.T << "\nU =\n" << lt.U
            << "\nresidual " << lt.residual << "\n\n";
  const auto gl = matrix::gl_orbital_decompose(pair);
  std::cout << "general linear group: B =\n" << gl.B << "\nroots " << gl.l.transpose()
            << "\nresidual " << gl.residual << "\n\n";
  matrix::EigenvalueLaw law(2, 2.5, 3.5);
  std::cout << "ordered-root density at the roots: " << law(gl.l) << "\n";
  return 0;
}
