#pragma once

#include <string>

#include "nichols/element.hpp"

namespace nichols {

// The named elements, all memoized (n is the index written as a subscript):
//   X n >= 1   super-letter of 1(12)^(n-1), degree (n, n-1)
//   Y n >= 1   super-letter of (12)^(n-1)2, degree (n-1, n)
//   L n >= 0   [X1, Yn];  L0 = 1/theta,  L1 = [x1, x2]
//   Lp n >= 0  [X2, Y(n-1)] for n >= 2;  Lp1 = L1,  Lp0 = 1/theta
//   Ltilde    (Ln + Lpn)/2;  0 for n < 0
//   Lhat n >= 2  [L(n-1), L1]
//   M n >= 1 odd  M1 = L1,  Mn = [L2, M(n-2)]
// Throws std::invalid_argument for an unknown name or an index outside the
// family's range.
const FreeElement& generator(const std::string& name, int n);

struct NamedGenerator {
  std::string name;
  int index;
  FreeElement element;
};
NamedGenerator named_generator(const std::string& name, int n);

}  // namespace nichols
