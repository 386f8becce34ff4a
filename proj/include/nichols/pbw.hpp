#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/element.hpp"
#include "nichols/kernel.hpp"
#include "nichols/lyndon.hpp"

namespace nichols {

// Height bound for a PBW generator of degree b, from the order of chi(b,b):
//   order 2 (chi = -1)  -> bound 2 (exponents 0 or 1; the square enters
//                          separately as its own generator)
//   chi(b,b) = 1        -> "paper": no bound; "literal": bound 1, which
//                          forbids the generator entirely -- kept only to
//                          surface what that reading would do to the basis
//   infinite order      -> no bound
enum class HeightConvention { paper, literal };

// one PBW generator (a root-vector super-letter)
struct RootLetter {
  std::string name;           // "X3", "Y1", "L4", "M3", "M1^2"
  Word word;                  // its position in the super-letter chain
  Deg degree;
  std::optional<int> height;  // nullopt: unbounded exponents
  FreeElement element;
};

// a positive root: degree, multiplicity, and its generator elements
struct RootDatum {
  Deg degree;
  int multiplicity = 0;
  std::vector<std::pair<std::string, FreeElement>> generators;
  std::optional<int> height;
};

struct RootSystem {
  int max_total = 0;
  std::vector<RootLetter> letters;  // decreasing word order
  std::vector<RootDatum> roots;     // sweep order of degree

  const RootLetter* letter(const std::string& name) const;
};

// all candidate root vectors at a degree, decreasing word order: [w] for
// Lyndon w, plus [v]^2 when d = 2 deg v and chi(deg v, deg v) = -1
std::vector<std::pair<Word, FreeElement>> root_vector_candidates(Deg d);

// Is the candidate outside the span of the degree-d monomials in strictly
// greater letters?  Precondition: every root vector at this degree with a
// greater word is already in `known`.
bool is_root_vector(const FreeElement& candidate, Word w,
                    const RootSystem& known, Deg d, const RankCfg& cfg);

// Sweep all degrees of total <= max_total: compare dimension against the
// count of monomials in the letters found so far, and attribute each
// shortfall to candidates accepted by is_root_vector.  A count mismatch
// (either direction) throws: it would mean the engine contradicts the basis.
RootSystem compute_roots(int max_total, const RankCfg& cfg,
                         HeightConvention hc = HeightConvention::paper);

// the same letter set written down from the closed-form root patterns, no
// rank computations (for work at degrees past a feasible sweep)
RootSystem root_system_by_pattern(int max_total);

// an ordered product of letter powers, letters strictly decreasing
struct PBWMonomial {
  std::vector<std::pair<std::string, int>> factors;  // (name, exponent)
  Deg degree;
  Word minword;  // concatenation of the factor words; its least word

  std::string str() const;  // "Y1^2 X1^2"; the empty monomial prints "1"
};

// all monomials of the degree under the height bounds, increasing minword
std::vector<PBWMonomial> pbw_monomials(const RootSystem& rs, Deg d);
FreeElement monomial_element(const RootSystem& rs, const PBWMonomial& m);

// coordinates of a in the PBW basis, increasing minword per degree; throws
// when a residual survives the basis (an engine bug, not a user error)
std::vector<std::pair<PBWMonomial, Scalar>> pbw_expand(const RootSystem& rs,
                                                       const FreeElement& a);

}  // namespace nichols
