#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nichols/element.hpp"
#include "nichols/modp.hpp"

namespace nichols {

// How ranks (hence dimensions) are computed.
//
// multipoint: evaluate matrices at `points` sample values q0 = num/den
// (num, den uniform in 1..997, reduced, q0 != 1, redrawn on the rare pole)
// and take the max rank over points, computed in F_p.  Every specialization
// can only lower a rank, so this is a certified lower bound for Gram ranks
// and hence an upper bound for quotient dimensions; the verifier pins both
// sides against each other, which upgrades matching bounds to exact values.
//
// exact: fraction-free elimination over Q(i)(q), no sampling.
struct RankCfg {
  enum Method { multipoint, exact } method = multipoint;
  int points = 3;
  uint64_t seed = 1;
  bool parallel = true;
};

long dim_tensor(Deg d);  // binomial(a1+a2, a1)

// the word list of a degree together with a key -> index lookup
struct WordIndex {
  std::vector<Word> words;  // ascending lex
  std::unordered_map<uint64_t, int> pos;

  int index_of(Word w) const;
};
const WordIndex& word_index(Deg d);

// <a, w>: iterated right-derivative pairing, exact.  Terms of a whose degree
// differs from deg w contribute nothing.
Scalar pairing(const FreeElement& a, Word w);

// all pairings of a homogeneous element against words_of_degree(deg),
// computed in one shared derivative tree
std::vector<Scalar> dual_coordinates(const FreeElement& a, Deg d);

// exact zero/equality tests in the Nichols quotient B = T(V)/radical:
// x = 0 in B iff all iterated right derivatives of x vanish
bool is_zero_in_nichols(const FreeElement& a);
bool equal_in_nichols(const FreeElement& a, const FreeElement& b);

// zero test in B (x) B: recursively strip the right leg with id (x) d_i,
// collapse by the counit at right degree 0, then test the left combination
bool tensor_is_zero_in_nichols(const TensorElement& t);

// deterministic sample points for a config (memoized per seed)
std::vector<PointCtx> sample_points(const RankCfg& cfg);

// modular Gram matrix G[u][w] = <u, w>(q0) of a degree at a point (cached).
// fill_* are the raw kernels: identical outputs, serial vs OpenMP.
using MatMod = std::vector<std::vector<uint64_t>>;
const MatMod& gram_mod(Deg d, const PointCtx& pt, bool parallel = true);
MatMod gram_fill_serial(Deg d, const PointCtx& pt, const MatMod& prev1,
                        const MatMod& prev2);
MatMod gram_fill_parallel(Deg d, const PointCtx& pt, const MatMod& prev1,
                          const MatMod& prev2);

// modular dual coordinates via the cached Gram matrix: row[w] = <a, w>(q0).
// nullopt when a coefficient of a has a pole at the point.
std::optional<std::vector<uint64_t>> dual_row_mod(const FreeElement& a, Deg d,
                                                  const PointCtx& pt,
                                                  bool parallel = true);

// dim of the degree-d slice of B, by the configured rank method
int dimension(Deg d, const RankCfg& cfg);
// dim of the degree-d slice of the quantum-Serre quotient: dim T_d minus the
// rank of the span of all u * r * v, r the two Serre relators
int serre_quotient_dimension(Deg d, const RankCfg& cfg);

// the two Serre relators: [X1, X2] at (3,1) and [Y2, Y1] at (1,3)
const FreeElement& serre_relator_x();
const FreeElement& serre_relator_y();

// Serre row matrices (modular), serial and parallel variants for the bench
MatMod serre_rows_serial(Deg d, const PointCtx& pt);
MatMod serre_rows_parallel(Deg d, const PointCtx& pt);

// exact variants (fraction-free Bareiss elimination)
int dimension_exact(Deg d);
int serre_quotient_dimension_exact(Deg d);
int rank_exact(std::vector<std::vector<Scalar>> m);

struct HilbertRow {
  Deg d;
  long dim_tensor;
  int dim_nichols;
  int dim_serre;
};
std::vector<HilbertRow> hilbert_table(int max_total, const RankCfg& cfg);

// does the candidate extend the span of the given elements in B at degree d?
// (modular, max over points: true when the rank grows at any sample point)
bool extends_span(const FreeElement& candidate,
                  const std::vector<FreeElement>& span, Deg d,
                  const RankCfg& cfg);
bool extends_span_exact(const FreeElement& candidate,
                        const std::vector<FreeElement>& span, Deg d);

}  // namespace nichols
