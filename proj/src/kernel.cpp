#include "nichols/kernel.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

namespace nichols {

long dim_tensor(Deg d) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), d.a1 + d.a2, d.a1);
  return b.get_si();
}

int WordIndex::index_of(Word w) const {
  auto it = pos.find(w.key());
  assert(it != pos.end());
  return it->second;
}

const WordIndex& word_index(Deg d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<WordIndex>> cache;
  std::pair<int, int> key{d.a1, d.a2};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto wi = std::make_unique<WordIndex>();
  wi->words = words_of_degree(d);
  wi->pos.reserve(wi->words.size());
  for (size_t k = 0; k < wi->words.size(); ++k) wi->pos[wi->words[k].key()] = k;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.emplace(key, std::move(wi));
  (void)fresh;
  return *it->second;
}

// ---------------------------------------------------------------------------
// the derivative pairing and the radical

// <a, w x_i> = <d_i(a), w>, so pairing strips the rightmost letter first
Scalar pairing(const FreeElement& a, Word w) {
  Deg d = w.degree();
  FreeElement cur;
  for (auto& [u, c] : a.terms)
    if (u.degree() == d) cur.terms.push_back({u, c});
  for (int k = w.len - 1; k >= 0; --k) {
    if (cur.terms.empty()) return Scalar::zero();
    cur = diff_right(w.at(k), cur);
  }
  return cur.coefficient(Word::empty());
}

// Shares the derivative tree across all words of the degree: the state after
// consuming a suffix s depends only on s, and every extension step prepends
// one letter to s, so each suffix is visited exactly once.
static void dual_rec(const FreeElement& e, Deg rem, Word suffix,
                     const WordIndex& wi, std::vector<Scalar>& out) {
  if (e.terms.empty()) return;
  if (rem.total() == 0) {
    out[wi.index_of(suffix)] = e.coefficient(Word::empty());
    return;
  }
  if (rem.a1 > 0)
    dual_rec(diff_right(1, e), rem - Deg{1, 0}, Word::letter(1).concat(suffix),
             wi, out);
  if (rem.a2 > 0)
    dual_rec(diff_right(2, e), rem - Deg{0, 1}, Word::letter(2).concat(suffix),
             wi, out);
}

std::vector<Scalar> dual_coordinates(const FreeElement& a, Deg d) {
  const WordIndex& wi = word_index(d);
  std::vector<Scalar> out(wi.words.size(), Scalar::zero());
  FreeElement ad;
  for (auto& [w, c] : a.terms)
    if (w.degree() == d) ad.terms.push_back({w, c});
  dual_rec(ad, d, Word::empty(), wi, out);
  return out;
}

// The radical of the pairing is the kernel of all iterated right
// derivatives: <a, w x_i> = <d_i(a), w>, so a pairs to zero against every
// word iff both derivatives do, down to degree zero.
static bool component_zero_rec(const FreeElement& e, Deg rem) {
  if (e.terms.empty()) return true;
  if (rem.total() == 0) return false;  // a nonzero constant
  if (rem.a1 > 0 && !component_zero_rec(diff_right(1, e), rem - Deg{1, 0}))
    return false;
  if (rem.a2 > 0 && !component_zero_rec(diff_right(2, e), rem - Deg{0, 1}))
    return false;
  return true;
}

bool is_zero_in_nichols(const FreeElement& a) {
  for (auto& [d, c] : a.components())
    if (!component_zero_rec(c, d)) return false;
  return true;
}

bool equal_in_nichols(const FreeElement& a, const FreeElement& b) {
  return is_zero_in_nichols(a - b);
}

// Same recursion on the right leg.  id (x) d_i needs no braiding factor, and
// once the right leg is exhausted the surviving left combination must itself
// vanish.  Right degrees are handled separately: derivatives cannot mix them.
static bool tensor_component_zero(const TensorElement& t, Deg rem) {
  if (t.terms.empty()) return true;
  if (rem.total() == 0) {
    FreeElement left;
    for (auto& [ww, c] : t.terms)
      left.terms.push_back({ww.first, c});  // right legs are all empty
    return is_zero_in_nichols(left);
  }
  if (rem.a1 > 0 && !tensor_component_zero(t.diff_right_leg(1), rem - Deg{1, 0}))
    return false;
  if (rem.a2 > 0 && !tensor_component_zero(t.diff_right_leg(2), rem - Deg{0, 1}))
    return false;
  return true;
}

bool tensor_is_zero_in_nichols(const TensorElement& t) {
  std::set<std::pair<int, int>> rdegs;
  for (auto& [ww, c] : t.terms) {
    Deg d = ww.second.degree();
    rdegs.insert({d.a1, d.a2});
  }
  for (auto [a1, a2] : rdegs) {
    Deg d{a1, a2};
    TensorElement part;
    for (auto& term : t.terms)
      if (term.first.second.degree() == d) part.terms.push_back(term);
    if (!tensor_component_zero(part, d)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// sample points

namespace {

// Deterministic stream of distinct points q0 = num/den with num, den drawn
// uniformly from 1..997, reduced; q0 = 1 is rejected.  Callers draw further
// points from the same stream when one hits a pole.
struct PointStream {
  std::mt19937_64 rng;
  std::set<std::pair<uint64_t, uint64_t>> seen;

  explicit PointStream(uint64_t seed) : rng(seed) {}

  PointCtx next() {
    for (;;) {
      uint64_t n = 1 + rng() % 997;
      uint64_t d = 1 + rng() % 997;
      uint64_t g = std::gcd(n, d);
      n /= g;
      d /= g;
      if (n == d) continue;
      if (!seen.insert({n, d}).second) continue;
      return PointCtx::make(n, d);
    }
  }
};

}  // namespace

std::vector<PointCtx> sample_points(const RankCfg& cfg) {
  PointStream ps(cfg.seed);
  std::vector<PointCtx> out;
  for (int k = 0; k < cfg.points; ++k) out.push_back(ps.next());
  return out;
}

// ---------------------------------------------------------------------------
// modular Gram matrices

// G_d[u][w' x_i] = sum over positions k of u holding x_i of
//   chi(alpha_i, deg of the suffix of u past k) * G_{d - alpha_i}[u \ k][w'].
// The serial fill applies that formula directly; the parallel fill
// precomputes, per row, the (previous row, chi factor) expansion -- which is
// column independent -- and distributes columns over threads.
MatMod gram_fill_serial(Deg d, const PointCtx& pt, const MatMod& prev1,
                        const MatMod& prev2) {
  const WordIndex& wi = word_index(d);
  int n = wi.words.size();
  const WordIndex* pwi[3] = {nullptr, nullptr, nullptr};
  const MatMod* prev[3] = {nullptr, &prev1, &prev2};
  if (d.a1 > 0) pwi[1] = &word_index(d - Deg{1, 0});
  if (d.a2 > 0) pwi[2] = &word_index(d - Deg{0, 1});
  MatMod g(n, std::vector<uint64_t>(n, 0));
  for (int c = 0; c < n; ++c) {
    Word w = wi.words[c];
    int i = w.at(w.len - 1);
    int j = pwi[i]->index_of(w.prefix(w.len - 1));
    Deg ai = i == 1 ? Deg{1, 0} : Deg{0, 1};
    for (int r = 0; r < n; ++r) {
      Word u = wi.words[r];
      uint64_t acc = 0;
      for (int k = 0; k < u.len; ++k) {
        if (u.at(k) != i) continue;
        ChiVal x = chi(ai, u.suffix(k + 1).degree());
        uint64_t f = pt.q_pow(x.exp);
        if (x.sign < 0) f = fp::neg(f);
        acc = fp::add(acc, fp::mul(f, (*prev[i])[pwi[i]->index_of(u.erase(k))][j]));
      }
      g[r][c] = acc;
    }
  }
  return g;
}

MatMod gram_fill_parallel(Deg d, const PointCtx& pt, const MatMod& prev1,
                          const MatMod& prev2) {
  const WordIndex& wi = word_index(d);
  int n = wi.words.size();
  const WordIndex* pwi[3] = {nullptr, nullptr, nullptr};
  const MatMod* prev[3] = {nullptr, &prev1, &prev2};
  if (d.a1 > 0) pwi[1] = &word_index(d - Deg{1, 0});
  if (d.a2 > 0) pwi[2] = &word_index(d - Deg{0, 1});

  struct Ent {
    int row;
    uint64_t factor;
  };
  std::vector<std::vector<Ent>> tab[3];
  for (int i : {1, 2}) {
    if (!pwi[i]) continue;
    tab[i].resize(n);
    for (int r = 0; r < n; ++r) {
      Word u = wi.words[r];
      Deg ai = i == 1 ? Deg{1, 0} : Deg{0, 1};
      for (int k = 0; k < u.len; ++k) {
        if (u.at(k) != i) continue;
        ChiVal x = chi(ai, u.suffix(k + 1).degree());
        uint64_t f = pt.q_pow(x.exp);
        if (x.sign < 0) f = fp::neg(f);
        tab[i][r].push_back({pwi[i]->index_of(u.erase(k)), f});
      }
    }
  }

  MatMod g(n, std::vector<uint64_t>(n, 0));
#pragma omp parallel for schedule(static)
  for (int c = 0; c < n; ++c) {
    Word w = wi.words[c];
    int i = w.at(w.len - 1);
    int j = pwi[i]->index_of(w.prefix(w.len - 1));
    const MatMod& pm = *prev[i];
    for (int r = 0; r < n; ++r) {
      uint64_t acc = 0;
      for (const Ent& e : tab[i][r]) acc = fp::add(acc, fp::mul(e.factor, pm[e.row][j]));
      g[r][c] = acc;
    }
  }
  return g;
}

const MatMod& gram_mod(Deg d, const PointCtx& pt, bool parallel) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, uint64_t>, std::unique_ptr<MatMod>> cache;
  std::tuple<int, int, uint64_t> key{d.a1, d.a2, pt.q0p};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  MatMod built;
  if (d.total() == 0) {
    built = {{1}};
  } else {
    static const MatMod none;
    const MatMod* p1 = &none;
    const MatMod* p2 = &none;
    if (d.a1 > 0) p1 = &gram_mod(d - Deg{1, 0}, pt, parallel);
    if (d.a2 > 0) p2 = &gram_mod(d - Deg{0, 1}, pt, parallel);
    built = parallel ? gram_fill_parallel(d, pt, *p1, *p2)
                     : gram_fill_serial(d, pt, *p1, *p2);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.emplace(key, std::make_unique<MatMod>(std::move(built)));
  (void)fresh;
  return *it->second;
}

std::optional<std::vector<uint64_t>> dual_row_mod(const FreeElement& a, Deg d,
                                                  const PointCtx& pt,
                                                  bool parallel) {
  const WordIndex& wi = word_index(d);
  const MatMod& g = gram_mod(d, pt, parallel);
  std::vector<uint64_t> row(wi.words.size(), 0);
  for (auto& [w, s] : a.terms) {
    if (!(w.degree() == d)) continue;
    auto c = scalar_eval_mod(s, pt);
    if (!c) return std::nullopt;
    if (*c == 0) continue;
    const auto& grow = g[wi.index_of(w)];
    for (size_t j = 0; j < row.size(); ++j)
      row[j] = fp::add(row[j], fp::mul(*c, grow[j]));
  }
  return row;
}

// ---------------------------------------------------------------------------
// dimensions
//
// Specializing q to a sample point can only drop a rank.  So the modular
// Gram rank is a lower bound for dim B_d, and the modular relation-span rank
// makes dim T_d - rank an upper bound for the quantum-Serre dimension.  With
// dim B_d <= dim(Serre)_d (B is a quotient of the Serre algebra: its
// relators vanish in B), equality of the two computed numbers certifies
// both.  The isomorphism check drives exactly that comparison.

int dimension(Deg d, const RankCfg& cfg) {
  if (cfg.method == RankCfg::exact) return dimension_exact(d);
  PointStream ps(cfg.seed);
  int best = 0;
  for (int k = 0; k < cfg.points; ++k) {
    PointCtx pt = ps.next();
    MatMod g = gram_mod(d, pt, cfg.parallel);
    best = std::max(best, rank_mod(g));
  }
  return best;
}

const FreeElement& serre_relator_x() {
  static const FreeElement r = [] {
    FreeElement x1 = FreeElement::generator(1);
    FreeElement x2 = FreeElement::generator(2);
    return braided_bracket(x1, braided_bracket(x1, braided_bracket(x1, x2)));
  }();
  return r;
}

const FreeElement& serre_relator_y() {
  static const FreeElement r = [] {
    FreeElement x1 = FreeElement::generator(1);
    FreeElement x2 = FreeElement::generator(2);
    return braided_bracket(braided_bracket(braided_bracket(x1, x2), x2), x2);
  }();
  return r;
}

// one row per product u * r * v, both relators, all degree splits
static std::vector<std::tuple<Word, const FreeElement*, Word>> serre_triples(
    Deg d) {
  std::vector<std::tuple<Word, const FreeElement*, Word>> out;
  for (const FreeElement* r : {&serre_relator_x(), &serre_relator_y()}) {
    Deg rem = d - r->degree().value();
    if (rem.a1 < 0 || rem.a2 < 0) continue;
    for (int e1 = 0; e1 <= rem.a1; ++e1)
      for (int e2 = 0; e2 <= rem.a2; ++e2) {
        Deg f = rem - Deg{e1, e2};
        for (Word u : word_index({e1, e2}).words)
          for (Word v : word_index(f).words) out.push_back({u, r, v});
      }
  }
  return out;
}

static void fill_serre_row(std::vector<uint64_t>& row,
                           const std::tuple<Word, const FreeElement*, Word>& t,
                           const WordIndex& wi, const PointCtx& pt) {
  auto& [u, r, v] = t;
  FreeElement e = FreeElement::from_word(u) * *r * FreeElement::from_word(v);
  for (auto& [w, s] : e.terms) {
    auto c = scalar_eval_mod(s, pt);
    assert(c);  // relator coefficients have powers of q as denominators
    row[wi.index_of(w)] = *c;
  }
}

MatMod serre_rows_serial(Deg d, const PointCtx& pt) {
  auto triples = serre_triples(d);
  const WordIndex& wi = word_index(d);
  MatMod m(triples.size(), std::vector<uint64_t>(wi.words.size(), 0));
  for (size_t t = 0; t < triples.size(); ++t)
    fill_serre_row(m[t], triples[t], wi, pt);
  return m;
}

MatMod serre_rows_parallel(Deg d, const PointCtx& pt) {
  auto triples = serre_triples(d);
  const WordIndex& wi = word_index(d);
  MatMod m(triples.size(), std::vector<uint64_t>(wi.words.size(), 0));
#pragma omp parallel for schedule(dynamic)
  for (size_t t = 0; t < triples.size(); ++t)
    fill_serre_row(m[t], triples[t], wi, pt);
  return m;
}

int serre_quotient_dimension(Deg d, const RankCfg& cfg) {
  if (cfg.method == RankCfg::exact) return serre_quotient_dimension_exact(d);
  PointStream ps(cfg.seed);
  int best = 0;
  for (int k = 0; k < cfg.points; ++k) {
    PointCtx pt = ps.next();
    MatMod rows =
        cfg.parallel ? serre_rows_parallel(d, pt) : serre_rows_serial(d, pt);
    best = std::max(best, rank_mod(rows));
  }
  return (int)dim_tensor(d) - best;
}

// ---------------------------------------------------------------------------
// exact variants (fraction-free elimination; division by the previous pivot
// is exact, so entries stay Laurent when the input is)

int rank_exact(std::vector<std::vector<Scalar>> a) {
  int rows = a.size();
  if (!rows) return 0;
  int cols = a[0].size();
  Scalar prev = Scalar::one();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = Scalar::zero();
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

using MatQ = std::vector<std::vector<Scalar>>;

static const MatQ& gram_exact(Deg d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MatQ>> cache;
  std::pair<int, int> key{d.a1, d.a2};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  MatQ built;
  if (d.total() == 0) {
    built = {{Scalar::one()}};
  } else {
    const WordIndex& wi = word_index(d);
    int n = wi.words.size();
    const WordIndex* pwi[3] = {nullptr, nullptr, nullptr};
    const MatQ* prev[3] = {nullptr, nullptr, nullptr};
    if (d.a1 > 0) {
      pwi[1] = &word_index(d - Deg{1, 0});
      prev[1] = &gram_exact(d - Deg{1, 0});
    }
    if (d.a2 > 0) {
      pwi[2] = &word_index(d - Deg{0, 1});
      prev[2] = &gram_exact(d - Deg{0, 1});
    }
    built.assign(n, std::vector<Scalar>(n, Scalar::zero()));
    for (int c = 0; c < n; ++c) {
      Word w = wi.words[c];
      int i = w.at(w.len - 1);
      int j = pwi[i]->index_of(w.prefix(w.len - 1));
      Deg ai = i == 1 ? Deg{1, 0} : Deg{0, 1};
      for (int r = 0; r < n; ++r) {
        Word u = wi.words[r];
        Scalar acc = Scalar::zero();
        for (int k = 0; k < u.len; ++k) {
          if (u.at(k) != i) continue;
          ChiVal x = chi(ai, u.suffix(k + 1).degree());
          Scalar t = (*prev[i])[pwi[i]->index_of(u.erase(k))][j];
          t.scale_qpow(x.sign, x.exp);
          acc = acc + t;
        }
        built[r][c] = acc;
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.emplace(key, std::make_unique<MatQ>(std::move(built)));
  (void)fresh;
  return *it->second;
}

int dimension_exact(Deg d) { return rank_exact(gram_exact(d)); }

int serre_quotient_dimension_exact(Deg d) {
  auto triples = serre_triples(d);
  const WordIndex& wi = word_index(d);
  MatQ rows(triples.size(),
            std::vector<Scalar>(wi.words.size(), Scalar::zero()));
  for (size_t t = 0; t < triples.size(); ++t) {
    auto& [u, r, v] = triples[t];
    FreeElement e = FreeElement::from_word(u) * *r * FreeElement::from_word(v);
    for (auto& [w, s] : e.terms) rows[t][wi.index_of(w)] = s;
  }
  return (int)dim_tensor(d) - rank_exact(std::move(rows));
}

std::vector<HilbertRow> hilbert_table(int max_total, const RankCfg& cfg) {
  std::vector<HilbertRow> out;
  for (int t = 0; t <= max_total; ++t)
    for (int a1 = 0; a1 <= t; ++a1) {
      Deg d{a1, t - a1};
      out.push_back(
          {d, dim_tensor(d), dimension(d, cfg), serre_quotient_dimension(d, cfg)});
    }
  return out;
}

// ---------------------------------------------------------------------------
// span tests

bool extends_span(const FreeElement& candidate,
                  const std::vector<FreeElement>& span, Deg d,
                  const RankCfg& cfg) {
  if (cfg.method == RankCfg::exact) return extends_span_exact(candidate, span, d);
  PointStream ps(cfg.seed);
  int used = 0;
  while (used < cfg.points) {
    PointCtx pt = ps.next();
    MatMod rows;
    rows.reserve(span.size() + 1);
    bool pole = false;
    for (const FreeElement& s : span) {
      auto row = dual_row_mod(s, d, pt, cfg.parallel);
      if (!row) {
        pole = true;
        break;
      }
      rows.push_back(std::move(*row));
    }
    std::optional<std::vector<uint64_t>> crow;
    if (!pole) {
      crow = dual_row_mod(candidate, d, pt, cfg.parallel);
      if (!crow) pole = true;
    }
    if (pole) continue;  // draw a fresh point, don't count this one
    MatMod base = rows;
    int r1 = rank_mod(base);
    rows.push_back(std::move(*crow));
    int r2 = rank_mod(rows);
    if (r2 > r1) return true;
    ++used;
  }
  return false;
}

bool extends_span_exact(const FreeElement& candidate,
                        const std::vector<FreeElement>& span, Deg d) {
  MatQ rows;
  rows.reserve(span.size() + 1);
  for (const FreeElement& s : span) rows.push_back(dual_coordinates(s, d));
  int r1 = rank_exact(rows);
  rows.push_back(dual_coordinates(candidate, d));
  return rank_exact(std::move(rows)) > r1;
}

}  // namespace nichols
