#include "nichols/pbw.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "nichols/bichar.hpp"
#include "nichols/lyndon.hpp"

namespace nichols {

namespace {

Word rep(const std::string& block, int k) {
  Word b = Word::parse(block);
  Word w;
  for (int j = 0; j < k; ++j) w = w.concat(b);
  return w;
}

// closed-form words of the named root-vector families
Word x_word(int n) { return Word::letter(1).concat(rep("12", n - 1)); }
Word y_word(int n) { return rep("12", n - 1).concat(Word::letter(2)); }
Word l_word(int n) { return Word::letter(1).concat(y_word(n)); }  // n even
Word m_word(int n) { return rep("1122", (n - 1) / 2).concat(rep("12", 1)); }

// exponent bound from the order of chi at the root's degree
std::optional<int> height_for(Deg d, HeightConvention hc) {
  ChiVal c = chi(d, d);
  if (c.exp != 0) return std::nullopt;  // +-q^k with k != 0: infinite order
  if (c.sign < 0) return 2;             // chi = -1
  return hc == HeightConvention::paper ? std::optional<int>() : std::optional<int>(1);
}

// name a root vector from its degree and word; empty when the word is not
// one of the expected family words
std::string name_for(Word w, Deg d) {
  if (d.a1 == d.a2 + 1 && w == x_word(d.a1)) return "X" + std::to_string(d.a1);
  if (d.a2 == d.a1 + 1 && w == y_word(d.a2)) return "Y" + std::to_string(d.a2);
  if (d.a1 == d.a2) {
    int k = d.a1;
    if (k % 2 == 1 && w == m_word(k)) return "M" + std::to_string(k);
    if (k % 2 == 0 && w == l_word(k)) return "L" + std::to_string(k);
    if (k % 2 == 0 && k / 2 % 2 == 1 && w == m_word(k / 2).concat(m_word(k / 2)))
      return "M" + std::to_string(k / 2) + "^2";
  }
  return "";
}

bool word_desc(const RootLetter& a, const RootLetter& b) {
  return word_lex_less(b.word, a.word);
}

// all exponent assignments over the letters (descending order) with
// sum exp * degree == d and exp below the letter's height
using Factors = std::vector<std::pair<const RootLetter*, int>>;

void enumerate_rec(const std::vector<const RootLetter*>& ls, size_t i, Deg rem,
                   Factors& acc, std::vector<Factors>& out) {
  if (rem.a1 == 0 && rem.a2 == 0) {
    out.push_back(acc);
    return;
  }
  if (i == ls.size()) return;
  const RootLetter* L = ls[i];
  Deg g = L->degree;
  int cap = rem.total() / g.total();
  if (g.a1 > 0) cap = std::min(cap, rem.a1 / g.a1);
  if (g.a2 > 0) cap = std::min(cap, rem.a2 / g.a2);
  if (L->height) cap = std::min(cap, *L->height - 1);
  for (int e = 0; e <= cap; ++e) {
    if (e > 0) acc.emplace_back(L, e);
    enumerate_rec(ls, i + 1, rem - Deg{e * g.a1, e * g.a2}, acc, out);
    if (e > 0) acc.pop_back();
  }
}

std::vector<Factors> enumerate_monomials(const std::vector<const RootLetter*>& ls,
                                         Deg d) {
  std::vector<Factors> out;
  Factors acc;
  enumerate_rec(ls, 0, d, acc, out);
  return out;
}

std::vector<const RootLetter*> all_letters(const RootSystem& rs) {
  std::vector<const RootLetter*> ls;
  ls.reserve(rs.letters.size());
  for (const RootLetter& L : rs.letters) ls.push_back(&L);
  return ls;
}

PBWMonomial make_monomial(const Factors& f, Deg d) {
  PBWMonomial m;
  m.degree = d;
  for (const auto& [L, e] : f) {
    m.factors.emplace_back(L->name, e);
    for (int j = 0; j < e; ++j) m.minword = m.minword.concat(L->word);
  }
  return m;
}

[[noreturn]] void sweep_fail(Deg d, int dim, long count, int accepted) {
  throw std::runtime_error(
      "root sweep inconsistent at " + d.str() + ": dimension " +
      std::to_string(dim) + ", monomials in known letters " +
      std::to_string(count) + ", new root vectors " + std::to_string(accepted));
}

}  // namespace

const RootLetter* RootSystem::letter(const std::string& name) const {
  for (const RootLetter& L : letters)
    if (L.name == name) return &L;
  return nullptr;
}

std::vector<std::pair<Word, FreeElement>> root_vector_candidates(Deg d) {
  std::vector<std::pair<Word, FreeElement>> out;
  for (Word w : lyndon_words(d)) out.emplace_back(w, superletter(w));
  if (d.a1 % 2 == 0 && d.a2 % 2 == 0) {
    Deg e{d.a1 / 2, d.a2 / 2};
    ChiVal c = chi(e, e);
    if (c.exp == 0 && c.sign < 0)  // chi = -1: the square is a candidate
      for (Word v : lyndon_words(e)) {
        const FreeElement& s = superletter(v);
        out.emplace_back(v.concat(v), s * s);
      }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return word_lex_less(b.first, a.first);
  });
  return out;
}

bool is_root_vector(const FreeElement& candidate, Word w,
                    const RootSystem& known, Deg d, const RankCfg& cfg) {
  std::vector<const RootLetter*> greater;
  for (const RootLetter& L : known.letters)
    if (word_lex_less(w, L.word)) greater.push_back(&L);
  std::vector<FreeElement> span;
  for (const Factors& f : enumerate_monomials(greater, d)) {
    FreeElement m = FreeElement::unit();
    for (const auto& [L, e] : f) m *= L->element.pow(e);
    span.push_back(std::move(m));
  }
  return extends_span(candidate, span, d, cfg);
}

RootSystem compute_roots(int max_total, const RankCfg& cfg, HeightConvention hc) {
  RootSystem rs;
  rs.max_total = max_total;
  for (int t = 1; t <= max_total; ++t) {
    for (int a1 = 0; a1 <= t; ++a1) {
      Deg d{a1, t - a1};
      int dim = dimension(d, cfg);
      long count = (long)enumerate_monomials(all_letters(rs), d).size();
      if (count > dim) sweep_fail(d, dim, count, 0);
      if (count == dim) continue;  // the known letters already span the degree
      std::vector<RootLetter> fresh;
      for (auto& [w, elem] : root_vector_candidates(d)) {
        if (!is_root_vector(elem, w, rs, d, cfg)) continue;
        std::string name = name_for(w, d);
        if (name.empty())
          throw std::runtime_error("unrecognized root vector " + w.str() +
                                   " at " + d.str());
        RootLetter L{name, w, d, height_for(d, hc), elem};
        rs.letters.insert(
            std::lower_bound(rs.letters.begin(), rs.letters.end(), L, word_desc),
            L);
        fresh.push_back(std::move(L));
      }
      if ((long)fresh.size() != dim - count)
        sweep_fail(d, dim, count, (int)fresh.size());
      RootDatum rd;
      rd.degree = d;
      rd.multiplicity = (int)fresh.size();
      rd.height = height_for(d, hc);
      std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) {
        return word_lex_less(a.word, b.word);
      });
      for (RootLetter& L : fresh)
        rd.generators.emplace_back(L.name, std::move(L.element));
      rs.roots.push_back(std::move(rd));
    }
  }
  return rs;
}

RootSystem root_system_by_pattern(int max_total) {
  RootSystem rs;
  rs.max_total = max_total;
  auto add = [&](const std::string& name, Word w, Deg d, const FreeElement& e) {
    rs.letters.push_back({name, w, d, height_for(d, HeightConvention::paper), e});
  };
  for (int n = 1; 2 * n - 1 <= max_total; ++n) {
    add("X" + std::to_string(n), x_word(n), {n, n - 1}, superletter(x_word(n)));
    add("Y" + std::to_string(n), y_word(n), {n - 1, n}, superletter(y_word(n)));
  }
  for (int k = 1; 2 * k <= max_total; ++k) {
    if (k % 2 == 1)
      add("M" + std::to_string(k), m_word(k), {k, k}, superletter(m_word(k)));
    else
      add("L" + std::to_string(k), l_word(k), {k, k}, superletter(l_word(k)));
  }
  for (int j = 1; 4 * j <= max_total; j += 2) {
    const FreeElement& m = superletter(m_word(j));
    add("M" + std::to_string(j) + "^2", m_word(j).concat(m_word(j)),
        {2 * j, 2 * j}, m * m);
  }
  std::sort(rs.letters.begin(), rs.letters.end(), word_desc);
  std::map<Deg, std::vector<const RootLetter*>> by_deg;  // sweep order
  for (const RootLetter& L : rs.letters) by_deg[L.degree].push_back(&L);
  for (auto& [d, ls] : by_deg) {
    RootDatum rd;
    rd.degree = d;
    rd.multiplicity = (int)ls.size();
    rd.height = height_for(d, HeightConvention::paper);
    std::sort(ls.begin(), ls.end(), [](const RootLetter* a, const RootLetter* b) {
      return word_lex_less(a->word, b->word);
    });
    for (const RootLetter* L : ls) rd.generators.emplace_back(L->name, L->element);
    rs.roots.push_back(std::move(rd));
  }
  return rs;
}

std::string PBWMonomial::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [name, e] : factors) {
    if (!s.empty()) s += ' ';
    if (e == 1) {
      s += name;
    } else if (name.find('^') != std::string::npos) {
      s += "(" + name + ")^" + std::to_string(e);
    } else {
      s += name + "^" + std::to_string(e);
    }
  }
  return s;
}

std::vector<PBWMonomial> pbw_monomials(const RootSystem& rs, Deg d) {
  std::vector<PBWMonomial> out;
  for (const Factors& f : enumerate_monomials(all_letters(rs), d))
    out.push_back(make_monomial(f, d));
  std::sort(out.begin(), out.end(), [](const PBWMonomial& a, const PBWMonomial& b) {
    return word_lex_less(a.minword, b.minword);
  });
  return out;
}

FreeElement monomial_element(const RootSystem& rs, const PBWMonomial& m) {
  FreeElement e = FreeElement::unit();
  for (const auto& [name, exp] : m.factors) {
    const RootLetter* L = rs.letter(name);
    assert(L);
    e *= L->element.pow(exp);
  }
  return e;
}

std::vector<std::pair<PBWMonomial, Scalar>> pbw_expand(const RootSystem& rs,
                                                       const FreeElement& a) {
  std::vector<std::pair<PBWMonomial, Scalar>> out;
  for (const auto& [d, comp] : a.components()) {
    if (d.total() == 0) {
      out.emplace_back(PBWMonomial{{}, d, Word::empty()},
                       comp.coefficient(Word::empty()));
      continue;
    }
    // Solve sum_j lambda_j <m_j, w> = <a, w> over all words w by exact
    // Gaussian elimination.  Dual coordinates see only the class in B, so a
    // radical summand of a is invisible and the solution recombines to a.
    // Unknowns run in decreasing minword order and equations in decreasing
    // word order, which keeps the system close to triangular (it is not
    // exactly so: the dual rows of a square letter and its even partner
    // interlock at the degrees where chi = -1 makes (2)!_chi vanish).
    auto mons = pbw_monomials(rs, d);
    const size_t k = mons.size();
    const auto& words = words_of_degree(d);
    const size_t nw = words.size();
    // rows[r] = equation for the (nw-1-r)-th word: k coefficients, then rhs
    std::vector<std::vector<Scalar>> rows(nw, std::vector<Scalar>(k + 1));
    for (size_t j = 0; j < k; ++j) {
      auto col = dual_coordinates(monomial_element(rs, mons[k - 1 - j]), d);
      for (size_t r = 0; r < nw; ++r) rows[r][j] = std::move(col[nw - 1 - r]);
    }
    {
      auto rhs = dual_coordinates(comp, d);
      for (size_t r = 0; r < nw; ++r) rows[r][k] = std::move(rhs[nw - 1 - r]);
    }
    std::vector<size_t> pivot_row(k);
    size_t next = 0;
    for (size_t j = 0; j < k; ++j) {
      size_t p = next;
      while (p < nw && rows[p][j].is_zero()) ++p;
      if (p == nw)
        throw std::runtime_error("dependent basis monomials at " + d.str());
      std::swap(rows[p], rows[next]);
      for (size_t r = 0; r < nw; ++r) {
        if (r == next || rows[r][j].is_zero()) continue;
        Scalar f = rows[r][j] / rows[next][j];
        for (size_t c = j; c <= k; ++c) rows[r][c] -= f * rows[next][c];
      }
      pivot_row[j] = next++;
    }
    for (size_t r = next; r < nw; ++r)
      if (!rows[r][k].is_zero())
        throw std::runtime_error(
            "element is outside the span of the basis monomials at " + d.str());
    std::vector<std::pair<PBWMonomial, Scalar>> got;
    for (size_t j = k; j-- > 0;) {  // back to increasing minword
      Scalar lam = rows[pivot_row[j]][k] / rows[pivot_row[j]][j];
      if (!lam.is_zero())
        got.emplace_back(std::move(mons[k - 1 - j]), std::move(lam));
    }
    for (auto& g : got) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace nichols
