#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "nichols/kernel.hpp"
#include "nichols/lyndon.hpp"
#include "nichols/pbw.hpp"
#include "nichols/sequences.hpp"

using namespace nichols;

namespace {

Word W(const std::string& s) { return Word::parse(s); }
FreeElement gen(int i) { return FreeElement::generator(i); }

RankCfg cfg() { return RankCfg{}; }

std::vector<std::string> names(const RootSystem& rs) {
  std::vector<std::string> out;
  for (const auto& L : rs.letters) out.push_back(L.name);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("lyndon words") {
  CHECK(is_lyndon(W("1")));
  CHECK(is_lyndon(W("2")));
  CHECK(is_lyndon(W("12")));
  CHECK(!is_lyndon(W("21")));
  CHECK(!is_lyndon(W("11")));
  CHECK(!is_lyndon(W("121")));
  CHECK(!is_lyndon(W("1212")));
  CHECK(is_lyndon(W("1122")));
  CHECK(is_lyndon(W("112212")));
  CHECK(!is_lyndon(Word::empty()));

  auto ws = lyndon_words({1, 1});
  REQUIRE(ws.size() == 1);
  CHECK(ws[0] == W("12"));
  ws = lyndon_words({2, 1});
  REQUIRE(ws.size() == 1);
  CHECK(ws[0] == W("112"));
  ws = lyndon_words({2, 2});
  REQUIRE(ws.size() == 1);
  CHECK(ws[0] == W("1122"));
  CHECK(lyndon_words({2, 0}).empty());
  CHECK(lyndon_words({0, 1}).size() == 1);

  ws = lyndon_words({3, 3});
  REQUIRE(ws.size() == 3);
  CHECK(ws[0] == W("111222"));
  CHECK(ws[1] == W("112122"));
  CHECK(ws[2] == W("112212"));

  // generation agrees with the brute filter and arrives in increasing order
  for (int t = 1; t <= 10; ++t)
    for (int a1 = 0; a1 <= t; ++a1) {
      Deg d{a1, t - a1};
      std::vector<Word> brute;
      for (Word w : words_of_degree(d))
        if (is_lyndon(w)) brute.push_back(w);
      auto got = lyndon_words(d);
      REQUIRE(got.size() == brute.size());
      for (size_t k = 0; k < got.size(); ++k) CHECK(got[k] == brute[k]);
    }
}

TEST_CASE("shirshov split") {
  CHECK(shirshov_split(W("12")) == 1);
  CHECK(shirshov_split(W("112")) == 1);
  CHECK(shirshov_split(W("1122")) == 1);
  CHECK(shirshov_split(W("11212")) == 3);       // [[112], [12]]
  CHECK(shirshov_split(W("112212")) == 4);      // [[1122], [12]]
  CHECK(shirshov_split(W("11212122")) == 1);    // [[1], [1212122]]
  CHECK(shirshov_split(W("1122112212")) == 4);  // [[1122], [112212]]

  // the split is the one whose suffix is the longest proper Lyndon suffix,
  // and both halves are Lyndon again
  for (int t = 2; t <= 10; ++t)
    for (int a1 = 0; a1 <= t; ++a1)
      for (Word w : lyndon_words({a1, t - a1})) {
        int s = shirshov_split(w);
        CHECK(is_lyndon(w.prefix(s)));
        CHECK(is_lyndon(w.suffix(s)));
        for (int r = 1; r < s; ++r) CHECK(!is_lyndon(w.suffix(r)));
      }
}

TEST_CASE("superletters") {
  CHECK(superletter(W("1")) == gen(1));
  CHECK(superletter(W("2")) == gen(2));
  // [x1 x2] = x1 x2 - q^-1 x2 x1
  FreeElement m1 = FreeElement::from_word(W("12")) -
                   Scalar::q_pow(-1) * FreeElement::from_word(W("21"));
  CHECK(superletter(W("12")) == m1);
  CHECK(superletter(W("112")) == braided_bracket(gen(1), superletter(W("12"))));
  CHECK(superletter(W("1122")) ==
        braided_bracket(gen(1), superletter(W("122"))));
  CHECK(superletter(W("112212")) ==
        braided_bracket(superletter(W("1122")), superletter(W("12"))));
}

TEST_CASE("root vector candidates") {
  auto c = root_vector_candidates({1, 1});
  REQUIRE(c.size() == 1);
  CHECK(c[0].first == W("12"));
  CHECK(c[0].second == superletter(W("12")));

  // at (2,2) the square of [12] joins, and candidates come in decreasing order
  c = root_vector_candidates({2, 2});
  REQUIRE(c.size() == 2);
  CHECK(c[0].first == W("1212"));
  CHECK(c[0].second == superletter(W("12")) * superletter(W("12")));
  CHECK(c[1].first == W("1122"));

  CHECK(root_vector_candidates({2, 0}).empty());

  c = root_vector_candidates({3, 3});
  REQUIRE(c.size() == 3);
  CHECK(c[0].first == W("112212"));
  CHECK(c[1].first == W("112122"));
  CHECK(c[2].first == W("111222"));

  // (4,4): deg (2,2) has chi = +1, so no square candidates there
  for (auto& [w, e] : root_vector_candidates({4, 4})) CHECK(is_lyndon(w));
}

TEST_CASE("root vector classification") {
  RootSystem rs2 = compute_roots(2, cfg());
  REQUIRE(rs2.letters.size() == 3);  // X1, Y1, M1
  CHECK(is_root_vector(superletter(W("12")) * superletter(W("12")), W("1212"),
                       rs2, {2, 2}, cfg()));
  CHECK(is_root_vector(superletter(W("1122")), W("1122"), rs2, {2, 2}, cfg()));

  RootSystem rs5 = compute_roots(5, cfg());
  CHECK(is_root_vector(superletter(W("112212")), W("112212"), rs5, {3, 3},
                       cfg()));

  // [X1, Y3] is a combination of M3, M1^2 M1 and M1 L2: not a root vector
  RootSystem rs6 = compute_roots(6, cfg());
  CHECK(!is_root_vector(superletter(W("112122")), W("112122"), rs6, {3, 3},
                        cfg()));
  CHECK(!is_root_vector(superletter(W("111222")), W("111222"), rs6, {3, 3},
                        cfg()));
}

TEST_CASE("root sweep to total 8") {
  RootSystem rs = compute_roots(8, cfg());
  CHECK(rs.max_total == 8);
  REQUIRE(rs.letters.size() == 13);
  CHECK(names(rs) == std::vector<std::string>{"L2", "L4", "M1", "M1^2", "M3",
                                              "X1", "X2", "X3", "X4", "Y1",
                                              "Y2", "Y3", "Y4"});
  // letters are kept in decreasing word order
  for (size_t k = 0; k + 1 < rs.letters.size(); ++k)
    CHECK(word_lex_less(rs.letters[k + 1].word, rs.letters[k].word));

  const RootLetter* x3 = rs.letter("X3");
  REQUIRE(x3);
  CHECK(x3->word == W("11212"));
  CHECK(x3->degree == Deg{3, 2});
  CHECK(!x3->height);
  CHECK(x3->element == superletter(W("11212")));
  const RootLetter* m3 = rs.letter("M3");
  REQUIRE(m3);
  CHECK(m3->word == W("112212"));
  CHECK(m3->height == 2);
  const RootLetter* sq = rs.letter("M1^2");
  REQUIRE(sq);
  CHECK(sq->word == W("1212"));
  CHECK(!sq->height);
  CHECK(rs.letter("M5") == nullptr);

  REQUIRE(rs.roots.size() == 12);
  auto expect = [&](int k, Deg d, int mult, std::vector<std::string> gens,
                    std::optional<int> h) {
    CHECK(rs.roots[k].degree == d);
    CHECK(rs.roots[k].multiplicity == mult);
    REQUIRE(rs.roots[k].generators.size() == gens.size());
    for (size_t j = 0; j < gens.size(); ++j)
      CHECK(rs.roots[k].generators[j].first == gens[j]);
    CHECK(rs.roots[k].height == h);
  };
  expect(0, {0, 1}, 1, {"Y1"}, std::nullopt);
  expect(1, {1, 0}, 1, {"X1"}, std::nullopt);
  expect(2, {1, 1}, 1, {"M1"}, 2);
  expect(3, {1, 2}, 1, {"Y2"}, std::nullopt);
  expect(4, {2, 1}, 1, {"X2"}, std::nullopt);
  expect(5, {2, 2}, 2, {"L2", "M1^2"}, std::nullopt);
  expect(6, {2, 3}, 1, {"Y3"}, std::nullopt);
  expect(7, {3, 2}, 1, {"X3"}, std::nullopt);
  expect(8, {3, 3}, 1, {"M3"}, 2);
  expect(9, {3, 4}, 1, {"Y4"}, std::nullopt);
  expect(10, {4, 3}, 1, {"X4"}, std::nullopt);
  expect(11, {4, 4}, 1, {"L4"}, std::nullopt);

  // the generator attached to a root is the canonical super-letter
  CHECK(rs.roots[5].generators[0].second == superletter(W("1122")));
  CHECK(rs.roots[5].generators[1].second ==
        superletter(W("12")) * superletter(W("12")));
}

TEST_CASE("root sweep matches the closed-form patterns") {
  RankCfg c = cfg();
  RootSystem swept = compute_roots(10, c);
  RootSystem pattern = root_system_by_pattern(10);
  REQUIRE(swept.letters.size() == 16);  // adds X5, Y5, M5
  REQUIRE(pattern.letters.size() == swept.letters.size());
  for (size_t k = 0; k < swept.letters.size(); ++k) {
    CHECK(swept.letters[k].name == pattern.letters[k].name);
    CHECK(swept.letters[k].word == pattern.letters[k].word);
    CHECK(swept.letters[k].degree == pattern.letters[k].degree);
    CHECK(swept.letters[k].height == pattern.letters[k].height);
    CHECK(swept.letters[k].element == pattern.letters[k].element);
  }
  REQUIRE(pattern.roots.size() == swept.roots.size());
  for (size_t k = 0; k < swept.roots.size(); ++k) {
    CHECK(swept.roots[k].degree == pattern.roots[k].degree);
    CHECK(swept.roots[k].multiplicity == pattern.roots[k].multiplicity);
  }
  const RootLetter* m5 = swept.letter("M5");
  REQUIRE(m5);
  CHECK(m5->word == W("1122112212"));
  CHECK(m5->height == 2);
}

TEST_CASE("literal height convention breaks the sweep") {
  // with exponents bounded by the literal order of chi (1 at even delta
  // multiples) the monomial count falls short of the dimension
  CHECK_THROWS(compute_roots(6, cfg(), HeightConvention::literal));
}

TEST_CASE("pbw monomials") {
  RootSystem rs = compute_roots(8, cfg());

  auto ms = pbw_monomials(rs, {2, 2});
  REQUIRE(ms.size() == 6);
  CHECK(ms[0].str() == "L2");
  CHECK(ms[1].str() == "M1^2");
  CHECK(ms[2].str() == "Y2 X1");
  CHECK(ms[3].str() == "Y1 X2");
  CHECK(ms[4].str() == "Y1 M1 X1");
  CHECK(ms[5].str() == "Y1^2 X1^2");
  CHECK(ms[0].minword == W("1122"));
  CHECK(ms[1].minword == W("1212"));
  CHECK(ms[2].minword == W("1221"));
  CHECK(ms[3].minword == W("2112"));
  CHECK(ms[4].minword == W("2121"));
  CHECK(ms[5].minword == W("2211"));

  ms = pbw_monomials(rs, {0, 0});
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].str() == "1");
  CHECK(monomial_element(rs, ms[0]) == FreeElement::unit());

  // M1 has height 2: no monomial repeats it
  for (const PBWMonomial& m : pbw_monomials(rs, {3, 3}))
    for (const auto& [name, e] : m.factors)
      if (name == "M1" || name == "M3") CHECK(e == 1);

  // basis size equals the dimension at every degree
  for (int t = 0; t <= 8; ++t)
    for (int a1 = 0; a1 <= t; ++a1) {
      Deg d{a1, t - a1};
      CHECK((int)pbw_monomials(rs, d).size() == dimension(d, cfg()));
    }
}

TEST_CASE("minword and dual independence") {
  RootSystem rs = compute_roots(8, cfg());
  for (Deg d : {Deg{2, 2}, Deg{3, 3}}) {
    auto ms = pbw_monomials(rs, d);
    std::vector<std::vector<Scalar>> duals;
    for (const PBWMonomial& m : ms) {
      FreeElement e = monomial_element(rs, m);
      // minword is the least word in the monomial's support
      Word least = e.terms[0].first;
      for (const auto& [w, c] : e.terms)
        if (word_lex_less(w, least)) least = w;
      CHECK(least == m.minword);
      duals.push_back(dual_coordinates(e, d));
    }
    // the dual rows of the basis monomials are linearly independent, which
    // is what makes the expansion solvable
    CHECK(rank_exact(duals) == (int)ms.size());
  }
}

TEST_CASE("pbw expansion") {
  RootSystem rs = compute_roots(8, cfg());
  Scalar th = theta();

  auto e = pbw_expand(rs, superletter(W("11212")));
  REQUIRE(e.size() == 1);
  CHECK(e[0].first.str() == "X3");
  CHECK(e[0].second.is_one());

  // [X1, L2] = (q+2) X3 - theta M1 X2
  FreeElement a = braided_bracket(gen(1), superletter(W("1122")));
  e = pbw_expand(rs, a);
  REQUIRE(e.size() == 2);
  CHECK(e[0].first.str() == "X3");
  CHECK(e[0].second == Scalar::q_pow(1) + Scalar::from_int(2));
  CHECK(e[1].first.str() == "M1 X2");
  CHECK(e[1].second == -th);

  // M1^3 is literally the basis monomial M1^2 * M1
  FreeElement m1 = superletter(W("12"));
  e = pbw_expand(rs, m1 * m1 * m1);
  REQUIRE(e.size() == 1);
  CHECK(e[0].first.str() == "M1^2 M1");
  CHECK(e[0].second.is_one());

  // [X1, Y3] lands on the monomials in strictly greater letters
  e = pbw_expand(rs, superletter(W("112122")));
  std::set<std::string> seen;
  FreeElement recon;
  for (auto& [m, c] : e) {
    seen.insert(m.str());
    recon += monomial_element(rs, m).scaled(c);
  }
  CHECK(!e.empty());
  for (const std::string& s : seen)
    CHECK((s == "M3" || s == "M1^2 M1" || s == "M1 L2"));
  CHECK(equal_in_nichols(recon, superletter(W("112122"))));

  // round trip of a mixed combination, with a radical summand invisible
  auto ms = pbw_monomials(rs, {3, 3});
  REQUIRE(ms.size() == 14);
  FreeElement comb = monomial_element(rs, ms[0]).scaled(th) +
                     monomial_element(rs, ms[4]).scaled(Scalar::frac(3, 7)) +
                     monomial_element(rs, ms[9]).scaled(Scalar::q_pow(-2));
  FreeElement rad = serre_relator_x() * FreeElement::from_word(W("22"));
  REQUIRE(is_zero_in_nichols(rad));
  for (const FreeElement& probe : {comb, comb + rad}) {
    auto got = pbw_expand(rs, probe);
    REQUIRE(got.size() == 3);
    CHECK(got[0].first.str() == ms[0].str());
    CHECK(got[0].second == th);
    CHECK(got[1].first.str() == ms[4].str());
    CHECK(got[1].second == Scalar::frac(3, 7));
    CHECK(got[2].first.str() == ms[9].str());
    CHECK(got[2].second == Scalar::q_pow(-2));
  }

  // inhomogeneous input expands degree by degree, sweep order
  e = pbw_expand(rs, m1 + superletter(W("11212")));
  REQUIRE(e.size() == 2);
  CHECK(e[0].first.str() == "M1");
  CHECK(e[1].first.str() == "X3");
}

TEST_CASE("exact and multipoint sweeps agree") {
  RankCfg ex;
  ex.method = RankCfg::exact;
  RootSystem a = compute_roots(4, ex);
  RootSystem b = compute_roots(4, cfg());
  REQUIRE(a.letters.size() == b.letters.size());
  for (size_t k = 0; k < a.letters.size(); ++k) {
    CHECK(a.letters[k].name == b.letters[k].name);
    CHECK(a.letters[k].element == b.letters[k].element);
  }
}
