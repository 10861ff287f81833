#include <catch2/catch_amalgamated.hpp>

#include "liewhit/catalog.hpp"
#include "liewhit/ladder.hpp"
#include "oracles.hpp"

using namespace liewhit;

namespace {

Character mu_of(const LiePresentation& p, const std::string& tag, const Rational& q) {
  Character mu;
  mu.values[p.index_of(tag)] = q;
  return mu;
}

}  // namespace

TEST_CASE("verma weight multiplicities") {
  auto vir = catalog("centerless_virasoro", {std::pair<long, long>{-12, 12}, {}});
  auto dims = verma_weight_dims(vir, mu_of(vir, "e0", rat(7, 3)), 10);
  auto p = oracles::partition_numbers(10);
  REQUIRE(dims.size() == 11);
  for (int k = 0; k <= 10; ++k) CHECK(dims[k] == p[k]);
  CHECK(dims == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});

  auto sl = catalog("sl2");
  auto sdims = verma_weight_dims(sl, mu_of(sl, "h", Rational(1)), 6);
  CHECK(sdims == std::vector<long>(7, 1));

  auto w1 = catalog("w_1", {{}, 6});
  auto wdims = verma_weight_dims(w1, mu_of(w1, "D1(1)", rat(1, 2)), 3);
  CHECK(wdims == std::vector<long>{1, 1, 2, 3});

  // window too small for the requested depth
  auto small = catalog("centerless_virasoro", {std::pair<long, long>{-3, 3}, {}});
  CHECK_THROWS_AS(verma_weight_dims(small, mu_of(small, "e0", Rational(1)), 5), usage_error);
}

TEST_CASE("simple quotient dimensions for sl2 via pairing ranks") {
  auto sl = catalog("sl2");
  // mu = 1: the simple quotient is the 2-dimensional module
  auto d1 = simple_hw_quotient_dims(sl, mu_of(sl, "h", Rational(1)), 6);
  CHECK(d1 == std::vector<long>{1, 1, 0, 0, 0, 0, 0});
  // mu = 1/2: all pairing determinants k! mu(mu-1)...(mu-k+1) are nonzero
  auto dh = simple_hw_quotient_dims(sl, mu_of(sl, "h", rat(1, 2)), 6);
  CHECK(dh == std::vector<long>(7, 1));

  // cross-check the 1x1 pairing values against the closed form
  WeightLadder lad = make_ladder(sl, 1, mu_of(sl, "h", rat(1, 2)), 6, WeightLadder::Mode::Verma);
  for (int k = 1; k <= 6; ++k) {
    Rational expect(1);
    for (int j = 1; j <= k; ++j) expect *= Rational(j) * (rat(1, 2) - Rational(j - 1));
    CHECK(lad.pairing_matrix(k).at(0, 0) == expect);
  }
}

TEST_CASE("star duality between highest and lowest ladders") {
  auto w1 = catalog("w_1", {{}, 7});
  for (const auto& q : {Rational(1), Rational(-1), rat(2, 3), Rational(5), Rational(0)}) {
    auto rep = star_duality_check(w1, mu_of(w1, "D1(1)", q), 4);
    INFO("mu = " << format_rational(q));
    CHECK(rep.equal);
  }

  auto sl = catalog("sl2");
  auto rep = star_duality_check(sl, mu_of(sl, "h", Rational(1)), 4);
  CHECK(rep.equal);
  CHECK(rep.highest == std::vector<long>{1, 1, 0, 0, 0});  // the 2-dim module both ways
}

TEST_CASE("completion whittaker solve for sl2 matches the two-term recursion") {
  auto sl = catalog("sl2");
  Rational mu_val = rat(1, 2);
  WeightLadder lad = make_ladder(sl, 1, mu_of(sl, "h", mu_val), 8, WeightLadder::Mode::Verma);
  Character lambda;
  lambda.values[sl.index_of("e")] = 1;
  auto res = completion_whittaker_solve(lad, lambda, 8);
  CHECK(res.nonsimple_layers.empty());  // the Verma module is simple to this depth
  REQUIRE(res.dims_by_truncation.size() == 9);
  for (int d = 0; d <= 8; ++d) CHECK(res.dims_by_truncation[d] == 1);
  CHECK(res.nested);
  // independent recursion: (k+1)(mu - k) c_{k+1} = c_k
  REQUIRE(res.representative.size() == 9);
  Rational c(1);
  for (int k = 0; k <= 8; ++k) {
    REQUIRE(res.representative[k].size() == 1);
    CHECK(res.representative[k][0] == c);
    c = c / (Rational(k + 1) * (mu_val - Rational(k)));
  }
}

TEST_CASE("completion whittaker solve for the centerless Virasoro window") {
  auto vir = catalog("centerless_virasoro", {std::pair<long, long>{-9, 9}, {}});
  Character lambda;
  lambda.values[vir.index_of("e1")] = 1;
  lambda.values[vir.index_of("e2")] = 0;
  WeightLadder lad = make_ladder(vir, 1, mu_of(vir, "e0", rat(7, 3)), 6, WeightLadder::Mode::Verma);
  auto res = completion_whittaker_solve(lad, lambda, 6);
  CHECK(res.nonsimple_layers.empty());  // generic weight: checked, not assumed
  for (int d = 0; d <= 6; ++d) CHECK(res.dims_by_truncation[d] == 1);
  CHECK(res.nested);

  // lambda = 0 picks out the highest-weight line alone
  Character zero;
  auto res0 = completion_whittaker_solve(lad, zero, 6);
  for (int d = 0; d <= 6; ++d) CHECK(res0.dims_by_truncation[d] == 1);
  REQUIRE(!res0.representative.empty());
  CHECK(res0.representative[0][0] == 1);
  for (int k = 1; k <= 6; ++k)
    for (const auto& c : res0.representative[k]) CHECK(c == 0);
}

TEST_CASE("completion solve on the simple-quotient ladder of w_1") {
  auto w1 = catalog("w_1", {{}, 8});
  Character mu = mu_of(w1, "D1(1)", rat(7, 3));
  // Thm-91-shape precondition: the mirrored lowest-weight Verma module
  // must be simple to depth; its pairing radical vanishing certifies it.
  Character neg;
  neg.values[w1.index_of("D1(1)")] = rat(-7, 3);
  WeightLadder minus = make_ladder(w1, -1, neg, 6, WeightLadder::Mode::SimpleQuotient);
  for (int k = 0; k <= 6; ++k) CHECK(minus.radical_dim(k) == 0);

  WeightLadder lplus = make_ladder(w1, 1, mu, 6, WeightLadder::Mode::SimpleQuotient);
  Character lambda;
  lambda.values[w1.index_of("D1(0)")] = 1;  // the translation direction
  auto res = completion_whittaker_solve(lplus, lambda, 6);
  for (int d = 0; d <= 6; ++d) {
    INFO("d = " << d);
    CHECK(res.dims_by_truncation[d] == 1);
  }
  CHECK(res.nested);
}

TEST_CASE("annihilator spot checks on sl2") {
  auto sl = catalog("sl2");
  Rational mu_val = rat(1, 2);
  WeightLadder lad = make_ladder(sl, 1, mu_of(sl, "h", mu_val), 8, WeightLadder::Mode::Verma);
  Character lambda;
  lambda.values[sl.index_of("e")] = 1;

  UEA zero_elt;
  // Casimir minus its highest-weight eigenvalue mu + mu^2/2 = 5/8
  UEA casimir = parse_word_expression(lad.ctx(), "2 f e + h + 1/2 h^2 - 5/8").value;
  UEA e_shift = parse_word_expression(lad.ctx(), "e - 1").value;

  auto rep = annihilator_spot_check(lad, {zero_elt, casimir, e_shift}, lambda, 6);
  REQUIRE(rep.items.size() == 3);
  CHECK(rep.items[0].annihilates_verma_window);
  CHECK(rep.items[0].annihilates_whittaker_window);
  CHECK(rep.items[1].annihilates_verma_window);
  CHECK(rep.items[1].annihilates_whittaker_window);
  // (e - lambda(e)) kills the Whittaker vector but not the Verma module
  CHECK(!rep.items[2].annihilates_verma_window);
  CHECK(rep.items[2].annihilates_whittaker_window);
  CHECK(!rep.disclaimer.empty());
}

TEST_CASE("simple quotient dims never exceed verma dims; equality iff full rank") {
  auto vir = catalog("centerless_virasoro", {std::pair<long, long>{-8, 8}, {}});
  for (const auto& q : {Rational(0), Rational(1), rat(7, 3)}) {
    Character mu = mu_of(vir, "e0", q);
    auto verma = verma_weight_dims(vir, mu, 5);
    auto simple = simple_hw_quotient_dims(vir, mu, 5);
    WeightLadder lad = make_ladder(vir, 1, mu, 5, WeightLadder::Mode::SimpleQuotient);
    for (int k = 0; k <= 5; ++k) {
      CHECK(simple[k] <= verma[k]);
      CHECK((simple[k] == verma[k]) == (lad.radical_dim(k) == 0));
    }
  }
  // mu = 0 is degenerate for the Witt span: some radical must appear
  WeightLadder zero = make_ladder(vir, 1, mu_of(vir, "e0", Rational(0)), 5,
                                  WeightLadder::Mode::SimpleQuotient);
  int rad_total = 0;
  for (int k = 0; k <= 5; ++k) rad_total += zero.radical_dim(k);
  CHECK(rad_total > 0);
}

TEST_CASE("star duality also holds for the two-variable derivation algebra") {
  auto w2 = catalog("w_2", {{}, 4});
  Character mu;
  mu.values[w2.index_of("D1(1,0)")] = rat(1, 3);
  mu.values[w2.index_of("D2(0,1)")] = Rational(2);
  auto rep = star_duality_check(w2, mu, 2);
  CHECK(rep.equal);
  CHECK(rep.highest == std::vector<long>{1, 1, 1});
}
