#include "doctest.h"

#include "bilat/algebra.hpp"

using namespace bilat;

namespace {

const FiniteBilattice& four() {
  static FiniteBilattice B = catalog_bilattices()[0];
  return B;
}

int elem(const FiniteBilattice& B, const std::string& name) {
  for (int i = 0; i < B.size(); i++)
    if (B.names[i] == name) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("FOUR reconstruction from the 2-chain product") {
  const FiniteBilattice& B = four();
  REQUIRE(B.size() == 4);
  CHECK(B.neg[B.t] == B.f);
  CHECK(B.neg[B.f] == B.t);
  CHECK(B.neg[B.top] == B.top);
  CHECK(B.neg[B.bot] == B.bot);
  REQUIRE(B.confl.has_value());
  CHECK((*B.confl)[B.top] == B.bot);
  CHECK((*B.confl)[B.bot] == B.top);
  CHECK((*B.confl)[B.t] == B.t);
  CHECK((*B.confl)[B.f] == B.f);
  CHECK(B.tens[B.t][B.f] == B.bot);
  CHECK(B.plus[B.t][B.f] == B.top);
  CHECK(B.and_[B.top][B.bot] == B.f);
  CHECK(B.or_[B.top][B.bot] == B.t);
  // t = <1,0>, f = <0,1>: t and f = <0 meet, 1 join> = <0,1> = f
  CHECK(B.and_[B.t][B.f] == B.f);
}

TEST_CASE("catalog bilattices pass every validator") {
  for (const FiniteBilattice& B : catalog_bilattices()) {
    INFO(B.name);
    auto e = validate_bilattice(B);
    CHECK_MESSAGE(!e.has_value(), e.value_or(""));
  }
}

TEST_CASE("validators catch injected faults") {
  FiniteBilattice B = four();
  B.neg[B.t] = B.t;
  CHECK(validate_bilattice(B).has_value());

  FiniteBilattice C = four();
  std::swap((*C.confl)[C.top], (*C.confl)[C.t]);
  CHECK(validate_bilattice(C).has_value());

  FiniteDeMorgan D = dm_kleene3();
  D.sim = {0, 1, 2};
  CHECK(validate_de_morgan(D).has_value());
}

TEST_CASE("non-distributive input is rejected") {
  // M3: three incomparable atoms.
  FiniteLattice M;
  M.names = {"0", "x", "y", "z", "1"};
  M.leq.assign(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; i++) {
    M.leq[i][i] = true;
    M.leq[0][i] = true;
    M.leq[i][4] = true;
  }
  // finish_lattice reports the missing residuals of a non-distributive lattice.
  FiniteLattice probe = M;
  bool residual_gap = finish_lattice(probe).has_value();
  if (!residual_gap) CHECK_FALSE(probe.distributive);
  M.meet.assign(5, std::vector<int>(5, 0));
  M.join.assign(5, std::vector<int>(5, 4));
  for (int i = 0; i < 5; i++)
    for (int j = 0; j < 5; j++) {
      if (M.leq[i][j]) {
        M.meet[i][j] = i;
        M.join[i][j] = j;
      }
      if (M.leq[j][i]) {
        M.meet[i][j] = j;
        M.join[i][j] = i;
      }
    }
  M.bottom = 0;
  M.top = 4;
  M.distributive = false;
  CHECK_THROWS_AS(product_bilattice(M), NotDistributive);
}

TEST_CASE("regular elements and the reg map on FOUR") {
  const FiniteBilattice& B = four();
  std::vector<int> rs = regular_elements(B);
  REQUIRE(rs.size() == 2);
  CHECK(((rs[0] == B.bot && rs[1] == B.top) || (rs[0] == B.top && rs[1] == B.bot)));
  CHECK(reg(B, B.top) == B.top);
  CHECK(reg(B, B.bot) == B.bot);
  CHECK(reg(B, B.t) == B.top);
  CHECK(reg(B, B.f) == B.bot);
}

TEST_CASE("pi and f_inv on FOUR") {
  const FiniteBilattice& B = four();
  CHECK(pi(B, B.t) == std::make_pair(B.top, B.bot));
  CHECK(f_inv(B, B.top, B.bot) == B.t);
  CHECK(pi(B, B.bot) == std::make_pair(B.bot, B.bot));
  CHECK_THROWS_AS(f_inv(B, B.t, B.bot), NotRegular);
}

TEST_CASE("regular elements closed under tens and plus") {
  for (const FiniteBilattice& B : catalog_bilattices()) {
    std::vector<int> rs = regular_elements(B);
    for (int a : rs)
      for (int b : rs) {
        CHECK(B.neg[B.tens[a][b]] == B.tens[a][b]);
        CHECK(B.neg[B.plus[a][b]] == B.plus[a][b]);
      }
  }
}

TEST_CASE("b_plus of FOUR") {
  FiniteHBL H = b_plus(four());
  CHECK(H.L1.size() == 2);
  auto e = validate_hbl(H);
  CHECK_MESSAGE(!e.has_value(), e.value_or(""));
  for (int b = 0; b < H.L2.size(); b++) CHECK(H.n[H.p[b]] == b);
  REQUIRE(H.has_sim());
  // sim swaps bot and top (conflation restricted to regulars).
  CHECK((*H.sim1)[H.L1.bottom] == H.L1.top);
}

TEST_CASE("h_plus of the trivial HBL is FOUR") {
  FiniteHBL H = b_plus(four());
  FiniteBilattice C = h_plus(H);
  auto e = validate_bilattice(C);
  CHECK_MESSAGE(!e.has_value(), e.value_or(""));
  CHECK(C.size() == 4);
  CHECK(C.tens[C.t][C.f] == C.bot);
  REQUIRE(C.confl.has_value());
  for (int x = 0; x < C.size(); x++) {
    CHECK(C.neg[C.neg[x]] == x);
    CHECK(C.neg[(*C.confl)[x]] == (*C.confl)[C.neg[x]]);
  }
}

TEST_CASE("roundtrip checks on the whole catalog") {
  for (const FiniteBilattice& B : catalog_bilattices()) {
    INFO(B.name);
    Verdict v = roundtrip_checks(B);
    CHECK_MESSAGE(v.ok, v.detail);
  }
  for (const FiniteHBL& H : catalog_hbls()) {
    INFO(H.name);
    Verdict v = roundtrip_checks(H);
    CHECK_MESSAGE(v.ok, v.detail);
  }
}

TEST_CASE("roundtrip checks report injected faults") {
  FiniteHBL H = b_plus(four());
  std::swap(H.n[0], H.n[1]);
  Verdict v = roundtrip_checks(H);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.detail.empty());
}

TEST_CASE("evaluation on FOUR") {
  const FiniteBilattice& B = four();
  Valuation v{{"p", B.t}, {"q", B.top}};
  CHECK(eval(B, v, parse_formula("p & q")) == B.top);
  CHECK(eval(B, v, parse_formula("!top")) == B.top);
  CHECK(eval(B, v, parse_formula("-t")) == B.t);
  CHECK_THROWS_AS(eval(B, v, parse_formula("r")), UnboundAtom);
}

TEST_CASE("multi-type evaluation") {
  FiniteHBL H = b_plus(four());
  MtValuation v{{{"a1", Sort::S1}, H.L1.top}};
  CHECK(eval_mt(H, v, parse_mt_formula("(p (n a1))")) == H.L1.top);
  CHECK(eval_mt(H, v, parse_mt_formula("one1")) == H.L1.top);
  CHECK(eval_mt(H, v, parse_mt_formula("(sim1 a1)")) == H.L1.bottom);
  CHECK_THROWS_AS(eval_mt(H, v, parse_mt_formula("b2")), UnboundAtom);
}

TEST_CASE("residual tables satisfy their adjunctions") {
  for (const FiniteHBL& H : catalog_hbls()) {
    const FiniteLattice& L = H.L1;
    for (int x = 0; x < L.size(); x++)
      for (int y = 0; y < L.size(); y++)
        for (int z = 0; z < L.size(); z++) {
          CHECK(L.leq[L.meet[x][y]][z] == L.leq[x][L.rsup[y][z]]);
          CHECK(L.leq[x][L.join[y][z]] == L.leq[L.lsub[x][y]][z]);
        }
  }
}

TEST_CASE("consequence on FOUR") {
  const FiniteBilattice& B = four();
  CHECK(consequence(B, parse_formula("p"), parse_formula("p | q")).valid);
  CHECK(consequence(B, parse_formula("t"), parse_formula("t")).valid);
  ConsequenceVerdict r = consequence(B, parse_formula("p & !p"), parse_formula("q"));
  REQUIRE_FALSE(r.valid);
  CHECK(designated(B, eval(B, r.countervaluation, parse_formula("p & !p"))));
  CHECK_FALSE(designated(B, eval(B, r.countervaluation, parse_formula("q"))));
}

TEST_CASE("json round-trip recomputes and cross-checks tables") {
  for (const FiniteBilattice& B : catalog_bilattices()) {
    FiniteBilattice C = bilattice_from_json(bilattice_to_json(B));
    CHECK(C.and_ == B.and_);
    CHECK(C.tens == B.tens);
    CHECK(C.neg == B.neg);
    CHECK(C.t == B.t);
  }
  std::string bad = bilattice_to_json(four());
  // corrupt the neg table
  FiniteBilattice B = four();
  B.neg = {0, 1, 2, 3};
  for (int i = 0; i < 4; i++) B.neg[i] = i;
  CHECK_THROWS(bilattice_from_json(bilattice_to_json(B)));
}
