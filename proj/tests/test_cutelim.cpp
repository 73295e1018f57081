#include "doctest.h"

#include "bilat/cutelim.hpp"

using namespace bilat;

namespace {

ProofTreePtr cut_node(const ProofTreePtr& l, const ProofTreePtr& r) {
  return make_proof("cut", make_sequent(l->conclusion.lhs, r->conclusion.rhs), {l, r});
}

void collect_cut_ranks(const ProofTreePtr& t, std::vector<int>& out) {
  if (t->rule_id == "cut" && t->premises.size() == 2 &&
      t->premises[0]->conclusion.rhs->kind == SKind::Of)
    out.push_back(complexity(t->premises[0]->conclusion.rhs->formula));
  for (const auto& p : t->premises) collect_cut_ranks(p, out);
}

const char* meet_left =
    "(by meet (seq (Scap1 a1 b1) (meet1 a1 b1))"
    " (by id (seq a1 a1)) (by id (seq b1 b1)))";
const char* meet_right =
    "(by meet (seq (meet1 a1 b1) a1)"
    " (by W (seq (Scap1 a1 b1) a1) (by id (seq a1 a1))))";

ProofTreePtr meet_cut() {
  return cut_node(parse_mt_proof(meet_left), parse_mt_proof(meet_right));
}

const char* sim_left =
    "(by sim (seq (sim1 a1) (sim1 a1))"
    " (by sim (seq (sim1 a1) (Sstar1 a1))"
    "  (by cont (seq (Sstar1 a1) (Sstar1 a1)) (by id (seq a1 a1)))))";
const char* sim_right =
    "(by sim (seq (sim1 a1) (sim1 a1))"
    " (by sim (seq (Sstar1 a1) (sim1 a1))"
    "  (by cont (seq (Sstar1 a1) (Sstar1 a1)) (by id (seq a1 a1)))))";

ProofTreePtr sim_cut() {
  return cut_node(parse_mt_proof(sim_left), parse_mt_proof(sim_right));
}

}  // namespace

TEST_CASE("principal meet cut reduces to two smaller cuts") {
  ProofTreePtr in = meet_cut();
  REQUIRE(check_proof(in, DisplaySystem::DBL).accepted);

  ProofTreePtr once = reduce_principal(in, "");
  DisplayVerdict v = check_proof(once, DisplaySystem::DBL);
  std::string msg = v.locus + " " + v.diagnostic;
  CHECK_MESSAGE(v.accepted, msg);
  CHECK(equal(once->conclusion, in->conclusion));
  std::vector<int> ranks;
  collect_cut_ranks(once, ranks);
  REQUIRE(ranks.size() == 2);
  for (int r : ranks) CHECK(r < 1);

  ElimResult done = eliminate(in, 100);
  CHECK_FALSE(done.stuck);
  CHECK_FALSE(uses_cut(done.tree));
  CHECK(check_proof(done.tree, DisplaySystem::DBL).accepted);
  CHECK(equal(done.tree->conclusion, in->conclusion));
  CHECK(done.rewrites >= 3);
}

TEST_CASE("principal sim cut follows the printed reduction") {
  ProofTreePtr in = sim_cut();
  REQUIRE(check_proof(in, DisplaySystem::DCBL).accepted);

  ProofTreePtr once = reduce_principal(in, "");
  DisplayVerdict v = check_proof(once, DisplaySystem::DCBL);
  std::string msg = v.locus + " " + v.diagnostic;
  CHECK_MESSAGE(v.accepted, msg);
  CHECK(once->rule_id == "cont");
  std::vector<int> ranks;
  collect_cut_ranks(once, ranks);
  REQUIRE(ranks.size() == 1);
  CHECK(ranks[0] == 0);

  // the residual displayed cut is outside the principal fragment
  ElimResult strict = eliminate(in, 100);
  CHECK(strict.stuck);
  CHECK_FALSE(strict.stuck_locus.empty());

  ElimResult done = eliminate_with_search(in, 100, DisplaySystem::DCBL);
  CHECK_FALSE(done.stuck);
  CHECK_FALSE(uses_cut(done.tree));
  CHECK(check_proof(done.tree, DisplaySystem::DCBL).accepted);
  CHECK(equal(done.tree->conclusion, in->conclusion));
}

TEST_CASE("principal n cut reduces through adj and P") {
  const char* left =
      "(by n (seq (n a1) (n a1))"
      " (by n (seq (n a1) (SN a1))"
      "  (by N (seq (SN a1) (SN a1)) (by id (seq a1 a1)))))";
  const char* right =
      "(by n (seq (n a1) (n a1))"
      " (by n (seq (SN a1) (n a1))"
      "  (by N (seq (SN a1) (SN a1)) (by id (seq a1 a1)))))";
  ProofTreePtr in = cut_node(parse_mt_proof(left), parse_mt_proof(right));
  REQUIRE(check_proof(in, DisplaySystem::DBL).accepted);

  ProofTreePtr once = reduce_principal(in, "");
  DisplayVerdict v = check_proof(once, DisplaySystem::DBL);
  std::string msg = v.locus + " " + v.diagnostic;
  CHECK_MESSAGE(v.accepted, msg);
  CHECK(once->rule_id == "P");

  ElimResult done = eliminate_with_search(in, 100, DisplaySystem::DBL);
  CHECK_FALSE(done.stuck);
  CHECK_FALSE(uses_cut(done.tree));
  CHECK(check_proof(done.tree, DisplaySystem::DBL).accepted);
  CHECK(equal(done.tree->conclusion, in->conclusion));
}

TEST_CASE("constant cuts vanish") {
  ProofTreePtr one_in = cut_node(
      parse_mt_proof("(by one (seq Sone2 one2))"),
      parse_mt_proof("(by one (seq one2 one2) (by one (seq Sone2 one2)))"));
  REQUIRE(check_proof(one_in, DisplaySystem::DBL).accepted);
  ElimResult r1 = eliminate(one_in, 10);
  CHECK_FALSE(r1.stuck);
  CHECK_FALSE(uses_cut(r1.tree));
  CHECK(equal(r1.tree->conclusion, one_in->conclusion));

  ProofTreePtr zero_in = cut_node(
      parse_mt_proof("(by zero (seq zero1 zero1) (by zero (seq zero1 Szero1)))"),
      parse_mt_proof("(by zero (seq zero1 Szero1))"));
  REQUIRE(check_proof(zero_in, DisplaySystem::DBL).accepted);
  ElimResult r2 = eliminate(zero_in, 10);
  CHECK_FALSE(r2.stuck);
  CHECK_FALSE(uses_cut(r2.tree));
  CHECK(equal(r2.tree->conclusion, zero_in->conclusion));
}

TEST_CASE("atomic cut against id collapses") {
  ProofTreePtr in = cut_node(
      parse_mt_proof("(by W (seq (Scap1 p1 q1) p1) (by id (seq p1 p1)))"),
      parse_mt_proof("(by id (seq p1 p1))"));
  REQUIRE(check_proof(in, DisplaySystem::DBL).accepted);
  ElimResult r = eliminate(in, 10);
  CHECK_FALSE(r.stuck);
  CHECK_FALSE(uses_cut(r.tree));
  CHECK(r.tree->rule_id == "W");
}

TEST_CASE("cut-free input is returned unchanged") {
  ProofTreePtr in = parse_mt_proof(meet_left);
  ElimResult r = eliminate(in, 10);
  CHECK_FALSE(r.stuck);
  CHECK(r.rewrites == 0);
  CHECK(r.tree == in);
}

TEST_CASE("parametric cut reports Stuck with a locus") {
  const char* weakened =
      "(by W (seq (Scap1 (meet1 a1 b1) c1) (meet1 a1 b1))"
      " (by meet (seq (meet1 a1 b1) (meet1 a1 b1))"
      "  (by meet (seq (Scap1 a1 b1) (meet1 a1 b1))"
      "   (by id (seq a1 a1)) (by id (seq b1 b1)))))";
  const char* consumer =
      "(by meet (seq (meet1 a1 b1) a1)"
      " (by W (seq (Scap1 a1 b1) a1) (by id (seq a1 a1))))";
  ProofTreePtr in = cut_node(parse_mt_proof(weakened), parse_mt_proof(consumer));
  REQUIRE(check_proof(in, DisplaySystem::DBL).accepted);
  CHECK_THROWS_AS(reduce_principal(in, ""), NotPrincipal);
  ElimResult r = eliminate(in, 10);
  CHECK(r.stuck);
  CHECK(r.stuck_locus == "");
}

TEST_CASE("fuel is enforced") {
  CHECK_THROWS_AS(eliminate(meet_cut(), 1), FuelExhausted);
}
