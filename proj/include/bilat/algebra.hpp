#pragma once

// Finite algebraic semantics: explicit-table lattices, De Morgan algebras,
// bilattices with optional conflation, heterogeneous (two-lattice) algebras,
// the regular-element decomposition, and brute-force evaluation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bilat/formula.hpp"
#include "bilat/mt.hpp"

namespace bilat {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct FiniteLattice {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> meet, join;
  // Residuals of meet and join: rsup[y][z] = max{x : x meet y <= z},
  // lsub[x][y] = min{z : x <= y join z}. Defined in every finite
  // distributive lattice; filled in by finish().
  std::vector<std::vector<int>> rsup, lsub;
  int bottom = 0, top = 0;
  bool distributive = false;

  int size() const { return static_cast<int>(names.size()); }
};

// Derives meet/join/bounds/residuals from `names` and `leq`.
// Fails if leq is not a partial order or glb/lub/residuals do not exist.
std::optional<std::string> finish_lattice(FiniteLattice& L);

FiniteLattice chain_lattice(int n);
FiniteLattice diamond_lattice();  // 2x2: 0 < a, b < 1

struct FiniteDeMorgan {
  FiniteLattice base;
  std::vector<int> sim;
  std::string name;
};

std::optional<std::string> validate_de_morgan(const FiniteDeMorgan& D);

FiniteDeMorgan dm_boolean2();   // 2-chain, sim = complement
FiniteDeMorgan dm_kleene3();    // 3-chain, sim fixes the middle
FiniteDeMorgan dm_chain4();     // 4-chain, sim reverses the order
FiniteDeMorgan dm_diamond4();   // diamond, sim swaps bounds, fixes atoms

std::vector<FiniteDeMorgan> catalog_de_morgans();

struct FiniteBilattice {
  std::string name;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq_t, leq_k;
  std::vector<std::vector<int>> and_, or_, tens, plus;
  std::vector<int> neg;
  std::optional<std::vector<int>> confl;
  int t = 0, f = 0, top = 0, bot = 0;

  int size() const { return static_cast<int>(names.size()); }
};

struct NotDistributive : std::runtime_error {
  explicit NotDistributive(const std::string& what) : std::runtime_error(what) {}
};

struct NotRegular : std::runtime_error {
  explicit NotRegular(const std::string& what) : std::runtime_error(what) {}
};

FiniteBilattice product_bilattice(const FiniteLattice& L, const std::string& name = "");
FiniteBilattice product_cbilattice(const FiniteDeMorgan& D, const std::string& name = "");

// Names the first violated identity, or nullopt when everything holds.
std::optional<std::string> validate_bilattice(const FiniteBilattice& B);

std::vector<int> regular_elements(const FiniteBilattice& B);
int reg(const FiniteBilattice& B, int a);
std::pair<int, int> pi(const FiniteBilattice& B, int a);
int f_inv(const FiniteBilattice& B, int a, int b);

struct FiniteHBL {
  std::string name;
  FiniteLattice L1, L2;
  std::optional<std::vector<int>> sim1, sim2;  // present for HCBL
  std::vector<int> n;  // L1 -> L2
  std::vector<int> p;  // L2 -> L1

  bool has_sim() const { return sim1.has_value() && sim2.has_value(); }
};

std::optional<std::string> validate_hbl(const FiniteHBL& H);

FiniteHBL b_plus(const FiniteBilattice& B);
FiniteBilattice h_plus(const FiniteHBL& H);

Verdict roundtrip_checks(const FiniteBilattice& B);
Verdict roundtrip_checks(const FiniteHBL& H);

using Valuation = std::map<std::string, int>;
using MtValuation = std::map<std::pair<std::string, Sort>, int>;

int eval(const FiniteBilattice& B, const Valuation& v, const FormulaPtr& A);
int eval_mt(const FiniteHBL& H, const MtValuation& v, const MTFormulaPtr& t);

// a is designated iff t <=k a.
bool designated(const FiniteBilattice& B, int a);

struct ConsequenceVerdict {
  bool valid = true;
  Valuation countervaluation;
};

ConsequenceVerdict consequence(const FiniteBilattice& B, const FormulaPtr& A,
                               const FormulaPtr& C);

std::vector<FiniteBilattice> catalog_bilattices();
std::vector<FiniteHBL> catalog_hbls();

std::string bilattice_to_json(const FiniteBilattice& B);
FiniteBilattice bilattice_from_json(const std::string& text);
std::vector<FiniteBilattice> load_catalog(const std::string& path);  // JSON array

}  // namespace bilat
