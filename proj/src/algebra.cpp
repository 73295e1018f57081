#include "bilat/algebra.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bilat {

namespace {

using Table2 = std::vector<std::vector<int>>;
using Rel = std::vector<std::vector<bool>>;

std::optional<std::string> check_partial_order(const Rel& leq, const char* which) {
  int n = static_cast<int>(leq.size());
  for (int a = 0; a < n; a++)
    if (!leq[a][a]) return std::string(which) + ": not reflexive";
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) {
      if (a != b && leq[a][b] && leq[b][a]) return std::string(which) + ": not antisymmetric";
      for (int c = 0; c < n; c++)
        if (leq[a][b] && leq[b][c] && !leq[a][c]) return std::string(which) + ": not transitive";
    }
  return std::nullopt;
}

// glb (lub for upper=true) of {a, b} under leq; -1 when it does not exist.
int bound_of(const Rel& leq, int a, int b, bool upper) {
  int n = static_cast<int>(leq.size());
  int best = -1;
  for (int c = 0; c < n; c++) {
    bool is_bound = upper ? (leq[a][c] && leq[b][c]) : (leq[c][a] && leq[c][b]);
    if (!is_bound) continue;
    if (best == -1 || (upper ? leq[c][best] : leq[best][c])) best = c;
  }
  if (best == -1) return -1;
  for (int c = 0; c < n; c++) {
    bool is_bound = upper ? (leq[a][c] && leq[b][c]) : (leq[c][a] && leq[c][b]);
    if (is_bound && !(upper ? leq[best][c] : leq[c][best])) return -1;
  }
  return best;
}

std::optional<std::string> derive_lattice_ops(const Rel& leq, Table2& meet, Table2& join,
                                              int& bottom, int& top, const char* which) {
  int n = static_cast<int>(leq.size());
  meet.assign(n, std::vector<int>(n));
  join.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) {
      int m = bound_of(leq, a, b, false);
      int j = bound_of(leq, a, b, true);
      if (m < 0) return std::string(which) + ": no glb";
      if (j < 0) return std::string(which) + ": no lub";
      meet[a][b] = m;
      join[a][b] = j;
    }
  bottom = top = 0;
  for (int a = 0; a < n; a++) {
    if (leq[a][bottom]) bottom = a;
    if (leq[top][a]) top = a;
  }
  for (int a = 0; a < n; a++)
    if (!leq[bottom][a] || !leq[a][top]) return std::string(which) + ": not bounded";
  return std::nullopt;
}

bool is_distributive(const Table2& meet, const Table2& join) {
  int n = static_cast<int>(meet.size());
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++)
      for (int z = 0; z < n; z++)
        if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]) return false;
  return true;
}

}  // namespace

std::optional<std::string> finish_lattice(FiniteLattice& L) {
  int n = L.size();
  if (static_cast<int>(L.leq.size()) != n) return "leq table size mismatch";
  if (auto e = check_partial_order(L.leq, "lattice order")) return e;
  if (auto e = derive_lattice_ops(L.leq, L.meet, L.join, L.bottom, L.top, "lattice")) return e;
  L.distributive = is_distributive(L.meet, L.join);

  // rsup[y][z] = max{x : x meet y <= z}, lsub[x][y] = min{z : x <= y join z}.
  // Both exist in finite distributive lattices; verify maximality directly.
  L.rsup.assign(n, std::vector<int>(n, -1));
  L.lsub.assign(n, std::vector<int>(n, -1));
  for (int y = 0; y < n; y++)
    for (int z = 0; z < n; z++) {
      int acc = L.bottom;
      for (int x = 0; x < n; x++)
        if (L.leq[L.meet[x][y]][z]) acc = L.join[acc][x];
      if (!L.leq[L.meet[acc][y]][z]) return "meet residual does not exist";
      L.rsup[y][z] = acc;
    }
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      int acc = L.top;
      for (int z = 0; z < n; z++)
        if (L.leq[x][L.join[y][z]]) acc = L.meet[acc][z];
      if (!L.leq[x][L.join[y][acc]]) return "join residual does not exist";
      L.lsub[x][y] = acc;
    }
  return std::nullopt;
}

FiniteLattice chain_lattice(int n) {
  FiniteLattice L;
  for (int i = 0; i < n; i++) L.names.push_back("c" + std::to_string(i));
  L.leq.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; a++)
    for (int b = a; b < n; b++) L.leq[a][b] = true;
  auto e = finish_lattice(L);
  if (e) throw std::logic_error(*e);
  return L;
}

FiniteLattice diamond_lattice() {
  FiniteLattice L;
  L.names = {"0", "a", "b", "1"};
  L.leq.assign(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; i++) {
    L.leq[i][i] = true;
    L.leq[0][i] = true;
    L.leq[i][3] = true;
  }
  auto e = finish_lattice(L);
  if (e) throw std::logic_error(*e);
  return L;
}

std::optional<std::string> validate_de_morgan(const FiniteDeMorgan& D) {
  const FiniteLattice& L = D.base;
  int n = L.size();
  if (!L.distributive) return "base lattice is not distributive";
  if (static_cast<int>(D.sim.size()) != n) return "sim table size mismatch";
  for (int a = 0; a < n; a++)
    if (D.sim[D.sim[a]] != a) return "sim is not involutive at " + L.names[a];
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      if (L.leq[a][b] && !L.leq[D.sim[b]][D.sim[a]])
        return "sim is not order-reversing at " + L.names[a] + "," + L.names[b];
  return std::nullopt;
}

FiniteDeMorgan dm_boolean2() {
  FiniteDeMorgan D{chain_lattice(2), {1, 0}, "boolean2"};
  return D;
}

FiniteDeMorgan dm_kleene3() {
  FiniteDeMorgan D{chain_lattice(3), {2, 1, 0}, "kleene3"};
  return D;
}

FiniteDeMorgan dm_chain4() {
  FiniteDeMorgan D{chain_lattice(4), {3, 2, 1, 0}, "chain4"};
  return D;
}

FiniteDeMorgan dm_diamond4() {
  FiniteDeMorgan D{diamond_lattice(), {3, 1, 2, 0}, "dm4"};
  return D;
}

std::vector<FiniteDeMorgan> catalog_de_morgans() {
  return {dm_boolean2(), dm_kleene3(), dm_chain4(), dm_diamond4()};
}

namespace {

struct ProductIndex {
  int n;
  int pack(int a, int b) const { return a * n + b; }
  int first(int x) const { return x / n; }
  int second(int x) const { return x % n; }
};

FiniteBilattice product_core(const FiniteLattice& L, const std::string& name) {
  if (auto e = check_partial_order(L.leq, "lattice order"))
    throw std::invalid_argument(*e);
  if (!L.distributive) throw NotDistributive("base lattice fails distributivity");
  int n = L.size();
  ProductIndex ix{n};
  int sz = n * n;
  FiniteBilattice B;
  B.name = name;
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) B.names.push_back("<" + L.names[a] + "," + L.names[b] + ">");
  B.leq_t.assign(sz, std::vector<bool>(sz));
  B.leq_k.assign(sz, std::vector<bool>(sz));
  B.and_.assign(sz, std::vector<int>(sz));
  B.or_.assign(sz, std::vector<int>(sz));
  B.tens.assign(sz, std::vector<int>(sz));
  B.plus.assign(sz, std::vector<int>(sz));
  B.neg.resize(sz);
  for (int x = 0; x < sz; x++) {
    int a1 = ix.first(x), a2 = ix.second(x);
    B.neg[x] = ix.pack(a2, a1);
    for (int y = 0; y < sz; y++) {
      int b1 = ix.first(y), b2 = ix.second(y);
      B.leq_t[x][y] = L.leq[a1][b1] && L.leq[b2][a2];
      B.leq_k[x][y] = L.leq[a1][b1] && L.leq[a2][b2];
      B.and_[x][y] = ix.pack(L.meet[a1][b1], L.join[a2][b2]);
      B.or_[x][y] = ix.pack(L.join[a1][b1], L.meet[a2][b2]);
      B.tens[x][y] = ix.pack(L.meet[a1][b1], L.meet[a2][b2]);
      B.plus[x][y] = ix.pack(L.join[a1][b1], L.join[a2][b2]);
    }
  }
  B.t = ix.pack(L.top, L.bottom);
  B.f = ix.pack(L.bottom, L.top);
  B.top = ix.pack(L.top, L.top);
  B.bot = ix.pack(L.bottom, L.bottom);
  return B;
}

}  // namespace

FiniteBilattice product_bilattice(const FiniteLattice& L, const std::string& name) {
  return product_core(L, name);
}

FiniteBilattice product_cbilattice(const FiniteDeMorgan& D, const std::string& name) {
  if (auto e = validate_de_morgan(D)) throw std::invalid_argument(*e);
  FiniteBilattice B = product_core(D.base, name.empty() ? D.name + "x2" : name);
  int n = D.base.size();
  ProductIndex ix{n};
  std::vector<int> confl(n * n);
  for (int x = 0; x < n * n; x++)
    confl[x] = ix.pack(D.sim[ix.second(x)], D.sim[ix.first(x)]);
  B.confl = std::move(confl);
  return B;
}

std::optional<std::string> validate_bilattice(const FiniteBilattice& B) {
  int n = B.size();
  if (auto e = check_partial_order(B.leq_t, "leq_t")) return e;
  if (auto e = check_partial_order(B.leq_k, "leq_k")) return e;

  Table2 meet_t, join_t, meet_k, join_k;
  int bot_t, top_t, bot_k, top_k;
  if (auto e = derive_lattice_ops(B.leq_t, meet_t, join_t, bot_t, top_t, "leq_t")) return e;
  if (auto e = derive_lattice_ops(B.leq_k, meet_k, join_k, bot_k, top_k, "leq_k")) return e;
  if (meet_t != B.and_) return "and is not the leq_t glb";
  if (join_t != B.or_) return "or is not the leq_t lub";
  if (meet_k != B.tens) return "tens is not the leq_k glb";
  if (join_k != B.plus) return "plus is not the leq_k lub";
  if (bot_t != B.f || top_t != B.t) return "f/t are not the leq_t bounds";
  if (bot_k != B.bot || top_k != B.top) return "bot/top are not the leq_k bounds";

  const Table2* ops[4] = {&B.and_, &B.or_, &B.tens, &B.plus};
  const char* op_names[4] = {"and", "or", "tens", "plus"};
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) {
      if (i == j) continue;
      const Table2& f = *ops[i];
      const Table2& g = *ops[j];
      for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++)
          for (int z = 0; z < n; z++)
            if (f[x][g[y][z]] != g[f[x][y]][f[x][z]])
              return std::string("distributivity of ") + op_names[i] + " over " + op_names[j] +
                     " fails";
    }

  for (int a = 0; a < n; a++) {
    if (B.neg[B.neg[a]] != a) return "neg is not involutive";
    for (int b = 0; b < n; b++) {
      if (B.leq_t[a][b] && !B.leq_t[B.neg[b]][B.neg[a]]) return "neg is not leq_t-antitone";
      if (B.leq_k[a][b] && !B.leq_k[B.neg[a]][B.neg[b]]) return "neg is not leq_k-monotone";
    }
  }
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) {
      if (B.neg[B.and_[a][b]] != B.or_[B.neg[a]][B.neg[b]]) return "neg(x and y) != neg x or neg y";
      if (B.neg[B.or_[a][b]] != B.and_[B.neg[a]][B.neg[b]]) return "neg(x or y) != neg x and neg y";
      if (B.neg[B.tens[a][b]] != B.tens[B.neg[a]][B.neg[b]])
        return "neg(x tens y) != neg x tens neg y";
      if (B.neg[B.plus[a][b]] != B.plus[B.neg[a]][B.neg[b]])
        return "neg(x plus y) != neg x plus neg y";
    }
  if (B.neg[B.t] != B.f || B.neg[B.f] != B.t) return "neg does not swap t and f";
  if (B.neg[B.top] != B.top || B.neg[B.bot] != B.bot) return "neg does not fix top and bot";

  if (B.tens[B.t][B.f] != B.bot) return "t tens f != bot";
  if (B.plus[B.t][B.f] != B.top) return "t plus f != top";
  if (B.and_[B.top][B.bot] != B.f) return "top and bot != f";
  if (B.or_[B.top][B.bot] != B.t) return "top or bot != t";

  if (B.confl) {
    const std::vector<int>& c = *B.confl;
    if (static_cast<int>(c.size()) != n) return "confl table size mismatch";
    for (int a = 0; a < n; a++) {
      if (c[c[a]] != a) return "confl is not involutive";
      if (B.neg[c[a]] != c[B.neg[a]]) return "neg confl x != confl neg x";
      for (int b = 0; b < n; b++) {
        if (B.leq_t[a][b] && !B.leq_t[c[a]][c[b]]) return "confl is not leq_t-monotone";
        if (B.leq_k[a][b] && !B.leq_k[c[b]][c[a]]) return "confl is not leq_k-antitone";
      }
    }
    for (int a = 0; a < n; a++)
      for (int b = 0; b < n; b++) {
        if (c[B.and_[a][b]] != B.and_[c[a]][c[b]])
          return "confl(x and y) != confl x and confl y";
        if (c[B.or_[a][b]] != B.or_[c[a]][c[b]]) return "confl(x or y) != confl x or confl y";
        if (c[B.tens[a][b]] != B.plus[c[a]][c[b]])
          return "confl(x tens y) != confl x plus confl y";
        if (c[B.plus[a][b]] != B.tens[c[a]][c[b]])
          return "confl(x plus y) != confl x tens confl y";
      }
    if (c[B.t] != B.t || c[B.f] != B.f) return "confl does not fix t and f";
    if (c[B.top] != B.bot || c[B.bot] != B.top) return "confl does not swap top and bot";
  }
  return std::nullopt;
}

std::vector<int> regular_elements(const FiniteBilattice& B) {
  std::vector<int> out;
  for (int a = 0; a < B.size(); a++)
    if (B.neg[a] == a) out.push_back(a);
  return out;
}

int reg(const FiniteBilattice& B, int a) {
  int u = B.or_[a][B.tens[a][B.neg[a]]];
  return B.plus[u][B.neg[u]];
}

std::pair<int, int> pi(const FiniteBilattice& B, int a) {
  return {reg(B, a), reg(B, B.neg[a])};
}

int f_inv(const FiniteBilattice& B, int a, int b) {
  if (B.neg[a] != a) throw NotRegular("first component " + B.names[a]);
  if (B.neg[b] != b) throw NotRegular("second component " + B.names[b]);
  return B.plus[B.tens[a][B.or_[a][b]]][B.tens[b][B.and_[a][b]]];
}

std::optional<std::string> validate_hbl(const FiniteHBL& H) {
  int n1 = H.L1.size(), n2 = H.L2.size();
  if (!H.L1.distributive) return "L1 is not distributive";
  if (!H.L2.distributive) return "L2 is not distributive";
  if (H.sim1.has_value() != H.sim2.has_value()) return "only one of sim1/sim2 present";
  if (H.sim1) {
    if (auto e = validate_de_morgan({H.L1, *H.sim1, "L1"})) return "L1: " + *e;
    if (auto e = validate_de_morgan({H.L2, *H.sim2, "L2"})) return "L2: " + *e;
  }
  if (static_cast<int>(H.n.size()) != n1 || static_cast<int>(H.p.size()) != n2)
    return "n/p table size mismatch";
  for (int a = 0; a < n1; a++)
    if (H.n[a] < 0 || H.n[a] >= n2 || H.p[H.n[a]] != a) return "pn != Id on L1";
  for (int b = 0; b < n2; b++)
    if (H.p[b] < 0 || H.p[b] >= n1 || H.n[H.p[b]] != b) return "np != Id on L2";
  for (int a = 0; a < n1; a++)
    for (int b = 0; b < n1; b++) {
      if (H.n[H.L1.meet[a][b]] != H.L2.meet[H.n[a]][H.n[b]]) return "n does not preserve meet";
      if (H.n[H.L1.join[a][b]] != H.L2.join[H.n[a]][H.n[b]]) return "n does not preserve join";
    }
  if (H.n[H.L1.bottom] != H.L2.bottom || H.n[H.L1.top] != H.L2.top)
    return "n does not preserve bounds";
  if (H.sim1)
    for (int a = 0; a < n1; a++)
      if (H.n[(*H.sim1)[a]] != (*H.sim2)[H.n[a]]) return "n sim1 != sim2 n";
  return std::nullopt;
}

FiniteHBL b_plus(const FiniteBilattice& B) {
  std::vector<int> regs = regular_elements(B);
  int m = static_cast<int>(regs.size());
  std::vector<int> back(B.size(), -1);
  for (int i = 0; i < m; i++) back[regs[i]] = i;

  FiniteLattice L;
  for (int r : regs) L.names.push_back(B.names[r]);
  L.leq.assign(m, std::vector<bool>(m));
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) L.leq[i][j] = B.leq_k[regs[i]][regs[j]];
  if (auto e = finish_lattice(L)) throw std::logic_error("Reg(B) lattice: " + *e);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) {
      if (regs[L.meet[i][j]] != B.tens[regs[i]][regs[j]])
        throw std::logic_error("Reg(B) meet disagrees with tens");
      if (regs[L.join[i][j]] != B.plus[regs[i]][regs[j]])
        throw std::logic_error("Reg(B) join disagrees with plus");
    }

  FiniteHBL H;
  H.name = B.name + "+";
  H.L1 = L;
  H.L2 = L;
  H.n.resize(m);
  H.p.resize(m);
  for (int i = 0; i < m; i++) H.n[i] = H.p[i] = i;
  if (B.confl) {
    std::vector<int> sim(m);
    for (int i = 0; i < m; i++) {
      int image = (*B.confl)[regs[i]];
      if (back[image] < 0) throw std::logic_error("Reg(B) not closed under confl");
      sim[i] = back[image];
    }
    H.sim1 = sim;
    H.sim2 = sim;
  }
  return H;
}

FiniteBilattice h_plus(const FiniteHBL& H) {
  int n1 = H.L1.size(), n2 = H.L2.size();
  int sz = n1 * n2;
  auto pack = [n2](int a, int b) { return a * n2 + b; };
  FiniteBilattice B;
  B.name = H.name + "_prod";
  for (int a = 0; a < n1; a++)
    for (int b = 0; b < n2; b++)
      B.names.push_back("<" + H.L1.names[a] + "," + H.L2.names[b] + ">");
  B.leq_t.assign(sz, std::vector<bool>(sz));
  B.leq_k.assign(sz, std::vector<bool>(sz));
  B.and_.assign(sz, std::vector<int>(sz));
  B.or_.assign(sz, std::vector<int>(sz));
  B.tens.assign(sz, std::vector<int>(sz));
  B.plus.assign(sz, std::vector<int>(sz));
  B.neg.resize(sz);
  for (int x = 0; x < sz; x++) {
    int a1 = x / n2, a2 = x % n2;
    B.neg[x] = pack(H.p[a2], H.n[a1]);
    for (int y = 0; y < sz; y++) {
      int b1 = y / n2, b2 = y % n2;
      B.leq_t[x][y] = H.L1.leq[a1][b1] && H.L2.leq[b2][a2];
      B.leq_k[x][y] = H.L1.leq[a1][b1] && H.L2.leq[a2][b2];
      B.and_[x][y] = pack(H.L1.meet[a1][b1], H.L2.join[a2][b2]);
      B.or_[x][y] = pack(H.L1.join[a1][b1], H.L2.meet[a2][b2]);
      B.tens[x][y] = pack(H.L1.meet[a1][b1], H.L2.meet[a2][b2]);
      B.plus[x][y] = pack(H.L1.join[a1][b1], H.L2.join[a2][b2]);
    }
  }
  if (H.has_sim()) {
    std::vector<int> confl(sz);
    for (int x = 0; x < sz; x++) {
      int a1 = x / n2, a2 = x % n2;
      confl[x] = pack(H.p[(*H.sim2)[a2]], H.n[(*H.sim1)[a1]]);
    }
    B.confl = std::move(confl);
  }
  B.t = pack(H.L1.top, H.L2.bottom);
  B.f = pack(H.L1.bottom, H.L2.top);
  B.top = pack(H.L1.top, H.L2.top);
  B.bot = pack(H.L1.bottom, H.L2.bottom);
  return B;
}

namespace {

// Checks that phi : B -> C is a bilattice isomorphism.
std::optional<std::string> check_bilattice_iso(const FiniteBilattice& B, const FiniteBilattice& C,
                                               const std::vector<int>& phi) {
  int n = B.size();
  if (C.size() != n) return "carrier sizes differ";
  std::vector<bool> hit(n, false);
  for (int a = 0; a < n; a++) {
    if (phi[a] < 0 || phi[a] >= n || hit[phi[a]]) return "map is not a bijection";
    hit[phi[a]] = true;
  }
  for (int a = 0; a < n; a++) {
    if (phi[B.neg[a]] != C.neg[phi[a]]) return "neg not preserved at " + B.names[a];
    for (int b = 0; b < n; b++) {
      if (B.leq_t[a][b] != C.leq_t[phi[a]][phi[b]]) return "leq_t not preserved";
      if (B.leq_k[a][b] != C.leq_k[phi[a]][phi[b]]) return "leq_k not preserved";
      if (phi[B.and_[a][b]] != C.and_[phi[a]][phi[b]]) return "and not preserved";
      if (phi[B.or_[a][b]] != C.or_[phi[a]][phi[b]]) return "or not preserved";
      if (phi[B.tens[a][b]] != C.tens[phi[a]][phi[b]]) return "tens not preserved";
      if (phi[B.plus[a][b]] != C.plus[phi[a]][phi[b]]) return "plus not preserved";
    }
  }
  if (B.confl.has_value() != C.confl.has_value()) return "conflation presence differs";
  if (B.confl)
    for (int a = 0; a < n; a++)
      if (phi[(*B.confl)[a]] != (*C.confl)[phi[a]]) return "confl not preserved";
  if (phi[B.t] != C.t || phi[B.f] != C.f || phi[B.top] != C.top || phi[B.bot] != C.bot)
    return "constants not preserved";
  return std::nullopt;
}

}  // namespace

Verdict roundtrip_checks(const FiniteBilattice& B) {
  if (auto e = validate_bilattice(B)) return {false, "input: " + *e};
  std::vector<int> regs = regular_elements(B);
  std::vector<int> back(B.size(), -1);
  for (int i = 0; i < static_cast<int>(regs.size()); i++) back[regs[i]] = i;

  for (int a = 0; a < B.size(); a++) {
    auto [r1, r2] = pi(B, a);
    if (back[r1] < 0 || back[r2] < 0)
      return {false, "pi(" + B.names[a] + ") has a non-regular component"};
    if (f_inv(B, r1, r2) != a) return {false, "f_inv(pi(" + B.names[a] + ")) != " + B.names[a]};
  }
  for (int r1 : regs)
    for (int r2 : regs) {
      int a = f_inv(B, r1, r2);
      if (pi(B, a) != std::make_pair(r1, r2))
        return {false, "pi(f_inv(<" + B.names[r1] + "," + B.names[r2] + ">)) differs"};
    }

  FiniteHBL H = b_plus(B);
  if (auto e = validate_hbl(H)) return {false, "b_plus: " + *e};
  FiniteBilattice C = h_plus(H);
  if (auto e = validate_bilattice(C)) return {false, "h_plus(b_plus): " + *e};
  int m = static_cast<int>(regs.size());
  std::vector<int> phi(B.size());
  for (int a = 0; a < B.size(); a++) {
    auto [r1, r2] = pi(B, a);
    phi[a] = back[r1] * m + back[r2];
  }
  if (auto e = check_bilattice_iso(B, C, phi)) return {false, "B vs (B+)_prod: " + *e};
  return {true, ""};
}

Verdict roundtrip_checks(const FiniteHBL& H) {
  if (auto e = validate_hbl(H)) return {false, "input: " + *e};
  FiniteBilattice B = h_plus(H);
  if (auto e = validate_bilattice(B)) return {false, "h_plus: " + *e};
  FiniteHBL H2 = b_plus(B);
  if (auto e = validate_hbl(H2)) return {false, "b_plus(h_plus): " + *e};

  // Regular elements of h_plus(H) are exactly the pairs <a, n(a)>; the
  // evident pairing sends a in L1 to that pair.
  int n1 = H.L1.size(), n2 = H.L2.size();
  if (H2.L1.size() != n1) return {false, "Reg(h_plus) has wrong size"};
  std::vector<int> reg_back(B.size(), -1);
  {
    std::vector<int> regs = regular_elements(B);
    for (int i = 0; i < static_cast<int>(regs.size()); i++) reg_back[regs[i]] = i;
  }
  std::vector<int> phi(n1);
  for (int a = 0; a < n1; a++) {
    int pair = a * n2 + H.n[a];
    if (reg_back[pair] < 0) return {false, "<a, n(a)> is not regular"};
    phi[a] = reg_back[pair];
  }
  for (int a = 0; a < n1; a++)
    for (int b = 0; b < n1; b++) {
      if (phi[H.L1.meet[a][b]] != H2.L1.meet[phi[a]][phi[b]])
        return {false, "pairing does not preserve meet"};
      if (phi[H.L1.join[a][b]] != H2.L1.join[phi[a]][phi[b]])
        return {false, "pairing does not preserve join"};
    }
  if (phi[H.L1.bottom] != H2.L1.bottom || phi[H.L1.top] != H2.L1.top)
    return {false, "pairing does not preserve bounds"};
  if (H.sim1)
    for (int a = 0; a < n1; a++)
      if (phi[(*H.sim1)[a]] != (*H2.sim1)[phi[a]])
        return {false, "pairing does not preserve sim"};
  // n/p in both H and b_plus(h_plus(H)) act as the pairing transport; with
  // L2 mapped by b |-> phi(p(b)) the squares commute by construction.
  for (int a = 0; a < n1; a++)
    if (H2.n[phi[a]] != phi[H.p[H.n[a]]]) return {false, "pairing does not transport n"};
  return {true, ""};
}

int eval(const FiniteBilattice& B, const Valuation& v, const FormulaPtr& A) {
  switch (A->kind) {
    case FKind::Atom: {
      auto it = v.find(A->name);
      if (it == v.end()) throw UnboundAtom(A->name);
      return it->second;
    }
    case FKind::TruthConst:
      switch (A->tc) {
        case TruthConst::T: return B.t;
        case TruthConst::F: return B.f;
        case TruthConst::Top: return B.top;
        case TruthConst::Bot: return B.bot;
      }
      return B.t;
    case FKind::Neg: return B.neg[eval(B, v, A->a)];
    case FKind::Confl:
      if (!B.confl) throw std::invalid_argument("algebra has no conflation");
      return (*B.confl)[eval(B, v, A->a)];
    case FKind::Bin: {
      int x = eval(B, v, A->a), y = eval(B, v, A->b);
      switch (A->op) {
        case BinOp::And: return B.and_[x][y];
        case BinOp::Or: return B.or_[x][y];
        case BinOp::Tens: return B.tens[x][y];
        case BinOp::Plus: return B.plus[x][y];
      }
    }
  }
  return 0;
}

int eval_mt(const FiniteHBL& H, const MtValuation& v, const MTFormulaPtr& t) {
  const FiniteLattice& L = t->sort == Sort::S1 ? H.L1 : H.L2;
  switch (t->kind) {
    case MKind::Atom: {
      auto it = v.find({t->name, t->sort});
      if (it == v.end()) throw UnboundAtom(t->name);
      return it->second;
    }
    case MKind::One: return L.top;
    case MKind::Zero: return L.bottom;
    case MKind::Meet: return L.meet[eval_mt(H, v, t->a)][eval_mt(H, v, t->b)];
    case MKind::Join: return L.join[eval_mt(H, v, t->a)][eval_mt(H, v, t->b)];
    case MKind::P: return H.p[eval_mt(H, v, t->a)];
    case MKind::N: return H.n[eval_mt(H, v, t->a)];
    case MKind::Sim: {
      if (!H.has_sim()) throw std::invalid_argument("algebra has no sim");
      const std::vector<int>& sim = t->sort == Sort::S1 ? *H.sim1 : *H.sim2;
      return sim[eval_mt(H, v, t->a)];
    }
    case MKind::ResSup: return L.rsup[eval_mt(H, v, t->a)][eval_mt(H, v, t->b)];
    case MKind::ResSub: return L.lsub[eval_mt(H, v, t->a)][eval_mt(H, v, t->b)];
  }
  return 0;
}

bool designated(const FiniteBilattice& B, int a) { return B.leq_k[B.t][a]; }

ConsequenceVerdict consequence(const FiniteBilattice& B, const FormulaPtr& A,
                               const FormulaPtr& C) {
  std::set<std::string> atoms;
  collect_atoms(A, atoms);
  collect_atoms(C, atoms);
  std::vector<std::string> names(atoms.begin(), atoms.end());
  int k = static_cast<int>(names.size());
  int n = B.size();
  long long total = 1;
  for (int i = 0; i < k; i++) total *= n;
  for (long long idx = 0; idx < total; idx++) {
    Valuation v;
    long long rest = idx;
    for (int i = 0; i < k; i++) {
      v[names[i]] = static_cast<int>(rest % n);
      rest /= n;
    }
    if (designated(B, eval(B, v, A)) && !designated(B, eval(B, v, C)))
      return {false, v};
  }
  return {true, {}};
}

std::vector<FiniteBilattice> catalog_bilattices() {
  std::vector<FiniteBilattice> out;
  out.push_back(product_cbilattice(dm_boolean2(), "four"));
  {
    FiniteBilattice& four = out.back();
    four.names[four.f] = "f";
    four.names[four.t] = "t";
    four.names[four.bot] = "bot";
    four.names[four.top] = "top";
  }
  out.push_back(product_cbilattice(dm_kleene3(), "nine"));
  out.push_back(product_cbilattice(dm_chain4(), "sixteen"));
  out.push_back(product_cbilattice(dm_diamond4(), "dm16"));
  return out;
}

std::vector<FiniteHBL> catalog_hbls() {
  std::vector<FiniteHBL> out;
  for (const FiniteBilattice& B : catalog_bilattices()) out.push_back(b_plus(B));
  return out;
}

namespace {

nlohmann::json bilattice_json(const FiniteBilattice& B) {
  nlohmann::json j;
  j["name"] = B.name;
  j["carrier"] = B.names;
  auto rel = [](const Rel& r) {
    std::vector<std::vector<bool>> out(r.begin(), r.end());
    return out;
  };
  j["leq_t"] = rel(B.leq_t);
  j["leq_k"] = rel(B.leq_k);
  j["neg"] = B.neg;
  if (B.confl)
    j["confl"] = *B.confl;
  else
    j["confl"] = nullptr;
  j["consts"] = {{"t", B.t}, {"f", B.f}, {"top", B.top}, {"bot", B.bot}};
  return j;
}

FiniteBilattice bilattice_from(const nlohmann::json& j) {
  FiniteBilattice B;
  B.name = j.value("name", "");
  B.names = j.at("carrier").get<std::vector<std::string>>();
  B.leq_t = j.at("leq_t").get<Rel>();
  B.leq_k = j.at("leq_k").get<Rel>();
  B.neg = j.at("neg").get<std::vector<int>>();
  if (!j.at("confl").is_null()) B.confl = j.at("confl").get<std::vector<int>>();
  B.t = j.at("consts").at("t").get<int>();
  B.f = j.at("consts").at("f").get<int>();
  B.top = j.at("consts").at("top").get<int>();
  B.bot = j.at("consts").at("bot").get<int>();
  int bt, tt, bk, tk;
  if (auto e = derive_lattice_ops(B.leq_t, B.and_, B.or_, bt, tt, "leq_t"))
    throw std::invalid_argument(*e);
  if (auto e = derive_lattice_ops(B.leq_k, B.tens, B.plus, bk, tk, "leq_k"))
    throw std::invalid_argument(*e);
  if (auto e = validate_bilattice(B)) throw std::invalid_argument(*e);
  return B;
}

}  // namespace

std::string bilattice_to_json(const FiniteBilattice& B) { return bilattice_json(B).dump(2); }

FiniteBilattice bilattice_from_json(const std::string& text) {
  return bilattice_from(nlohmann::json::parse(text));
}

std::vector<FiniteBilattice> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<FiniteBilattice> out;
  for (const auto& item : j) out.push_back(bilattice_from(item));
  return out;
}

}  // namespace bilat
