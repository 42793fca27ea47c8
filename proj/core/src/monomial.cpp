#include "tsr/monomial.hpp"

#include <algorithm>
#include <deque>

#include "tsr/errors.hpp"
#include "tsr/gmodule.hpp"
#include "tsr/pposet.hpp"

namespace tsr {

namespace {

// extend a generator assignment to all of V; true on success
bool extend_character(const Group& G, const Subgroup& V, const std::vector<int>& gens,
                      const std::vector<int>& gen_exp, int m, std::vector<int>& exp) {
  exp.assign(G.order(), -1);
  exp[G.identity()] = 0;
  std::deque<int> work{G.identity()};
  while (!work.empty()) {
    const int x = work.front();
    work.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      const int y = G.mul(x, gens[i]);
      const int e = (exp[x] + gen_exp[i]) % m;
      if (exp[y] < 0) {
        exp[y] = e;
        work.push_back(y);
      } else if (exp[y] != e) {
        return false;
      }
    }
  }
  for (int a : V.member_indices())
    for (int b : V.member_indices())
      if (exp[G.mul(a, b)] != (exp[a] + exp[b]) % m) return false;
  return true;
}

}  // namespace

std::vector<std::vector<int>> linear_characters(const Group& G, const Subgroup& V, int64_t p,
                                                int m) {
  const std::vector<int>& gens = V.generator_elems();
  std::vector<int> choices(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int d = G.element_order(gens[i]);
    while (d % p == 0) d /= static_cast<int>(p);
    choices[i] = d;  // nu(gen) must be a d-th root of unity
  }
  std::vector<std::vector<int>> out;
  std::vector<int> gen_exp(gens.size(), 0);
  while (true) {
    std::vector<int> exp;
    std::vector<int> assigned(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) assigned[i] = gen_exp[i] * (m / choices[i]);
    if (extend_character(G, V, gens, assigned, m, exp)) out.push_back(std::move(exp));
    size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++gen_exp[i] < choices[i]) break;
      gen_exp[i] = 0;
    }
    if (i == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MonomialPair> monomial_pairs(const Session& S) {
  const Group& G = S.group();
  const SubgroupLattice& L = S.lattice();
  std::vector<MonomialPair> out;
  for (const std::vector<int>& cls : L.classes) {
    const int v_idx = cls[0];
    const Subgroup& V = L.all[v_idx];
    const Subgroup& N = L.all[L.normalizer_idx[v_idx]];
    const std::vector<std::vector<int>> chars =
        linear_characters(G, V, S.p(), S.conductor());
    for (const std::vector<int>& exp : chars) {
      // ^n nu (x) = nu(^{n^-1} x); keep nu only if it is its orbit's minimum
      bool minimal = true;
      for (int n : N.member_indices()) {
        const int ni = G.inv(n);
        std::vector<int> conj_exp(G.order(), -1);
        for (int x : V.member_indices()) conj_exp[x] = exp[G.conj(ni, x)];
        if (conj_exp < exp) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back({v_idx, exp});
    }
  }
  return out;
}

Cyclo nu_value(const Session& S, const MonomialPair& pair, int elem) {
  const int e = pair.nu_exp[elem];
  if (e < 0) throw InternalInconsistency("nu evaluated outside V");
  return Cyclo::zeta_power(S.conductor(), e);
}

std::vector<Cyclo> lin_row(const Session& S, const MonomialPair& pair) {
  const Group& G = S.group();
  const int m = S.conductor();
  const Subgroup& V = S.lattice().all[pair.v_idx];
  std::vector<Cyclo> coeffs(S.size(), Cyclo(Rat(0), m));
  for (int i : S.p_subgroups()) {
    const Subgroup& P = S.lattice().all[i];
    if (!V.contains_subgroup(P)) continue;
    const int loc0 = S.loc_of(i);
    const LocalData& lp = S.local(loc0);
    const int wi = G.inv(S.lattice().witness[i]);
    const Group& Hp = lp.nbar->group();
    for (int xbar = 0; xbar < Hp.order(); ++xbar) {
      if (lp.table->ppclass_of[xbar] < 0) continue;
      const int g = G.conj(wi, lp.nbar->section(xbar));
      if (!V.contains(g)) continue;  // <P, g> <= V, as P <= V already
      const PosetSlice slice = fixed_subposet(G, S.lattice(), S.p(), g, i, pair.v_idx,
                                              /*open_lower=*/true, /*open_upper=*/false);
      const long chi = reduced_euler(slice);
      if (chi == 0) continue;
      const int ci_inv = lp.table->ppclass_of[Hp.inv(xbar)];
      const Cyclo scale =
          nu_value(S, pair, g) * Cyclo(Rat(static_cast<int64_t>(P.order()) * chi), m);
      for (int phi = 0; phi < lp.table->n_irr(); ++phi)
        coeffs[S.basis_pos(loc0, phi)] +=
            lp.table->irreducibles[phi].values[ci_inv] * scale;
    }
  }
  const Cyclo norm(Rat(-1, V.order()), m);
  for (Cyclo& c : coeffs) c *= norm;
  return coeffs;
}

Cyclo species_of_induced(const Session& S, const MonomialPair& pair, const SpeciesIndex& row) {
  const Group& G = S.group();
  const LocalData& lq = S.local(row.loc);
  const Subgroup& Q = S.lattice().all[lq.sub_idx];
  const Subgroup& V = S.lattice().all[pair.v_idx];
  const int t = lq.nbar->section(lq.table->ppclasses[row.cls].representative);
  const int shat = G.pprime_part(t, S.p());
  Cyclo sum(Rat(0), S.conductor());
  for (int f : left_cosets(G, V).reps) {
    const int fi = G.inv(f);
    bool inside = true;
    for (int e : Q.generator_elems())
      if (!V.contains(G.conj(fi, e))) {
        inside = false;
        break;
      }
    if (!inside) continue;
    const int sh = G.conj(fi, shat);
    if (!V.contains(sh)) continue;
    sum += nu_value(S, pair, sh);  // ^f nu (shat)
  }
  return sum;
}

LinReport verify_lin_pair(const Session& S, const SpeciesTable& N, const MonomialPair& pair) {
  LinReport rep;
  const std::vector<Cyclo> row = lin_row(S, pair);
  for (const Cyclo& c : row)
    if (!c.is_rational() || !is_integer(c.rational_value())) {
      rep.integer_coeffs = false;
      break;
    }

  const SubgroupLattice& L = S.lattice();
  const Subgroup& V = L.all[pair.v_idx];
  const Bitset& core = L.all[core_p_index(L, pair.v_idx, S.p())].members();
  for (int pos = 0; pos < S.size(); ++pos) {
    if (row[pos] == Cyclo(Rat(0), S.conductor())) continue;
    const int sub_idx = S.local(S.basis()[pos].loc).sub_idx;
    bool found = false;
    for (int j : L.classes[L.class_of[sub_idx]]) {
      if (core.subset_of(L.all[j].members()) && L.all[j].members().subset_of(V.members())) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.support_law = false;
      break;
    }
  }

  for (int r = 0; r < S.size(); ++r) {
    Cyclo lhs(Rat(0), S.conductor());
    for (int c = 0; c < S.size(); ++c) lhs += N.N.at(r, c) * row[c];
    if (lhs != species_of_induced(S, pair, S.species()[r])) {
      rep.species_match = false;
      break;
    }
  }
  return rep;
}

}  // namespace tsr
