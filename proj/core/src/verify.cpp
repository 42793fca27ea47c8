#include "tsr/verify.hpp"

#include <sstream>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

PropertyResult pass(const std::string& name) { return {name, true, ""}; }
PropertyResult fail(const std::string& name, const std::string& detail) {
  return {name, false, detail};
}

// Is all[a] subconjugate to all[b]?
bool subconjugate(const SubgroupLattice& L, int a, int b) {
  for (int j : L.classes[L.class_of[a]])
    if (L.all[j].members().subset_of(L.all[b].members())) return true;
  return false;
}

std::string at(int r, int c) {
  std::ostringstream os;
  os << "entry (" << r << ", " << c << ")";
  return os.str();
}

}  // namespace

PropertyResult check_mobius_euler(const Session& S) {
  const Group& G = S.group();
  for (int i : S.p_subgroups())
    for (int j : S.p_subgroups()) {
      if (i == j || !S.lattice().all[j].contains_subgroup(S.lattice().all[i])) continue;
      for (int g = 0; g < G.order(); ++g) {
        if (!S.lattice().all[i].normalized_by(g) || !S.lattice().all[j].normalized_by(g))
          continue;
        const long mu = S.mobius().mu(g, i, j);
        const long chi =
            reduced_euler(fixed_subposet(G, S.lattice(), S.p(), g, i, j, true, true));
        if (mu != chi) return fail("mobius equals euler of open interval", at(i, j));
      }
    }
  return pass("mobius equals euler of open interval");
}

PropertyResult check_mobius_recurrences(const Session& S) {
  const Group& G = S.group();
  for (int i : S.p_subgroups())
    for (int j : S.p_subgroups()) {
      if (i == j || !S.lattice().all[j].contains_subgroup(S.lattice().all[i])) continue;
      for (int g = 0; g < G.order(); ++g) {
        if (!S.lattice().all[i].normalized_by(g) || !S.lattice().all[j].normalized_by(g))
          continue;
        const PosetSlice closed =
            fixed_subposet(G, S.lattice(), S.p(), g, i, j, false, false);
        long lower = 0, upper = 0;
        for (int idx : closed.elems) {
          lower += S.mobius().mu(g, i, idx);
          upper += S.mobius().mu(g, idx, j);
        }
        if (lower != 0 || upper != 0)
          return fail("one-sided mobius recurrences both sum to zero", at(i, j));
      }
    }
  return pass("one-sided mobius recurrences both sum to zero");
}

PropertyResult check_mobius_frattini(const Session& S) {
  const Group& G = S.group();
  for (int j : S.p_subgroups()) {
    const Bitset& frat = S.lattice().all[frattini_index(S.lattice(), j)].members();
    for (int i : S.p_subgroups()) {
      if (!S.lattice().all[j].contains_subgroup(S.lattice().all[i])) continue;
      if (frat.subset_of(S.lattice().all[i].members())) continue;
      for (int g = 0; g < G.order(); ++g) {
        if (!S.lattice().all[i].normalized_by(g) || !S.lattice().all[j].normalized_by(g))
          continue;
        if (S.mobius().mu(g, i, j) != 0)
          return fail("mobius vanishes below the Frattini subgroup", at(i, j));
      }
    }
  }
  return pass("mobius vanishes below the Frattini subgroup");
}

PropertyResult check_mobius_equivariance(const Session& S) {
  const Group& G = S.group();
  for (int i : S.p_subgroups())
    for (int j : S.p_subgroups()) {
      if (!S.lattice().all[j].contains_subgroup(S.lattice().all[i])) continue;
      for (int g = 0; g < G.order(); ++g) {
        if (!S.lattice().all[i].normalized_by(g) || !S.lattice().all[j].normalized_by(g))
          continue;
        const long mu = S.mobius().mu(g, i, j);
        for (int h = 0; h < G.order(); ++h) {
          const int hi = S.lattice().index_of(S.lattice().all[i].conjugated(h).members());
          const int hj = S.lattice().index_of(S.lattice().all[j].conjugated(h).members());
          if (S.mobius().mu(G.conj(h, g), hi, hj) != mu)
            return fail("mobius is conjugation equivariant", at(i, j));
        }
      }
    }
  return pass("mobius is conjugation equivariant");
}

PropertyResult check_inversion(const SpeciesTable& N, const CycloMatrix& Ninv) {
  if (!(N.N * Ninv).is_identity()) return fail("N Ninv = I", "left product");
  if (!(Ninv * N.N).is_identity()) return fail("N Ninv = I", "right product");
  return pass("N Ninv = I");
}

PropertyResult check_alt_equality(const Session& S, const SpeciesTable& N) {
  const SpeciesTable alt = matrix_N_alt(S);
  if (!(alt.N == N.N)) return fail("two-sided sweep equals one-sided sweep", "");
  return pass("two-sided sweep equals one-sided sweep");
}

PropertyResult check_oracle_equality(const Session& S, const SpeciesTable& N) {
  const CycloMatrix oracle = species_oracle_table(S);
  for (int r = 0; r < N.N.rows(); ++r)
    for (int c = 0; c < N.N.cols(); ++c)
      if (N.N.at(r, c) != oracle.at(r, c))
        return fail("species table equals module oracle", at(r, c));
  return pass("species table equals module oracle");
}

PropertyResult check_triangularity(const Session& S, const SpeciesTable& N,
                                   const CycloMatrix& Ninv) {
  const Cyclo zero(Rat(0), S.conductor());
  for (int r = 0; r < N.N.rows(); ++r) {
    const int q_idx = S.local(N.rows[r].loc).sub_idx;
    for (int c = 0; c < N.N.cols(); ++c) {
      const int r_idx = S.local(N.cols[c].loc).sub_idx;
      if (!(N.N.at(r, c) == zero) && !subconjugate(S.lattice(), q_idx, r_idx))
        return fail("species table is triangular", at(r, c));
      if (!(Ninv.at(c, r) == zero) && !subconjugate(S.lattice(), r_idx, q_idx))
        return fail("species table is triangular", "inverse " + at(c, r));
    }
  }
  return pass("species table is triangular");
}

PropertyResult check_diagonal_blocks(const Session& S, const SpeciesTable& N,
                                     const CycloMatrix& Ninv) {
  for (int loc = 0; loc < S.n_locals(); ++loc) {
    const BrauerTable& t = *S.local(loc).table;
    const Group& H = S.local(loc).nbar->group();
    for (int cls = 0; cls < static_cast<int>(t.ppclasses.size()); ++cls)
      for (int phi = 0; phi < t.n_irr(); ++phi) {
        const int r = S.species_pos(loc, cls);
        const int c = S.basis_pos(loc, phi);
        if (N.N.at(r, c) != t.L.at(cls, phi))
          return fail("diagonal blocks match the local tables", at(r, c));
        const int inv_cls = t.ppclass_of[H.inv(t.ppclasses[cls].representative)];
        const int centralizer = H.order() / static_cast<int>(t.ppclasses[cls].members.size());
        const Cyclo expected =
            t.irreducibles[phi].values[inv_cls] * Cyclo(Rat(1, centralizer), S.conductor());
        if (Ninv.at(c, r) != expected)
          return fail("diagonal blocks match the local tables", "inverse " + at(c, r));
      }
  }
  return pass("diagonal blocks match the local tables");
}

PropertyResult check_idempotent_columns(const Session& S, const CycloMatrix& Ninv) {
  for (int col = 0; col < S.size(); ++col) {
    const IdempotentExpansion e = idempotent(S, S.species()[col]);
    for (int row = 0; row < S.size(); ++row) {
      if (e.coeffs[row] != Ninv.at(row, col))
        return fail("idempotents equal inverse columns", at(row, col));
    }
  }
  return pass("idempotents equal inverse columns");
}

PropertyResult check_species_delta(const Session& S, const SpeciesTable& N) {
  const int n = S.size();
  const Cyclo zero(Rat(0), S.conductor());
  const Cyclo one(Rat(1), S.conductor());
  std::vector<Cyclo> total(n, zero);
  for (int col = 0; col < n; ++col) {
    const IdempotentExpansion e = idempotent(S, S.species()[col]);
    for (int r = 0; r < n; ++r) {
      Cyclo v = zero;
      for (int c = 0; c < n; ++c) v += N.N.at(r, c) * e.coeffs[c];
      if (v != (r == col ? one : zero))
        return fail("species act as deltas on idempotents", at(r, col));
    }
    for (int c = 0; c < n; ++c) total[c] += e.coeffs[c];
  }
  for (int r = 0; r < n; ++r) {
    Cyclo v = zero;
    for (int c = 0; c < n; ++c) v += N.N.at(r, c) * total[c];
    if (v != one) return fail("species act as deltas on idempotents", "unity row");
  }
  return pass("species act as deltas on idempotents");
}

PropertyResult check_frattini_support(const Session& S) {
  const Cyclo zero(Rat(0), S.conductor());
  for (int col = 0; col < S.size(); ++col) {
    const SpeciesIndex& target = S.species()[col];
    const int q_idx = S.local(target.loc).sub_idx;
    const Bitset& qmem = S.lattice().all[q_idx].members();
    const Bitset& frat = S.lattice().all[frattini_index(S.lattice(), q_idx)].members();
    const IdempotentExpansion e = idempotent(S, target);
    for (int row = 0; row < S.size(); ++row) {
      if (e.coeffs[row] == zero) continue;
      const int p_idx = S.local(S.basis()[row].loc).sub_idx;
      bool found = false;
      for (int j : S.lattice().classes[S.lattice().class_of[p_idx]])
        if (frat.subset_of(S.lattice().all[j].members()) &&
            S.lattice().all[j].members().subset_of(qmem)) {
          found = true;
          break;
        }
      if (!found) return fail("idempotent support between Frattini and target", at(row, col));
    }
  }
  return pass("idempotent support between Frattini and target");
}

PropertyResult check_brauer_sanity(const Session& S) {
  for (int loc = 0; loc < S.n_locals(); ++loc) {
    const BrauerTable& t = *S.local(loc).table;
    const Group& H = S.local(loc).nbar->group();
    const int nc = static_cast<int>(t.ppclasses.size());
    if (t.n_irr() != nc) return fail("local Brauer tables are square", "count");
    Cyclo sum(Rat(0), S.conductor());
    const int id_cls = t.ppclass_of[H.identity()];
    for (int phi = 0; phi < nc; ++phi)
      sum += t.L.at(id_cls, phi) * Cyclo(Rat(t.irreducibles[phi].dim), S.conductor());
    if (sum != Cyclo(Rat(H.order()), S.conductor()))
      return fail("local Brauer tables are square", "regular dimension");
    // orthogonality: the character pairing matrix inverts L
    CycloMatrix A(nc, nc, S.conductor());
    for (int phi = 0; phi < nc; ++phi)
      for (int cls = 0; cls < nc; ++cls) {
        const int inv_cls = t.ppclass_of[H.inv(t.ppclasses[cls].representative)];
        const int centralizer = H.order() / static_cast<int>(t.ppclasses[cls].members.size());
        A.at(phi, cls) =
            t.irreducibles[phi].values[inv_cls] * Cyclo(Rat(1, centralizer), S.conductor());
      }
    if (!(A * t.L).is_identity())
      return fail("local Brauer tables are square", "orthogonality");
  }
  return pass("local Brauer tables are square");
}

PropertyResult check_linearization(const Session& S, const SpeciesTable& N) {
  for (const MonomialPair& pair : monomial_pairs(S)) {
    const LinReport rep = verify_lin_pair(S, N, pair);
    if (!rep.pass()) {
      std::ostringstream os;
      os << "V index " << pair.v_idx << ":";
      if (!rep.integer_coeffs) os << " non-integer coefficient";
      if (!rep.support_law) os << " support violation";
      if (!rep.species_match) os << " species mismatch";
      return fail("linearization rows verified", os.str());
    }
  }
  return pass("linearization rows verified");
}

PropertyResult check_identity_expansion(const Session& S) {
  const int whole = static_cast<int>(S.lattice().all.size()) - 1;
  const MonomialPair identity{whole, std::vector<int>(S.group().order(), 0)};
  const std::vector<Cyclo> row = lin_row(S, identity);
  std::vector<Cyclo> total(S.size(), Cyclo(Rat(0), S.conductor()));
  for (int col = 0; col < S.size(); ++col) {
    const IdempotentExpansion e = idempotent(S, S.species()[col]);
    for (int c = 0; c < S.size(); ++c) total[c] += e.coeffs[c];
  }
  for (int c = 0; c < S.size(); ++c)
    if (row[c] != total[c]) return fail("trivial pair expands the identity", at(0, c));
  return pass("trivial pair expands the identity");
}

std::vector<PropertyResult> run_verification(const Session& S) {
  std::vector<PropertyResult> out;
  out.push_back(check_mobius_euler(S));
  out.push_back(check_mobius_recurrences(S));
  out.push_back(check_mobius_frattini(S));
  out.push_back(check_mobius_equivariance(S));
  out.push_back(check_brauer_sanity(S));
  const SpeciesTable N = matrix_N(S);
  const CycloMatrix Ninv = matrix_Ninv(S);
  out.push_back(check_inversion(N, Ninv));
  out.push_back(check_alt_equality(S, N));
  out.push_back(check_oracle_equality(S, N));
  out.push_back(check_triangularity(S, N, Ninv));
  out.push_back(check_diagonal_blocks(S, N, Ninv));
  out.push_back(check_idempotent_columns(S, Ninv));
  out.push_back(check_species_delta(S, N));
  out.push_back(check_frattini_support(S));
  out.push_back(check_linearization(S, N));
  out.push_back(check_identity_expansion(S));
  return out;
}

}  // namespace tsr
