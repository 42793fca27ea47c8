#include "tsr/tsring.hpp"

#include "tsr/errors.hpp"
#include "tsr/gmodule.hpp"

namespace tsr {

namespace {

// ^g sub <= R, tested on generators
bool conj_inside(const Group& G, const Subgroup& sub, int g, const Subgroup& R) {
  for (int e : sub.generator_elems())
    if (!R.contains(G.conj(g, e))) return false;
  return true;
}

}  // namespace

SpeciesTable matrix_N(const Session& S) {
  const Group& G = S.group();
  const int n = S.size();
  const int m = S.conductor();
  SpeciesTable T{S.species(), S.basis(), CycloMatrix(n, n, m)};
  for (int row = 0; row < n; ++row) {
    const SpeciesIndex& qs = T.rows[row];
    const LocalData& lq = S.local(qs.loc);
    const Subgroup& Q = S.lattice().all[lq.sub_idx];
    const int t = lq.nbar->section(lq.table->ppclasses[qs.cls].representative);
    for (int col = 0; col < n; ++col) {
      const BasisIndex& rp = T.cols[col];
      const LocalData& lr = S.local(rp.loc);
      const Subgroup& R = S.lattice().all[lr.sub_idx];
      Cyclo sum(Rat(0), m);
      for (int g = 0; g < G.order(); ++g) {
        if (!conj_inside(G, Q, g, R)) continue;
        const int tg = G.conj(g, t);
        if (!R.normalized_by(tg)) continue;
        sum += lr.table->phihat(lr.nbar->project(tg), rp.phi);
      }
      T.N.at(row, col) = sum * Cyclo(Rat(1, lr.N.order()), m);
    }
  }
  return T;
}

SpeciesTable matrix_N_alt(const Session& S) {
  const Group& G = S.group();
  const int n = S.size();
  const int m = S.conductor();
  SpeciesTable T{S.species(), S.basis(), CycloMatrix(n, n, m)};
  for (int row = 0; row < n; ++row) {
    const SpeciesIndex& qs = T.rows[row];
    const LocalData& lq = S.local(qs.loc);
    const Subgroup& Q = S.lattice().all[lq.sub_idx];
    const std::vector<int>& smem = lq.table->ppclasses[qs.cls].members;
    const int nbar_order = lq.nbar->group().order();
    for (int col = 0; col < n; ++col) {
      const BasisIndex& rp = T.cols[col];
      const LocalData& lr = S.local(rp.loc);
      const Subgroup& R = S.lattice().all[lr.sub_idx];
      Cyclo sum(Rat(0), m);
      for (int z = 0; z < G.order(); ++z) {
        const int zi = G.inv(z);
        // Q <= ^zR iff every generator of Q lands in R under z^-1
        if (!conj_inside(G, Q, zi, R)) continue;
        for (int xbar : smem) {
          const int u = G.conj(zi, lq.nbar->section(xbar));
          if (!R.normalized_by(u)) continue;  // t in N(^zR)
          sum += lr.table->phihat(lr.nbar->project(u), rp.phi);
        }
      }
      const Rat centralizer(nbar_order / static_cast<int64_t>(smem.size()));
      const Rat factor = centralizer / (Rat(nbar_order) * Rat(lr.N.order()));
      T.N.at(row, col) = sum * Cyclo(factor, m);
    }
  }
  return T;
}

CycloMatrix matrix_Ninv(const Session& S) {
  const Group& G = S.group();
  const int n = S.size();
  const int m = S.conductor();
  CycloMatrix Ninv(n, n, m);
  for (int col = 0; col < n; ++col) {
    const SpeciesIndex& qs = S.species()[col];
    const LocalData& lq = S.local(qs.loc);
    const Subgroup& Q = S.lattice().all[lq.sub_idx];
    const CosetDecomposition cosets = left_cosets(G, lq.N);
    for (int v : cosets.reps) {
      const Subgroup vQ = Q.conjugated(v);
      const int vq_idx = S.lattice().index_of(vQ.members());
      const int vi = G.inv(v);
      for (int row = 0; row < n; ++row) {
        const BasisIndex& pf = S.basis()[row];
        const LocalData& lp = S.local(pf.loc);
        if (!vQ.contains_subgroup(S.lattice().all[lp.sub_idx])) continue;
        const Group& Hp = lp.nbar->group();
        for (int xbar = 0; xbar < Hp.order(); ++xbar) {
          const int ci = lp.table->ppclass_of[xbar];
          if (ci < 0) continue;  // aP ranges over p'-cosets only
          const int a = lp.nbar->section(xbar);
          if (!vQ.normalized_by(a)) continue;
          if (lq.table->class_index(lq.nbar->project(G.conj(vi, a))) != qs.cls) continue;
          const long mu = S.mobius().mu(a, lp.sub_idx, vq_idx);
          if (mu == 0) continue;
          const int ci_inv = lp.table->ppclass_of[Hp.inv(xbar)];
          Ninv.at(row, col) +=
              lp.table->irreducibles[pf.phi].values[ci_inv] * Cyclo(Rat(mu), m);
        }
      }
    }
  }
  for (int row = 0; row < n; ++row) {
    const LocalData& lp = S.local(S.basis()[row].loc);
    const Cyclo scale(Rat(S.lattice().all[lp.sub_idx].order(), lp.N.order()), m);
    for (int col = 0; col < n; ++col) Ninv.at(row, col) *= scale;
  }
  return Ninv;
}

IdempotentExpansion idempotent(const Session& S, const SpeciesIndex& target) {
  const Group& G = S.group();
  const int m = S.conductor();
  const LocalData& lq = S.local(target.loc);
  const Subgroup& Q = S.lattice().all[lq.sub_idx];
  IdempotentExpansion e{target, std::vector<Cyclo>(S.size(), Cyclo(Rat(0), m))};
  for (int i : S.p_subgroups()) {
    const Subgroup& P = S.lattice().all[i];
    if (!Q.contains_subgroup(P)) continue;
    const int loc0 = S.loc_of(i);
    const LocalData& lp = S.local(loc0);
    const int wi = G.inv(S.lattice().witness[i]);  // ^witness P = canonical rep
    const Group& Hp = lp.nbar->group();
    for (int xbar = 0; xbar < Hp.order(); ++xbar) {
      if (lp.table->ppclass_of[xbar] < 0) continue;
      // coset representatives gP of N(P)/P correspond to the quotient
      // elements of the canonical local, pulled back through the witness
      const int g = G.conj(wi, lp.nbar->section(xbar));
      if (!Q.normalized_by(g)) continue;
      if (lq.table->class_index(lq.nbar->project(g)) != target.cls) continue;
      const long mu = S.mobius().mu(g, i, lq.sub_idx);
      if (mu == 0) continue;
      const int ci_inv = lp.table->ppclass_of[Hp.inv(xbar)];
      const Cyclo scale(Rat(static_cast<int64_t>(P.order()) * mu), m);
      for (int phi = 0; phi < lp.table->n_irr(); ++phi)
        e.coeffs[S.basis_pos(loc0, phi)] +=
            lp.table->irreducibles[phi].values[ci_inv] * scale;
    }
  }
  const Cyclo norm(Rat(1, lq.N.order()), m);
  for (Cyclo& c : e.coeffs) c *= norm;
  return e;
}

namespace {

// Per-column-group oracle data: the explicit test modules induced to G and
// the rational pseudo-inverse of their multiplicity matrix.
struct OracleBlock {
  std::vector<GModule> induced;
  CycloMatrix A;     // multiplicities, pairs x characters
  CycloMatrix pinv;  // (A^T A)^-1 A^T
};

OracleBlock build_oracle_block(const Session& S, int loc) {
  const LocalData& lp = S.local(loc);
  const Subgroup& P = S.lattice().all[lp.sub_idx];
  const Group& H = lp.nbar->group();
  const FFieldPtr& F = S.field();
  const int m = S.conductor();
  const int nphi = lp.table->n_irr();

  std::vector<GModule> mods;
  std::vector<std::vector<Rat>> mult;
  for (const ConjClass& cc : lp.table->ppclasses) {
    const int sbar = cc.representative;
    const int d = H.element_order(sbar);
    if (m % d != 0) throw InternalInconsistency("p'-order does not divide the conductor");
    const Subgroup C = Subgroup::from_generators(H, {sbar});
    for (int j = 0; j < d; ++j) {
      // lambda(sbar^t) = omega^{j t m/d}; Ind_C^H of lambda is projective
      std::vector<int64_t> values(H.order(), 0);
      int x = H.identity();
      for (int t = 0; t < d; ++t) {
        values[x] = F->pow(F->omega(), static_cast<int64_t>(j) * t * (m / d) % m);
        x = H.mul(x, sbar);
      }
      mods.push_back(induced_linear(H, C, values, F));
      // multiplicity of the projective cover of phi in the induction equals
      // the lambda-eigenspace dimension of sbar on the simple phi
      const int64_t lambda = F->pow(F->omega(), static_cast<int64_t>(j) * (m / d) % m);
      std::vector<Rat> arow(nphi);
      for (int phi = 0; phi < nphi; ++phi) {
        const GModule& Sphi = lp.table->simples[phi];
        const FMatrix shifted =
            Sphi.matrix_of(sbar) - FMatrix::identity(F, Sphi.dim()).scaled(lambda);
        arow[phi] = Rat(Sphi.dim() - shifted.rank());
      }
      mult.push_back(std::move(arow));
    }
  }

  OracleBlock blk;
  const int npairs = static_cast<int>(mult.size());
  blk.A = CycloMatrix(npairs, nphi, 1);
  for (int r = 0; r < npairs; ++r)
    for (int c = 0; c < nphi; ++c) blk.A.at(r, c) = Cyclo(mult[r][c], 1);
  const CycloMatrix At = blk.A.transposed();
  try {
    blk.pinv = (At * blk.A).inverse() * At;
  } catch (const Singular&) {
    throw SingularSystem("oracle multiplicity matrix is column rank deficient");
  }
  blk.induced.reserve(mods.size());
  for (const GModule& Y : mods) blk.induced.push_back(induce_inflate(S.group(), P, *lp.nbar, Y));
  return blk;
}

std::vector<Cyclo> oracle_solve_row(const Session& S, const OracleBlock& blk, int row) {
  const SpeciesIndex& qs = S.species()[row];
  const LocalData& lq = S.local(qs.loc);
  const Subgroup& Q = S.lattice().all[lq.sub_idx];
  const int srep = lq.table->ppclasses[qs.cls].representative;
  const int m = S.conductor();
  std::vector<Cyclo> b;
  b.reserve(blk.induced.size());
  for (const GModule& M : blk.induced)
    b.push_back(brauer_value(brauer_quotient(M, Q, *lq.nbar, lq.maximals), srep));
  const int nphi = blk.pinv.rows();
  std::vector<Cyclo> x(nphi, Cyclo(Rat(0), m));
  for (int phi = 0; phi < nphi; ++phi)
    for (int k = 0; k < blk.pinv.cols(); ++k) x[phi] += blk.pinv.at(phi, k) * b[k];
  for (int k = 0; k < static_cast<int>(b.size()); ++k) {
    Cyclo chk(Rat(0), m);
    for (int phi = 0; phi < nphi; ++phi) chk += blk.A.at(k, phi) * x[phi];
    if (!(chk == b[k])) throw SingularSystem("oracle system is inconsistent");
  }
  return x;
}

}  // namespace

CycloMatrix species_oracle_table(const Session& S) {
  const int n = S.size();
  CycloMatrix out(n, n, S.conductor());
  for (int loc = 0; loc < S.n_locals(); ++loc) {
    const OracleBlock blk = build_oracle_block(S, loc);
    for (int row = 0; row < n; ++row) {
      const std::vector<Cyclo> x = oracle_solve_row(S, blk, row);
      for (int phi = 0; phi < static_cast<int>(x.size()); ++phi)
        out.at(row, S.basis_pos(loc, phi)) = x[phi];
    }
  }
  return out;
}

Cyclo species_oracle(const Session& S, int row, int col) {
  const BasisIndex& pf = S.basis()[col];
  const OracleBlock blk = build_oracle_block(S, pf.loc);
  return oracle_solve_row(S, blk, row)[pf.phi];
}

}  // namespace tsr
