#include "tsr/gmodule.hpp"

#include "tsr/errors.hpp"

namespace tsr {

GModule::GModule(const Group& H, FFieldPtr F, int dim, std::vector<FMatrix> gen_mats)
    : H_(&H), F_(std::move(F)), dim_(dim), gen_(std::move(gen_mats)) {
  if (gen_.size() != H.generators().size())
    throw ShapeMismatch("one action matrix per generator required");
  for (const FMatrix& m : gen_)
    if (m.rows() != dim_ || m.cols() != dim_) throw ShapeMismatch("action matrix shape");
}

GModule GModule::trivial(const Group& H, FFieldPtr F) {
  std::vector<FMatrix> gens(H.generators().size(), FMatrix::identity(F, 1));
  return GModule(H, std::move(F), 1, std::move(gens));
}

GModule GModule::regular(const Group& H, FFieldPtr F) {
  const int n = H.order();
  std::vector<FMatrix> gens;
  for (int gi : H.generator_indices()) {
    FMatrix m(F, n, n);
    for (int h = 0; h < n; ++h) m.at(H.mul(gi, h), h) = 1;
    gens.push_back(std::move(m));
  }
  return GModule(H, std::move(F), n, std::move(gens));
}

GModule GModule::linear(const Group& H, FFieldPtr F, const std::vector<int64_t>& values) {
  std::vector<FMatrix> gens;
  for (int gi : H.generator_indices()) {
    FMatrix m(F, 1, 1);
    m.at(0, 0) = values[gi];
    gens.push_back(std::move(m));
  }
  return GModule(H, std::move(F), 1, std::move(gens));
}

FMatrix GModule::matrix_of(int elem) const {
  FMatrix m = FMatrix::identity(F_, dim_);
  for (int w : H_->word(elem)) m = m * gen_[w];
  return m;
}

std::vector<FMatrix> GModule::all_matrices() const {
  const int n = H_->order();
  std::vector<FMatrix> out(n);
  std::vector<char> done(n, 0);
  out[H_->identity()] = FMatrix::identity(F_, dim_);
  done[H_->identity()] = 1;
  // elements fill in along the BFS forest: a = gens[bfs_gen(a)] * bfs_parent(a)
  for (int pass = 0; pass < n; ++pass) {
    bool progress = false;
    for (int a = 0; a < n; ++a) {
      if (done[a]) continue;
      int par = H_->bfs_parent(a);
      if (!done[par]) continue;
      out[a] = gen_[H_->bfs_gen(a)] * out[par];
      done[a] = 1;
      progress = true;
    }
    if (!progress) break;
  }
  for (int a = 0; a < n; ++a)
    if (!done[a]) throw InternalInconsistency("element unreachable along BFS forest");
  return out;
}

bool GModule::check_relations() const {
  std::vector<FMatrix> mats = all_matrices();
  for (int a = 0; a < H_->order(); ++a)
    for (int b = 0; b < H_->order(); ++b)
      if (!(mats[a] * mats[b] == mats[H_->mul(a, b)])) return false;
  return true;
}

CosetDecomposition left_cosets(const Group& G, const Subgroup& S) {
  CosetDecomposition d;
  d.coset_of.assign(G.order(), -1);
  std::vector<int> members = S.member_indices();
  for (int g = 0; g < G.order(); ++g) {
    if (d.coset_of[g] >= 0) continue;
    int c = static_cast<int>(d.reps.size());
    d.reps.push_back(g);
    for (int s : members) d.coset_of[G.mul(g, s)] = c;
  }
  return d;
}

GModule induced_linear(const Group& H, const Subgroup& S, const std::vector<int64_t>& values,
                       FFieldPtr F) {
  CosetDecomposition cos = left_cosets(H, S);
  const int nc = static_cast<int>(cos.reps.size());
  std::vector<FMatrix> gens;
  for (int gi : H.generator_indices()) {
    FMatrix m(F, nc, nc);
    for (int c = 0; c < nc; ++c) {
      int gf = H.mul(gi, cos.reps[c]);
      int c2 = cos.coset_of[gf];
      int s = H.mul(H.inv(cos.reps[c2]), gf);
      if (!S.contains(s)) throw InternalInconsistency("coset arithmetic out of subgroup");
      m.at(c2, c) = values[s];
    }
    gens.push_back(std::move(m));
  }
  return GModule(H, std::move(F), nc, std::move(gens));
}

GModule induce_inflate(const Group& G, const Subgroup& P, const QuotientGroup& nbar,
                       const GModule& E) {
  const Subgroup& N = nbar.numerator();
  if (!(nbar.kernel().members() == P.members()))
    throw InternalInconsistency("quotient kernel is not the given subgroup");
  const FFieldPtr& F = E.field();
  CosetDecomposition cos = left_cosets(G, N);
  const int nc = static_cast<int>(cos.reps.size());
  const int d = E.dim();
  const int dim = nc * d;
  std::vector<FMatrix> emats = E.all_matrices();
  std::vector<FMatrix> gens;
  for (int gi : G.generator_indices()) {
    FMatrix m(F, dim, dim);
    for (int c = 0; c < nc; ++c) {
      int gf = G.mul(gi, cos.reps[c]);
      int c2 = cos.coset_of[gf];
      int n = G.mul(G.inv(cos.reps[c2]), gf);
      const FMatrix& blk = emats[nbar.project(n)];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.at(c2 * d + i, c * d + j) = blk.at(i, j);
    }
    gens.push_back(std::move(m));
  }
  return GModule(G, F, dim, std::move(gens));
}

namespace {

// basis of the common fixed space of the listed elements
std::vector<std::vector<int64_t>> fixed_space(const GModule& M, const std::vector<int>& elems) {
  const FFieldPtr& F = M.field();
  const int n = M.dim();
  if (elems.empty()) {
    std::vector<std::vector<int64_t>> basis;
    for (int i = 0; i < n; ++i) {
      std::vector<int64_t> e(n, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  FMatrix stacked(F, static_cast<int>(elems.size()) * n, n);
  for (size_t t = 0; t < elems.size(); ++t) {
    FMatrix m = M.matrix_of(elems[t]);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) stacked.at(static_cast<int>(t) * n + i, j) = m.at(i, j);
      stacked.at(static_cast<int>(t) * n + i, i) =
          F->sub(stacked.at(static_cast<int>(t) * n + i, i), 1);
    }
  }
  return stacked.kernel_basis();
}

}  // namespace

GModule brauer_quotient(const GModule& M, const Subgroup& P, const QuotientGroup& nbar,
                        const std::vector<Subgroup>& maximals) {
  const Group& G = M.group();
  const FFieldPtr& F = M.field();
  const int n = M.dim();

  std::vector<std::vector<int64_t>> fixed = fixed_space(M, P.generator_elems());

  // relative traces from the maximal subgroups span the radical part
  RowSpace traces(F, n);
  for (const Subgroup& Q : maximals) {
    // coset representatives of Q inside P
    std::vector<int> reps;
    {
      std::vector<char> covered(G.order(), 0);
      for (int x : P.member_indices()) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (int s : Q.member_indices()) covered[G.mul(x, s)] = 1;
      }
    }
    std::vector<FMatrix> rep_mats;
    for (int x : reps) rep_mats.push_back(M.matrix_of(x));
    for (const auto& v : fixed_space(M, Q.generator_elems())) {
      std::vector<int64_t> tv(n, 0);
      for (const FMatrix& xm : rep_mats) {
        std::vector<int64_t> xv = xm.apply(v);
        for (int i = 0; i < n; ++i) tv[i] = F->add(tv[i], xv[i]);
      }
      traces.insert(std::move(tv));
    }
  }

  // extend the trace span to the full fixed space; the extension represents
  // the Brauer quotient
  RowSpace combined = traces;
  std::vector<std::vector<int64_t>> reps_basis;
  size_t trace_dim = static_cast<size_t>(traces.dimension());
  for (const auto& v : fixed)
    if (combined.insert(v)) reps_basis.push_back(v);
  const int qdim = static_cast<int>(reps_basis.size());

  const Group& Nq = nbar.group();
  std::vector<FMatrix> gens;
  for (int t = 0; t < static_cast<int>(Nq.generators().size()); ++t) {
    int qelem = Nq.index_of(Nq.generators()[t]);
    int amb = nbar.section(qelem);
    FMatrix act = M.matrix_of(amb);
    FMatrix m(F, qdim, qdim);
    for (int j = 0; j < qdim; ++j) {
      std::vector<int64_t> img = act.apply(reps_basis[j]);
      std::vector<int64_t> coords = combined.coordinates(std::move(img));
      for (int i = 0; i < qdim; ++i) m.at(i, j) = coords[trace_dim + i];
    }
    gens.push_back(std::move(m));
  }
  return GModule(Nq, F, qdim, std::move(gens));
}

}  // namespace tsr
