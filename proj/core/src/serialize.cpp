#include "tsr/serialize.hpp"

#include <fstream>
#include <sstream>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

constexpr uint64_t kArtifactVersion = 1;

}  // namespace

std::string word_str(const Group& G, int a) {
  const std::vector<int> w = G.word(a);
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += "g" + std::to_string(w[i]);
  }
  return out;
}

std::string subgroup_label(const Group& G, const Subgroup& H) {
  if (H.order() == 1) return "1";
  std::string out = "<";
  const std::vector<int>& gens = H.generator_elems();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += " ";
    out += word_str(G, gens[i]);
  }
  return out + ">";
}

std::string basis_label(const Session& S, const BasisIndex& b) {
  const LocalData& ld = S.local(b.loc);
  std::ostringstream os;
  os << "P=" << subgroup_label(S.group(), S.lattice().all[ld.sub_idx]) << ";phi=" << b.phi
     << "(dim " << ld.table->irreducibles[b.phi].dim << ")";
  return os.str();
}

std::string species_label(const Session& S, const SpeciesIndex& e) {
  const LocalData& ld = S.local(e.loc);
  const int rep = ld.table->ppclasses[e.cls].representative;
  std::ostringstream os;
  os << "Q=" << subgroup_label(S.group(), S.lattice().all[ld.sub_idx]) << ";s=["
     << word_str(S.group(), ld.nbar->section(rep)) << "](ord "
     << ld.nbar->group().element_order(rep) << ")";
  return os.str();
}

std::string pair_label(const Session& S, const MonomialPair& pair) {
  const Subgroup& V = S.lattice().all[pair.v_idx];
  std::ostringstream os;
  os << "V=" << subgroup_label(S.group(), V) << ";nu=[";
  const std::vector<int>& gens = V.generator_elems();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << " ";
    os << pair.nu_exp[gens[i]];
  }
  os << "]";
  return os.str();
}

Json cyclo_json(const Cyclo& v) {
  Json coords = Json::array();
  for (const Rat& r : v.coords()) coords.push_back(rat_str(r));
  return Json{{"m", v.conductor()}, {"coords", coords}};
}

Cyclo cyclo_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  Cyclo out(Rat(0), m);
  int k = 0;
  for (const Json& c : j.at("coords")) {
    const Rat r(c.get<std::string>());
    if (!(r == 0)) out += Cyclo(r, m) * Cyclo::zeta_power(m, k);
    ++k;
  }
  return out;
}

Json matrix_json(const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels, const CycloMatrix& M) {
  Json rows = Json::array();
  for (const std::string& r : row_labels) rows.push_back(r);
  Json cols = Json::array();
  for (const std::string& c : col_labels) cols.push_back(c);
  Json entries = Json::array();
  for (int r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(cyclo_json(M.at(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

CycloMatrix matrix_from_json(const Json& j) {
  const Json& entries = j.at("entries");
  const int nr = static_cast<int>(entries.size());
  const int nc = nr ? static_cast<int>(entries.at(0).size()) : 0;
  CycloMatrix M(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) M.at(r, c) = cyclo_from_json(entries.at(r).at(c));
  return M;
}

std::string matrix_csv(const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels, const CycloMatrix& M) {
  std::ostringstream os;
  os << "label";
  for (const std::string& c : col_labels) os << "," << c;
  os << "\n";
  for (int r = 0; r < M.rows(); ++r) {
    os << row_labels[r];
    for (int c = 0; c < M.cols(); ++c) os << "," << M.at(r, c).str();
    os << "\n";
  }
  return os.str();
}

std::string matrix_text(const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels, const CycloMatrix& M) {
  std::vector<std::vector<std::string>> cells(M.rows() + 1,
                                              std::vector<std::string>(M.cols() + 1));
  for (int c = 0; c < M.cols(); ++c) cells[0][c + 1] = col_labels[c];
  for (int r = 0; r < M.rows(); ++r) {
    cells[r + 1][0] = row_labels[r];
    for (int c = 0; c < M.cols(); ++c) cells[r + 1][c + 1] = M.at(r, c).str();
  }
  std::vector<size_t> width(M.cols() + 1, 0);
  for (const std::vector<std::string>& row : cells)
    for (int c = 0; c <= M.cols(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const std::vector<std::string>& row : cells) {
    for (int c = 0; c <= M.cols(); ++c) {
      if (c) os << "  ";
      os << row[c];
      if (c < M.cols()) os << std::string(width[c] - row[c].size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

Json brauer_table_json(const Group& G, const Group& H, const BrauerTable& t) {
  Json classes = Json::array();
  for (const ConjClass& c : t.ppclasses) classes.push_back(word_str(H, c.representative));
  Json dims = Json::array();
  Json irr = Json::array();
  for (const BrauerCharacter& chi : t.irreducibles) {
    dims.push_back(chi.dim);
    Json row = Json::array();
    for (const Cyclo& v : chi.values) row.push_back(cyclo_json(v));
    irr.push_back(std::move(row));
  }
  Json proj = Json::array();
  for (int s = 0; s < t.L.rows(); ++s) {
    Json row = Json::array();
    for (int c = 0; c < t.L.cols(); ++c) row.push_back(cyclo_json(t.L.at(s, c)));
    proj.push_back(std::move(row));
  }
  std::ostringstream hash;
  hash << std::hex << G.content_hash();
  return Json{{"group_hash", hash.str()}, {"p", t.p},           {"m", t.m},
              {"classes", classes},       {"dims", dims},       {"irreducibles", irr},
              {"projectives", proj}};
}

std::string cache_key(const Group& G, int64_t p, uint64_t seed) {
  uint64_t h = G.content_hash();
  const auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mix(static_cast<uint64_t>(p));
  mix(seed);
  mix(kArtifactVersion);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& key,
                                 const std::string& kind) {
  return dir / (key + "-" + kind + ".json");
}

void cache_write(const std::filesystem::path& dir, const std::string& key,
                 const std::string& kind, const Json& payload) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path final_path = cache_path(dir, key, kind);
  const std::filesystem::path tmp = final_path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << payload.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, final_path);
}

bool cache_read(const std::filesystem::path& dir, const std::string& key,
                const std::string& kind, Json& out) {
  std::ifstream in(cache_path(dir, key, kind), std::ios::binary);
  if (!in) return false;
  try {
    out = Json::parse(in);
  } catch (const Json::exception&) {
    return false;  // damaged cache entries are treated as misses
  }
  return true;
}

}  // namespace tsr
