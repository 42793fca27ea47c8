#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tsr/constructions.hpp"
#include "tsr/errors.hpp"
#include "tsr/serialize.hpp"
#include "tsr/tsring.hpp"
#include "tsr/verify.hpp"

namespace tsr {

namespace {

struct Config {
  std::string group;
  int64_t p = 0;
  uint64_t seed = 0;
  int max_order = kDefaultOrderCap;
  std::string format = "text";
  std::string cache_dir = ".tsring-cache";
  bool no_cache = false;
  int local = 0;
};

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--group", cfg.group,
                  "group spec: S4, D8, klein4, \"cyclic 6\", products joined by x, "
                  "or generators in cycle notation")
      ->required();
  cmd->add_option("-p,--prime", cfg.p, "prime characteristic")->required();
  cmd->add_option("--seed", cfg.seed, "seed for the randomized splitting searches");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--cache-dir", cfg.cache_dir, "result cache directory");
  cmd->add_flag("--no-cache", cfg.no_cache, "bypass the result cache");
  cmd->add_option("--max-order", cfg.max_order, "group order cap");
}

Json base_payload(const std::string& command, const Group& G, const Config& cfg) {
  std::ostringstream h;
  h << std::hex << G.content_hash();
  return Json{{"command", command},
              {"group_hash", h.str()},
              {"order", G.order()},
              {"p", cfg.p},
              {"seed", cfg.seed}};
}

std::vector<std::string> basis_labels(const Session& S) {
  std::vector<std::string> out;
  for (const BasisIndex& b : S.basis()) out.push_back(basis_label(S, b));
  return out;
}

std::vector<std::string> species_labels(const Session& S) {
  std::vector<std::string> out;
  for (const SpeciesIndex& e : S.species()) out.push_back(species_label(S, e));
  return out;
}

Json species_payload(const Session& S, const Config& cfg) {
  const SpeciesTable t = matrix_N(S);
  Json payload = base_payload("species-table", S.group(), cfg);
  payload["matrix"] = matrix_json(species_labels(S), basis_labels(S), t.N);
  return payload;
}

Json idempotents_payload(const Session& S, const Config& cfg) {
  CycloMatrix M(S.size(), S.size());
  for (int r = 0; r < S.size(); ++r) {
    const IdempotentExpansion e = idempotent(S, S.species()[r]);
    for (int c = 0; c < S.size(); ++c) M.at(r, c) = e.coeffs[c];
  }
  Json payload = base_payload("idempotents", S.group(), cfg);
  payload["matrix"] = matrix_json(species_labels(S), basis_labels(S), M);
  return payload;
}

Json linmap_payload(const Session& S, const Config& cfg) {
  const std::vector<MonomialPair> pairs = monomial_pairs(S);
  CycloMatrix M(S.size(), static_cast<int>(pairs.size()));
  std::vector<std::string> cols;
  for (size_t j = 0; j < pairs.size(); ++j) {
    cols.push_back(pair_label(S, pairs[j]));
    const std::vector<Cyclo> row = lin_row(S, pairs[j]);
    for (int r = 0; r < S.size(); ++r) M.at(r, static_cast<int>(j)) = row[r];
  }
  Json payload = base_payload("linmap", S.group(), cfg);
  payload["matrix"] = matrix_json(basis_labels(S), cols, M);
  return payload;
}

Json brauer_payload(const Session& S, const Config& cfg) {
  const LocalData& ld = S.local(cfg.local);
  Json payload = base_payload("brauer-table", S.group(), cfg);
  payload["local"] = cfg.local;
  payload["P"] = subgroup_label(S.group(), S.lattice().all[ld.sub_idx]);
  payload["table"] = brauer_table_json(S.group(), ld.nbar->group(), *ld.table);
  return payload;
}

CycloMatrix matrix_of_entries(const Json& entries) {
  const int nr = static_cast<int>(entries.size());
  const int nc = nr ? static_cast<int>(entries.at(0).size()) : 0;
  CycloMatrix M(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) M.at(r, c) = cyclo_from_json(entries.at(r).at(c));
  return M;
}

void render_matrix(const Json& payload, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    out << payload.dump(2) << "\n";
    return;
  }
  const Json& m = payload.at("matrix");
  const auto rows = m.at("rows").get<std::vector<std::string>>();
  const auto cols = m.at("cols").get<std::vector<std::string>>();
  const CycloMatrix M = matrix_from_json(m);
  out << (fmt == "csv" ? matrix_csv(rows, cols, M) : matrix_text(rows, cols, M));
}

void render_idempotents(const Json& payload, const std::string& fmt, std::ostream& out) {
  if (fmt != "text") {
    render_matrix(payload, fmt, out);
    return;
  }
  const Json& m = payload.at("matrix");
  const auto rows = m.at("rows").get<std::vector<std::string>>();
  const auto cols = m.at("cols").get<std::vector<std::string>>();
  const CycloMatrix M = matrix_from_json(m);
  for (int r = 0; r < M.rows(); ++r) {
    out << "e[" << rows[r] << "] =";
    bool first = true;
    for (int c = 0; c < M.cols(); ++c) {
      if (M.at(r, c).is_zero()) continue;
      out << (first ? " " : " + ") << "(" << M.at(r, c).str() << ")*[" << cols[c] << "]";
      first = false;
    }
    if (first) out << " 0";
    out << "\n";
  }
}

void render_brauer(const Json& payload, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    out << payload.dump(2) << "\n";
    return;
  }
  const Json& t = payload.at("table");
  std::vector<std::string> cls;
  for (const Json& c : t.at("classes")) cls.push_back("[" + c.get<std::string>() + "]");
  std::vector<std::string> phis;
  const auto dims = t.at("dims").get<std::vector<int>>();
  for (size_t i = 0; i < dims.size(); ++i)
    phis.push_back("phi=" + std::to_string(i) + "(dim " + std::to_string(dims[i]) + ")");
  const CycloMatrix irr = matrix_of_entries(t.at("irreducibles"));
  const CycloMatrix L = matrix_of_entries(t.at("projectives"));
  if (fmt == "csv") {
    out << "# irreducibles\n" << matrix_csv(phis, cls, irr);
    out << "# projectives\n" << matrix_csv(cls, phis, L);
    return;
  }
  out << "irreducible brauer characters of N(P)/P, P=" << payload.at("P").get<std::string>()
      << "\n"
      << matrix_text(phis, cls, irr) << "\n"
      << "projective characters (rows: p'-classes)\n"
      << matrix_text(cls, phis, L);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_verify(Session& S, const Config& cfg, std::ostream& out) {
  const std::vector<PropertyResult> results = run_verification(S);
  bool all = true;
  for (const PropertyResult& r : results) all = all && r.pass;
  if (cfg.format == "json") {
    Json payload = base_payload("verify", S.group(), cfg);
    Json arr = Json::array();
    for (const PropertyResult& r : results)
      arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    payload["results"] = arr;
    payload["all_pass"] = all;
    out << payload.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "name,pass,detail\n";
    for (const PropertyResult& r : results)
      out << r.name << "," << (r.pass ? "true" : "false") << "," << csv_quote(r.detail)
          << "\n";
  } else {
    int passed = 0;
    for (const PropertyResult& r : results) {
      if (r.pass) {
        out << "PASS " << r.name << "\n";
        ++passed;
      } else {
        out << "FAIL " << r.name << ": " << r.detail << "\n";
      }
    }
    out << passed << "/" << results.size() << " properties passed\n";
  }
  return all ? 0 : 1;
}

int run_command(const std::string& name, const Config& cfg, std::ostream& out,
                std::ostream& err) {
  Group G = parse_group_spec(cfg.group, cfg.max_order);
  const bool use_cache = !cfg.no_cache && !cfg.cache_dir.empty();
  const std::string key = cache_key(G, cfg.p, cfg.seed);

  if (name == "verify") {
    Session S(std::move(G), cfg.p, cfg.seed);
    return cmd_verify(S, cfg, out);
  }

  const std::string kind =
      name == "brauer-table" ? "brauer" + std::to_string(cfg.local) : name;
  Json payload;
  if (!(use_cache && cache_read(cfg.cache_dir, key, kind, payload))) {
    Session S(std::move(G), cfg.p, cfg.seed);
    if (name == "brauer-table") {
      if (cfg.local < 0 || cfg.local >= S.n_locals()) {
        err << "error: --local out of range, have " << S.n_locals() << " local subquotients\n";
        return 2;
      }
      payload = brauer_payload(S, cfg);
    } else if (name == "species-table") {
      payload = species_payload(S, cfg);
    } else if (name == "idempotents") {
      payload = idempotents_payload(S, cfg);
    } else {
      payload = linmap_payload(S, cfg);
    }
    if (use_cache) cache_write(cfg.cache_dir, key, kind, payload);
  }

  if (name == "brauer-table")
    render_brauer(payload, cfg.format, out);
  else if (name == "idempotents")
    render_idempotents(payload, cfg.format, out);
  else
    render_matrix(payload, cfg.format, out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"exact species tables, idempotents and linearization data for "
               "trivial source rings"};
  app.name("tsring");
  app.require_subcommand(1);

  CLI::App* brauer =
      app.add_subcommand("brauer-table", "irreducible and projective character tables");
  add_common(brauer, cfg);
  brauer->add_option("--local", cfg.local,
                     "local subquotient index; 0 selects the trivial subgroup, "
                     "whose subquotient is the full group");
  add_common(app.add_subcommand("species-table", "species table of the trivial source ring"),
             cfg);
  add_common(app.add_subcommand("idempotents",
                                "primitive idempotent expansions, one per species"),
             cfg);
  add_common(app.add_subcommand("linmap", "matrix of the linearization map"), cfg);
  add_common(app.add_subcommand("verify", "run the full structural property mesh"), cfg);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  if (!is_prime(cfg.p)) {
    err << "error: p must be prime, got " << cfg.p << "\n";
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return run_command(name, cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrderCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace tsr
