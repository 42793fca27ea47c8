// Acceptance gate: one PASS/FAIL line per criterion, aggregated over a fixed
// zoo of (group, p) instances. Exits nonzero when any criterion fails.

#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "tsr/constructions.hpp"
#include "tsr/tsring.hpp"
#include "tsr/verify.hpp"

namespace {

struct Instance {
  std::string label;
  tsr::Session S;
  tsr::SpeciesTable N;
  tsr::CycloMatrix Ninv;

  Instance(const std::string& spec, int64_t p)
      : label(spec + " p=" + std::to_string(p)),
        S(tsr::parse_group_spec(spec), p, 0),
        N(tsr::matrix_N(S)),
        Ninv(tsr::matrix_Ninv(S)) {}
};

using Zoo = std::vector<std::unique_ptr<Instance>>;
using Check = std::function<tsr::PropertyResult(const Instance&)>;

bool criterion(const std::string& name, const Zoo& zoo, const Check& fn) {
  std::string failures;
  for (const std::unique_ptr<Instance>& inst : zoo) {
    tsr::PropertyResult r = fn(*inst);
    if (r.pass) continue;
    if (!failures.empty()) failures += "; ";
    failures += inst->label;
    if (!r.detail.empty()) failures += " (" + r.detail + ")";
  }
  if (failures.empty()) {
    std::cout << "PASS " << name << "\n";
    return true;
  }
  std::cout << "FAIL " << name << ": " << failures << "\n";
  return false;
}

tsr::PropertyResult both(tsr::PropertyResult a, tsr::PropertyResult b) {
  return a.pass ? b : a;
}

bool expect(bool ok, std::string& log, const std::string& what) {
  if (!ok) {
    if (!log.empty()) log += "; ";
    log += what;
  }
  return ok;
}

// Hand-checked smallest cases, kept independent of the generic property mesh.
bool micro_instances(std::string& log) {
  using tsr::Cyclo;
  using tsr::Rat;
  for (int64_t p : {int64_t{2}, int64_t{3}}) {
    const std::string tag = "C" + std::to_string(p) + " p=" + std::to_string(p);
    tsr::Session S(tsr::cyclic_group(static_cast<int>(p)), p, 0);
    if (!expect(S.size() == 2, log, tag + " size")) continue;
    tsr::SpeciesTable t = tsr::matrix_N(S);
    bool n_ok = t.N.at(0, 0) == Cyclo(Rat(p)) && t.N.at(0, 1) == Cyclo(Rat(1)) &&
                t.N.at(1, 0) == Cyclo(Rat(0)) && t.N.at(1, 1) == Cyclo(Rat(1));
    expect(n_ok, log, tag + " table");
    tsr::IdempotentExpansion top = tsr::idempotent(S, S.species()[0]);
    tsr::IdempotentExpansion bot = tsr::idempotent(S, S.species()[1]);
    bool e_ok = top.coeffs[0] == Cyclo(Rat(1, p)) && top.coeffs[1] == Cyclo(Rat(0)) &&
                bot.coeffs[0] == Cyclo(Rat(-1, p)) && bot.coeffs[1] == Cyclo(Rat(1));
    expect(e_ok, log, tag + " idempotents");
  }

  tsr::Session s3(tsr::parse_group_spec("S3"), 3, 0);
  tsr::SpeciesTable t = tsr::matrix_N(s3);
  bool block_ok = t.N.at(0, 0) == Cyclo(Rat(3)) && t.N.at(0, 1) == Cyclo(Rat(3)) &&
                  t.N.at(1, 0) == Cyclo(Rat(1)) && t.N.at(1, 1) == Cyclo(Rat(-1));
  expect(block_ok, log, "S3 p=3 top block");
  return log.empty();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, int64_t>> plan = {
      {"C2", 2},  {"C3", 3},  {"C4", 2},  {"C6", 2},  {"C6", 3},    {"klein4", 2},
      {"S3", 2},  {"S3", 3},  {"D8", 2},  {"Q8", 2},  {"D10", 2},   {"D10", 5},
      {"A4", 2},  {"A4", 3},  {"C3xC3", 3}, {"S4", 2}, {"S4", 3}};

  Zoo zoo;
  for (const auto& [spec, p] : plan) {
    try {
      zoo.push_back(std::make_unique<Instance>(spec, p));
    } catch (const std::exception& e) {
      std::cout << "FAIL setup: " << spec << " p=" << p << " (" << e.what() << ")\n";
      return 1;
    }
  }

  bool ok = true;
  ok &= criterion("01 species table inverts exactly", zoo, [](const Instance& i) {
    return tsr::check_inversion(i.N, i.Ninv);
  });
  ok &= criterion("02 idempotent expansions match the inverse columns", zoo,
                  [](const Instance& i) { return tsr::check_idempotent_columns(i.S, i.Ninv); });
  ok &= criterion("03 species act as delta functions on the idempotents", zoo,
                  [](const Instance& i) { return tsr::check_species_delta(i.S, i.N); });
  ok &= criterion("04 table agrees with the module-theoretic species oracle", zoo,
                  [](const Instance& i) { return tsr::check_oracle_equality(i.S, i.N); });
  ok &= criterion("05 double-sum form of the table agrees entrywise", zoo,
                  [](const Instance& i) { return tsr::check_alt_equality(i.S, i.N); });
  ok &= criterion("06 block triangularity with projective diagonal blocks", zoo,
                  [](const Instance& i) {
                    return both(tsr::check_triangularity(i.S, i.N, i.Ninv),
                                tsr::check_diagonal_blocks(i.S, i.N, i.Ninv));
                  });
  ok &= criterion("07 frattini vanishing and mobius support law", zoo, [](const Instance& i) {
    return both(tsr::check_frattini_support(i.S), tsr::check_mobius_frattini(i.S));
  });
  ok &= criterion("08 mobius values match euler characteristics and recurrences", zoo,
                  [](const Instance& i) {
                    return both(tsr::check_mobius_euler(i.S), tsr::check_mobius_recurrences(i.S));
                  });
  ok &= criterion("09 linearization rows match direct species of induced modules", zoo,
                  [](const Instance& i) { return tsr::check_linearization(i.S, i.N); });

  {
    std::string log;
    bool micro = micro_instances(log);
    if (micro)
      std::cout << "PASS 10 hand-worked small cases reproduce pinned values\n";
    else
      std::cout << "FAIL 10 hand-worked small cases reproduce pinned values: " << log << "\n";
    ok &= micro;
  }

  ok &= criterion("11 local projective character tables invert and count simples", zoo,
                  [](const Instance& i) { return tsr::check_brauer_sanity(i.S); });

  return ok ? 0 : 1;
}
