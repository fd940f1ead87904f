// lorentz-cli: classify, print tables, verify, export Gram matrices.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lorentz/classifier.hpp"
#include "lorentz/lattices.hpp"
#include "lorentz/norm0.hpp"
#include "lorentz/tables.hpp"
#include "lorentz/verify.hpp"

using namespace lorentz;

namespace {

struct RunConfig {
  std::string db;
  int norm = 2;
  std::string format = "tsv";
  int threads = 1;
  bool no_count_check = false;
  std::string suite;
  std::string orbit;
  std::uint64_t seed = 1;
  bool quiet = false;
};

std::string default_db() {
  const char* env = std::getenv("LORENTZ_DB");
  return env && *env ? env : "lorentz-db";
}

ClassifyOptions options(const RunConfig& c) {
  ClassifyOptions o;
  o.seed = c.seed;
  if (!c.quiet) o.log = [](const std::string& s) { std::cerr << s << '\n'; };
  return o;
}

OrbitStore norm2_store(const RunConfig& c) {
  return load_or_classify(2, c.db, nullptr, options(c), !c.no_count_check);
}

OrbitStore norm4_store(const RunConfig& c, OrbitStore& n2) {
  return load_or_classify(4, c.db, &n2, options(c), !c.no_count_check);
}

std::vector<Norm4Profile> profiles(const OrbitStore& s) {
  std::vector<Norm4Profile> out;
  out.reserve(s.size());
  for (const OrbitRecord& r : s.records()) out.push_back(neighbors(r.rep));
  return out;
}

int cmd_classify(const RunConfig& c) {
  if (c.norm != 2 && c.norm != 4) throw CLI::ValidationError("--norm", "classify takes norm 2 or 4");
  OrbitStore n2 = norm2_store(c);
  if (c.norm == 2) {
    std::cerr << n2.size() << " norm-2 orbits in " << c.db << '\n';
    return 0;
  }
  OrbitStore n4 = norm4_store(c, n2);
  std::cerr << n4.size() << " norm-4 orbits in " << c.db << '\n';
  return 0;
}

int cmd_table(const RunConfig& c) {
  const bool as_json = c.format == "json";
  if (c.norm == 0) {
    const auto rows = norm0_rows();
    std::cout << (as_json ? json(rows) + "\n" : tsv(rows));
    return 0;
  }
  OrbitStore n2 = norm2_store(c);
  if (c.norm == 2) {
    std::vector<Norm2Row> rows;
    for (const OrbitRecord& r : n2.records()) rows.push_back(norm2_row(r));
    std::cout << (as_json ? json(rows) + "\n" : tsv(rows));
    return 0;
  }
  OrbitStore n4 = norm4_store(c, n2);
  std::vector<Norm4Row> rows;
  for (const OrbitRecord& r : n4.records()) rows.push_back(norm4_row(r, neighbors(r.rep)));
  std::cout << (as_json ? json(rows) + "\n" : tsv(rows));
  return 0;
}

int cmd_verify(const RunConfig& c) {
  Report rep;
  if (c.suite == "leech") {
    rep = verify_leech();
  } else if (c.suite == "table0") {
    rep = verify_table0();
  } else if (c.suite == "rootless26") {
    Rootless26 out;
    rep = verify_rootless26(&out);
    std::cout << gram_text(out.gram);
  } else {
    OrbitStore n2 = norm2_store(c);
    rep = verify_norm2(n2);
    OrbitStore n4 = norm4_store(c, n2);
    Report r4 = verify_norm4(n4, n2, profiles(n4));
    for (Check& k : r4.checks) rep.checks.push_back(std::move(k));
    for (std::string& n : r4.notes) rep.notes.push_back(std::move(n));
  }
  (rep.ok() ? std::cout : std::cerr) << rep.text();
  return rep.ok() ? 0 : 1;
}

// ids: "n2:K", "n4:K", "rootless26"
int cmd_gram(const RunConfig& c) {
  if (c.orbit == "rootless26") {
    std::cout << gram_text(rootless26_gram(weyl_vector() + norm0_rep("A_4^6").z));
    return 0;
  }
  OrbitStore n2 = norm2_store(c);
  const OrbitStore* store = &n2;
  OrbitStore n4(4);
  if (c.orbit.rfind("n4:", 0) == 0) {
    n4 = norm4_store(c, n2);
    store = &n4;
  }
  for (const OrbitRecord& r : store->records()) {
    if (r.key != c.orbit) continue;
    // u-perp for norm 2; the odd unimodular A for norm 4
    std::cout << gram_text(store->norm() == 2 ? perp_gram(r.rep).form : unimodular_from(r.rep).lattice.form);
    return 0;
  }
  std::cerr << "no orbit " << c.orbit << " in " << c.db << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of positive-norm vectors in II(1,25)"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.db = default_db();
  app.add_option("--db", cfg.db, "orbit database directory (default $LORENTZ_DB or ./lorentz-db)");
  app.add_flag("--no-count-check", cfg.no_count_check, "accept orbit counts other than 121 / 665");
  app.add_flag("-q,--quiet", cfg.quiet, "no progress log");
  app.add_option("--seed", cfg.seed, "seed for stabilizer sampling");

  auto* classify = app.add_subcommand("classify", "build the norm-2 or norm-4 orbit database (resumable)");
  classify->add_option("--norm", cfg.norm)->required()->check(CLI::IsMember({2, 4}));
  classify->add_option("--db", cfg.db);
  classify->add_option("--threads", cfg.threads, "accepted for compatibility; the run is single-threaded")
      ->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "print an orbit table sorted by height");
  table->add_option("--norm", cfg.norm)->required()->check(CLI::IsMember({0, 2, 4}));
  table->add_option("--format", cfg.format)->check(CLI::IsMember({"tsv", "json"}));
  table->add_option("--db", cfg.db);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite)
      ->required()
      ->check(CLI::IsMember({"leech", "table0", "identities", "rootless26"}));
  verify->add_option("--db", cfg.db);

  auto* gram = app.add_subcommand("gram", "print a Gram matrix: n, then n rows");
  gram->add_option("--orbit", cfg.orbit, "n2:K, n4:K or rootless26")->required();
  gram->add_option("--db", cfg.db);

  CLI11_PARSE(app, argc, argv);
  try {
    if (classify->parsed()) return cmd_classify(cfg);
    if (table->parsed()) return cmd_table(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (gram->parsed()) return cmd_gram(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
