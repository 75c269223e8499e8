#include "commtop/commtop.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct Args {
  std::string group, ext, cocycle, output = "text", fixtures;
  std::size_t max_dim = 2, denominator = 12, search_denominator = 0;
  std::uint64_t budget = 10000000;
  unsigned threads = 0;
};

int report_error(ct_status s) {
  std::fprintf(stderr, "commtop: error: %s\n", ct_last_error());
  return static_cast<int>(s);
}

// A path that exists is read as a spec file; anything else is tried as a catalog name.
template <class T>
ct_status resolve(const std::string& arg, ct_status (*load)(const char*, T**), ct_status (*catalog)(const char*, T**),
                  T** out) {
  if (std::filesystem::exists(arg)) {
    ct_status s = load(arg.c_str(), out);
    if (s != CT_OK) std::fprintf(stderr, "commtop: error: %s: %s\n", arg.c_str(), ct_last_error());
    return s;
  }
  ct_status s = catalog(arg.c_str(), out);
  if (s != CT_OK) {
    std::string msg = ct_last_error();
    std::fprintf(stderr, "commtop: error: %s: no such file, and not a catalog name (%s)\n", arg.c_str(), msg.c_str());
  }
  return s;
}

int run(const std::string& command, const Args& a) {
  ct_group* g = nullptr;
  ct_extension* e = nullptr;
  ct_cocycle* c = nullptr;
  ct_report* r = nullptr;
  auto cleanup = [&] {
    ct_report_free(r);
    ct_cocycle_free(c);
    ct_extension_free(e);
    ct_group_free(g);
  };
  ct_status s = CT_OK;
  if (!a.group.empty() && (s = resolve(a.group, ct_group_load, ct_group_catalog, &g)) != CT_OK) {
    cleanup();
    return static_cast<int>(s);
  }
  if (!a.ext.empty() && (s = resolve(a.ext, ct_extension_load, ct_extension_catalog, &e)) != CT_OK) {
    cleanup();
    return static_cast<int>(s);
  }
  if (!a.cocycle.empty()) {
    if (!e) {
      std::fprintf(stderr, "commtop: error: --cocycle needs --ext\n");
      cleanup();
      return CT_ERR_INPUT;
    }
    if ((s = ct_cocycle_load(a.cocycle.c_str(), e, &c)) != CT_OK) {
      cleanup();
      return report_error(s);
    }
  }
  ct_options o;
  ct_options_init(&o);
  o.max_dim = a.max_dim;
  o.denominator = a.denominator;
  o.search_denominator = a.search_denominator;
  o.budget = a.budget;
  o.threads = a.threads;
  if (!a.fixtures.empty()) o.fixtures_path = a.fixtures.c_str();
  s = ct_run(command.c_str(), g, e, c, &o, &r);
  if (r) std::fputs(a.output == "machine" ? ct_report_json(r) : ct_report_text(r), stdout);
  if (s != CT_OK) {
    if (!r) report_error(s);
    else std::fprintf(stderr, "commtop: %s\n", ct_last_error());
  }
  cleanup();
  return static_cast<int>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology, lattice and clutching computations for commuting tuples in finite groups and torus extensions"};
  app.require_subcommand(1);
  Args a;
  std::string chosen;
  const std::pair<const char*, const char*> commands[] = {
      {"homology-b2g", "homology of B(2,G) from commuting tuples"},
      {"homology-e2g", "reduced homology of E(2,G)"},
      {"coinvariants", "coinvariants of the augmentation ideal vs abelianization"},
      {"moore-h2", "H_2 of the Moore complex of Z[C(A)]"},
      {"pi2-e2", "pi_2(E(2,G)) for a connected G with the given pi_1"},
      {"torus-analyze", "psi table and commutator-subtorus lattices"},
      {"single-comm", "single-commutator cover of the commutator subtorus"},
      {"clutch", "validate a cocycle and compute clutching windings"},
      {"coset-poset", "coset poset of abelian subgroups and its homology"},
      {"verify-all", "run the acceptance suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--group", a.group, "group spec file or catalog name");
    sub->add_option("--ext", a.ext, "extension spec file or catalog name");
    sub->add_option("--cocycle", a.cocycle, "cocycle spec file (needs --ext)");
    sub->add_option("--max-dim", a.max_dim, "top homological degree")->capture_default_str();
    sub->add_option("--denominator", a.denominator, "N for single-comm")->capture_default_str();
    sub->add_option("--search-denominator", a.search_denominator, "M for single-comm, 0 = N|F|");
    sub->add_option("--budget", a.budget, "enumeration cap")->capture_default_str();
    sub->add_option("--threads", a.threads, "verify-all workers, 0 = all cores");
    sub->add_option("--output", a.output, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    sub->add_option("--fixtures", a.fixtures, "regression fixture file")->check(CLI::ExistingFile);
    sub->callback([&chosen, name = std::string(name)] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : CT_ERR_INPUT;
  }
  return run(chosen, a);
}
