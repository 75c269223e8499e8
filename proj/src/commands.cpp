#include "commtop/commands.hpp"

#include "commtop/coset_poset.hpp"
#include "commtop/error.hpp"
#include "commtop/group_ring.hpp"
#include "commtop/simplicial.hpp"

#include <json.hpp>

#include <algorithm>

namespace commtop {

namespace {

using json = nlohmann::ordered_json;

json big_json(const BigInt& b) {
  if (b.fits_slong_p()) return b.get_si();
  return b.get_str();
}

json invariants_json(const AbelianGroupInvariants& a) {
  json t = json::array();
  for (const auto& d : a.torsion) t.push_back(big_json(d));
  return json{{"free_rank", a.free_rank}, {"torsion", t}};
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(big_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json lattice_json(const Lattice& l) {
  json cols = json::array();
  for (std::size_t j = 0; j < l.rank(); ++j) {
    json c = json::array();
    for (std::size_t i = 0; i < l.ambient(); ++i) c.push_back(big_json(l.basis()(i, j)));
    cols.push_back(std::move(c));
  }
  return json{{"ambient", l.ambient()}, {"basis", cols}};
}

json rational_vector_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_rational(x));
  return a;
}

json element_json(const ExtElement& x, const FiniteGroup& f) {
  return json{{"t", rational_vector_json(x.t)}, {"f", f.name(x.f)}};
}

// "(2)" for 1x1, "(2 0; 0 0)" otherwise.
std::string matrix_text(const IntMatrix& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += m(i, j).get_str();
    }
  }
  return s + ")";
}

void add(Report& r, std::string key, std::string text, const json& value, std::string ref, std::string status = {}) {
  r.rows.push_back({std::move(key), std::move(text), value.dump(), std::move(ref), std::move(status)});
}

void add_check(Report& r, std::string key, bool pass, std::string text, std::string ref) {
  add(r, std::move(key), std::move(text), json(pass), std::move(ref), pass ? "pass" : "fail");
  if (!pass) r.ok = false;
}

const FiniteGroup& need_group(const CommandInputs& in, std::string_view cmd) {
  if (!in.group) throw InvalidArgument(std::string(cmd) + " needs --group");
  return *in.group;
}

const TorusExtension& need_extension(const CommandInputs& in, std::string_view cmd) {
  if (!in.extension) throw InvalidArgument(std::string(cmd) + " needs --ext");
  return *in.extension;
}

std::string group_label(const FiniteGroup& g) {
  return g.label().empty() ? "group of order " + std::to_string(g.order()) : g.label();
}

std::string extension_label(const TorusExtension& e) {
  return e.label().empty() ? "extension of rank " + std::to_string(e.rank()) : e.label();
}

Report start(std::string_view cmd, std::string subject, const CommandInputs& in) {
  Report r;
  r.command = std::string(cmd);
  r.subject = std::move(subject);
  r.inputs.emplace_back("budget", std::to_string(in.budget));
  return r;
}

Report homology_b2g(const CommandInputs& in) {
  const auto& g = need_group(in, "homology-b2g");
  Report r = start("homology-b2g", group_label(g), in);
  r.inputs.emplace_back("max_dim", std::to_string(in.max_dim));
  auto c = build_c(g, in.max_dim + 1, in.budget);
  for (std::size_t k = 0; k <= c.max_degree(); ++k)
    add(r, "|C_" + std::to_string(k) + "|", std::to_string(c.level(k).size()), c.level(k).size(),
        "commuting k-tuples of G");
  auto h = homology_range(c, in.max_dim);
  for (std::size_t k = 0; k < h.size(); ++k)
    add(r, "H_" + std::to_string(k), to_string(h[k]), invariants_json(h[k]),
        "homology of B(2,G) from the normalized commuting-tuple complex");
  return r;
}

Report homology_e2g(const CommandInputs& in) {
  const auto& g = need_group(in, "homology-e2g");
  Report r = start("homology-e2g", group_label(g), in);
  r.inputs.emplace_back("max_dim", std::to_string(in.max_dim));
  auto e = build_e(g, in.max_dim + 1, in.budget);
  for (std::size_t k = 0; k <= e.max_degree(); ++k)
    add(r, "|E_" + std::to_string(k) + "|", std::to_string(e.level(k).size()), e.level(k).size(),
        "affinely commutative (k+1)-tuples of G");
  auto h = homology_range(e, in.max_dim);
  h[0] = reduce_degree_zero(h[0]);
  bool acyclic = true;
  for (std::size_t k = 0; k < h.size(); ++k) {
    acyclic = acyclic && h[k].is_trivial();
    add(r, "reduced H_" + std::to_string(k), to_string(h[k]), invariants_json(h[k]),
        "reduced homology of E(2,G), the homotopy fiber of B(2,G) -> BG");
  }
  add(r, "acyclic through max_dim", acyclic ? "yes" : "no", acyclic, "E(2,G) is contractible iff G is abelian");
  return r;
}

Report coinvariants_cmd(const CommandInputs& in) {
  const auto& g = need_group(in, "coinvariants");
  Report r = start("coinvariants", group_label(g), in);
  auto w = coinvariants(g);
  auto ab = abelianization(g);
  add(r, "W_A", to_string(w), invariants_json(w), "coinvariants of the augmentation ideal under A");
  add(r, "abelianization", to_string(ab), invariants_json(ab), "A/[A,A]");
  add_check(r, "W_A = abelianization", w == ab, w == ab ? "yes" : "no",
            "coinvariants lemma: W_A is the abelianization");
  return r;
}

Report moore_h2_cmd(const CommandInputs& in) {
  const auto& g = need_group(in, "moore-h2");
  Report r = start("moore-h2", group_label(g), in);
  auto h = moore_h2(g, in.budget);
  add(r, "H_2", to_string(h), invariants_json(h), "H_2 of the Moore complex of Z[C(A)] at Z[A]");
  auto w = coinvariants(g);
  add_check(r, "H_2 = W_A", h == w, to_string(w), "H_2 is precisely the group of coinvariants");
  if (g.is_abelian()) {
    auto a = abelian_invariants(g);
    add_check(r, "H_2 = A", h == a, to_string(a), "for abelian A the Moore-complex H_2 recovers A");
  }
  return r;
}

Report pi2_e2_cmd(const CommandInputs& in) {
  const auto& g = need_group(in, "pi2-e2");
  if (!g.is_abelian()) throw InvalidArgument("pi2-e2 takes pi_1 as an abelian group; " + group_label(g) +
                                             " is not abelian");
  Report r = start("pi2-e2", group_label(g), in);
  auto pi1 = abelian_invariants(g);
  add(r, "pi_1", to_string(pi1), invariants_json(pi1), "fundamental group of the connected Lie group");
  auto pi2 = pi2_e2_connected(pi1, in.budget);
  add(r, "pi_2(E(2,G))", to_string(pi2), invariants_json(pi2), "pi_2 of E(2,G) is pi_1(G) for connected G");
  return r;
}

Report torus_analyze(const CommandInputs& in) {
  const auto& e = need_extension(in, "torus-analyze");
  const FiniteGroup& f = e.finite();
  Report r = start("torus-analyze", extension_label(e), in);
  add(r, "rank", std::to_string(e.rank()), e.rank(), "dimension of the maximal torus");
  add(r, "|F|", std::to_string(f.order()), f.order(), "order of the finite quotient");
  add(r, "|Z|", std::to_string(e.central_subgroup().size()), e.central_subgroup().size(),
      "central subgroup divided out of the split extension");
  for (Element q = 0; q < f.order(); ++q) {
    IntMatrix m = psi_star(e, q);
    add(r, "psi_*(" + f.name(q) + ")", matrix_text(m), matrix_json(m),
        "psi(q) on pi_1(T): identity minus rho(q^-1)");
  }
  auto lat = commutator_lattices(e);
  add(r, "sum", to_string(lat.sum), lattice_json(lat.sum), "sum of the images of psi_*(q)");
  add(r, "subtorus", to_string(lat.subtorus), lattice_json(lat.subtorus),
      "pi_1 of the commutator subtorus [G,G]_0");
  add(r, "index", lat.sum.index_in_saturation().get_str(), big_json(lat.sum.index_in_saturation()),
      "index of the sum in its saturation");
  auto split = pi1_split(e);
  add(r, "complement", to_string(split.complement), lattice_json(split.complement),
      "primitive complement of the subtorus lattice in pi_1(T)");
  return r;
}

Report single_comm(const CommandInputs& in) {
  const auto& e = need_extension(in, "single-comm");
  const FiniteGroup& f = e.finite();
  Report r = start("single-comm", extension_label(e), in);
  r.inputs.emplace_back("denominator", std::to_string(in.denominator));
  auto cover = single_commutator_cover(e, in.denominator, in.search_denominator, in.budget);
  r.inputs.emplace_back("search_denominator", std::to_string(cover.search_denominator));
  const char* ref = "every element of the commutator subtorus is a single commutator";
  add(r, "covered", cover.covered ? "yes" : "not found within budget", cover.covered, ref);
  add(r, "targets", std::to_string(cover.target_count), cover.target_count,
      "denominator-N points of the commutator subtorus");
  add(r, "found", std::to_string(cover.found_count), cover.found_count, ref);
  add(r, "pairs examined", std::to_string(cover.pairs_examined), cover.pairs_examined, "search effort");
  json ws = json::array();
  // Targets lie in T; show them by their torus coordinates.
  auto target_text = [&](const ExtElement& t) {
    auto p = e.torus_part(t);
    return p ? vector_to_string(*p) : to_string(t, f);
  };
  auto target_json = [&](const ExtElement& t) -> json {
    auto p = e.torus_part(t);
    return p ? rational_vector_json(*p) : element_json(t, f);
  };
  for (const auto& w : cover.witnesses)
    ws.push_back(json{{"target", target_json(w.target)}, {"x", element_json(w.x, f)}, {"y", element_json(w.y, f)}});
  std::string wtext = std::to_string(cover.witnesses.size()) + " witnesses";
  if (!cover.witnesses.empty()) {
    const auto& w = cover.witnesses.back();
    wtext += ", e.g. " + target_text(w.target) + " = [" + to_string(w.x, f) + ", " + to_string(w.y, f) + "]";
  }
  add(r, "witnesses", wtext, ws, "explicit pairs with target = [x, y]");
  json miss = json::array();
  for (const auto& m : cover.missing) miss.push_back(target_json(m));
  add(r, "missing", std::to_string(cover.missing.size()), miss, "targets without a witness at this search denominator");
  return r;
}

std::string winding_text(const ClutchResult& c) {
  return c.identity_component ? vector_to_string(c.winding) : c.marker;
}

json winding_json(const ClutchResult& c) {
  if (!c.identity_component) return c.marker;
  return rational_vector_json(c.winding);
}

Report clutch_cmd(const CommandInputs& in) {
  const auto& e = need_extension(in, "clutch");
  if (!in.cocycle) throw InvalidArgument("clutch needs --cocycle");
  const PatchCocycle& c = *in.cocycle;
  const FiniteGroup& f = e.finite();
  Report r = start("clutch", extension_label(e), in);
  auto diag = validate(e, c);
  for (const auto& chk : diag.checks)
    add_check(r, chk.location + ": " + chk.condition, chk.pass, chk.pass ? "holds" : chk.detail,
              "commutative cocycle condition at a triple point");
  if (!diag.ok) return r;
  auto forward = clutch(e, c);
  add(r, "loop", to_string(forward.loop, f), json(to_string(forward.loop, f)),
      "clutching function: a12*a23 forward, a13 reversed");
  add(r, "winding", winding_text(forward), winding_json(forward), "class of the clutching function in pi_1(G_0)");
  auto backward = clutch(e, invert(e, c));
  add(r, "winding of inverse", winding_text(backward), winding_json(backward),
      "clutching function of the pointwise inverse cocycle");
  if (forward.identity_component && backward.identity_component) {
    RationalVector sum(e.rank());
    std::vector<BigInt> ints;
    bool integral = true;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      sum[i] = forward.winding[i] + backward.winding[i];
      integral = integral && sum[i].get_den() == 1;
      ints.push_back(sum[i].get_num());
    }
    auto lat = commutator_lattices(e);
    bool in_lattice = integral && lat.sum.contains(ints);
    add(r, "winding sum", vector_to_string(sum), rational_vector_json(sum), "sum of the two clutching classes");
    add_check(r, "winding sum in psi lattice", in_lattice, to_string(lat.sum),
              "the sum lies in the lattice spanned by the psi_*(q) images");
  }
  return r;
}

Report coset_poset_cmd(const CommandInputs& in) {
  const auto& g = need_group(in, "coset-poset");
  Report r = start("coset-poset", group_label(g), in);
  r.inputs.emplace_back("max_dim", std::to_string(in.max_dim));
  auto p = coset_poset(g, true, in.budget);
  const char* ref = "coset poset of abelian subgroups, a model of E(2,G)";
  add(r, "abelian subgroups", std::to_string(p.subgroups.size()), p.subgroups.size(), ref);
  add(r, "cosets", std::to_string(p.cosets.size()), p.cosets.size(), ref);
  add(r, "relations", std::to_string(p.relation_count()), p.relation_count(), ref);
  auto h = coset_poset_homology(g, in.max_dim, true, in.budget);
  for (std::size_t k = 0; k < h.size(); ++k)
    add(r, "reduced H_" + std::to_string(k), to_string(h[k]), invariants_json(h[k]),
        "reduced homology of the order complex");
  return r;
}

Report verify_all_cmd(const CommandInputs& in) {
  Report r = start("verify-all", "acceptance suite", in);
  // Timings vary run to run, so they stay out of the report.
  for (const auto& c : verify_all(in.budget, in.threads)) {
    add_check(r, std::to_string(c.id) + ". " + c.name, c.pass, c.detail, c.ref);
    r.rows.back().value_json = json{{"pass", c.pass}, {"detail", c.detail}}.dump();
  }
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"homology-b2g", "homology-e2g", "coinvariants", "moore-h2",
                                              "pi2-e2",       "torus-analyze", "single-comm", "clutch",
                                              "coset-poset",  "verify-all"};
  return names;
}

Report run_command(std::string_view command, const CommandInputs& in) {
  Report r;
  if (command == "homology-b2g") r = homology_b2g(in);
  else if (command == "homology-e2g") r = homology_e2g(in);
  else if (command == "coinvariants") r = coinvariants_cmd(in);
  else if (command == "moore-h2") r = moore_h2_cmd(in);
  else if (command == "pi2-e2") r = pi2_e2_cmd(in);
  else if (command == "torus-analyze") r = torus_analyze(in);
  else if (command == "single-comm") r = single_comm(in);
  else if (command == "clutch") r = clutch_cmd(in);
  else if (command == "coset-poset") r = coset_poset_cmd(in);
  else if (command == "verify-all") r = verify_all_cmd(in);
  else throw InvalidArgument("unknown command \"" + std::string(command) + "\"");
  if (!in.fixtures.empty()) apply_fixtures(r, in.fixtures);
  return r;
}

void apply_fixtures(Report& r, std::string_view fixtures) {
  json doc;
  try {
    doc = json::parse(fixtures);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("fixtures: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("pins") || !doc["pins"].is_object())
    throw ParseError("fixtures.pins: missing or not an object");
  const std::string key = r.command + " " + r.subject;
  auto it = doc["pins"].find(key);
  if (it == doc["pins"].end()) return;
  if (!it->is_object()) throw ParseError("fixtures.pins." + key + ": expected an object");
  for (auto pin = it->begin(); pin != it->end(); ++pin) {
    auto row = std::find_if(r.rows.begin(), r.rows.end(), [&](const ReportRow& x) { return x.key == pin.key(); });
    if (row == r.rows.end()) {
      r.rows.push_back({pin.key(), "missing from report", pin.value().dump(), "regression fixture", "fail"});
      r.ok = false;
      continue;
    }
    if (json::parse(row->value_json) == pin.value()) {
      if (row->status.empty() || row->status == "pass") row->status = "pinned";
    } else {
      row->text += " (fixture: " + pin.value().dump() + ")";
      row->status = "fail";
      r.ok = false;
    }
  }
}

}  // namespace commtop
