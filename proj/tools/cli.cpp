#include "fusionlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "fusionlab/modcat.hpp"
#include "fusionlab/tambara_yamagami.hpp"

namespace fusionlab::cli {

namespace {

struct Config {
  GroupPtr g;
  Subgroup k;
};

Config configuration(int p) {
  auto g = make_direct_product(*make_dihedral(2 * p), *make_cyclic(p));
  const int rz = *g->find_label("(r1,1)");
  return {g, Subgroup::generated(g, std::vector<int>{rz})};
}

nlohmann::json labels_of(const Subgroup& h) {
  nlohmann::json out = nlohmann::json::array();
  for (int x : h.members()) out.push_back(h.parent()->label(x));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::pair<long, int>> expected_profile(int p) {
  return {{1, 2 * p}, {2, p * (p - 1) / 2}, {static_cast<long>(p), 2}};
}

std::string profile_str(const std::vector<std::pair<long, int>>& prof) {
  std::vector<std::string> parts;
  for (const auto& [d, c] : prof) parts.push_back(std::to_string(d) + "x" + std::to_string(c));
  return join(parts, " ");
}

std::optional<int> class_of(const ModCatDescriptor& d) {
  try {
    return h2_class_index(d.mu, h2_representatives(d.subgroup.as_group()));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

nlohmann::json modcat_entry(const ModCatDescriptor& d, int rank) {
  auto c = class_of(d);
  return {{"subgroup", labels_of(d.subgroup)},
          {"subgroup_order", d.subgroup.order()},
          {"mu_class", c ? nlohmann::json(*c) : nlohmann::json()},
          {"rank", rank}};
}

std::vector<std::pair<ModCatDescriptor, int>> sorted_modcats(const Config& c) {
  auto ranks = pointed_modcat_ranks(make_descriptor(c.g, c.k));
  std::stable_sort(ranks.begin(), ranks.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first.subgroup.members() < y.first.subgroup.members();
  });
  return ranks;
}

GroupPtr parse_group(const std::string& spec) {
  GroupPtr g;
  std::stringstream ss(spec);
  std::string factor;
  while (std::getline(ss, factor, 'x')) {
    if (factor.size() < 2 || (factor[0] != 'Z' && factor[0] != 'D'))
      throw UsageError("bad group factor '" + factor + "'");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(factor.substr(1), &used);
      if (used + 1 != factor.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("bad group factor '" + factor + "'");
    }
    if (n < 1 || (factor[0] == 'D' && n % 2)) throw UsageError("bad group factor '" + factor + "'");
    GroupPtr f = factor[0] == 'Z' ? make_cyclic(n) : make_dihedral(n);
    g = g ? make_direct_product(*g, *f) : f;
  }
  if (!g) throw UsageError("empty group spec");
  if (g->order() > kMaxGroupOrder) throw UsageError("group order above cap");
  return g;
}

ModCatDescriptor parse_descriptor(const GroupPtr& g, const std::string& spec) {
  std::stringstream ss(spec);
  std::string tok;
  std::vector<int> gens;
  std::optional<int> mu;
  while (ss >> tok) {
    if (tok.rfind("mu=", 0) == 0) {
      try {
        mu = std::stoi(tok.substr(3));
      } catch (const std::exception&) {
        throw UsageError("bad multiplier '" + tok + "'");
      }
      continue;
    }
    if (tok == "e") continue;
    auto x = g->find_label(tok);
    if (!x) throw UsageError("unknown element '" + tok + "'");
    gens.push_back(*x);
  }
  auto h = Subgroup::generated(g, gens);
  if (!mu) return make_descriptor(g, h);
  try {
    return make_descriptor(g, h, canonical_cocycle(h.as_group(), *mu));
  } catch (const std::exception& e) {
    throw UsageError(std::string("multiplier class unavailable: ") + e.what());
  }
}

Section run_section(const std::string& name, const std::function<bool(Section&)>& body) {
  Section s{name, "fail", nlohmann::json::object(), 0, ""};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    s.status = body(s) ? "pass" : "fail";
  } catch (const std::exception& e) {
    s.status = "fail";
    s.payload["error"] = e.what();
    s.summary = std::string("error: ") + e.what();
  }
  s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

}  // namespace

bool Report::pass() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.status != "fail"; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json secs = nlohmann::json::array();
  for (const auto& s : sections)
    secs.push_back({{"name", s.name}, {"status", s.status}, {"payload", s.payload}, {"elapsed_ms", s.elapsed_ms}});
  return {{"schema", 1}, {"p", p}, {"sections", secs}, {"overall", pass() ? "pass" : "fail"}};
}

void check_prime(int p, int max_group_order) {
  if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime, got " + std::to_string(p));
  if (2L * p * p > max_group_order)
    throw UsageError("|G| = 2p^2 = " + std::to_string(2L * p * p) + " exceeds the group order cap " +
                     std::to_string(max_group_order));
}

Report cmd_verify(const VerifyOptions& opt) {
  check_prime(opt.p, opt.max_group_order);
  const int p = opt.p;
  Report rep;
  rep.p = p;
  const Config cfg = configuration(p);
  const TYData ty = canonical_ty(p, opt.tau_sign);
  std::optional<int> violations;

  rep.sections.push_back(run_section("groups", [&](Section& s) {
    const bool ok = cfg.g->order() == 2 * p * p && cfg.k.order() == p && !is_normal(cfg.g, cfg.k) &&
                    ty.a->order() == p * p;
    s.payload = {{"G_order", cfg.g->order()}, {"K", labels_of(cfg.k)}, {"K_normal", is_normal(cfg.g, cfg.k)},
                 {"A_order", ty.a->order()}};
    s.summary = "G = D_" + std::to_string(2 * p) + " x Z/" + std::to_string(p) + " of order " +
                std::to_string(cfg.g->order()) + ", K = <(r1,1)> of order " + std::to_string(cfg.k.order()) +
                (is_normal(cfg.g, cfg.k) ? " (normal)" : " (not normal)");
    return ok;
  }));

  rep.sections.push_back(run_section("pointed_modcats", [&](Section& s) {
    auto ranks = sorted_modcats(cfg);
    nlohmann::json list = nlohmann::json::array();
    std::vector<int> got;
    std::vector<std::string> strs;
    for (const auto& [d, r] : ranks) {
      list.push_back(modcat_entry(d, r));
      got.push_back(r);
      strs.push_back(std::to_string(r));
    }
    s.payload = {{"descriptors", list}, {"ranks", got}};
    s.summary = std::to_string(ranks.size()) + " pointed module categories over the dual of Vec_G w.r.t. M(K,1), ranks " +
                join(strs, " ");
    return got == std::vector<int>{2 * p, 2 * p, 2, 2};
  }));

  rep.sections.push_back(run_section("census", [&](Section& s) {
    const auto dk = make_descriptor(cfg.g, cfg.k);
    const int rank = rank_functor_category(dk, dk);
    std::map<mpq_class, int> dual_dims, ring_dims;
    for (const auto& x : dual_simples(dk).simples) {
      if (!x.fp_dim) throw std::runtime_error("dual simple without FP dimension");
      ++dual_dims[*x.fp_dim];
    }
    auto fp = fp_dims(ty_ring(ty.a));
    if (!fp.exact) throw std::runtime_error("TY ring dimensions are not exact");
    for (const auto& d : *fp.exact) {
      if (d.radicand != 1) throw std::runtime_error("irrational TY ring dimension");
      ++ring_dims[d.coeff];
    }
    const std::map<mpq_class, int> expected{{mpq_class(1), p * p}, {mpq_class(p), 1}};
    nlohmann::json dd = nlohmann::json::array(), rd = nlohmann::json::array();
    for (const auto& [d, c] : dual_dims) dd.push_back({d.get_str(), c});
    for (const auto& [d, c] : ring_dims) rd.push_back({d.get_str(), c});
    s.payload = {{"rank_KK", rank}, {"dual_dims", dd}, {"ty_ring_dims", rd}};
    s.summary = "rank of Fun(M(K,1), M(K,1)) = " + std::to_string(rank) + "; dual has " + std::to_string(p * p) +
                " simples of dim 1 and one of dim " + std::to_string(p) + ", matching the TY ring: " +
                (dual_dims == ring_dims ? "yes" : "no");
    return rank == p * p + 1 && dual_dims == expected && ring_dims == expected;
  }));

  if (opt.skip_pentagon) {
    Section s{"pentagon", "skipped", {{"tau_sign", opt.tau_sign > 0 ? "+" : "-"}}, 0, "pentagon check skipped"};
    rep.sections.push_back(s);
  } else {
    rep.sections.push_back(run_section("pentagon", [&](Section& s) {
      const auto fs = f_symbols(ty);
      const auto v = pentagon_check(fs);
      violations = static_cast<int>(v.size());
      nlohmann::json first = nlohmann::json::array();
      for (std::size_t i = 0; i < v.size() && i < 10; ++i) first.push_back(to_json(v[i], fs.ring()));
      s.payload = {{"tau_sign", opt.tau_sign > 0 ? "+" : "-"}, {"violations", v.size()}, {"first_violations", first}};
      s.summary = std::to_string(v.size()) + " pentagon violations for TY((Z/" + std::to_string(p) + ")^2, chi, " +
                  (opt.tau_sign > 0 ? "+" : "-") + "1/" + std::to_string(p) + ")";
      return v.empty();
    }));
  }

  const GroupMorphism t = swap_automorphism(ty);
  rep.sections.push_back(run_section("t_permutation", [&](Section& s) {
    const auto aut = aut_chi(ty);
    const bool in_aut = std::any_of(aut.begin(), aut.end(), [&](const auto& g) { return g.image == t.image; });
    const bool invariant = action_invariance_check(ty, t);
    const auto perm = t_permutation_on_modcats(ty, t);
    nlohmann::json names = nlohmann::json::array(), pairs = nlohmann::json::array(), fixed = nlohmann::json::array();
    bool involution = true;
    for (std::size_t i = 0; i < perm.descriptors.size(); ++i) {
      names.push_back(describe(perm.descriptors[i]));
      pairs.push_back({describe(perm.descriptors[i]), describe(perm.descriptors[perm.image[i]])});
      involution = involution && perm.image[perm.image[i]] == static_cast<int>(i);
    }
    for (int i : perm.fixed_points) fixed.push_back(describe(perm.descriptors[i]));
    s.payload = {{"aut_chi_order", aut.size()}, {"t_in_aut_chi", in_aut}, {"f_symbols_invariant", invariant},
                 {"descriptors", names}, {"permutation", pairs}, {"fixed_points", fixed}};
    s.summary = "swap t permutes the " + std::to_string(perm.descriptors.size()) +
                " pointed TY module categories with " + std::to_string(perm.fixed_points.size()) + " fixed points";
    return in_aut && invariant && involution && perm.descriptors.size() == 4 && perm.fixed_points.empty();
  }));

  rep.sections.push_back(run_section("verdict", [&](Section& s) {
    const auto v = group_theoretical_verdict(ty, t, violations);
    s.payload = fusionlab::to_json(v);
    s.summary = std::string("Z/2-equivariantization is ") + (v.group_theoretical ? "" : "not ") +
                "group-theoretical, FPdim " + std::to_string(v.fpdim_total);
    return !v.group_theoretical && v.fpdim_total == 4L * p * p;
  }));

  rep.sections.push_back(run_section("dimension_profile", [&](Section& s) {
    const auto prof = dimension_profile(equivariantization_simples(ty_ring_action(ty, t)));
    long total = 0;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [d, c] : prof) {
      total += d * d * c;
      j.push_back({d, c});
    }
    s.payload = {{"dimension_profile", j}, {"sum_of_squares", total}};
    s.summary = "simple dimensions " + profile_str(prof) + ", sum of squares " + std::to_string(total);
    return prof == expected_profile(p) && total == 4L * p * p;
  }));

  return rep;
}

nlohmann::json cmd_modcats(int p, int max_group_order) {
  check_prime(p, max_group_order);
  auto cfg = configuration(p);
  nlohmann::json list = nlohmann::json::array(), ranks = nlohmann::json::array();
  for (const auto& [d, r] : sorted_modcats(cfg)) {
    list.push_back(modcat_entry(d, r));
    ranks.push_back(r);
  }
  return {{"schema", 1}, {"p", p}, {"K", labels_of(cfg.k)}, {"descriptors", list}, {"ranks", ranks}};
}

nlohmann::json cmd_pentagon(int p, int tau_sign, int max_group_order) {
  check_prime(p, max_group_order);
  const auto fs = f_symbols(canonical_ty(p, tau_sign));
  const auto v = pentagon_check(fs);
  nlohmann::json first = nlohmann::json::array();
  for (std::size_t i = 0; i < v.size() && i < 10; ++i) first.push_back(to_json(v[i], fs.ring()));
  return {{"schema", 1},
          {"p", p},
          {"tau_sign", tau_sign > 0 ? "+" : "-"},
          {"violations", v.size()},
          {"first_violations", first}};
}

nlohmann::json cmd_profile(int p, int max_group_order) {
  check_prime(p, max_group_order);
  auto ty = canonical_ty(p);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [d, c] : dimension_profile(equivariantization_simples(ty_ring_action(ty, swap_automorphism(ty)))))
    j.push_back({d, c});
  return {{"schema", 1}, {"p", p}, {"dimension_profile", j}};
}

nlohmann::json cmd_rank(const std::string& group_spec, const std::string& d1, const std::string& d2) {
  auto g = parse_group(group_spec);
  auto r = rank_breakdown(parse_descriptor(g, d1), parse_descriptor(g, d2));
  nlohmann::json j = fusionlab::to_json(r, *g);
  j["schema"] = 1;
  j["group"] = group_spec;
  j["group_order"] = g->order();
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Tambara-Yamagami categories and their Z/2-equivariantizations"};
  app.require_subcommand(1);

  VerifyOptions opt;
  std::string out_path, tau = "+", group_spec, d1_spec, d2_spec;
  bool json_only = false;

  auto common = [&](CLI::App* sub, bool with_p) {
    if (with_p) sub->add_option("--p", opt.p, "odd prime")->required();
    sub->add_option("--out", out_path, "write the JSON report here");
    sub->add_option("--max-group-order", opt.max_group_order, "cap on |G| = 2p^2")->check(CLI::PositiveNumber);
    sub->add_flag("--json-only", json_only, "suppress the human summary");
  };
  auto* verify = app.add_subcommand("verify", "run the full pipeline for one prime");
  common(verify, true);
  verify->add_flag("--skip-pentagon", opt.skip_pentagon, "skip the pentagon section");
  verify->add_option("--tau-sign", tau, "sign of tau")->check(CLI::IsMember({"+", "-"}));
  auto* modcats = app.add_subcommand("modcats", "pointed module categories with ranks");
  common(modcats, true);
  auto* pentagon = app.add_subcommand("pentagon", "pentagon violation count");
  common(pentagon, true);
  pentagon->add_option("--tau-sign", tau, "sign of tau")->check(CLI::IsMember({"+", "-"}));
  auto* profile = app.add_subcommand("profile", "equivariantization dimension profile");
  common(profile, true);
  auto* rank = app.add_subcommand("rank", "rank of Fun(M1, M2) with its double coset breakdown");
  common(rank, false);
  rank->add_option("--group", group_spec, "e.g. D6xZ3")->required();
  rank->add_option("--d1", d1_spec, "generators and optional mu=<c>")->required();
  rank->add_option("--d2", d2_spec, "generators and optional mu=<c>")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  opt.tau_sign = tau == "-" ? -1 : 1;

  auto emit = [&](const nlohmann::json& j) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write " + out_path);
    f << text;
  };

  try {
    if (*verify) {
      const Report rep = cmd_verify(opt);
      if (!json_only) {
        for (const auto& s : rep.sections) {
          std::string status = s.status;
          std::transform(status.begin(), status.end(), status.begin(), ::toupper);
          out << "[" << status << "] " << s.name << ": " << s.summary << "\n";
        }
        out << "overall: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
      }
      if (json_only || !out_path.empty()) emit(rep.to_json());
      return rep.pass() ? kPass : kCheckFailure;
    }
    if (*modcats) {
      emit(cmd_modcats(opt.p, opt.max_group_order));
      return kPass;
    }
    if (*pentagon) {
      auto j = cmd_pentagon(opt.p, opt.tau_sign, opt.max_group_order);
      emit(j);
      return j["violations"] == 0 ? kPass : kCheckFailure;
    }
    if (*profile) {
      emit(cmd_profile(opt.p, opt.max_group_order));
      return kPass;
    }
    emit(cmd_rank(group_spec, d1_spec, d2_spec));
    return kPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kCheckFailure;
  }
}

}  // namespace fusionlab::cli
