#pragma once

// Command-line front end. The report goes to `out` (key: value lines, or one
// JSON object with --json); a short human summary goes to `err`.
//
// Exit status: 0 success, 1 negative decision, 2 input error, 3 guard
// exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alexposet/alexposet.hpp"

namespace alexposet::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kGuardExceeded = 3 };

struct Options {
  std::size_t max_enum = 0;  // 0: each module's own default
  std::uint64_t seed = 0;
  bool pointed = false;
  bool json = false;

  std::size_t guard(std::size_t fallback) const { return max_enum == 0 ? fallback : max_enum; }
};

struct Loaded {
  PosetDocument doc;
  Poset poset;
  std::optional<Id> basepoint;
};

inline Loaded load(const std::string& path, bool pointed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  Loaded l;
  l.doc = is_json ? parse_poset_json(text) : parse_poset(text);
  l.poset = to_poset(l.doc);
  if (l.doc.basepoint) {
    const Id b = l.poset.id_of(*l.doc.basepoint);
    if (pointed) l.basepoint = b;
  } else if (pointed) {
    throw Error("--pointed needs a 'base' line in '" + path + "'");
  }
  return l;
}

namespace detail {

inline nlohmann::json labels_of(const Poset& p, const ElementSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (Id x : members(s)) a.push_back(p.label(x));
  return a;
}

inline nlohmann::json trace_json(const DismantlingTrace& t) {
  const Poset& p = t.start;
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps) {
    nlohmann::json js;
    js["kind"] = to_string(s.kind);
    nlohmann::json moves = nlohmann::json::array();
    for (Id x : members(s.removed)) moves.push_back({p.label(x), p.label(s.map(x))});
    js["moves"] = moves;
    steps.push_back(js);
  }
  nlohmann::json j;
  j["steps"] = steps;
  j["step_count"] = t.steps.size();
  j["final"] = labels_of(p, t.final);
  j["final_size"] = t.final.count();
  return j;
}

inline void print_report(std::ostream& out, const nlohmann::json& report, bool json) {
  if (json) {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) {
    out << key << ": ";
    if (value.is_string())
      out << value.get<std::string>();
    else if (value.is_array() &&
             std::all_of(value.begin(), value.end(), [](const auto& v) { return v.is_primitive(); })) {
      bool first = true;
      for (const auto& v : value) {
        if (!first) out << ' ';
        first = false;
        out << (v.is_string() ? v.get<std::string>() : v.dump());
      }
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Alexandroff spaces: cores, homotopy type, homology"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-enum", opt.max_enum, "enumeration limit (maps, simplices); 0 keeps the defaults");
  app.add_option("--seed", opt.seed, "seed for random generators")->capture_default_str();
  app.add_flag("--pointed", opt.pointed, "respect the document basepoint");
  app.add_flag("--json", opt.json, "emit the report as JSON");

  std::vector<std::string> gen_args;
  auto* gen = app.add_subcommand("gen", "generate a poset: chain|antichain|fence|crown N, khalimsky A B, spider L..., random N P");
  gen->add_option("args", gen_args)->required()->expected(1, -1);

  std::string file_a, file_b;
  auto* core_cmd = app.add_subcommand("core", "remove beat points one at a time");
  core_cmd->add_option("file", file_a)->required();

  std::size_t max_rounds = 1000;
  auto* dism = app.add_subcommand("dismantle", "standard sequence of bulk retractions");
  dism->add_option("file", file_a)->required();
  dism->add_option("--max-rounds", max_rounds)->capture_default_str();

  auto* heq = app.add_subcommand("homotopy-eq", "decide homotopy equivalence via cores");
  heq->add_option("first", file_a)->required();
  heq->add_option("second", file_b)->required();

  auto* contr = app.add_subcommand("contractible", "is the core a point");
  contr->add_option("file", file_a)->required();

  auto* hom = app.add_subcommand("homology", "integral homology of the order complex");
  hom->add_option("file", file_a)->required();

  auto* fs = app.add_subcommand("function-space", "size and homotopy classes of C(X, Y)");
  fs->add_option("domain", file_a)->required();
  fs->add_option("codomain", file_b);

  std::string gamma_label;
  auto* gam = app.add_subcommand("gamma", "gamma-point verdicts");
  gam->add_option("file", file_a)->required();
  gam->add_option("element", gamma_label);

  auto* fpp = app.add_subcommand("fpp", "fixed point property");
  fpp->add_option("file", file_a)->required();

  auto* topo = app.add_subcommand("topology-check", "compact-open topology of C(X, Y) vs its Alexandroff topology");
  topo->add_option("domain", file_a)->required();
  topo->add_option("codomain", file_b)->required();

  std::string dot_trace;
  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("file", file_a)->required();
  dot->add_option("--trace", dot_trace, "core|dismantle")->check(CLI::IsMember({"core", "dismantle"}));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  nlohmann::json report;
  int status = kOk;
  try {
    if (gen->parsed()) {
      const std::string& family = gen_args[0];
      const auto num = [&](std::size_t i) -> long {
        if (i >= gen_args.size()) throw Error("gen " + family + ": missing parameter");
        return std::stol(gen_args[i]);
      };
      Poset p;
      std::optional<Id> base;
      if (family == "chain") p = chain(static_cast<std::size_t>(num(1)));
      else if (family == "antichain") p = antichain(static_cast<std::size_t>(num(1)));
      else if (family == "fence") p = fence(static_cast<std::size_t>(num(1)));
      else if (family == "crown") p = crown(static_cast<std::size_t>(num(1)));
      else if (family == "khalimsky") p = khalimsky_interval(num(1), num(2));
      else if (family == "spider") {
        std::vector<std::size_t> legs;
        for (std::size_t i = 1; i < gen_args.size(); ++i) legs.push_back(static_cast<std::size_t>(num(i)));
        auto sp = spider(legs);
        p = sp.poset;
        base = sp.basepoint;
      } else if (family == "random") {
        if (gen_args.size() < 3) throw Error("gen random: expects N P");
        p = random_poset(static_cast<std::size_t>(num(1)), std::stod(gen_args[2]), opt.seed);
      } else {
        throw Error("unknown family '" + family + "'");
      }
      std::string name = family;
      for (std::size_t i = 1; i < gen_args.size(); ++i) name += "_" + gen_args[i];
      const auto doc = to_document(p, name, base);
      if (opt.json)
        out << to_json(doc).dump(2) << '\n';
      else
        out << emit_poset(doc);
      err << "generated " << name << " with " << p.size() << " elements\n";
      return kOk;
    }

    if (core_cmd->parsed()) {
      const auto l = load(file_a, opt.pointed);
      const auto r = core(l.poset, l.basepoint);
      report = detail::trace_json(r.trace);
      report["core_size"] = r.core.poset.size();
      err << l.doc.name << ": core has " << r.core.poset.size() << " element(s) after "
          << r.trace.steps.size() << " removal(s)\n";
    } else if (dism->parsed()) {
      const auto l = load(file_a, opt.pointed);
      const auto t = standard_sequence(l.poset, l.basepoint, max_rounds);
      report = detail::trace_json(t);
      report["stabilized"] = t.stabilized;
      report["rounds"] = t.rounds;
      report["effective_rounds"] = t.effective_rounds;
      err << l.doc.name << ": standard sequence " << (t.stabilized ? "stabilized" : "did NOT stabilize")
          << " after " << t.rounds << " round(s), " << t.final.count() << " element(s) remain\n";
    } else if (heq->parsed()) {
      const auto a = load(file_a, opt.pointed);
      const auto b = load(file_b, opt.pointed);
      const HomotopyEquivalence r =
          opt.pointed ? are_homotopy_equivalent(PointedPoset(a.poset, *a.basepoint),
                                                PointedPoset(b.poset, *b.basepoint))
                      : are_homotopy_equivalent(a.poset, b.poset);
      report["equivalent"] = r.equivalent;
      report["core_sizes"] = {r.core_p.core.poset.size(), r.core_q.core.poset.size()};
      report["first_core"] = r.core_p.core.poset.labels();
      report["second_core"] = r.core_q.core.poset.labels();
      if (r.iso) {
        nlohmann::json m = nlohmann::json::object();
        for (Id x = 0; x < r.iso->mapping.size(); ++x)
          m[r.core_p.core.poset.label(x)] = r.core_q.core.poset.label(r.iso->mapping[x]);
        report["isomorphism"] = m;
      }
      status = r.equivalent ? kOk : kNegative;
      err << a.doc.name << " and " << b.doc.name << (r.equivalent ? " are" : " are NOT")
          << " homotopy equivalent (core sizes " << r.core_p.core.poset.size() << ", "
          << r.core_q.core.poset.size() << ")\n";
    } else if (contr->parsed()) {
      const auto l = load(file_a, opt.pointed);
      const auto r = core(l.poset, l.basepoint);
      const bool yes = r.core.poset.size() == 1;
      report["contractible"] = yes;
      report["core_size"] = r.core.poset.size();
      status = yes ? kOk : kNegative;
      err << l.doc.name << (yes ? " is" : " is NOT") << " contractible\n";
    } else if (hom->parsed()) {
      const auto l = load(file_a, false);
      const auto k = order_complex(l.poset, opt.guard(kSimplexGuard));
      const auto full = homology(k, false, opt.guard(kSimplexGuard));
      const auto red = homology(k, true, opt.guard(kSimplexGuard));
      const auto betti = [](const HomologyProfile& h) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& d : h.degrees) a.push_back(d.betti);
        return a;
      };
      const auto torsion = [](const HomologyProfile& h) {
        nlohmann::json a = nlohmann::json::array();
        for (std::size_t d = 0; d < h.degrees.size(); ++d)
          for (const auto& t : h.degrees[d].torsion) a.push_back({d, t.str()});
        return a;
      };
      report["simplices"] = k.total();
      report["betti"] = betti(full);
      report["reduced_betti"] = betti(red);
      report["torsion"] = torsion(full);
      report["euler_characteristic"] = euler_characteristic(k);
      report["acyclic"] = red.acyclic();
      err << l.doc.name << ": homology " << full << ", " << red << '\n';
    } else if (fs->parsed()) {
      const auto x = load(file_a, false);
      const auto y = file_b.empty() ? x : load(file_b, false);
      const FunctionPoset c = enumerate_monotone(x.poset, y.poset, opt.guard(kDefaultMapGuard));
      report["domain_size"] = x.poset.size();
      report["codomain_size"] = y.poset.size();
      report["maps"] = c.size();
      report["homotopy_classes"] = c.component_count();
      if (file_b.empty() || x.poset.same_order(y.poset)) {
        const std::size_t id = c.require_index(identity(x.poset));
        const auto classes = homotopy_classes(c);
        report["identity_class_size"] = classes[c.component_of(id)].size();
      }
      err << "|C(X,Y)| = " << c.size() << " in " << c.component_count() << " homotopy class(es)\n";
    } else if (gam->parsed()) {
      const auto l = load(file_a, false);
      nlohmann::json verdicts = nlohmann::json::object();
      std::vector<Id> targets;
      if (gamma_label.empty())
        for (Id x = 0; x < l.poset.size(); ++x) targets.push_back(x);
      else
        targets.push_back(l.poset.id_of(gamma_label));
      for (Id x : targets) verdicts[l.poset.label(x)] = to_string(is_gamma_point(l.poset, x));
      report["verdicts"] = verdicts;
      err << l.doc.name << ": " << verdicts.dump() << '\n';
    } else if (fpp->parsed()) {
      const auto l = load(file_a, false);
      const auto r = has_fpp(l.poset, opt.guard(kDefaultMapGuard));
      report["fpp"] = r.has_fpp;
      if (r.witness) {
        nlohmann::json w = nlohmann::json::object();
        for (Id x = 0; x < l.poset.size(); ++x) w[l.poset.label(x)] = l.poset.label((*r.witness)(x));
        report["fixed_point_free_map"] = w;
      }
      status = r.has_fpp ? kOk : kNegative;
      err << l.doc.name << (r.has_fpp ? " has" : " does NOT have") << " the fixed point property\n";
    } else if (topo->parsed()) {
      const auto x = load(file_a, false);
      const auto y = load(file_b, false);
      const FunctionPoset c = enumerate_monotone(x.poset, y.poset, opt.guard(kDefaultMapGuard));
      const SetFamily generated = generate_topology(compact_open_subbasis(c));
      const SetFamily alex = alexandroff_topology(c.as_poset(opt.guard(4096)), c.size());
      const bool equal = families_equal(generated, alex);
      report["maps"] = c.size();
      report["compact_open_opens"] = generated.size();
      report["alexandroff_opens"] = alex.size();
      report["equal"] = equal;
      status = equal ? kOk : kNegative;
      err << "compact-open topology " << (equal ? "equals" : "DIFFERS from")
          << " the Alexandroff topology of C(X,Y)\n";
    } else if (dot->parsed()) {
      const auto l = load(file_a, opt.pointed);
      if (dot_trace.empty()) {
        out << emit_dot(l.poset, l.doc.name);
      } else {
        const DismantlingTrace t = dot_trace == "core" ? core(l.poset, l.basepoint).trace
                                                       : standard_sequence(l.poset, l.basepoint);
        out << emit_dot(l.poset, l.doc.name, &t);
      }
      return kOk;
    }
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid number: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << '\n';
    return kInputError;
  }
  detail::print_report(out, report, opt.json);
  return status;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace alexposet::cli
