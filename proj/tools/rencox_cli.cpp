// Command line front end: build Coxeter groups and Renner monoids, answer
// order and form queries, export Hasse diagrams, run the verification
// suites, and reproduce the degree-3 rook counterexample.
//
// Exit codes: 0 success, 1 property failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rencox/poset.hpp"
#include "rencox/verify.hpp"

using nlohmann::json;
using namespace rencox;

namespace {

struct SystemHandle {
  std::unique_ptr<const RennerSystem> owned;
  const RennerSystem* active = nullptr;  // owned.get() or its opposite
};

std::size_t budget_from_env(std::size_t cli_budget) {
  if (cli_budget != 0) return cli_budget;
  if (const char* env = std::getenv("RENNER_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultElementBudget;
}

SystemHandle load_system(const std::string& descriptor, bool opposite,
                         std::size_t budget) {
  SystemHandle handle;
  if (descriptor.rfind("rook:", 0) == 0) {
    int n = std::stoi(descriptor.substr(5));
    handle.owned = rook_system(n, kRookLambdaOrientation, budget);
  } else {
    std::ifstream in(descriptor);
    if (!in) throw std::invalid_argument("cannot open system file " + descriptor);
    handle.owned = parse_renner_system(in, /*validate=*/true, budget);
  }
  handle.active = opposite ? &handle.owned->opposite() : handle.owned.get();
  return handle;
}

GreensRelation parse_relation(const std::string& tag) {
  if (tag == "J") return GreensRelation::J;
  if (tag == "L") return GreensRelation::L;
  if (tag == "R") return GreensRelation::R;
  if (tag == "H") return GreensRelation::H;
  throw std::invalid_argument("relation must be one of J, L, R, H");
}

std::string relation_tag(GreensRelation rel) {
  switch (rel) {
    case GreensRelation::J: return "J";
    case GreensRelation::L: return "L";
    case GreensRelation::R: return "R";
    case GreensRelation::H: return "H";
  }
  return "?";
}

json form_json(const RennerSystem& sys, const RennerElement& r) {
  const RennerSystem& opp = sys.opposite();
  LeftForm lf = r.left_standard_form();
  RightForm rf = r.right_standard_form();
  HybridForm hf = r.hybrid_standard_form();
  VanillaForm vf = vanilla_form(r);
  json out;
  out["element"] = sys.element_to_string(r);
  out["left"] = {{"x", word_to_string(lf.x.word())},
                 {"e", sys.idem(lf.e).name},
                 {"y", word_to_string(lf.y.word())}};
  out["right"] = {{"y", word_to_string(rf.y.word())},
                  {"e", sys.idem(rf.e).name},
                  {"x", word_to_string(rf.x.word())}};
  out["hybrid"] = {{"x", word_to_string(hf.x.word())},
                   {"e", sys.idem(hf.e).name},
                   {"y", word_to_string(hf.y.word())},
                   {"z", word_to_string(hf.z.word())}};
  out["vanilla"] = {{"sigma_minus", word_to_string(vf.sigma_minus.word())},
                    {"e_minus", opp.idem(vf.e_minus).name},
                    {"sigma_zero", word_to_string(vf.sigma_zero.word())},
                    {"e_plus", sys.idem(vf.e_plus).name},
                    {"sigma_plus", word_to_string(vf.sigma_plus.word())}};
  out["remultiplied"] = vanilla_product(vf) == r &&
                        sys.element(rf.y, rf.e, rf.x) == r &&
                        sys.element(hf.x, hf.e, hf.y * hf.z) == r;
  return out;
}

void print_forms_text(const RennerSystem& sys, const RennerElement& r) {
  json j = form_json(sys, r);
  auto word = [](const json& v) {
    std::string s = v.get<std::string>();
    return s.empty() ? std::string("1") : s;
  };
  std::cout << "element  " << j["element"].get<std::string>() << "\n";
  std::cout << "left     x=" << word(j["left"]["x"]) << "  e=" << j["left"]["e"].get<std::string>()
            << "  y=" << word(j["left"]["y"]) << "\n";
  std::cout << "right    y=" << word(j["right"]["y"]) << "  e=" << j["right"]["e"].get<std::string>()
            << "  x=" << word(j["right"]["x"]) << "\n";
  std::cout << "hybrid   x=" << word(j["hybrid"]["x"]) << "  e=" << j["hybrid"]["e"].get<std::string>()
            << "  y=" << word(j["hybrid"]["y"]) << "  z=" << word(j["hybrid"]["z"]) << "\n";
  std::cout << "vanilla  s-=" << word(j["vanilla"]["sigma_minus"])
            << "  e-=" << j["vanilla"]["e_minus"].get<std::string>()
            << "  s0=" << word(j["vanilla"]["sigma_zero"])
            << "  e+=" << j["vanilla"]["e_plus"].get<std::string>()
            << "  s+=" << word(j["vanilla"]["sigma_plus"]) << "\n";
  std::cout << "remultiplication "
            << (j["remultiplied"].get<bool>() ? "ok" : "MISMATCH") << "\n";
}

int run_verify(const RennerSystem& sys) {
  auto results = run_full_verification(sys);
  std::string first_failure;
  for (const auto& r : results) {
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    if (!r.pass && first_failure.empty()) first_failure = r.name;
  }
  if (!first_failure.empty()) {
    std::cout << "first failing property: " << first_failure << "\n";
    return 1;
  }
  std::cout << results.size() << " properties hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter groups, Renner monoids and their adherence orders"};
  app.require_subcommand(1);

  std::string descriptor, format = "text", relation = "J";
  std::string elem_a, elem_b, class_elem, submonoid;
  std::size_t budget = 0;
  bool minus = false, plus = false, opposite = false, want_witness = false;

  auto add_common = [&](CLI::App* cmd, bool with_system) {
    if (with_system)
      cmd->add_option("system", descriptor, "rook:<n> or a system file path")
          ->required();
    cmd->add_option("--budget", budget, "element budget override");
    cmd->add_flag("--opposite", opposite, "work in the opposite lattice");
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };

  CLI::App* group_cmd = app.add_subcommand("group", "inspect a Coxeter group");
  std::string matrix_path;
  group_cmd->add_option("matrix", matrix_path, "Coxeter matrix file")->required();
  group_cmd->add_option("--budget", budget, "element budget override");
  group_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* rook_cmd = app.add_subcommand("rook", "inspect a rook monoid");
  int rook_n = 0;
  rook_cmd->add_option("n", rook_n, "degree")->required();
  rook_cmd->add_option("--budget", budget, "element budget override");
  rook_cmd->add_flag("--opposite", opposite, "work in the opposite lattice");
  rook_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* order_cmd = app.add_subcommand("order", "compare two elements");
  add_common(order_cmd, true);
  order_cmd->add_option("r", elem_a)->required();
  order_cmd->add_option("s", elem_b)->required();
  order_cmd->add_flag("--plus", plus, "use the + order (default)");
  order_cmd->add_flag("--minus", minus, "use the - order");
  order_cmd->add_flag("--witness", want_witness, "also print the witness");

  CLI::App* forms_cmd = app.add_subcommand("forms", "print the four standard forms");
  add_common(forms_cmd, true);
  forms_cmd->add_option("element", elem_a)->required();

  CLI::App* extrema_cmd =
      app.add_subcommand("extrema", "absolute class minimum and maximum");
  add_common(extrema_cmd, true);
  extrema_cmd->add_option("element", elem_a)->required();
  extrema_cmd->add_option("--relation", relation, "J, L, R or H")
      ->check(CLI::IsMember({"J", "L", "R", "H"}));
  extrema_cmd->add_flag("--plus", plus);
  extrema_cmd->add_flag("--minus", minus);

  CLI::App* classes_cmd = app.add_subcommand("classes", "list Green's classes");
  add_common(classes_cmd, true);
  classes_cmd->add_option("--relation", relation, "J, L, R or H")
      ->check(CLI::IsMember({"J", "L", "R", "H"}));

  CLI::App* hasse_cmd =
      app.add_subcommand("hasse", "DOT Hasse diagram of an adherence order");
  add_common(hasse_cmd, true);
  hasse_cmd->add_flag("--plus", plus);
  hasse_cmd->add_flag("--minus", minus);
  hasse_cmd->add_option("--class", class_elem,
                        "restrict to the class of this element");
  hasse_cmd->add_option("--relation", relation, "class relation")
      ->check(CLI::IsMember({"J", "L", "R", "H"}));
  hasse_cmd->add_option("--submonoid", submonoid, "restrict to GJ, JG, N or O")
      ->check(CLI::IsMember({"GJ", "JG", "N", "O"}));

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run every property suite");
  add_common(verify_cmd, true);

  CLI::App* ce_cmd = app.add_subcommand(
      "counterexample", "reproduce the rook-3 H-minimum counterexample");
  ce_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ce_cmd->add_option("--budget", budget, "element budget override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Epsilon eps = minus ? Epsilon::minus : Epsilon::plus;
    if (plus && minus)
      throw std::invalid_argument("choose one of --plus and --minus");

    if (group_cmd->parsed()) {
      std::ifstream in(matrix_path);
      if (!in) throw std::invalid_argument("cannot open " + matrix_path);
      CoxeterGroup g(parse_coxeter_matrix(in), budget_from_env(budget));
      CoxeterElement w0 = g.longest_element();
      if (format == "json") {
        json out{{"rank", g.rank()},
                 {"order", g.order()},
                 {"longest_length", w0.length()},
                 {"longest_word", word_to_string(w0.word())}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "rank " << g.rank() << "\norder " << g.order()
                  << "\nlongest element " << word_to_string(w0.word())
                  << " (length " << w0.length() << ")\n";
      }
      return 0;
    }

    if (rook_cmd->parsed()) {
      auto sys = rook_system(rook_n, kRookLambdaOrientation, budget_from_env(budget));
      const RennerSystem& active = opposite ? sys->opposite() : *sys;
      if (format == "json") {
        json idems = json::array();
        for (int e = 0; e < active.num_idems(); ++e)
          idems.push_back({{"name", active.idem(e).name},
                           {"action", active.idem_action(e).to_string()},
                           {"lam_star", active.idem(e).lam_star.to_string()},
                           {"lam_substar", active.idem(e).lam_substar.to_string()}});
        json out{{"degree", rook_n},
                 {"size", active.enumerate_monoid().size()},
                 {"group_order", active.group().order()},
                 {"idempotents", idems}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "rook monoid of degree " << rook_n << ": "
                  << active.enumerate_monoid().size() << " elements, unit group of order "
                  << active.group().order() << "\n";
        for (int e = 0; e < active.num_idems(); ++e)
          std::cout << "  " << active.idem(e).name << " = "
                    << active.idem_action(e).to_string()
                    << "  lam*=" << active.idem(e).lam_star.to_string()
                    << "  lam_*=" << active.idem(e).lam_substar.to_string() << "\n";
      }
      return 0;
    }

    if (ce_cmd->parsed()) {
      auto sys = rook_system(3, kRookLambdaOrientation, budget_from_env(budget));
      CounterexampleReport rep = verify_counterexample(*sys);
      if (format == "json") {
        json claims = json::array();
        for (const auto& c : rep.claims)
          claims.push_back({{"name", c.name},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"pass", c.pass}});
        std::cout << json{{"claims", claims}}.dump(2) << "\n";
      } else {
        int passed = 0;
        for (const auto& c : rep.claims) {
          std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                    << "  expected " << c.expected << ", got " << c.actual << "\n";
          passed += c.pass;
        }
        std::cout << passed << "/" << rep.claims.size() << " claims hold\n";
      }
      return rep.all_pass() ? 0 : 1;
    }

    SystemHandle handle = load_system(descriptor, opposite, budget_from_env(budget));
    const RennerSystem& sys = *handle.active;

    if (order_cmd->parsed()) {
      RennerElement r = sys.parse_element(elem_a);
      RennerElement s = sys.parse_element(elem_b);
      std::optional<CoxeterElement> witness =
          eps == Epsilon::plus ? leq_plus_witness(r, s) : leq_minus_witness(r, s);
      if (format == "json") {
        json out{{"leq", witness.has_value()}};
        if (want_witness && witness) out["witness"] = word_to_string(witness->word());
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (witness ? "true" : "false") << "\n";
        if (want_witness && witness)
          std::cout << "witness: "
                    << (witness->is_identity() ? "1" : word_to_string(witness->word()))
                    << "\n";
      }
      return 0;
    }

    if (forms_cmd->parsed()) {
      RennerElement r = sys.parse_element(elem_a);
      if (format == "json")
        std::cout << form_json(sys, r).dump(2) << "\n";
      else
        print_forms_text(sys, r);
      return 0;
    }

    if (extrema_cmd->parsed()) {
      RennerElement r = sys.parse_element(elem_a);
      GreensRelation rel = parse_relation(relation);
      RennerElement mn = class_extremum(r, rel, eps, ExtremumKind::min);
      RennerElement mx = class_extremum(r, rel, eps, ExtremumKind::max);
      if (format == "json") {
        json out{{"relation", relation},
                 {"epsilon", eps == Epsilon::plus ? "+" : "-"},
                 {"min", sys.element_to_string(mn)},
                 {"max", sys.element_to_string(mx)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "min" << (eps == Epsilon::plus ? "+" : "-") << relation
                  << " = " << sys.element_to_string(mn) << "\n";
        std::cout << "max" << (eps == Epsilon::plus ? "+" : "-") << relation
                  << " = " << sys.element_to_string(mx) << "\n";
      }
      return 0;
    }

    if (classes_cmd->parsed()) {
      GreensRelation rel = parse_relation(relation);
      const auto& all = sys.enumerate_monoid();
      std::vector<RennerElement> reps;
      std::vector<std::size_t> sizes;
      for (const auto& r : all) {
        bool fresh = true;
        for (std::size_t i = 0; i < reps.size(); ++i)
          if (related(r, reps[i], rel)) {
            ++sizes[i];
            fresh = false;
          }
        if (fresh) {
          reps.push_back(r);
          sizes.push_back(1);
        }
      }
      if (format == "json") {
        json out = json::array();
        for (std::size_t i = 0; i < reps.size(); ++i)
          out.push_back({{"representative", sys.element_to_string(reps[i])},
                         {"size", sizes[i]}});
        std::cout << json{{"relation", relation}, {"classes", out}}.dump(2) << "\n";
      } else {
        std::cout << reps.size() << " " << relation_tag(rel) << "-classes\n";
        for (std::size_t i = 0; i < reps.size(); ++i)
          std::cout << "  " << sys.element_to_string(reps[i]) << "  size "
                    << sizes[i] << "\n";
      }
      return 0;
    }

    if (hasse_cmd->parsed()) {
      std::vector<RennerElement> nodes;
      std::string name = descriptor;
      if (!class_elem.empty()) {
        nodes = class_of(sys.parse_element(class_elem), parse_relation(relation));
        name += " " + relation + "-class of " + class_elem;
      } else if (!submonoid.empty()) {
        SpecialSet which = submonoid == "GJ"  ? SpecialSet::GJ
                           : submonoid == "JG" ? SpecialSet::JG
                           : submonoid == "N"  ? SpecialSet::N
                                               : SpecialSet::O;
        nodes = special_submonoid(sys, which, eps);
        name += " " + submonoid;
      } else {
        nodes = sys.enumerate_monoid();
      }
      std::vector<std::vector<bool>> leq(nodes.size(),
                                         std::vector<bool>(nodes.size()));
      for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
          leq[i][j] = adherence_leq(nodes[i], nodes[j], eps);
      std::vector<std::string> labels;
      for (const auto& r : nodes) labels.push_back(sys.element_to_string(r));
      std::cout << to_dot(name + (eps == Epsilon::plus ? " (+)" : " (-)"), labels,
                          covering_relation(leq));
      return 0;
    }

    if (verify_cmd->parsed()) return run_verify(sys);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
