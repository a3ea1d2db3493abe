// Command-line front end: graph generation, refinement runs, game values,
// formula emission and checking, analysis drivers, and named experiment
// scenarios with seeded, reproducible reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fograph/analysis.hpp"
#include "fograph/canonical.hpp"
#include "fograph/constructions.hpp"
#include "fograph/emitters.hpp"
#include "fograph/errors.hpp"
#include "fograph/eval.hpp"
#include "fograph/graph6.hpp"
#include "fograph/scenarios.hpp"
#include "fograph/wl.hpp"

using json = nlohmann::json;
using namespace fograph;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

json game_value_json(const GameValue& v) {
  if (!v.finite) return "infinity";
  return v.rounds;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-order definability toolkit for small graphs"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string format = "json";
  uint64_t seed = 0;
  bool seed_set = false;
  int jobs = 1;
  std::string config_path;
  app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed)->each([&](const std::string&) {
    seed_set = true;
  });
  app.add_option("--jobs", jobs);
  app.add_option("--config", config_path);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string family, input_g6;
  std::vector<std::string> members;
  int n = 1, k = 3, m_leaves = 1;
  double p = 0.5;
  bool large = false, with_provenance = false;
  gen->add_option("--family", family, "graph family")->required();
  gen->add_option("--n", n);
  gen->add_option("--p", p);
  gen->add_option("--leaves", m_leaves);
  gen->add_option("--k", k);
  gen->add_option("--input", input_g6, "graph6 input for derived families");
  gen->add_option("--members", members, "graph6 members");
  gen->add_flag("--large", large);
  gen->add_flag("--provenance", with_provenance);

  // ---- wl ----
  auto* wl = app.add_subcommand("wl", "Weisfeiler-Leman refinement");
  std::string wl_mode = "run", wl_g, wl_h;
  int wl_k = 1, wl_rounds = -1;
  bool count_free = false;
  wl->add_option("mode", wl_mode)
      ->check(CLI::IsMember({"run", "stab", "verdict"}));
  wl->add_option("--input", wl_g)->required();
  wl->add_option("--with", wl_h);
  wl->add_option("-k,--dim", wl_k);
  wl->add_option("--rounds", wl_rounds);
  wl->add_flag("--count-free", count_free);

  // ---- game ----
  auto* game = app.add_subcommand("game", "Ehrenfeucht game values");
  std::string game_mode, game_g, game_h, strategy_name = "halving_distance";
  std::string init_pairs, sieve_list;
  int game_k = 3, game_a = 0;
  game->add_option("mode", game_mode)
      ->required()
      ->check(CLI::IsMember({"depth", "pebble", "width", "alt", "play"}));
  game->add_option("graph1", game_g, "graph6 of the first graph")->required();
  game->add_option("graph2", game_h, "graph6 of the second graph")->required();
  game->add_option("-k,--pebbles", game_k);
  game->add_option("-a,--alternations", game_a);
  game->add_option("--strategy", strategy_name)
      ->check(CLI::IsMember(
          {"halving_distance", "tree_separator", "weak_sieve"}));
  game->add_option("--init", init_pairs, "initial pairs u:v,u:v");
  game->add_option("--sieve", sieve_list, "comma-separated sieve vertices");

  // ---- define ----
  auto* define = app.add_subcommand("define", "emit a formula");
  std::string def_kind, def_style = "naive", def_input;
  int def_n = 2, def_k = 2;
  define->add_option("kind", def_kind)
      ->required()
      ->check(CLI::IsMember(
          {"generic", "delta", "path", "hintikka", "extension", "padding"}));
  define->add_option("--n", def_n);
  define->add_option("--k", def_k);
  define->add_option("--style", def_style)
      ->check(CLI::IsMember({"naive", "halving", "three-var"}));
  define->add_option("--input", def_input, "graph6 input");

  // ---- check ----
  auto* check = app.add_subcommand("check", "model-check a formula");
  std::string chk_formula, chk_formula_file;
  std::vector<std::string> chk_graphs;
  check->add_option("--formula", chk_formula);
  check->add_option("--formula-file", chk_formula_file);
  check->add_option("graphs", chk_graphs, "graph6 strings");

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "definability analysis");
  std::string an_mode, an_g, an_h, an_metric = "depth";
  int an_k = 1;
  analyze->add_option("mode", an_mode)
      ->required()
      ->check(CLI::IsMember({"cd", "cw", "identification", "sieve",
                             "extension", "two-switch", "component-bound",
                             "twins", "canonical", "metrics"}));
  analyze->add_option("graph1", an_g, "graph6 of the graph")->required();
  analyze->add_option("graph2", an_h, "graph6 of the second graph");
  analyze->add_option("-k", an_k);
  analyze->add_option("--metric", an_metric)
      ->check(CLI::IsMember({"depth", "width", "cd", "cw"}));

  // ---- experiment ----
  auto* experiment = app.add_subcommand("experiment", "seeded experiments");
  std::string ex_mode = "sentence-probability", ex_formula;
  int ex_n = 16, ex_samples = 100;
  experiment->add_option("mode", ex_mode)
      ->check(CLI::IsMember({"sentence-probability"}));
  experiment->add_option("--formula", ex_formula)->required();
  experiment->add_option("--n", ex_n);
  experiment->add_option("--samples", ex_samples);

  // ---- spectrum ----
  auto* spectrum = app.add_subcommand("spectrum", "Bernays-Schoenfinkel");
  std::string sp_formula;
  int sp_max = 8;
  spectrum->add_option("--formula", sp_formula)->required();
  spectrum->add_option("--max-order", sp_max);

  // ---- convert ----
  auto* convert = app.add_subcommand("convert", "graph format conversion");
  std::string cv_from = "graph6", cv_to = "edges", cv_input;
  convert->add_option("--from", cv_from)
      ->check(CLI::IsMember({"graph6", "edges"}));
  convert->add_option("--to", cv_to)
      ->check(CLI::IsMember({"graph6", "edges"}));
  convert->add_option("input", cv_input, "input text (stdin if omitted)");

  // ---- run-scenario ----
  auto* scen = app.add_subcommand("run-scenario", "run a named scenario");
  std::string scen_name;
  bool scen_all = false, scen_list = false;
  scen->add_option("name", scen_name);
  scen->add_flag("--all", scen_all);
  scen->add_flag("--list", scen_list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Timer timer;
    if (*gen) {
      ConstructionProvenance prov;
      ConstructionProvenance* pp = with_provenance ? &prov : nullptr;
      Graph g = [&]() -> Graph {
        if (family == "path") return path_graph(n);
        if (family == "cycle") return cycle_graph(n);
        if (family == "complete") return complete_graph(n);
        if (family == "empty") return empty_graph(n);
        if (family == "star") return star_graph(m_leaves);
        if (family == "gnp") {
          if (!seed_set)
            throw std::invalid_argument("gnp requires --seed");
          return gnp(n, p, seed);
        }
        if (family == "tree") {
          if (!seed_set)
            throw std::invalid_argument("random tree requires --seed");
          return random_labeled_tree(n, seed);
        }
        if (family == "complement") return complement(from_graph6(input_g6));
        if (family == "disjoint-union") {
          std::vector<Graph> parts;
          for (auto& s : members) parts.push_back(from_graph6(s));
          return disjoint_union(parts);
        }
        if (family == "pad") return pad(from_graph6(input_g6), pp);
        if (family == "unite-conquer") {
          std::vector<Graph> parts;
          for (auto& s : members) parts.push_back(from_graph6(s));
          return unite_conquer(parts, pp);
        }
        if (family == "universal-asym-tree")
          return universal_asymmetric_tree(k, large, pp);
        throw std::invalid_argument("unknown family: " + family);
      }();
      json j{{"family", family},
             {"order", g.order()},
             {"edges", g.edge_count()},
             {"graph6", to_graph6(g)}};
      if (with_provenance && !prov.family.empty()) {
        j["provenance"] = {{"family", prov.family},
                           {"params", prov.params},
                           {"members", prov.member_graph6}};
      }
      j["runtime_ms"] = timer.ms();
      emit(j, format);
    } else if (*wl) {
      Graph g = from_graph6(wl_g);
      WlVersion version =
          count_free ? WlVersion::count_free : WlVersion::standard;
      json j{{"k", wl_k}, {"count_free", count_free}};
      if (wl_mode == "stab") {
        j["stab"] = stab_index(g, wl_k, version);
      } else if (wl_mode == "verdict") {
        Graph h = from_graph6(wl_h);
        WlVerdict v = wl_verdict(g, h, wl_k, version);
        j["verdict"] = v.non_isomorphic ? "non_isomorphic"
                                        : "declared_isomorphic";
        j["round"] = v.round;
      } else {
        const Graph* hp = nullptr;
        Graph h = empty_graph(1);
        if (!wl_h.empty()) {
          h = from_graph6(wl_h);
          hp = &h;
        }
        Coloring c = wl_refine(g, hp, wl_k, version, wl_rounds);
        json rounds = json::array();
        for (size_t r = 0; r < c.rounds.size(); ++r) {
          json jr{{"round", r},
                  {"classes", c.rounds[r].classes},
                  {"class_counts_g", c.rounds[r].class_counts_g}};
          if (hp) {
            jr["multisets_equal"] = c.rounds[r].multisets_equal;
            jr["diag_equal"] = c.rounds[r].diag_equal;
          }
          rounds.push_back(jr);
        }
        j["rounds"] = rounds;
        j["stab_g"] = c.stab_g;
        j["joint_stab"] = c.joint_stab;
      }
      j["runtime_ms"] = timer.ms();
      emit(j, format);
    } else if (*game) {
      Graph g = from_graph6(game_g);
      Graph h = from_graph6(game_h);
      GameStats stats;
      json j{{"mode", game_mode}};
      if (game_mode == "depth") {
        j["value"] = game_value_json(game_depth(g, h, &stats));
      } else if (game_mode == "pebble") {
        j["value"] = game_value_json(pebble_depth(g, h, game_k, &stats));
        j["k"] = game_k;
      } else if (game_mode == "width") {
        j["value"] = game_value_json(game_width(g, h, &stats));
      } else if (game_mode == "alt") {
        j["value"] = game_value_json(alt_depth(g, h, game_a, &stats));
        j["a"] = game_a;
      } else {
        PebblePairs init;
        if (!init_pairs.empty()) {
          std::istringstream in(init_pairs);
          std::string item;
          while (std::getline(in, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
              throw std::invalid_argument("bad --init entry: " + item);
            init.emplace_back(std::stoi(item.substr(0, colon)),
                              std::stoi(item.substr(colon + 1)));
          }
        }
        std::vector<int> sieve;
        if (!sieve_list.empty()) {
          std::istringstream in(sieve_list);
          std::string item;
          while (std::getline(in, item, ',')) sieve.push_back(std::stoi(item));
        }
        SpoilerStrategy strat = SpoilerStrategy::halving_distance;
        if (strategy_name == "tree_separator")
          strat = SpoilerStrategy::tree_separator;
        if (strategy_name == "weak_sieve")
          strat = SpoilerStrategy::weak_sieve;
        PlayOutcome o = play(g, h, strat, init, sieve);
        j["strategy"] = strategy_name;
        j["won"] = o.won;
        j[o.won ? "won_in" : "survived"] = o.rounds;
        j["switches"] = o.switches;
        stats.configs_visited = o.configs_visited;
      }
      j["rounds_explored"] = stats.rounds_explored;
      j["configs_visited"] = stats.configs_visited;
      j["runtime_ms"] = timer.ms();
      emit(j, format);
    } else if (*define) {
      FormulaStore store;
      FormulaRef f = nullptr;
      DeltaStyle style = DeltaStyle::naive;
      if (def_style == "halving") style = DeltaStyle::halving;
      if (def_style == "three-var") style = DeltaStyle::three_var;
      if (def_kind == "generic")
        f = generic_defining(store, from_graph6(def_input));
      else if (def_kind == "delta")
        f = delta(store, def_n, style);
      else if (def_kind == "path")
        f = path_sentence(store, def_n, style);
      else if (def_kind == "hintikka")
        f = hintikka(store, from_graph6(def_input), def_k);
      else if (def_kind == "extension")
        f = extension_sentence(store, def_k);
      else
        f = padding_sentence(
            store, generic_defining(store, from_graph6(def_input)));
      FormulaMetrics m = measure(f);
      json j{{"kind", def_kind},
             {"formula", print_formula(store, f)},
             {"length", m.length},
             {"depth", m.depth},
             {"width", m.width},
             {"runtime_ms", timer.ms()}};
      emit(j, format);
    } else if (*check) {
      FormulaStore store;
      std::string text = chk_formula;
      if (!chk_formula_file.empty()) text = slurp(chk_formula_file);
      if (text.empty())
        throw std::invalid_argument("check needs --formula or --formula-file");
      FormulaRef f = parse_formula(store, text);
      json verdicts = json::array();
      for (auto& s : chk_graphs) {
        Graph g = from_graph6(s);
        verdicts.push_back(
            json{{"graph6", s}, {"satisfies", evaluate(g, f)}});
      }
      emit(json{{"formula", print_formula(store, f)},
                {"results", verdicts},
                {"runtime_ms", timer.ms()}},
           format);
    } else if (*analyze) {
      Graph g = from_graph6(an_g);
      json j{{"operation", an_mode}, {"inputs", json{{"g", an_g}}}};
      if (an_mode == "cd" || an_mode == "cw") {
        Graph h = from_graph6(an_h);
        j["inputs"]["h"] = an_h;
        if (an_mode == "cd") {
          j["k"] = an_k;
          j["value"] = game_value_json(cd_pair(g, h, an_k));
        } else {
          CwResult cw = cw_pair(g, h);
          j["value"] = cw.value;
          j["exact"] = cw.exact;
        }
      } else if (an_mode == "identification") {
        IdMetric metric = IdMetric::depth;
        if (an_metric == "width") metric = IdMetric::width;
        if (an_metric == "cd") metric = IdMetric::cd;
        if (an_metric == "cw") metric = IdMetric::cw;
        auto rep = identification(g, metric, an_k);
        j["metric"] = an_metric;
        j["value"] = game_value_json(rep.value);
        j["exact"] = rep.exact;
        if (rep.witness) j["witness"] = to_graph6(*rep.witness);
      } else if (an_mode == "sieve") {
        SieveReport s = weak_sieve(g);
        j["x"] = s.x;
        j["size"] = s.size();
        j["weak"] = s.weak;
        j["classes"] = s.classes;
        j["sifted"] = s.sifted;
      } else if (an_mode == "extension") {
        j["k"] = an_k;
        j["value"] = extension_property(g, an_k);
      } else if (an_mode == "two-switch") {
        auto w = two_switch_witness(g);
        if (w) {
          j["witness"] = to_graph6(*w);
          j["cd2_lower"] = game_value_json(cd_pair(g, *w, 1));
        } else {
          j["witness"] = nullptr;
        }
      } else if (an_mode == "component-bound") {
        auto rep = component_count_bound_check(g, seed);
        j["applicable"] = rep.applicable;
        j["d0"] = rep.d0;
        if (rep.applicable) {
          j["depth_vs_extra_vertex"] = rep.depth_vs_extra_vertex;
          j["depth_lower_ok"] = rep.depth_lower_ok;
          j["width_lower_ok"] = rep.width_lower_ok;
          j["identification_upper_ok"] = rep.identification_upper_ok;
        }
      } else if (an_mode == "twins") {
        json pairs = json::array();
        for (auto [u, v] : twin_pairs(g)) pairs.push_back(json{u, v});
        j["twin_pairs"] = pairs;
        j["twin_free"] = is_twin_free(g);
      } else if (an_mode == "canonical") {
        j["canonical"] = fnv1a_hex(canonical_form(g));
        j["asymmetric"] = is_asymmetric(g);
      } else if (an_mode == "metrics") {
        MetricsReport m = metrics(g);
        j["order"] = m.order;
        j["edges"] = m.edges;
        j["degree_sequence"] = m.degree_sequence;
        j["radius"] = m.radius >= Graph::kInfDist ? json("infinity")
                                                  : json(m.radius);
        j["diameter"] = m.diameter >= Graph::kInfDist ? json("infinity")
                                                      : json(m.diameter);
        j["centers"] = m.centers;
        j["isolated"] = m.isolated_count;
        j["component_orders"] = m.component_orders;
      }
      j["seed"] = seed;
      j["runtime_ms"] = timer.ms();
      emit(j, format);
    } else if (*experiment) {
      if (!seed_set)
        throw std::invalid_argument("experiments require --seed");
      FormulaStore store;
      FormulaRef f = parse_formula(store, ex_formula);
      double freq = estimate_sentence_probability(f, ex_n, ex_samples, seed);
      emit(json{{"operation", ex_mode},
                {"inputs",
                 json{{"formula", ex_formula}, {"n", ex_n},
                      {"samples", ex_samples}}},
                {"seed", seed},
                {"value", freq},
                {"runtime_ms", timer.ms()}},
           format);
    } else if (*spectrum) {
      FormulaStore store;
      FormulaRef f = parse_formula(store, sp_formula);
      SpectrumReport rep = bs_spectrum(store, f, sp_max);
      json members = json::array();
      for (int i = 1; i <= sp_max; ++i)
        if (rep.member[i]) members.push_back(i);
      emit(json{{"sentence", rep.sentence},
                {"existentials", rep.existentials},
                {"universals", rep.universals},
                {"spectrum", members},
                {"small_model_bound", rep.small_model_bound},
                {"thresholds",
                 json{{"k_plus_l", rep.dichotomy_lower},
                      {"two_k_four_l", rep.dichotomy_upper}}},
                {"satisfiable", bs_satisfiable(store, f)},
                {"runtime_ms", timer.ms()}},
           format);
    } else if (*convert) {
      std::string text = cv_input;
      if (text.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
      }
      Graph g = cv_from == "graph6" ? from_graph6(text)
                                    : from_edge_list(text);
      std::cout << (cv_to == "graph6" ? to_graph6(g) + "\n"
                                      : to_edge_list(g));
    } else if (*scen) {
      if (scen_list) {
        for (auto& name : scenario_names()) std::cout << name << "\n";
        return 0;
      }
      ScenarioContext ctx;
      std::string config_bytes;
      if (!config_path.empty()) {
        config_bytes = slurp(config_path);
        ctx.config = json::parse(config_bytes);
      } else {
        ctx.config = default_config();
        config_bytes = ctx.config.dump();
      }
      ctx.config_hash = fnv1a_hex(config_bytes);
      ctx.seed = seed_set ? seed : ctx.config.value("seed", 1ull);
      ctx.jobs = jobs;
      std::vector<std::string> to_run;
      if (scen_all)
        to_run = scenario_names();
      else if (!scen_name.empty() && has_scenario(scen_name))
        to_run = {scen_name};
      else
        throw std::invalid_argument("unknown scenario: " + scen_name);
      bool all_pass = true;
      for (auto& name : to_run) {
        ScenarioResult r = run_scenario(name, ctx);
        all_pass = all_pass && r.pass;
        if (format == "json") {
          emit(r.report, format);
        } else {
          std::cout << (r.pass ? "PASS " : "FAIL ") << name << " ("
                    << r.runtime_ms << " ms)\n";
          for (auto& d : r.details) std::cout << "  " << d << "\n";
        }
      }
      return all_pass ? 0 : 1;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource refusal: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
