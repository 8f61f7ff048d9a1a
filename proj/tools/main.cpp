// Command line front end: family generators, exact distinguishing searches,
// constructive labelings, labeling verification, theorem surveys and the
// Mycielskian comparison experiment.
//
// Exit codes: 0 ok, 1 error, 2 bound violation outside documented exceptions.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symbreak/constructive.hpp"
#include "symbreak/distinguish.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/group.hpp"
#include "symbreak/survey.hpp"

using namespace symbreak;

namespace {

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return arg;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::BadParams, "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Err::BadParams, "cannot open " + out_path);
  out << text;
}

LabelKind parse_kind(const std::string& kind) {
  if (kind == "vertex") return LabelKind::Vertex;
  if (kind == "edge") return LabelKind::Edge;
  fail(Err::BadParams, "kind must be vertex or edge");
}

std::pair<int, int> parse_range(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    int v = std::stoi(spec);
    return {v, v};
  }
  return {std::stoi(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))};
}

int cmd_gen(const std::string& family, const std::vector<int>& params, bool all, int iterate,
            bool structures, const std::string& out_path) {
  std::ostringstream os;
  auto emit = [&](const Graph& g) { os << to_graph6(g) << "\n"; };
  if (family == "mop") {
    if (params.empty()) fail(Err::BadParams, "gen mop needs an order");
    if (all)
      for (const Graph& g : enumerate_mops(params[0])) emit(g);
    else
      emit(enumerate_mops(params[0]).front());
  } else if (family == "halin") {
    if (params.empty()) fail(Err::BadParams, "gen halin needs an order");
    if (structures) {
      for (const HalinStructure& h : enumerate_halin_structures(params[0]))
        os << halin_to_json(h).dump() << "\n";
    } else if (all) {
      for (const Graph& g : enumerate_halin(params[0])) emit(g);
    } else {
      emit(enumerate_halin(params[0]).front());
    }
  } else if (family == "mycielski") {
    if (iterate >= 2)
      emit(mycielski_sequence(iterate));
    else if (!params.empty())
      emit(mycielski_sequence(params[0]));
    else
      fail(Err::BadParams, "gen mycielski needs --iterate i");
  } else if (family == "connected") {
    if (params.empty()) fail(Err::BadParams, "gen connected needs an order");
    for (const Graph& g : enumerate_connected_graphs(params[0])) emit(g);
  } else if (family == "clique4") {
    int count = params.empty() ? 20 : params[0];
    for (const Graph& g : clique4_instances(count)) emit(g);
  } else {
    StandardFamily kind = standard_family_from_name(family);
    if (params.empty()) fail(Err::BadParams, "gen " + family + " needs parameters");
    emit(gen_standard(kind, params[0], params.size() > 1 ? params[1] : 0));
  }
  write_output(out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph symmetry breaking toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit graphs as graph6 lines");
  std::string gen_family, gen_out;
  std::vector<int> gen_params;
  bool gen_all = false;
  bool gen_structures = false;
  int gen_iterate = 0;
  gen->add_option("family", gen_family)->required();
  gen->add_option("params", gen_params);
  gen->add_flag("--all", gen_all, "emit every member of the family at this order");
  gen->add_flag("--structures", gen_structures,
                "for halin: emit tree, embedding and leaf cycle as JSON lines");
  gen->add_option("--iterate", gen_iterate, "mycielski iterate index");
  gen->add_option("--out", gen_out);

  // mu
  auto* mu_cmd = app.add_subcommand("mu", "mycielskian of a graph6 input");
  std::string mu_g6, mu_out;
  bool mu_map = false;
  mu_cmd->add_option("graph6", mu_g6)->required();
  mu_cmd->add_flag("--map", mu_map, "also print the layer correspondence as JSON");
  mu_cmd->add_option("--out", mu_out);

  // dist
  auto* dist = app.add_subcommand("dist", "exact distinguishing number or index");
  std::string dist_g6 = "-", dist_kind = "vertex", dist_out;
  int dist_maxd = 0;
  dist->add_option("graph6", dist_g6, "graph6 line or - for stdin");
  dist->add_option("--kind", dist_kind, "vertex or edge");
  dist->add_option("--max-d", dist_maxd, "label budget (default n or m)");
  dist->add_option("--out", dist_out);

  // aut
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group generators and order");
  std::string aut_g6 = "-", aut_out;
  aut_cmd->add_option("graph6", aut_g6);
  aut_cmd->add_option("--out", aut_out);

  // label
  auto* label = app.add_subcommand("label", "constructive certified labelings");
  std::string label_proc, label_arg, label_base_g6, label_base_file, label_tree_file,
      label_kind = "vertex", label_out;
  label->add_option("procedure", label_proc,
                    "cycle-vertex|cycle-edge|clique4|unique-ham|mop-vertex|mop-edge|"
                    "halin-vertex|halin-edge|myc-extend|myc-iterate")
      ->required();
  label->add_option("arg", label_arg, "cycle length, iterate index, or graph6");
  label->add_option("--base-graph", label_base_g6, "base graph6 for myc-extend");
  label->add_option("--base-labeling", label_base_file, "JSON labeling file for myc-extend");
  label->add_option("--plane-tree", label_tree_file, "JSON plane tree for halin-*");
  label->add_option("--kind", label_kind, "vertex or edge");
  label->add_option("--out", label_out);

  // verify
  auto* verify = app.add_subcommand("verify", "check a labeling for distinguishing");
  std::string ver_g6, ver_labeling, ver_kind = "vertex", ver_out;
  verify->add_option("graph6", ver_g6)->required();
  verify->add_option("--labeling", ver_labeling, "JSON file or inline JSON")->required();
  verify->add_option("--kind", ver_kind);
  verify->add_option("--out", ver_out);

  // survey
  auto* survey = app.add_subcommand("survey", "run theorem checks over a family");
  RunConfig scfg;
  std::string survey_n = "", survey_out, survey_json_out, survey_format = "csv";
  survey->add_option("--family", scfg.family)->required();
  survey->add_option("--n", survey_n, "order or lo:hi range");
  survey->add_option("--max-d", scfg.max_d);
  survey->add_option("--workers", scfg.workers);
  survey->add_option("--seed", scfg.seed);
  survey->add_option("--selfcheck", scfg.selfcheck, "random relabel re-computations per row");
  survey->add_option("--format", survey_format, "csv or json");
  survey->add_option("--out", survey_out);
  survey->add_option("--json-out", survey_json_out);

  // conjecture
  auto* conj =
      app.add_subcommand("conjecture", "compare D and D' of G with its mycielskian");
  std::string conj_n = "3:6", conj_out, conj_json_out, conj_format = "csv";
  int conj_workers = 1;
  conj->add_option("--n", conj_n, "order or lo:hi range (cap 7)");
  conj->add_option("--workers", conj_workers);
  conj->add_option("--format", conj_format);
  conj->add_option("--out", conj_out);
  conj->add_option("--json-out", conj_json_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(gen_family, gen_params, gen_all, gen_iterate, gen_structures, gen_out);

    if (mu_cmd->parsed()) {
      Graph g = from_graph6(read_input(mu_g6));
      auto [m, map] = mycielskian(g);
      std::ostringstream os;
      os << to_graph6(m) << "\n";
      if (mu_map) {
        json j;
        j["base_n"] = map.base_n;
        j["v_ids"] = map.v_ids;
        j["u_ids"] = map.u_ids;
        j["w_id"] = map.w_id;
        os << j.dump(2) << "\n";
      }
      write_output(mu_out, os.str());
      return 0;
    }

    if (dist->parsed()) {
      std::string text = read_input(dist_g6);
      LabelKind kind = parse_kind(dist_kind);
      json rows = json::array();
      for (const Graph& g : read_graph6_lines(text)) {
        int budget = dist_maxd > 0
                         ? dist_maxd
                         : (kind == LabelKind::Vertex ? g.order() : std::max(1, g.size()));
        DistResult r = kind == LabelKind::Vertex ? distinguishing_number(g, budget)
                                                 : distinguishing_index(g, budget);
        rows.push_back(dist_result_to_json(g, kind, r));
      }
      write_output(dist_out, rows.size() == 1 ? rows[0].dump(2) : rows.dump(2));
      return 0;
    }

    if (aut_cmd->parsed()) {
      Graph g = from_graph6(read_input(aut_g6));
      write_output(aut_out, autgroup_to_json(automorphisms(g)).dump(2));
      return 0;
    }

    if (label->parsed()) {
      CertifiedLabeling cl;
      Graph target;
      if (label_proc == "cycle-vertex" || label_proc == "cycle-edge") {
        int n = std::stoi(label_arg);
        target = gen_standard(StandardFamily::Cycle, n);
        cl = label_proc == "cycle-vertex" ? cycle_vertex_labeling(n) : cycle_edge_labeling(n);
      } else if (label_proc == "clique4") {
        target = from_graph6(read_input(label_arg));
        cl = clique4_bfs_labeling(target);
      } else if (label_proc == "unique-ham") {
        target = from_graph6(read_input(label_arg));
        cl = unique_hamiltonian_labeling(target);
      } else if (label_proc == "mop-vertex" || label_proc == "mop-edge") {
        target = from_graph6(read_input(label_arg));
        cl = label_proc == "mop-vertex" ? mop_vertex_labeling(target) : mop_edge_labeling(target);
      } else if (label_proc == "halin-vertex" || label_proc == "halin-edge") {
        if (label_tree_file.empty()) fail(Err::BadParams, "halin labeling needs --plane-tree");
        json tj = read_json_file(label_tree_file);
        PlaneTree pt;
        std::vector<std::pair<int, int>> es;
        for (const auto& e : tj.at("tree_edges"))
          es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        int tn = 0;
        for (auto [a, b] : es) tn = std::max({tn, a + 1, b + 1});
        pt.tree = Graph(tn, es);
        if (tj.contains("child_order"))
          pt.neighbor_order = tj.at("child_order").get<std::vector<std::vector<int>>>();
        else {
          pt.neighbor_order.resize(tn);
          for (int v = 0; v < tn; ++v) pt.neighbor_order[v] = pt.tree.neighbors(v);
        }
        pt.root = tj.value("root", -1);
        if (pt.root < 0 || pt.tree.degree(pt.root) < 2)
          for (int v = 0; v < tn; ++v)
            if (pt.tree.degree(v) >= 3) {
              pt.root = v;
              break;
            }
        HalinStructure h = halin_from_plane_tree(pt);
        target = h.graph;
        cl = label_proc == "halin-vertex" ? halin_vertex_labeling(h) : halin_edge_labeling(h);
      } else if (label_proc == "myc-extend") {
        if (label_base_g6.empty() || label_base_file.empty())
          fail(Err::BadParams, "myc-extend needs --base-graph and --base-labeling");
        Graph base = from_graph6(label_base_g6);
        auto [m, map] = mycielskian(base);
        target = m;
        LabelKind kind = parse_kind(label_kind);
        json lj = read_json_file(label_base_file);
        auto labels = labeling_from_json(base, kind, lj);
        cl = kind == LabelKind::Vertex
                 ? mycielskian_extend_vertex(base, VertexLabeling{labels}, m, map)
                 : mycielskian_extend_edge(base, EdgeLabeling{labels}, m, map);
      } else if (label_proc == "myc-iterate") {
        int i = std::stoi(label_arg);
        target = mycielski_sequence(i);
        cl = mycielski_iterate_labeling(i, parse_kind(label_kind));
      } else {
        fail(Err::BadParams, "unknown labeling procedure '" + label_proc + "'");
      }
      json j = certified_to_json(target, cl);
      j["graph6"] = to_graph6(target);
      write_output(label_out, j.dump(2));
      return 0;
    }

    if (verify->parsed()) {
      Graph g = from_graph6(read_input(ver_g6));
      LabelKind kind = parse_kind(ver_kind);
      json lj;
      if (!ver_labeling.empty() && ver_labeling.front() == '{')
        lj = json::parse(ver_labeling);
      else
        lj = read_json_file(ver_labeling);
      auto labels = labeling_from_json(g, kind, lj);
      std::optional<Permutation> counter =
          kind == LabelKind::Vertex ? nontrivial_preserving_automorphism(g, labels, {})
                                    : nontrivial_preserving_automorphism(g, {}, labels);
      json j;
      j["graph6"] = to_graph6(g);
      j["distinguishing"] = !counter.has_value();
      if (counter) j["counterexample"] = counter->img;
      write_output(ver_out, j.dump(2));
      return 0;
    }

    if (survey->parsed()) {
      if (!survey_n.empty()) {
        auto [lo, hi] = parse_range(survey_n);
        scfg.n_lo = lo;
        scfg.n_hi = hi;
      }
      SurveyReport rep = run_survey(scfg);
      if (!survey_json_out.empty()) write_output(survey_json_out, survey_json(rep).dump(2) + "\n");
      if (survey_format == "json" && survey_json_out.empty()) {
        write_output(survey_out, survey_json(rep).dump(2) + "\n");
      } else if (survey_format == "graph6") {
        std::ostringstream os;
        for (const SurveyRow& row : rep.rows) os << row.graph6 << "\n";
        write_output(survey_out, os.str());
      } else {
        write_output(survey_out, survey_csv(rep));
      }
      std::cerr << "rows=" << rep.rows.size() << " violations=" << rep.violations
                << " documented_exceptions=" << rep.exceptions << "\n";
      return rep.violations > 0 ? 2 : 0;
    }

    if (conj->parsed()) {
      RunConfig cfg;
      auto [lo, hi] = parse_range(conj_n);
      cfg.n_lo = lo;
      cfg.n_hi = hi;
      cfg.workers = conj_workers;
      if (hi > 7) fail(Err::SizeLimit, "conjecture experiment capped at n <= 7");
      SurveyReport rep = run_conjecture(cfg);
      if (!conj_json_out.empty())
        write_output(conj_json_out, survey_json(rep, false).dump(2) + "\n");
      if (conj_format == "json" && conj_json_out.empty())
        write_output(conj_out, survey_json(rep, false).dump(2) + "\n");
      else
        write_output(conj_out, survey_csv(rep, false));
      std::cerr << "rows=" << rep.rows.size()
                << " vertex_violations=" << rep.summary["vertex_violation_count"]
                << " edge_violations=" << rep.summary["edge_violation_count"] << "\n";
      return 0;
    }
  } catch (const Error& e) {
    json err;
    err["error"] = err_name(e.code());
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"Unhandled\",\"message\":\"" << e.what() << "\"}\n";
    return 1;
  }
  return 0;
}
