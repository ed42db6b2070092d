#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bsts/catalog.hpp"
#include "bsts/constructors.hpp"
#include "bsts/document.hpp"
#include "bsts/hyperplanes.hpp"
#include "bsts/subgraphs.hpp"
#include "bsts/verify.hpp"

using namespace bsts;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kBudgetExceeded = 3;

std::string render_set(const Configuration& cfg, const PointSet& s) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (PointIndex p : s.members()) {
    out << (first ? "" : " ") << to_string(cfg.label(p));
    first = false;
  }
  out << ']';
  return out.str();
}

std::vector<int> range(int first, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = first + i;
  return v;
}

// "1-2,2-3" -> edges
std::vector<Pair> parse_edges(const std::string& text) {
  std::vector<Pair> edges;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(ErrorKind::InvalidArgument, "edge '" + item + "' is not of the form a-b");
    edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return edges;
}

ConfigurationDocument construct(const std::string& family, const std::vector<int>& params, const std::string& edges,
                                const std::string& core_file) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::InvalidArgument, family + " takes " + std::to_string(count) + " integer parameter(s)");
    }
  };
  ConfigurationDocument doc;
  DocumentMeta meta;
  meta.family = family;
  if (family == "desargues" || family == "grassmannian") {
    need(1);
    doc.cfg = desargues(params[0]);
    doc.name = "G(" + std::to_string(params[0]) + ",2)";
    meta.parameters = {{"n", params[0]}};
  } else if (family == "quasi-grassmannian") {
    need(1);
    doc.cfg = quasi_grassmannian(params[0]);
    doc.name = "R" + std::to_string(params[0]);
    meta.parameters = {{"n", params[0]}};
  } else if (family == "veronesian") {
    need(1);
    doc.cfg = veronesian(params[0]);
    doc.name = "V(3," + std::to_string(params[0]) + ")";
    meta.parameters = {{"k", params[0]}};
  } else if (family == "dual-veronesian") {
    need(1);
    doc.cfg = dual_veronesian(params[0]);
    doc.name = "V*(" + std::to_string(params[0]) + ",3)";
    meta.parameters = {{"n", params[0]}};
  } else if (family == "multi-veblen") {
    need(1);
    GraphOnX g = GraphOnX::empty(range(1, params[0]));
    g.edges = parse_edges(edges);
    doc.cfg = multi_veblen(g);
    doc.name = "M(" + std::to_string(params[0]) + ")";
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : g.edges) list.push_back({e.x, e.y});
    meta.parameters = {{"n", params[0]}, {"edges", list}};
  } else if (family == "tetrahedra") {
    need(1);
    doc.cfg = perspective_system(tetrahedra_data(params[0]));
    doc.name = std::to_string(params[0]) + "-tetrahedra";
    meta.parameters = {{"m", params[0]}};
  } else if (family == "graph-sum") {
    need(1);
    if (core_file.empty()) throw Error(ErrorKind::InvalidArgument, "graph-sum needs --core FILE");
    const auto core = read_document(core_file);
    const auto n = params[0];
    std::vector<PointIndex> mu(core.cfg.point_count());
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = static_cast<PointIndex>(i);
    doc.cfg = graph_sum(n, core.cfg, mu);
    doc.name = "K" + std::to_string(n) + "+" + core.name;
    meta.parameters = {{"n", n}, {"core", core.name}};
  } else if (family == "catalog") {
    throw Error(ErrorKind::InvalidArgument, "use `bsts catalog 103 --out DIR` to export catalog entries");
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
  }
  doc.meta = std::move(meta);
  return doc;
}

std::optional<PerspectiveData> perspective_from_meta(const ConfigurationDocument& doc) {
  if (!doc.meta) return std::nullopt;
  const auto& p = doc.meta->parameters;
  const auto& family = doc.meta->family;
  if (family == "tetrahedra" && p.contains("m")) return tetrahedra_data(p["m"].get<int>());
  if (family == "quasi-grassmannian" && p.contains("n")) return quasi_grassmannian_data(p["n"].get<int>());
  if (family == "veronesian" && p.contains("k")) return veronesian_data(p["k"].get<int>());
  return std::nullopt;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SearchBudgetExceeded: return kBudgetExceeded;
    case ErrorKind::NotProjective:
    case ErrorKind::NoDecomposition:
    case ErrorKind::FixtureMismatch:
    case ErrorKind::InvariantViolation: return kVerificationFailure;
    default: return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperplanes and Veldkamp spaces of binomial partial Steiner triple systems"};
  app.require_subcommand(1);
  int code = kOk;

  std::string family;
  std::vector<int> params;
  std::string out_file;
  std::string edges;
  std::string core_file;
  auto* construct_cmd = app.add_subcommand("construct", "Build a configuration of a named family");
  construct_cmd->add_option("family", family,
                            "desargues | quasi-grassmannian | veronesian | dual-veronesian | multi-veblen | "
                            "tetrahedra | graph-sum")
      ->required();
  construct_cmd->add_option("params", params, "Integer parameters of the family");
  construct_cmd->add_option("-o,--output", out_file, "Output file (stdout when omitted)");
  construct_cmd->add_option("--edges", edges, "multi-veblen steering graph, e.g. 1-2,2-3");
  construct_cmd->add_option("--core", core_file, "graph-sum core configuration file");
  construct_cmd->callback([&] {
    const auto doc = construct(family, params, edges, core_file);
    if (out_file.empty()) {
      std::cout << serialize(doc);
    } else {
      write_document(out_file, doc);
      std::cout << "wrote " << doc.name << " (" << doc.cfg.point_count() << " points, " << doc.cfg.line_count()
                << " lines) to " << out_file << '\n';
    }
  });

  std::string file;
  bool list = false;
  auto* hyper_cmd = app.add_subcommand("hyperplanes", "Enumerate geometric hyperplanes");
  hyper_cmd->add_option("file", file)->required();
  hyper_cmd->add_flag("--list", list, "Print every hyperplane");
  hyper_cmd->callback([&] {
    const auto doc = read_document(file);
    const auto hs = enumerate_hyperplanes(doc.cfg);
    std::cout << doc.name << ": " << hs.size() << " hyperplanes\n";
    if (list) {
      for (std::size_t i = 0; i < hs.size(); ++i) {
        std::cout << i << ' ' << hs[i].to_bit_string() << ' ' << render_set(doc.cfg, hs[i]) << '\n';
      }
    }
  });

  std::string dot_file;
  bool labeled = false;
  auto* veld_cmd = app.add_subcommand("veldkamp", "Veldkamp space and its projective dimension");
  veld_cmd->add_option("file", file)->required();
  veld_cmd->add_option("--dot", dot_file, "Write a graph description of the Veldkamp space");
  veld_cmd->add_flag("--labeled", labeled, "Tag hyperplanes with their geometry");
  veld_cmd->callback([&] {
    const auto doc = read_document(file);
    if (labeled) {
      const auto lv = labeled_veldkamp(doc.cfg);
      std::cout << doc.name << ": " << lv.summary() << ", " << lv.space.lines.size() << " lines\n";
      for (std::size_t i = 0; i < lv.geometry.size(); ++i) {
        std::cout << 'h' << i << ' ' << lv.geometry[i].label << ' ' << render_set(doc.cfg, lv.space.hyperplanes[i])
                  << '\n';
      }
      if (!dot_file.empty()) {
        std::vector<std::string> tags;
        for (const auto& g : lv.geometry) tags.push_back(g.label);
        std::ofstream(dot_file) << emit_veldkamp_dot(lv.space, &tags);
      }
    } else {
      const auto vs = veldkamp_space(doc.cfg);
      std::cout << doc.name << ": PG(" << vs.dimension << ",2), " << vs.hyperplanes.size() << " points, "
                << vs.lines.size() << " lines\n";
      if (!dot_file.empty()) std::ofstream(dot_file) << emit_veldkamp_dot(vs);
    }
  });

  int size = 0;
  auto* free_cmd = app.add_subcommand("free-graphs", "Freely contained complete graphs of a given size");
  free_cmd->add_option("file", file)->required();
  free_cmd->add_option("--size", size, "Number of vertices")->required();
  free_cmd->callback([&] {
    const auto doc = read_document(file);
    const auto found = find_free_complete_graphs(doc.cfg, size);
    std::cout << doc.name << ": " << found.size() << " free K" << size << '\n';
    for (const auto& w : found) std::cout << render_set(doc.cfg, w.vertices) << '\n';
  });

  auto* classify_cmd = app.add_subcommand("classify", "Geometry of every hyperplane");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->callback([&] {
    const auto doc = read_document(file);
    const auto hs = enumerate_hyperplanes(doc.cfg);
    std::cout << doc.name << ": " << hs.size() << " hyperplanes\n";
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const auto g = classify_hyperplane(doc.cfg, hs[i]);
      std::cout << 'h' << i << ' ' << g.label;
      for (const auto& c : g.components) std::cout << ' ' << render_set(doc.cfg, c.members);
      std::cout << '\n';
    }
  });

  std::vector<int> set_a;
  auto* criteria_cmd = app.add_subcommand("criteria", "Check whether H(A|W\\A) is a hyperplane");
  criteria_cmd->add_option("file", file)->required();
  criteria_cmd->add_option("--set", set_a, "Elements of A");
  criteria_cmd->callback([&] {
    const auto doc = read_document(file);
    if (const auto data = perspective_from_meta(doc)) {
      const auto v = check_partition_criteria(*data, set_a);
      std::cout << "criteria: " << (v.hyperplane ? "hyperplane" : "not a hyperplane");
      if (!v.failed.empty()) {
        std::cout << " (failed";
        for (auto f : v.failed) std::cout << ' ' << to_string(f);
        std::cout << ')';
      }
      std::cout << "\ndirect: " << (v.direct ? "hyperplane" : "not a hyperplane") << '\n';
      if (!v.agrees()) code = kVerificationFailure;
    } else {
      const auto h = partition_hyperplane(doc.cfg, set_a);
      std::cout << "direct: " << (is_hyperplane(doc.cfg, h) ? "hyperplane" : "not a hyperplane") << ' '
                << render_set(doc.cfg, h) << '\n';
    }
  });

  std::string which;
  std::string out_dir;
  auto* catalog_cmd = app.add_subcommand("catalog", "Named configuration catalogs");
  catalog_cmd->add_option("which", which, "Catalog name (103)")->required();
  catalog_cmd->add_option("--out", out_dir, "Write each entry as a document into this directory");
  catalog_cmd->callback([&] {
    if (which != "103") throw Error(ErrorKind::InvalidArgument, "only the 103 catalog exists");
    for (const auto& e : catalog_103()) {
      std::cout << e.name << ": hyperplanes " << e.expected.hyperplane_count << ", Veblen "
                << e.expected.veblen_count << ", free K4 " << e.expected.free_k4_count << ", "
                << e.expected.labeled_veldkamp_summary << '\n';
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        ConfigurationDocument doc{e.name, e.cfg, DocumentMeta{"catalog-10_3", {{"entry", e.name}}}};
        write_document(out_dir + "/" + e.name + ".json", doc);
      }
    }
  });

  int census_n = 5;
  auto* census_cmd = app.add_subcommand("census", "All binomial configurations of a given size");
  census_cmd->add_option("--n", census_n, "Parameter n of B(n,0)")->required();
  census_cmd->add_option("--out", out_dir, "Write each class representative into this directory");
  census_cmd->callback([&] {
    const auto result = generate_all_binomial(census_n);
    std::cout << "B(" << census_n << ",0): " << result.classes.size() << " classes (" << result.completions
              << " labelled completions, " << result.nodes << " nodes)\n";
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
      const auto& cls = result.classes[i];
      const auto& s = cls.signature.summary;
      std::cout << '#' << i << " hyperplanes " << s.hyperplanes << ", free K" << s.free_graph_size << ' '
                << s.free_graphs << ", certificate " << cls.signature.certificate.to_hex().substr(0, 16) << "...\n";
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        ConfigurationDocument doc{"census-" + std::to_string(census_n) + "-" + std::to_string(i), cls.representative,
                                  DocumentMeta{"census", {{"n", census_n}, {"index", i}}}};
        write_document(out_dir + "/" + doc.name + ".json", doc);
      }
    }
  });

  auto* hyp_cmd = app.add_subcommand("hypothesis", "Connected-or-split check of every hyperplane");
  hyp_cmd->add_option("file", file)->required();
  hyp_cmd->callback([&] {
    const auto doc = read_document(file);
    const auto r = check_connected_or_split_hypothesis(doc.cfg);
    std::cout << doc.name << ": B(" << r.n << ",0), " << r.hyperplane_count << " hyperplanes, " << r.split_count
              << " split; dichotomy " << (r.holds ? "holds" : "FAILS") << "; mutual complement "
              << (r.mutual_complement ? "holds" : "FAILS") << '\n';
    for (const auto& v : r.counterexamples) {
      std::cout << "counterexample h" << v.hyperplane << " [" << v.label << "]: " << v.reason << '\n';
    }
    if (!r.holds) code = kVerificationFailure;
  });

  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->add_option("--only", only, "Criterion numbers to run");
  verify_cmd->callback([&] {
    const auto report = run_verify_suite(&std::cout, only);
    if (report.any_failed()) {
      code = kVerificationFailure;
    } else if (!report.all_passed()) {
      code = kBudgetExceeded;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return code;
}
