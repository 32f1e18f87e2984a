// raagout: command-line front end for the raag library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raag/decide.hpp"
#include "raag/errors.hpp"
#include "raag/gen.hpp"
#include "raag/io.hpp"
#include "raag/mc.hpp"
#include "raag/presentation.hpp"

#ifndef RAAG_VERSION
#define RAAG_VERSION "0.0.0"
#endif

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw raag::InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

raag::SimplicialGraph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  if (format == "json") return raag::parse_graph(text, raag::GraphFormat::kJson);
  if (format == "dot") return raag::parse_graph(text, raag::GraphFormat::kDot);
  return raag::parse_graph(text);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw raag::InputError("cannot write " + out_path);
  out << content;
}

template <class T>
std::vector<T> split_list(const std::string& s) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v;
    if (!(is >> v) || !(is >> std::ws).eof()) throw CLI::ValidationError("bad list element: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Out(A_Gamma) analysis for right-angled Artin groups"};
  app.set_version_flag("--version", RAAG_VERSION);
  app.require_subcommand(1);

  std::string out_path;
  std::string in_format = "auto";
  auto add_input = [&](CLI::App* sub, std::string& file) {
    sub->add_option("file", file, "graph file (JSON or DOT), - for stdin")->required();
    sub->add_option("--input-format", in_format, "auto, json or dot")
        ->check(CLI::IsMember({"auto", "json", "dot"}));
    sub->add_option("--out,-o", out_path, "write to a file instead of stdout");
  };

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "order, SIL pairs, maximal system, pc table");
  add_input(analyze, analyze_file);

  std::string decide_file;
  auto* decide = app.add_subcommand("decide", "acylindrical hyperbolicity verdicts with certificate");
  add_input(decide, decide_file);

  std::string pres_file, pres_format = "text";
  auto* pres = app.add_subcommand("presentation", "finite presentation of PSO");
  add_input(pres, pres_file);
  pres->add_option("--format", pres_format, "text, gap or json")->check(CLI::IsMember({"text", "gap", "json"}));

  auto* gen = app.add_subcommand("gen", "emit a graph");
  gen->require_subcommand(1);
  std::string gen_format = "json";
  gen->add_option("--format", gen_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("--out,-o", out_path, "write to a file instead of stdout");
  int lambda_m = 0;
  auto* gen_lambda = gen->add_subcommand("lambda", "Lambda_m");
  gen_lambda->add_option("m", lambda_m)->required();
  int gp = 0, gq = 0, gr = 0;
  auto* gen_gamma = gen->add_subcommand("gamma", "Gamma(p, q, r)");
  gen_gamma->add_option("p", gp)->required();
  gen_gamma->add_option("q", gq)->required();
  gen_gamma->add_option("r", gr)->required();
  std::size_t gnp_n = 0;
  double gnp_p = 0.0;
  std::uint64_t gnp_seed = 0;
  auto* gen_gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gen_gnp->add_option("n", gnp_n)->required()->check(CLI::Range(std::size_t{1}, raag::kMaxVertices));
  gen_gnp->add_option("p", gnp_p)->required()->check(CLI::Range(0.0, 1.0));
  gen_gnp->add_option("--seed", gnp_seed);
  std::string named_name;
  auto* gen_named = gen->add_subcommand("named", "figure fixtures");
  gen_named->add_option("name", named_name)->required()->check(CLI::IsMember(raag::named_graph_names()));

  for (auto* leaf : {gen_lambda, gen_gamma, gen_gnp, gen_named}) leaf->fallthrough();

  std::string mc_n = "100", mc_p = "0.3";
  std::size_t mc_samples = 200, mc_threads = 0;
  std::uint64_t mc_seed = 7;
  auto* mc = app.add_subcommand("mc", "Monte Carlo statistics over G(n, p) as CSV");
  mc->add_option("--n", mc_n, "comma-separated vertex counts");
  mc->add_option("--p", mc_p, "comma-separated edge probabilities");
  mc->add_option("--samples", mc_samples)->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_seed);
  mc->add_option("--threads", mc_threads, "0 = RAAG_OUT_THREADS or hardware");
  mc->add_option("--out,-o", out_path, "write to a file instead of stdout");

  std::vector<std::size_t> ns;
  std::vector<double> ps;
  try {
    app.parse(argc, argv);
    if (mc->parsed()) {
      ns = split_list<std::size_t>(mc_n);
      ps = split_list<double>(mc_p);
      for (auto n : ns)
        if (n < 1 || n > raag::kMaxVertices) throw CLI::ValidationError("--n out of range");
      for (auto p : ps)
        if (p < 0.0 || p > 1.0) throw CLI::ValidationError("--p must lie in [0, 1]");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      emit(out_path, raag::analysis_report(load_graph(analyze_file, in_format)).dump(2) + "\n");
    } else if (decide->parsed()) {
      const auto d = raag::decide(load_graph(decide_file, in_format));
      emit(out_path, raag::decision_to_json(d).dump(2) + "\n");
    } else if (pres->parsed()) {
      const auto p = raag::pso_presentation(load_graph(pres_file, in_format));
      const auto f = pres_format == "gap"    ? raag::PresentationFormat::kGap
                     : pres_format == "json" ? raag::PresentationFormat::kJson
                                             : raag::PresentationFormat::kText;
      emit(out_path, raag::export_presentation(p, f));
    } else if (gen->parsed()) {
      raag::SimplicialGraph g;
      if (gen_lambda->parsed())
        g = raag::lambda_graph(lambda_m);
      else if (gen_gamma->parsed())
        g = raag::gamma_pqr(gp, gq, gr);
      else if (gen_gnp->parsed())
        g = raag::gnp({gnp_n, gnp_p, gnp_seed});
      else
        g = raag::named_graph(named_name);
      emit(out_path, raag::serialize_graph(g, gen_format == "dot" ? raag::GraphFormat::kDot : raag::GraphFormat::kJson));
    } else if (mc->parsed()) {
      std::string csv = raag::csv_header() + "\n";
      for (const auto& r : raag::sweep(ns, ps, mc_samples, mc_seed, mc_threads)) csv += raag::csv_row(r) + "\n";
      emit(out_path, csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "raagout: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
