#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "manifest.hpp"
#include "propsim/core_stats.hpp"
#include "propsim/datagen.hpp"
#include "propsim/error.hpp"
#include "propsim/network.hpp"
#include "propsim/normalize.hpp"
#include "propsim/similarity.hpp"
#include "propsim/transform.hpp"

namespace propsim::cli {
namespace {

constexpr const char* kVersion = PROPSIM_VERSION;

Error usage(const std::string& what) { return Error(ErrorCode::usage, what); }

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(',', start);
    std::string_view cell(text.data() + start,
                          (pos == std::string::npos ? text.size() : pos) - start);
    while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
    while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v))
      throw usage(std::string(flag) + ": '" + text + "' is not a comma-separated list of numbers");
    out.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<double> parse_fixed(const std::string& text, std::size_t n, const char* flag) {
  auto v = parse_list(text, flag);
  if (v.size() != n)
    throw usage(std::string(flag) + ": expected " + std::to_string(n) + " values, got " +
                std::to_string(v.size()));
  return v;
}

Resolution parse_resolution(const std::string& text) {
  std::string t = text;
  for (char& c : t)
    if (c == 'x' || c == 'X') c = ',';
  const auto v = parse_fixed(t, 2, "--resolution");
  for (double d : v)
    if (!(d >= 1.0) || d != std::floor(d) || d > 1e6)
      throw usage("--resolution: cells must be positive integers");
  return {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1])};
}

ComparisonIndex make_index(const std::string& name, double d, double e) {
  const auto kind = parse_index(name);
  if (!kind) throw usage("unknown index '" + name + "'");
  if (!(d > 0.0) || !std::isfinite(d)) throw usage("--d must be a positive real");
  if (!(e > 0.0) || !std::isfinite(e)) throw usage("--e must be a positive real");
  return ComparisonIndex::make(*kind, d, e);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::io, "write failed for '" + path + "'");
}

RunManifest manifest_for(const std::string& command) {
  RunManifest m;
  m.command = command;
  m.tool_version = kVersion;
  return m;
}

// --- subcommands -------------------------------------------------------------

struct GenerateArgs {
  std::uint64_t seed = 1;
  std::size_t n = 100;
  std::string representation = "uniform";
  std::string out;
};

void cmd_generate(const GenerateArgs& a) {
  const auto rep = parse_representation(a.representation);
  if (!rep) throw usage("--representation must be uniform or proportional");
  if (a.n < 2) throw usage("--n must be at least 2");
  const FeatureMatrix m = build_dataset({a.seed, a.n, *rep});
  write_matrix_file(a.out, m);

  auto man = manifest_for("generate");
  man.seed = a.seed;
  man.set("n_per_category", std::to_string(a.n));
  man.set("representation", a.representation);
  man.set("rows", std::to_string(m.rows()));
  man.outputs = {a.out};
  man.write(a.out + ".manifest");
}

struct NormalizeArgs {
  std::string method;
  std::string in;
  std::string out;
};

void cmd_normalize(const NormalizeArgs& a) {
  const auto method = parse_method(a.method);
  if (!method) throw usage("--method must be standardize, spn or jpn");
  const FeatureMatrix src = load_matrix_file(a.in);
  const FeatureMatrix m = normalize_matrix(src, *method);
  write_matrix_file(a.out, m);

  auto man = manifest_for("normalize");
  man.set("method", a.method);
  const auto stats = matrix_stats(m);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const auto& name = m.feature_names()[k];
    const auto& s = stats[k];
    man.set("result." + name + ".mean", format_double(s.mean));
    man.set("result." + name + ".std", format_double(s.std));
    man.set("result." + name + ".xi_p", format_double(s.xi_p));
    man.set("result." + name + ".xi_n", format_double(s.xi_n));
    if (s.count == 1) man.set("result." + name + ".std_note", "single sample, std defined as 0");
  }
  man.inputs = {a.in};
  man.outputs = {a.out};
  man.write(a.out + ".manifest");
}

struct CompareArgs {
  std::string index;
  double d = 1.0;
  double e = 1.0;
  std::string x;
  std::string y;
};

void cmd_compare(const CompareArgs& a, std::ostream& out) {
  const auto idx = make_index(a.index, a.d, a.e);
  if (idx.kind == IndexKind::euclid_complement)
    throw usage("euclid-complement needs a point set; use the network command");
  const auto x = parse_list(a.x, "--x");
  const auto y = parse_list(a.y, "--y");
  if (x.size() != y.size())
    throw usage("dimension mismatch: --x has " + std::to_string(x.size()) + " values, --y has " +
                std::to_string(y.size()));
  out << format_double(idx.evaluate(x, y)) << '\n';
}

struct NetworkArgs {
  std::string in;
  std::string index;
  double d = 1.0;
  double e = 1.0;
  std::optional<double> tau;
  std::uint64_t layout_seed = 1;
  std::size_t iterations = 200;
  std::string out;
};

void cmd_network(const NetworkArgs& a) {
  const auto idx = make_index(a.index, a.d, a.e);
  if (a.tau && !(*a.tau >= 0.0 && *a.tau <= 1.0)) throw usage("--tau must lie in [0, 1]");
  const FeatureMatrix m = load_matrix_file(a.in);
  const WeightedGraph full = similarity_network(m, idx);
  const WeightedGraph g = a.tau ? threshold_graph(full, *a.tau) : full;
  const auto coords = force_layout(g, a.layout_seed, a.iterations);

  const std::string edges_path = a.out + ".edges.tsv";
  const std::string nodes_path = a.out + ".nodes.tsv";
  const std::string sep_path = a.out + ".separation.txt";

  std::ostringstream edges, nodes, sep;
  write_edge_list(edges, g);
  write_node_file(nodes, g, coords);
  if (full.node_labels) {
    const auto r = separation_report(full);
    sep << "within_mean=" << format_double(r.within_mean) << '\n'
        << "between_mean=" << format_double(r.between_mean) << '\n'
        << "gap=" << format_double(r.gap) << '\n'
        << "within_edges=" << r.within_edges << '\n'
        << "between_edges=" << r.between_edges << '\n';
  } else {
    sep << "unavailable=no labels\n";
  }
  write_text(edges_path, edges.str());
  write_text(nodes_path, nodes.str());
  write_text(sep_path, sep.str());

  auto man = manifest_for("network");
  man.seed = a.layout_seed;
  man.set("index", idx.describe());
  man.set("tau", a.tau ? format_double(*a.tau) : "none");
  man.set("iterations", std::to_string(a.iterations));
  man.set("nodes", std::to_string(g.n_nodes));
  man.set("edges", std::to_string(g.edges.size()));
  man.inputs = {a.in};
  man.outputs = {edges_path, nodes_path, sep_path};
  man.write(a.out + ".manifest");
}

struct ReceptiveArgs {
  std::string index;
  double d = 1.0;
  double e = 1.0;
  std::string ref;
  std::string bounds;
  std::string resolution;
  double tau = 0.7;
  std::string out;
};

void cmd_receptive_field(const ReceptiveArgs& a) {
  const auto idx = make_index(a.index, a.d, a.e);
  if (!idx.is_similarity() || idx.kind == IndexKind::euclid_complement)
    throw usage("receptive fields need jaccard, interiority, coincidence or mjaccard");
  const auto ref = parse_fixed(a.ref, 2, "--ref");
  const auto b = parse_fixed(a.bounds, 4, "--bounds");
  const Bounds bounds{b[0], b[1], b[2], b[3]};
  if (!(bounds.x_max > bounds.x_min) || !(bounds.y_max > bounds.y_min))
    throw usage("--bounds must be x_min,x_max,y_min,y_max with min < max");
  const Resolution res = parse_resolution(a.resolution);
  if (!(a.tau >= 0.0 && a.tau <= 1.0)) throw usage("--tau must lie in [0, 1]");

  const auto grid = receptive_field(idx, {ref[0], ref[1]}, bounds, res, a.tau);
  std::ostringstream text;
  write_receptive_field(text, grid);
  write_text(a.out, text.str());

  auto man = manifest_for("receptive-field");
  man.set("index", idx.describe());
  man.set("reference", a.ref);
  man.set("bounds", a.bounds);
  man.set("resolution", std::to_string(res.nx) + "x" + std::to_string(res.ny));
  man.set("tau", format_double(a.tau));
  man.set("area", std::to_string(grid.area()));
  man.set("undefined_cells", std::to_string(grid.undefined_cells));
  man.outputs = {a.out};
  man.write(a.out + ".manifest");
}

struct SlopeArgs {
  double c = 2.0;
  double a = 0.0;
  double b = 10.0;
  std::size_t n = 1000000;
  std::size_t bins = 40;
  std::uint64_t seed = 1;
};

void cmd_slope_check(const SlopeArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.c > 1.0)) throw usage("--c must be greater than 1");
  if (!(a.b > a.a)) throw usage("--b must be greater than --a");
  if (a.bins < 10) throw usage("--bins must be at least 10");
  const TransformSpec f = TransformSpec::proportional(a.c);
  std::mt19937_64 rng(a.seed);
  std::uniform_real_distribution<double> ux(a.a, a.b);
  std::vector<double> ys(a.n);
  for (auto& y : ys) y = apply_transform(f, ux(rng));
  const SlopeFit fit = fit_loglog(ys, a.bins);
  out << "slope=" << format_double(fit.slope) << '\n'
      << "slope_stderr=" << format_double(fit.slope_stderr) << '\n'
      << "intercept=" << format_double(fit.intercept) << '\n'
      << "bins=" << fit.bins << '\n'
      << "used_bins=" << fit.used_bins << '\n'
      << "samples=" << fit.samples << '\n';
  if (a.n < kMinReliableSamples)
    err << "warning: only " << a.n << " samples (< " << kMinReliableSamples
        << "); slope confidence is wide\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feature normalization, proportional comparisons and similarity networks",
               "propsim"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* sc_gen = app.add_subcommand("generate", "Generate the two-category synthetic dataset");
  sc_gen->add_option("--seed", gen.seed, "RNG seed");
  sc_gen->add_option("--n", gen.n, "Rows per category");
  sc_gen->add_option("--representation", gen.representation, "uniform|proportional");
  sc_gen->add_option("--out", gen.out, "Output CSV")->required();

  NormalizeArgs norm;
  auto* sc_norm = app.add_subcommand("normalize", "Normalize every feature of a CSV");
  sc_norm->add_option("--method", norm.method, "standardize|spn|jpn")->required();
  sc_norm->add_option("--in", norm.in, "Input CSV")->required();
  sc_norm->add_option("--out", norm.out, "Output CSV")->required();

  CompareArgs cmp;
  auto* sc_cmp = app.add_subcommand("compare", "Compare two vectors");
  sc_cmp->add_option("--index", cmp.index, "euclid|jaccard|interiority|coincidence|mjaccard")
      ->required();
  sc_cmp->add_option("--d", cmp.d, "Exponent D");
  sc_cmp->add_option("--e", cmp.e, "Exponent E");
  sc_cmp->add_option("--x", cmp.x, "First vector, comma-separated")->required();
  sc_cmp->add_option("--y", cmp.y, "Second vector, comma-separated")->required();

  NetworkArgs net;
  double net_tau = -1.0;
  auto* sc_net = app.add_subcommand("network", "Build a similarity network from a CSV");
  sc_net->add_option("--in", net.in, "Input CSV")->required();
  sc_net->add_option("--index", net.index, "coincidence|mjaccard|euclid-complement|...")
      ->required();
  sc_net->add_option("--d", net.d, "Exponent D");
  sc_net->add_option("--e", net.e, "Exponent E");
  auto* tau_opt = sc_net->add_option("--tau", net_tau, "Keep edges with weight >= tau");
  sc_net->add_option("--layout-seed", net.layout_seed, "Layout seed");
  sc_net->add_option("--iterations", net.iterations, "Layout iterations");
  sc_net->add_option("--out", net.out, "Output prefix")->required();

  ReceptiveArgs rf;
  auto* sc_rf = app.add_subcommand("receptive-field", "Thresholded similarity map around a point");
  sc_rf->add_option("--index", rf.index, "jaccard|interiority|coincidence|mjaccard")->required();
  sc_rf->add_option("--d", rf.d, "Exponent D");
  sc_rf->add_option("--e", rf.e, "Exponent E");
  sc_rf->add_option("--ref", rf.ref, "Reference point x,y")->required();
  sc_rf->add_option("--bounds", rf.bounds, "x_min,x_max,y_min,y_max")->required();
  sc_rf->add_option("--resolution", rf.resolution, "NXxNY")->required();
  sc_rf->add_option("--tau", rf.tau, "Threshold");
  sc_rf->add_option("--out", rf.out, "Output grid file")->required();

  SlopeArgs sl;
  auto* sc_sl = app.add_subcommand("slope-check", "Log-log density slope of y = c^x samples");
  sc_sl->add_option("--c", sl.c, "Base c > 1");
  sc_sl->add_option("--a", sl.a, "Lower end of x");
  sc_sl->add_option("--b", sl.b, "Upper end of x");
  sc_sl->add_option("--n", sl.n, "Sample count");
  sc_sl->add_option("--bins", sl.bins, "Histogram bins");
  sc_sl->add_option("--seed", sl.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& c : msg)
      if (c == '\n') c = ' ';
    err << code_name(ErrorCode::usage) << ": " << msg << '\n';
    return 2;
  }

  try {
    if (*sc_gen) cmd_generate(gen);
    if (*sc_norm) cmd_normalize(norm);
    if (*sc_cmp) cmd_compare(cmp, out);
    if (*sc_net) {
      if (*tau_opt) net.tau = net_tau;
      cmd_network(net);
    }
    if (*sc_rf) cmd_receptive_field(rf);
    if (*sc_sl) cmd_slope_check(sl, out, err);
  } catch (const Error& e) {
    err << code_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "E_INTERNAL: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("propsim");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace propsim::cli
