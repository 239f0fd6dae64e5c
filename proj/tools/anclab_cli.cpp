#include "anclab_cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "anclab/bench.hpp"
#include "anclab/decomposition.hpp"
#include "anclab/labeling.hpp"
#include "anclab/poset.hpp"

namespace anclab::cli {

namespace {

// Input problems that end the command with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

RootedForest load_forest(const std::string& path) {
  try {
    return parse_forest(read_file(path));
  } catch (const ForestError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

LabelSet load_labels(const std::string& path) {
  std::istringstream in(read_file(path));
  try {
    return read_label_file(in);
  } catch (const LabelFileError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Writes to the file at path, or to out when path is empty or "-".
template <class Fn>
void with_output(const std::string& path, std::ostream& out, Fn fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  fn(file);
}

ShapeKind shape_arg(const std::string& name) {
  const auto kind = parse_shape(name);
  if (!kind) throw UsageError("unknown shape '" + name + "'");
  return *kind;
}

SchemeKind scheme_arg(const std::string& name) {
  const auto scheme = parse_scheme(name);
  if (!scheme) throw UsageError("unknown scheme '" + name + "'");
  return *scheme;
}

std::optional<FamilyMode> mode_arg(const std::string& name) {
  if (name.empty()) return std::nullopt;
  const auto mode = parse_family_mode(name);
  if (!mode) throw UsageError("unknown mode '" + name + "'");
  return mode;
}

std::uint64_t size_token(std::string_view token) {
  std::uint64_t v = 0;
  if (token.starts_with("2^")) {
    token.remove_prefix(2);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || v > 31) throw UsageError("bad size exponent");
    return std::uint64_t{1} << v;
  }
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || v == 0) {
    throw UsageError("bad size '" + std::string(token) + "'");
  }
  return v;
}

// "1000,2^12" or "2^10..2^20" (every power of two in the range).
std::vector<std::uint64_t> parse_sizes(const std::vector<std::string>& items) {
  std::vector<std::uint64_t> out;
  for (const auto& item : items) {
    std::string_view rest = item;
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view token = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
      const std::size_t dots = token.find("..");
      if (dots == std::string_view::npos) {
        out.push_back(size_token(token));
        continue;
      }
      const std::uint64_t lo = size_token(token.substr(0, dots));
      const std::uint64_t hi = size_token(token.substr(dots + 2));
      if (!std::has_single_bit(lo) || !std::has_single_bit(hi) || lo > hi) {
        throw UsageError("size ranges run between powers of two");
      }
      for (std::uint64_t s = lo; s <= hi; s *= 2) out.push_back(s);
    }
  }
  return out;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream in(item);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (!token.empty()) out.push_back(token);
    }
  }
  return out;
}

struct VerifyTarget {
  SchemeKind scheme;
  std::optional<FamilyMode> mode;
  std::string name() const {
    std::string s(to_string(scheme));
    if (mode) s += ":" + std::string(to_string(*mode));
    return s;
  }
};

std::vector<VerifyTarget> verify_targets(const std::vector<std::string>& schemes, const std::string& mode) {
  const std::vector<FamilyMode> all_modes{FamilyMode::kFixedND, FamilyMode::kFixedN, FamilyMode::kUniversal};
  std::vector<FamilyMode> modes = all_modes;
  if (!mode.empty()) modes = {*mode_arg(mode)};
  std::vector<VerifyTarget> out;
  auto add = [&](SchemeKind s) {
    if (s == SchemeKind::kBounded || s == SchemeKind::kParenthood) {
      for (auto m : modes) out.push_back({s, m});
    } else {
      out.push_back({s, std::nullopt});
    }
  };
  for (const auto& name : split_list(schemes)) {
    if (name == "all") {
      for (auto s :
           {SchemeKind::kBounded, SchemeKind::kOptimal, SchemeKind::kKnr, SchemeKind::kParenthood, SchemeKind::kRand}) {
        add(s);
      }
    } else {
      add(scheme_arg(name));
    }
  }
  return out;
}

void print_mismatch(std::ostream& out, const std::string& name, const VerifyOutcome& r, const RootedForest* forest) {
  out << "FAIL " << name;
  if (r.mismatch) {
    out << " u=" << r.mismatch->u << " v=" << r.mismatch->v << " query=" << r.mismatch->query
        << " expected=" << (r.mismatch->expected ? "true" : "false");
  } else {
    out << " " << r.error;
  }
  out << '\n';
  if (forest && forest->size() <= 16) out << "forest:\n" << serialize_forest(*forest) << '\n';
}

int cmd_gen(const std::string& kind, const ShapeParams& params, std::uint64_t seed, const std::string& out_path,
            std::ostream& out) {
  RootedForest forest = [&] {
    try {
      return generate(shape_arg(kind), params, seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  with_output(out_path, out, [&](std::ostream& o) { o << serialize_forest(forest) << '\n'; });
  return 0;
}

int cmd_label(const std::string& scheme, const std::string& mode, const std::string& in, const std::string& out_path,
              std::uint64_t n, std::uint64_t d, const std::optional<std::uint64_t>& seed, std::ostream& out) {
  const RootedForest forest = load_forest(in);
  LabelRequest request;
  request.scheme = scheme_arg(scheme);
  request.mode = mode_arg(mode);
  request.n = n;
  request.d = d;
  request.seed = seed;
  LabelSet set;
  try {
    set = label_forest(forest, request);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  with_output(out_path, out, [&](std::ostream& o) { write_label_file(o, set); });
  return 0;
}

int cmd_query(const std::string& path, std::uint64_t u, std::uint64_t v, bool parent, std::ostream& out) {
  const LabelSet set = load_labels(path);
  if (u == 0 || v == 0 || u > set.size() || v > set.size()) throw UsageError("unknown node id");
  try {
    const QueryDecoder decoder(set.context);
    const BitString& lu = set.labels[u];
    const BitString& lv = set.labels[v];
    if (parent) {
      if (!decoder.has_parent_queries()) throw UsageError("parent queries need parenthood labels");
      out << (decoder.is_parent(lu, lv) ? "parent" : "not-parent") << '\n';
    } else {
      out << (decoder.is_ancestor(lu, lv) ? "ancestor" : "not-ancestor") << '\n';
    }
  } catch (const LabelError& e) {
    throw UsageError(std::string("malformed label: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad context: ") + e.what());
  }
  return 0;
}

struct VerifyOptions {
  std::vector<std::string> schemes{"all"};
  std::string mode;
  std::string in;
  std::size_t corpus = 0;
  std::string labels;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const int sources = !opt.in.empty() + (opt.corpus > 0);
  if (sources != 1) throw UsageError("verify needs exactly one of --in and --corpus");
  if (!opt.labels.empty()) {
    if (opt.in.empty()) throw UsageError("--labels needs --in");
    const RootedForest forest = load_forest(opt.in);
    const LabelSet set = load_labels(opt.labels);
    const auto r = verify_label_set(forest, set, opt.sample, opt.seed);
    std::string name(to_string(set.context.scheme));
    if (set.context.mode) name += ":" + std::string(to_string(*set.context.mode));
    if (!r.ok) {
      print_mismatch(out, name, r, &forest);
      return 1;
    }
    out << "PASS " << name << " pairs=" << r.pairs << '\n';
    return 0;
  }
  if (opt.corpus > 9) throw UsageError("--corpus is limited to 9");
  const auto targets = verify_targets(opt.schemes, opt.mode);
  std::optional<RootedForest> single;
  if (!opt.in.empty()) single = load_forest(opt.in);
  bool all_ok = true;
  for (const auto& t : targets) {
    LabelRequest request{t.scheme, t.mode, 0, 0, std::nullopt};
    if (t.scheme == SchemeKind::kRand) request.seed = opt.seed;
    std::uint64_t forests = 0;
    std::uint64_t pairs = 0;
    std::optional<VerifyOutcome> failure;
    std::optional<RootedForest> failed_forest;
    auto run_one = [&](const RootedForest& f) {
      if (failure) return;
      ++forests;
      const auto r = verify_label_set(f, label_forest(f, request), opt.sample, opt.seed);
      pairs += r.pairs;
      if (!r.ok) {
        failure = r;
        failed_forest = f;
      }
    };
    if (single) {
      run_one(*single);
    } else {
      for (std::size_t n = 1; n <= opt.corpus && !failure; ++n) enumerate_increasing_trees(n, run_one);
    }
    if (failure) {
      all_ok = false;
      print_mismatch(out, t.name(), *failure, &*failed_forest);
    } else {
      out << "PASS " << t.name() << " forests=" << forests << " pairs=" << pairs << '\n';
    }
  }
  return all_ok ? 0 : 1;
}

struct BenchOptions {
  std::vector<std::string> schemes{"optimal"};
  std::string mode = "fixed-nd";
  std::vector<std::string> sizes{"2^10"};
  std::vector<std::string> shapes{"random_recursive"};
  std::uint64_t seed = 1;
  std::string json;
  std::uint64_t queries = 100000;
  std::uint32_t depth = 4;
  bool deterministic = false;
};

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  const auto sizes = parse_sizes(opt.sizes);
  std::vector<ShapeKind> shapes;
  for (const auto& s : split_list(opt.shapes)) shapes.push_back(shape_arg(s));
  std::vector<BenchCell> cells;
  for (const auto& name : split_list(opt.schemes)) {
    const SchemeKind scheme = scheme_arg(name);
    const bool moded = scheme == SchemeKind::kBounded || scheme == SchemeKind::kParenthood;
    for (auto size : sizes) {
      for (auto shape : shapes) {
        BenchCell cell;
        cell.scheme = scheme;
        cell.mode = moded ? mode_arg(opt.mode) : std::nullopt;
        cell.shape = shape;
        cell.size = size;
        cell.depth_bound = opt.depth;
        cell.seed = opt.seed;
        cell.queries = opt.queries;
        cell.deterministic = opt.deterministic;
        cells.push_back(cell);
      }
    }
  }
  with_output(opt.json, out, [&](std::ostream& o) {
    for (const auto& cell : cells) {
      BenchReport report;
      try {
        report = run_bench(cell);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      o << to_json_line(report) << '\n';
      o.flush();
    }
  });
  return 0;
}

int cmd_poset_demo(std::size_t m, std::size_t k, std::uint64_t seed, std::uint64_t n, std::ostream& out) {
  if (m == 0 || k == 0) throw UsageError("m and k must be positive");
  if (n == 0) n = m;
  if (m > n) throw UsageError("m exceeds n");
  const TreeExtensionSet set = random_extension_set(m, k, seed);
  const Poset poset = intersect_forests(set);
  const PosetEmbedding embedding = embed_poset(set, n);
  const EmbeddingCheck check = verify_embedding(poset, embedding);
  std::uint64_t relations = 0;
  for (NodeId x = 1; x <= m; ++x) {
    for (NodeId y = 1; y <= m; ++y) relations += x != y && poset.leq(x, y);
  }
  boost::multiprecision::cpp_int n_pow = 1;
  for (std::size_t i = 0; i < 2 * k; ++i) n_pow *= n;
  out << "poset m=" << m << " k=" << k << " n=" << n << " seed=" << seed << " strict_relations=" << relations << '\n'
      << "partial_order=" << (poset.is_partial_order() ? "yes" : "no") << '\n'
      << "label_bits=" << OptimalDecoder(n).label_length() << '\n'
      << "universe_size=" << universal_domain_size(n, k) << '\n'
      << "n_pow_2k=" << n_pow << '\n'
      << "verified=" << (check.ok ? "yes" : "no") << '\n';
  if (!check.ok) out << "counterexample a=" << check.a << " b=" << check.b << " " << check.reason << '\n';
  return check.ok ? 0 : 1;
}

int cmd_decompose(const std::string& in, std::ostream& out) {
  const RootedForest forest = load_forest(in);
  const FoldedForest folded = fold(forest);
  out << "id class apex_of fold_parent dfs_num\n";
  for (NodeId v = 1; v <= forest.size(); ++v) {
    out << v << ' ' << (folded.is_apex(v) ? "apex" : "heavy") << ' ' << folded.apex_of[v] << ' '
        << folded.fold_parent(v) << ' ' << folded.dfs_num[v] << '\n';
  }
  return 0;
}

int cmd_intervals(const std::string& in, bool folded, bool dump, std::uint64_t n, std::uint64_t d, std::ostream& out) {
  const RootedForest forest = load_forest(in);
  if (n == 0) n = forest.size();
  if (n < forest.size()) throw UsageError("n is smaller than the forest");
  std::optional<ParamTable> params;
  IntervalAssignment assignment;
  try {
    if (folded) {
      const OptimalLabeling labeling = label_forest_optimal(forest, n);
      params.emplace(n, kFoldedDepth);
      assignment = labeling.intervals;
    } else {
      if (d == 0) d = spine_decomposition_depth(forest);
      params.emplace(n, d);
      const LayoutForest layout(forest);
      assignment = assign_intervals(layout, *params, WeightSpine{});
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!dump) {
    std::int64_t hi = 0;
    for (NodeId v = 1; v <= forest.size(); ++v) hi = std::max(hi, interval_bounds(*params, assignment[v]).hi);
    out << "nodes=" << forest.size() << " n=" << params->n() << " d=" << params->d()
        << " levels=" << params->max_level() << " N=" << params->N() << " max_hi=" << hi << '\n';
    return 0;
  }
  out << "node k a b lo hi\n";
  for (NodeId v = 1; v <= forest.size(); ++v) {
    const Interval& I = assignment[v];
    const Span s = interval_bounds(*params, I);
    out << v << ' ' << I.level << ' ' << I.a << ' ' << I.b << ' ' << s.lo << ' ' << s.hi << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ancestry labeling schemes for rooted forests"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string kind, out_path;
  ShapeParams shape;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a forest as a parent array");
  gen->add_option("--kind", kind,
                  "path|star|complete_binary|caterpillar|random_recursive|random_bounded_depth|skewed_binary")
      ->required();
  gen->add_option("--size", shape.size, "Node count");
  gen->add_option("--depth", shape.depth_bound, "Depth bound for random_bounded_depth");
  gen->add_option("--height", shape.height, "Height for skewed_binary");
  gen->add_option("--trees", shape.trees, "Roots for the random kinds");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string scheme, mode, in;
  std::uint64_t n = 0, d = 0;
  std::optional<std::uint64_t> label_seed;
  auto* label = app.add_subcommand("label", "Label a forest");
  label->add_option("--scheme", scheme, "bounded|optimal|knr|rand|parenthood")->required();
  label->add_option("--mode", mode, "fixed-nd|fixed-n|universal (bounded, parenthood)");
  label->add_option("--in", in, "Forest file")->required();
  label->add_option("--out", out_path, "Label file (default stdout)");
  label->add_option("--n", n, "Node bound told to the decoder (default: forest size)");
  label->add_option("--d", d, "Depth bound for fixed-nd (default: forest value)");
  label->add_option("--seed", label_seed, "Seed for rand");

  std::string labels_path;
  std::uint64_t qu = 0, qv = 0;
  bool parent = false;
  auto* query = app.add_subcommand("query", "Answer an ancestry query from a label file");
  query->add_option("--labels", labels_path, "Label file")->required();
  query->add_option("u", qu, "Candidate ancestor")->required();
  query->add_option("v", qv, "Candidate descendant")->required();
  query->add_flag("--parent", parent, "Ask for parenthood instead (parenthood labels)");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Compare decoders with the ancestry oracle");
  verify->add_option("--scheme", vopt.schemes, "Schemes, comma separated, or all")->capture_default_str();
  verify->add_option("--mode", vopt.mode, "Restrict bounded/parenthood to one mode");
  verify->add_option("--in", vopt.in, "Forest file");
  verify->add_option("--corpus", vopt.corpus, "All increasing trees with up to this many nodes");
  verify->add_option("--labels", vopt.labels, "Check this label file against --in");
  verify->add_option("--sample", vopt.sample, "Random pairs instead of all pairs");
  verify->add_option("--seed", vopt.seed, "Seed for rand labels and pair sampling")->capture_default_str();

  BenchOptions bopt;
  auto* bench = app.add_subcommand("bench", "Label size and speed, one JSON object per cell");
  bench->add_option("--scheme", bopt.schemes, "Schemes, comma separated")->capture_default_str();
  bench->add_option("--mode", bopt.mode, "Mode for bounded/parenthood")->capture_default_str();
  bench->add_option("--sizes", bopt.sizes, "Sizes: 1000,2^12 or 2^10..2^20")->capture_default_str();
  bench->add_option("--shapes", bopt.shapes, "Shapes, comma separated")->capture_default_str();
  bench->add_option("--seed", bopt.seed, "Seed")->capture_default_str();
  bench->add_option("--json", bopt.json, "Output file (default stdout)");
  bench->add_option("--queries", bopt.queries, "Timed queries per cell")->capture_default_str();
  bench->add_option("--depth", bopt.depth, "Depth bound for random_bounded_depth")->capture_default_str();
  bench->add_flag("--deterministic", bopt.deterministic, "Zero the timing fields");

  std::size_t m = 20, k = 2;
  std::uint64_t poset_seed = 1, poset_n = 0;
  auto* poset = app.add_subcommand("poset-demo", "Embed a random tree-dimension-k poset");
  poset->add_option("--m", m, "Ground set size")->capture_default_str();
  poset->add_option("--k", k, "Number of tree extensions")->capture_default_str();
  poset->add_option("--seed", poset_seed, "Seed")->capture_default_str();
  poset->add_option("--n", poset_n, "Label parameter n (default m)");

  auto* decompose = app.add_subcommand("decompose", "Dump the folding decomposition");
  decompose->add_option("--in", in, "Forest file")->required();

  bool folded = false, dump = false;
  auto* intervals = app.add_subcommand("intervals", "Dump the interval assignment");
  intervals->add_option("--in", in, "Forest file")->required();
  intervals->add_flag("--dump", dump, "Print node k a b lo hi lines");
  intervals->add_flag("--folded", folded, "Use the folded forest of the optimal scheme");
  intervals->add_option("--n", n, "Node bound (default: forest size)");
  intervals->add_option("--d", d, "Depth bound (default: spine depth)");

  std::vector<std::string> argv_storage{"anclab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(kind, shape, seed, out_path, out);
    if (label->parsed()) return cmd_label(scheme, mode, in, out_path, n, d, label_seed, out);
    if (query->parsed()) return cmd_query(labels_path, qu, qv, parent, out);
    if (verify->parsed()) return cmd_verify(vopt, out);
    if (bench->parsed()) return cmd_bench(bopt, out);
    if (poset->parsed()) return cmd_poset_demo(m, k, poset_seed, poset_n, out);
    if (decompose->parsed()) return cmd_decompose(in, out);
    if (intervals->parsed()) return cmd_intervals(in, folded, dump, n, d, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace anclab::cli
