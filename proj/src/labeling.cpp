#include "anclab/labeling.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <random>

#include "anclab/generators.hpp"

namespace anclab {

std::string_view to_string(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::kBounded: return "bounded";
    case SchemeKind::kOptimal: return "optimal";
    case SchemeKind::kKnr: return "knr";
    case SchemeKind::kRand: return "rand";
    case SchemeKind::kParenthood: return "parenthood";
  }
  return "?";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) {
  for (auto s :
       {SchemeKind::kBounded, SchemeKind::kOptimal, SchemeKind::kKnr, SchemeKind::kRand, SchemeKind::kParenthood}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

bool uses_mode(SchemeKind s) { return s == SchemeKind::kBounded || s == SchemeKind::kParenthood; }

// Runs a labeler on the forest renumbered in pre-order and maps the labels back. The
// labels are the same as on the original ids, since child and root orders survive;
// the recursive passes just walk memory in order.
template <typename Labeler>
std::vector<BitString> in_preorder(const RootedForest& forest, Labeler&& labeler) {
  const std::vector<NodeId> position = preorder_ids(forest);
  const std::vector<BitString> renamed = labeler(relabel(forest, position));
  std::vector<BitString> labels(renamed.size());
  for (NodeId v = 1; v < labels.size(); ++v) labels[v] = renamed[position[v]];
  return labels;
}

}  // namespace

LabelSet label_forest(const RootedForest& forest, const LabelRequest& request) {
  const std::uint64_t size = forest.size();
  const std::uint64_t n = request.n ? request.n : size;
  if (n < size) throw std::invalid_argument("n is smaller than the forest");
  if (uses_mode(request.scheme) != request.mode.has_value()) {
    throw std::invalid_argument(uses_mode(request.scheme) ? "scheme needs a mode" : "scheme takes no mode");
  }
  if (request.d && !(uses_mode(request.scheme) && *request.mode == FamilyMode::kFixedND)) {
    throw std::invalid_argument("d applies to fixed-nd mode only");
  }
  if ((request.scheme == SchemeKind::kRand) != request.seed.has_value()) {
    throw std::invalid_argument(request.scheme == SchemeKind::kRand ? "rand needs a seed" : "scheme takes no seed");
  }
  LabelSet out;
  out.context.scheme = request.scheme;
  out.context.mode = request.mode;
  switch (request.scheme) {
    case SchemeKind::kBounded:
    case SchemeKind::kParenthood: {
      out.labels = in_preorder(forest, [&](const RootedForest& f) {
        auto labeling = request.scheme == SchemeKind::kBounded
                            ? label_forest_bounded(f, *request.mode, n, request.d)
                            : label_forest_parenthood(f, *request.mode, n, request.d);
        if (*request.mode == FamilyMode::kFixedND) out.context.d = labeling.d;
        return std::move(labeling.labels);
      });
      if (*request.mode != FamilyMode::kUniversal) out.context.n = n;
      break;
    }
    case SchemeKind::kOptimal: {
      out.context.n = n;
      out.labels = in_preorder(forest, [&](const RootedForest& f) { return label_forest_optimal(f, n).labels; });
      break;
    }
    case SchemeKind::kKnr: {
      if (request.n && request.n != size) throw std::invalid_argument("knr labels use n = forest size");
      out.context.n = size;
      out.labels = knr_label(forest);
      break;
    }
    case SchemeKind::kRand: {
      if (request.n && request.n != size) throw std::invalid_argument("rand labels use n = forest size");
      out.context.n = size;
      out.context.seed = *request.seed;
      const auto values = rand_label(forest, *request.seed);
      out.labels.resize(size + 1);
      for (NodeId v = 1; v <= size; ++v) out.labels[v] = encode_rand(values[v], size);
      break;
    }
  }
  return out;
}

QueryDecoder::QueryDecoder(const LabelContext& context) : context_(context) {
  switch (context.scheme) {
    case SchemeKind::kBounded:
    case SchemeKind::kParenthood:
      if (!context.mode) throw std::invalid_argument("context lacks a family mode");
      decoder_.emplace<BoundedDecoder>(*context.mode, context.n, context.d, context.scheme == SchemeKind::kParenthood);
      break;
    case SchemeKind::kOptimal: decoder_.emplace<OptimalDecoder>(context.n); break;
    case SchemeKind::kKnr: decoder_.emplace<KnrDecoder>(context.n); break;
    case SchemeKind::kRand:
      if (context.n == 0 || context.n > ParamTable::kMaxN) throw std::invalid_argument("n out of range");
      break;
  }
}

bool QueryDecoder::is_ancestor(const BitString& l1, const BitString& l2) const {
  switch (context_.scheme) {
    case SchemeKind::kBounded:
    case SchemeKind::kParenthood: return std::get<BoundedDecoder>(decoder_).is_ancestor(l1, l2);
    case SchemeKind::kOptimal: return std::get<OptimalDecoder>(decoder_).is_ancestor(l1, l2);
    case SchemeKind::kKnr: return std::get<KnrDecoder>(decoder_).is_ancestor(l1, l2);
    case SchemeKind::kRand: return rand_decide(decode_rand(l1, context_.n), decode_rand(l2, context_.n));
  }
  return false;
}

bool QueryDecoder::is_parent(const BitString& l1, const BitString& l2) const {
  if (!has_parent_queries()) throw std::logic_error("parent queries need parenthood labels");
  return std::get<BoundedDecoder>(decoder_).is_parent(l1, l2);
}

void QueryDecoder::validate(const BitString& label) const {
  switch (context_.scheme) {
    case SchemeKind::kBounded:
    case SchemeKind::kParenthood: std::get<BoundedDecoder>(decoder_).decode(label); break;
    case SchemeKind::kOptimal: std::get<OptimalDecoder>(decoder_).decode(label); break;
    case SchemeKind::kKnr: std::get<KnrDecoder>(decoder_).decode(label); break;
    case SchemeKind::kRand: decode_rand(label, context_.n); break;
  }
}

VerifyOutcome verify_label_set(const RootedForest& forest, const LabelSet& labels, std::uint64_t sample_pairs,
                               std::uint64_t seed) {
  VerifyOutcome out;
  const std::size_t n = forest.size();
  if (labels.size() != n) {
    out.ok = false;
    out.error = "label file has " + std::to_string(labels.size()) + " labels for " + std::to_string(n) + " nodes";
    return out;
  }
  std::optional<QueryDecoder> decoder;
  std::optional<OptimalDecoder> optimal;
  try {
    decoder.emplace(labels.context);
    if (labels.context.scheme == SchemeKind::kOptimal) optimal.emplace(labels.context.n);
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = std::string("bad context: ") + e.what();
    return out;
  }
  for (NodeId v = 1; v <= n; ++v) {
    try {
      decoder->validate(labels.labels[v]);
    } catch (const std::exception& e) {
      out.ok = false;
      out.error = "label of node " + std::to_string(v) + " is malformed: " + e.what();
      return out;
    }
  }
  const AncestorIndex oracle(forest);
  auto fail = [&](NodeId u, NodeId v, const char* query, bool expected) {
    out.ok = false;
    out.mismatch = Mismatch{u, v, query, expected};
  };
  auto check = [&](NodeId u, NodeId v) {
    ++out.pairs;
    const BitString& lu = labels.labels[u];
    const BitString& lv = labels.labels[v];
    const bool truth = oracle.is_ancestor(u, v);
    if (labels.context.scheme == SchemeKind::kRand) {
      if (u == v) return true;
      const bool got = decoder->is_ancestor(lu, lv);
      if (truth && !got) {
        fail(u, v, "ancestor", true);
        return false;
      }
      if (oracle.is_ancestor(v, u) && got) {
        fail(u, v, "ancestor", false);
        return false;
      }
      return true;
    }
    if (decoder->is_ancestor(lu, lv) != truth) {
      fail(u, v, "ancestor", truth);
      return false;
    }
    if (optimal && optimal->is_ancestor_consistent(lu, lv) != truth) {
      fail(u, v, "consistent", truth);
      return false;
    }
    if (decoder->has_parent_queries()) {
      const bool parent = forest.parent(v) == u;
      if (decoder->is_parent(lu, lv) != parent) {
        fail(u, v, "parent", parent);
        return false;
      }
    }
    return true;
  };
  if (sample_pairs == 0) {
    for (NodeId u = 1; u <= n; ++u) {
      for (NodeId v = 1; v <= n; ++v) {
        if (!check(u, v)) return out;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t q = 0; q < sample_pairs; ++q) {
      const auto u = static_cast<NodeId>(1 + uniform_below(rng, n));
      // Half of the samples walk to an ancestor so that true answers are well covered.
      NodeId v = static_cast<NodeId>(1 + uniform_below(rng, n));
      if (q % 2 == 0) {
        NodeId w = v;
        for (auto steps = uniform_below(rng, 8); steps > 0 && !forest.is_root(w); --steps) w = forest.parent(w);
        if (!check(w, v)) return out;
        continue;
      }
      if (!check(u, v)) return out;
    }
  }
  return out;
}

namespace {

constexpr std::string_view kContextHeader = "scheme,mode,n,d,seed";
constexpr std::string_view kRowHeader = "node,bits_hex,bit_len";

std::string optional_number(std::uint64_t v) { return v ? std::to_string(v) : std::string(); }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t parse_number(std::string_view field, std::size_t line, bool allow_empty) {
  if (field.empty()) {
    if (allow_empty) return 0;
    throw LabelFileError("missing number", line);
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw LabelFileError("bad number '" + std::string(field) + "'", line);
  }
  return v;
}

bool next_line(std::istream& in, std::string& line, std::size_t& number) {
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

void write_label_file(std::ostream& out, const LabelSet& set) {
  const LabelContext& c = set.context;
  out << kContextHeader << '\n'
      << to_string(c.scheme) << ',' << (c.mode ? to_string(*c.mode) : std::string_view()) << ',' << optional_number(c.n)
      << ',' << optional_number(c.d) << ',' << (c.scheme == SchemeKind::kRand ? std::to_string(c.seed) : std::string())
      << '\n'
      << kRowHeader << '\n';
  for (NodeId v = 1; v <= set.size(); ++v) {
    out << v << ',' << set.labels[v].to_hex() << ',' << set.labels[v].size() << '\n';
  }
}

LabelSet read_label_file(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  if (!next_line(in, line, number) || line != kContextHeader) throw LabelFileError("missing context header", number);
  if (!next_line(in, line, number)) throw LabelFileError("missing context values", number);
  const auto fields = split(line);
  if (fields.size() != 5) throw LabelFileError("context needs 5 fields", number);
  LabelSet set;
  const auto scheme = parse_scheme(fields[0]);
  if (!scheme) throw LabelFileError("unknown scheme '" + std::string(fields[0]) + "'", number);
  set.context.scheme = *scheme;
  if (!fields[1].empty()) {
    set.context.mode = parse_family_mode(fields[1]);
    if (!set.context.mode) throw LabelFileError("unknown mode '" + std::string(fields[1]) + "'", number);
  }
  if (uses_mode(*scheme) != set.context.mode.has_value()) throw LabelFileError("scheme and mode disagree", number);
  set.context.n = parse_number(fields[2], number, true);
  set.context.d = parse_number(fields[3], number, true);
  set.context.seed = parse_number(fields[4], number, *scheme != SchemeKind::kRand);
  if (!next_line(in, line, number) || line != kRowHeader) throw LabelFileError("missing row header", number);
  set.labels.emplace_back();
  while (next_line(in, line, number)) {
    const auto row = split(line);
    if (row.size() != 3) throw LabelFileError("row needs 3 fields", number);
    const std::uint64_t node = parse_number(row[0], number, false);
    if (node != set.labels.size()) throw LabelFileError("node ids must run 1, 2, ... in order", number);
    const std::uint64_t bits = parse_number(row[2], number, false);
    try {
      set.labels.push_back(BitString::from_hex(row[1], static_cast<unsigned>(std::min<std::uint64_t>(bits, 1000))));
    } catch (const std::invalid_argument& e) {
      throw LabelFileError(e.what(), number);
    }
  }
  if (set.labels.size() == 1) throw LabelFileError("no labels", number);
  return set;
}

}  // namespace anclab
