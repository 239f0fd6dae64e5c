#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "anclab/aux_schemes.hpp"
#include "anclab/bits.hpp"
#include "anclab/bounded_scheme.hpp"
#include "anclab/forest.hpp"
#include "anclab/optimal_scheme.hpp"

namespace anclab {

enum class SchemeKind { kBounded, kOptimal, kKnr, kRand, kParenthood };

std::string_view to_string(SchemeKind scheme);
std::optional<SchemeKind> parse_scheme(std::string_view name);

/// Everything a decoder may know besides the two labels. Fields that the scheme does
/// not use are zero (and empty in files).
struct LabelContext {
  SchemeKind scheme = SchemeKind::kOptimal;
  std::optional<FamilyMode> mode;  // bounded and parenthood only
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t seed = 0;

  bool operator==(const LabelContext&) const = default;
};

struct LabelRequest {
  SchemeKind scheme = SchemeKind::kOptimal;
  std::optional<FamilyMode> mode;
  std::uint64_t n = 0;  // 0: forest size
  std::uint64_t d = 0;  // 0: derived from the forest
  std::optional<std::uint64_t> seed;
};

struct LabelSet {
  LabelContext context;
  std::vector<BitString> labels;  // slot 0 unused
  std::size_t size() const { return labels.empty() ? 0 : labels.size() - 1; }
};

/// Throws std::invalid_argument for scheme/mode mismatches, a missing seed for rand,
/// or a forest outside the requested family.
LabelSet label_forest(const RootedForest& forest, const LabelRequest& request);

/// Decoder selected by a label context; never sees the forest.
class QueryDecoder {
 public:
  explicit QueryDecoder(const LabelContext& context);

  const LabelContext& context() const { return context_; }
  bool is_ancestor(const BitString& l1, const BitString& l2) const;
  bool has_parent_queries() const { return context_.scheme == SchemeKind::kParenthood; }
  bool is_parent(const BitString& l1, const BitString& l2) const;
  /// Throws LabelError when the label is not valid for the context.
  void validate(const BitString& label) const;

 private:
  LabelContext context_;
  std::variant<std::monostate, BoundedDecoder, OptimalDecoder, KnrDecoder> decoder_;
};

struct Mismatch {
  NodeId u = 0;
  NodeId v = 0;
  std::string query;  // "ancestor", "consistent" or "parent"
  bool expected = false;
};

struct VerifyOutcome {
  bool ok = true;
  std::uint64_t pairs = 0;
  std::optional<Mismatch> mismatch;
  std::string error;  // malformed label or size mismatch
};

/// Compares every decoder the scheme offers with the ancestry oracle: all ordered pairs,
/// or sample_pairs random pairs when nonzero. rand is checked one-sidedly: strict
/// ancestor pairs must be accepted and no node may accept one of its ancestors.
VerifyOutcome verify_label_set(const RootedForest& forest, const LabelSet& labels, std::uint64_t sample_pairs = 0,
                               std::uint64_t seed = 0);

class LabelFileError : public std::runtime_error {
 public:
  LabelFileError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")") {}
};

/// CSV with a context header:
///   scheme,mode,n,d,seed
///   <values>
///   node,bits_hex,bit_len
///   <one row per node, ids 1..m in order>
void write_label_file(std::ostream& out, const LabelSet& set);
LabelSet read_label_file(std::istream& in);

}  // namespace anclab
