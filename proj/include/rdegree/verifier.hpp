#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rdegree/family.hpp"
#include "rdegree/types.hpp"

namespace rdegree {

enum class RIndex { R1, R2, R3 };

/// Where a closed form comes from. A proposition's statement and the value
/// its proof arrives at are tracked separately because they can disagree.
enum class Source { PaperStatement, PaperProof, Corrected };

std::string_view index_name(RIndex index);
std::string_view source_name(Source source);

using ClosedFormFn = Rational (*)(std::size_t n);

/// A hand-transcribed closed form for one (family, index).
///
/// `formula` is claimed for n >= `formula_min_order`; orders in
/// `exceptions` (all below `formula_min_order`) carry enumerated values
/// instead. The variant as a whole is valid from `min_order`.
struct ClosedFormVariant {
  Family family;
  RIndex index;
  Source source;
  std::size_t min_order;
  std::size_t formula_min_order;
  ClosedFormFn formula;
  std::map<std::size_t, BigInt> exceptions;
};

/// Every registered variant, ordered by (family, index, source).
const std::vector<ClosedFormVariant>& registered_variants();

const ClosedFormVariant* find_variant(Family family, RIndex index, Source source);

/// Exact value of a variant at order n; Error{OrderBelowValidity} if n is
/// below the variant's range.
Rational closed_form(const ClosedFormVariant& variant, std::size_t n);

enum class Verdict { Match, Mismatch, Skipped };

std::string_view verdict_name(Verdict verdict);

struct DiscrepancyRow {
  Family family;
  RIndex index;
  std::size_t n;
  Source source;
  std::optional<Rational> claimed;  // empty when Skipped
  std::optional<BigInt> computed;   // empty if the family has no graph of order n
  Verdict verdict;
};

struct SourceTally {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t skipped = 0;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyRow> rows;

  /// True iff no Corrected row is Mismatch (vacuously true without any).
  bool corrected_all_match() const;
  std::map<Source, SourceTally> tally() const;
};

/// Compares every registered variant of `family` against the index engine for
/// n in [first, last]. Rows are sorted by (index, n, source).
DiscrepancyReport verify_family(Family family, std::size_t first, std::size_t last);

/// verify_family over all four families, concatenated in family order.
DiscrepancyReport verify_all(std::size_t first, std::size_t last);

inline constexpr std::string_view kVerifyCsvHeader =
    "family,index,n,source,claimed,computed,verdict";

void write_csv(const DiscrepancyReport& report, std::ostream& out);
void write_summary(const DiscrepancyReport& report, std::ostream& out);

}  // namespace rdegree
