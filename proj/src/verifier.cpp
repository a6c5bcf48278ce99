#include "rdegree/verifier.hpp"

#include <algorithm>
#include <iomanip>
#include <tuple>

#include "rdegree/error.hpp"
#include "rdegree/format.hpp"
#include "rdegree/indices.hpp"

namespace rdegree {

namespace {

Rational z(std::size_t n) { return Rational(BigInt(n)); }

BigInt ipow(const BigInt& base, std::size_t exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

// (n-1)^2 ((n-1)^(n-3) + 1), the common R degree of K_n.
BigInt complete_r(std::size_t n) {
  const BigInt k = BigInt(n) - 1;
  return k * k * (ipow(k, n - 3) + 1);
}

// Complete graphs: statement and proof agree.
Rational complete_r1(std::size_t n) {
  const BigInt r = complete_r(n);
  return Rational(BigInt(n) * r * r);
}
Rational complete_r2(std::size_t n) {
  const BigInt k = BigInt(n) - 1;
  const BigInt tail = ipow(k, n - 3) + 1;
  return Rational(BigInt(n) * ipow(k, 5) * tail * tail, BigInt(2));
}
Rational complete_r3(std::size_t n) {
  const BigInt k = BigInt(n) - 1;
  return Rational(BigInt(n) * ipow(k, 3) * (ipow(k, n - 3) + 1));
}

// Cycles: statement and proof agree.
Rational cycle_r1(std::size_t n) { return 64 * z(n); }
Rational cycle_r2(std::size_t n) { return 64 * z(n); }
Rational cycle_r3(std::size_t n) { return 16 * z(n); }

// Paths, as stated.
Rational path_statement_r1(std::size_t n) { return z(n) + Rational(5, 2); }
Rational path_statement_r2(std::size_t n) { return z(n) + 1; }
Rational path_statement_r3(std::size_t n) { return 2 * z(n) - Rational(10, 3); }

// Paths, as obtained at the end of the derivation.
Rational path_proof_r1(std::size_t n) { return 64 * z(n) - 78; }
Rational path_proof_r2(std::size_t n) { return 64 * z(n) - 112; }
Rational path_proof_r3(std::size_t n) { return 16 * z(n) - 22; }

// Paths with n >= 5: two endpoints (r = 4), two next-to-end vertices (r = 5),
// n - 4 interior vertices (r = 8); edges split into two 4-5, two 5-8 and
// n - 5 interior 8-8 edges.
Rational path_corrected_r1(std::size_t n) { return 64 * z(n) - 174; }
Rational path_corrected_r2(std::size_t n) { return 64 * z(n) - 200; }
Rational path_corrected_r3(std::size_t n) { return 16 * z(n) - 36; }

// Stars (statement and proof agree).
Rational star_r1(std::size_t n) { return z(n) * z(n); }
Rational star_r2(std::size_t n) { return 2 * z(n) * (z(n) - 1) * (z(n) - 1); }
Rational star_r3(std::size_t n) { return (z(n) - 1) * (3 * z(n) - 2); }

// Centre r = n plus n - 1 pendants with r = 2n - 2.
Rational star_corrected_r1(std::size_t n) {
  const Rational k = z(n) - 1;
  return z(n) * z(n) + 4 * k * k * k;
}

std::vector<ClosedFormVariant> build_registry() {
  using S = Source;
  using I = RIndex;
  const std::map<std::size_t, BigInt> none;
  std::vector<ClosedFormVariant> v = {
      {Family::Complete, I::R1, S::PaperStatement, 3, 3, complete_r1, none},
      {Family::Complete, I::R2, S::PaperStatement, 3, 3, complete_r2, none},
      {Family::Complete, I::R3, S::PaperStatement, 3, 3, complete_r3, none},

      {Family::Cycle, I::R1, S::PaperStatement, 3, 3, cycle_r1, none},
      {Family::Cycle, I::R2, S::PaperStatement, 3, 3, cycle_r2, none},
      {Family::Cycle, I::R3, S::PaperStatement, 3, 3, cycle_r3, none},

      {Family::Path, I::R1, S::PaperStatement, 3, 3, path_statement_r1, none},
      {Family::Path, I::R2, S::PaperStatement, 3, 3, path_statement_r2, none},
      {Family::Path, I::R3, S::PaperStatement, 3, 3, path_statement_r3, none},
      {Family::Path, I::R1, S::PaperProof, 3, 3, path_proof_r1, none},
      {Family::Path, I::R2, S::PaperProof, 3, 3, path_proof_r2, none},
      {Family::Path, I::R3, S::PaperProof, 3, 3, path_proof_r3, none},
      // P_3 has r = (4, 3, 4) and P_4 has r = (4, 5, 5, 4).
      {Family::Path, I::R1, S::Corrected, 3, 5, path_corrected_r1, {{3, 41}, {4, 82}}},
      {Family::Path, I::R2, S::Corrected, 3, 5, path_corrected_r2, {{3, 24}, {4, 65}}},
      {Family::Path, I::R3, S::Corrected, 3, 5, path_corrected_r3, {{3, 14}, {4, 28}}},

      {Family::Star, I::R1, S::PaperStatement, 3, 3, star_r1, none},
      {Family::Star, I::R2, S::PaperStatement, 3, 3, star_r2, none},
      {Family::Star, I::R3, S::PaperStatement, 3, 3, star_r3, none},
      {Family::Star, I::R1, S::Corrected, 3, 3, star_corrected_r1, none},
      {Family::Star, I::R2, S::Corrected, 3, 3, star_r2, none},
      {Family::Star, I::R3, S::Corrected, 3, 3, star_r3, none},
  };
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return std::tie(a.family, a.index, a.source) < std::tie(b.family, b.index, b.source);
  });
  return v;
}

BigInt oracle_value(const Graph& g, const RDegreeTable& table, RIndex index) {
  switch (index) {
    case RIndex::R1: return r1_index(g, table);
    case RIndex::R2: return r2_index(g, table);
    case RIndex::R3: return r3_index(g, table);
  }
  return 0;
}

}  // namespace

std::string_view index_name(RIndex index) {
  switch (index) {
    case RIndex::R1: return "R1";
    case RIndex::R2: return "R2";
    case RIndex::R3: return "R3";
  }
  return "?";
}

std::string_view source_name(Source source) {
  switch (source) {
    case Source::PaperStatement: return "PaperStatement";
    case Source::PaperProof: return "PaperProof";
    case Source::Corrected: return "Corrected";
  }
  return "?";
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Match: return "Match";
    case Verdict::Mismatch: return "Mismatch";
    case Verdict::Skipped: return "Skipped";
  }
  return "?";
}

const std::vector<ClosedFormVariant>& registered_variants() {
  static const std::vector<ClosedFormVariant> registry = build_registry();
  return registry;
}

const ClosedFormVariant* find_variant(Family family, RIndex index, Source source) {
  for (const auto& v : registered_variants()) {
    if (v.family == family && v.index == index && v.source == source) return &v;
  }
  return nullptr;
}

Rational closed_form(const ClosedFormVariant& variant, std::size_t n) {
  if (n < variant.min_order) {
    throw Error(ErrorCode::OrderBelowValidity,
                std::string(family_name(variant.family)) + " " +
                    std::string(index_name(variant.index)) + " " +
                    std::string(source_name(variant.source)) + " is claimed for n >= " +
                    std::to_string(variant.min_order) + ", got " + std::to_string(n));
  }
  if (auto it = variant.exceptions.find(n); it != variant.exceptions.end()) {
    return Rational(it->second);
  }
  return variant.formula(n);
}

bool DiscrepancyReport::corrected_all_match() const {
  return std::none_of(rows.begin(), rows.end(), [](const DiscrepancyRow& row) {
    return row.source == Source::Corrected && row.verdict == Verdict::Mismatch;
  });
}

std::map<Source, SourceTally> DiscrepancyReport::tally() const {
  std::map<Source, SourceTally> counts;
  for (const auto& row : rows) {
    auto& t = counts[row.source];
    switch (row.verdict) {
      case Verdict::Match: ++t.match; break;
      case Verdict::Mismatch: ++t.mismatch; break;
      case Verdict::Skipped: ++t.skipped; break;
    }
  }
  return counts;
}

DiscrepancyReport verify_family(Family family, std::size_t first, std::size_t last) {
  DiscrepancyReport report;
  std::vector<const ClosedFormVariant*> variants;
  for (const auto& v : registered_variants()) {
    if (v.family == family) variants.push_back(&v);
  }

  for (std::size_t n = first; n <= last; ++n) {
    std::optional<Graph> graph;
    RDegreeTable table;
    if (n >= std::max<std::size_t>(minimum_order(family), 2)) {
      graph = generate_family({family, n});
      table = r_degree_table(*graph);
    }
    for (const auto* v : variants) {
      DiscrepancyRow row{family, v->index, n, v->source, std::nullopt, std::nullopt,
                         Verdict::Skipped};
      if (graph) row.computed = oracle_value(*graph, table, v->index);
      if (n >= v->min_order && row.computed) {
        row.claimed = closed_form(*v, n);
        row.verdict = (*row.claimed == Rational(*row.computed)) ? Verdict::Match
                                                                 : Verdict::Mismatch;
      }
      report.rows.push_back(std::move(row));
    }
  }

  std::stable_sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.index, a.n, a.source) < std::tie(b.index, b.n, b.source);
  });
  return report;
}

DiscrepancyReport verify_all(std::size_t first, std::size_t last) {
  DiscrepancyReport all;
  for (Family f : kAllFamilies) {
    auto part = verify_family(f, first, last);
    all.rows.insert(all.rows.end(), std::make_move_iterator(part.rows.begin()),
                    std::make_move_iterator(part.rows.end()));
  }
  return all;
}

void write_csv(const DiscrepancyReport& report, std::ostream& out) {
  out << kVerifyCsvHeader << '\n';
  for (const auto& row : report.rows) {
    out << family_name(row.family) << ',' << index_name(row.index) << ',' << row.n << ','
        << source_name(row.source) << ','
        << (row.claimed ? format_rational(*row.claimed) : std::string()) << ','
        << (row.computed ? format_integer(*row.computed) : std::string()) << ','
        << verdict_name(row.verdict) << '\n';
  }
}

void write_summary(const DiscrepancyReport& report, std::ostream& out) {
  std::map<std::pair<Family, Source>, SourceTally> counts;
  for (const auto& row : report.rows) {
    auto& t = counts[{row.family, row.source}];
    switch (row.verdict) {
      case Verdict::Match: ++t.match; break;
      case Verdict::Mismatch: ++t.mismatch; break;
      case Verdict::Skipped: ++t.skipped; break;
    }
  }
  out << std::left << std::setw(10) << "family" << std::setw(16) << "source" << std::right
      << std::setw(8) << "match" << std::setw(10) << "mismatch" << std::setw(9) << "skipped"
      << '\n';
  for (const auto& [key, t] : counts) {
    out << std::left << std::setw(10) << family_name(key.first) << std::setw(16)
        << source_name(key.second) << std::right << std::setw(8) << t.match << std::setw(10)
        << t.mismatch << std::setw(9) << t.skipped << '\n';
  }
  out << (report.corrected_all_match() ? "corrected forms: all match\n"
                                       : "corrected forms: MISMATCH\n");
}

}  // namespace rdegree
