#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rdegree/indices.hpp"

namespace rdegree {

/// Column names accepted by --indices, in canonical output order.
enum class IndexColumn { R1, R2, R3, ABC, GA, H, Chi, Zagreb1, Zagreb2, Randic };

inline constexpr IndexColumn kAllIndexColumns[] = {
    IndexColumn::R1,  IndexColumn::R2, IndexColumn::R3,      IndexColumn::ABC,
    IndexColumn::GA,  IndexColumn::H,  IndexColumn::Chi,     IndexColumn::Zagreb1,
    IndexColumn::Zagreb2, IndexColumn::Randic};

std::string_view column_name(IndexColumn column);

/// Parses a comma list such as "r1,ga,chi" into canonical order with
/// duplicates removed. Throws Error{SyntaxError} on an unknown name.
std::vector<IndexColumn> parse_index_selection(std::string_view list);

std::string render_column(const IndexReport& report, IndexColumn column);

// OrderTooSmall covers parseable graphs with fewer than two vertices.
enum class BatchStatus { Ok, Disconnected, OrderTooSmall, ParseError };

struct BatchRow {
  std::string name;
  BatchStatus status = BatchStatus::Ok;
  std::string message;                // error text when status != Ok
  std::optional<IndexReport> report;  // set iff status == Ok
};

struct CorpusLine {
  std::size_t line_number;  // 1-based
  std::string text;
};

/// Reads graph6 lines, dropping blank lines and a bare `>>graph6<<` header.
std::vector<CorpusLine> read_graph6_corpus(std::istream& in);

BatchRow process_graph6_line(const CorpusLine& line);

/// Processes every line on up to `jobs` threads. The result is in input
/// order and independent of `jobs`.
std::vector<BatchRow> run_batch(const std::vector<CorpusLine>& lines, unsigned jobs);

void write_batch_csv(const std::vector<BatchRow>& rows,
                     const std::vector<IndexColumn>& columns, std::ostream& out);

}  // namespace rdegree
