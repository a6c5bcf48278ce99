#include "rdegree/batch.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rdegree/error.hpp"
#include "rdegree/format.hpp"
#include "rdegree/io.hpp"

namespace rdegree {

std::string_view column_name(IndexColumn column) {
  switch (column) {
    case IndexColumn::R1: return "r1";
    case IndexColumn::R2: return "r2";
    case IndexColumn::R3: return "r3";
    case IndexColumn::ABC: return "abc";
    case IndexColumn::GA: return "ga";
    case IndexColumn::H: return "h";
    case IndexColumn::Chi: return "chi";
    case IndexColumn::Zagreb1: return "zagreb1";
    case IndexColumn::Zagreb2: return "zagreb2";
    case IndexColumn::Randic: return "randic";
  }
  return "?";
}

std::vector<IndexColumn> parse_index_selection(std::string_view list) {
  std::vector<IndexColumn> chosen;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view name = list.substr(start, end - start);
    if (name == "all") {
      chosen.insert(chosen.end(), std::begin(kAllIndexColumns), std::end(kAllIndexColumns));
    } else {
      auto it = std::find_if(std::begin(kAllIndexColumns), std::end(kAllIndexColumns),
                             [&](IndexColumn c) { return column_name(c) == name; });
      if (it == std::end(kAllIndexColumns)) {
        throw Error(ErrorCode::SyntaxError, "unknown index '" + std::string(name) + "'");
      }
      chosen.push_back(*it);
    }
    start = end + 1;
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return chosen;
}

std::string render_column(const IndexReport& report, IndexColumn column) {
  switch (column) {
    case IndexColumn::R1: return format_integer(report.r1);
    case IndexColumn::R2: return format_integer(report.r2);
    case IndexColumn::R3: return format_integer(report.r3);
    case IndexColumn::ABC: return format_real(report.abc);
    case IndexColumn::GA: return format_real(report.ga);
    case IndexColumn::H: return format_real(report.h);
    case IndexColumn::Chi: return format_real(report.chi);
    case IndexColumn::Zagreb1: return format_real(report.zagreb1);
    case IndexColumn::Zagreb2: return format_real(report.zagreb2);
    case IndexColumn::Randic: return format_real(report.randic);
  }
  return {};
}

std::vector<CorpusLine> read_graph6_corpus(std::istream& in) {
  std::vector<CorpusLine> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    while (!text.empty() && (text.back() == '\r' || text.back() == '\n')) text.pop_back();
    if (text.empty() || text == kGraph6Header) continue;
    lines.push_back({number, std::move(text)});
  }
  return lines;
}

BatchRow process_graph6_line(const CorpusLine& line) {
  BatchRow row;
  row.name = std::to_string(line.line_number);
  Graph g;
  try {
    g = parse_graph6(line.text);
  } catch (const Error& e) {
    row.status = BatchStatus::ParseError;
    row.message = e.what();
    return row;
  }
  try {
    row.report = full_report(g);
  } catch (const Error& e) {
    row.status = e.code() == ErrorCode::DisconnectedGraph ? BatchStatus::Disconnected
                                                          : BatchStatus::OrderTooSmall;
    row.message = e.what();
  }
  return row;
}

std::vector<BatchRow> run_batch(const std::vector<CorpusLine>& lines, unsigned jobs) {
  std::vector<BatchRow> rows(lines.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, lines.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < lines.size(); ++i) rows[i] = process_graph6_line(lines[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < lines.size(); i = next++) {
        rows[i] = process_graph6_line(lines[i]);
      }
    });
  }
  return rows;
}

namespace {

std::string status_text(const BatchRow& row) {
  switch (row.status) {
    case BatchStatus::Ok: return "Ok";
    case BatchStatus::Disconnected: return "Disconnected";
    case BatchStatus::OrderTooSmall: return "OrderTooSmall";
    case BatchStatus::ParseError: return "ParseError(" + row.message + ")";
  }
  return "?";
}

}  // namespace

void write_batch_csv(const std::vector<BatchRow>& rows, const std::vector<IndexColumn>& columns,
                     std::ostream& out) {
  out << "name,n,m";
  for (IndexColumn c : columns) out << ',' << column_name(c);
  out << ",status\n";
  for (const auto& row : rows) {
    out << csv_escape(row.name) << ',';
    if (row.report) out << row.report->n << ',' << row.report->m;
    else out << ',';
    for (IndexColumn c : columns) {
      out << ',';
      if (row.report) out << render_column(*row.report, c);
    }
    out << ',' << csv_escape(status_text(row)) << '\n';
  }
}

}  // namespace rdegree
