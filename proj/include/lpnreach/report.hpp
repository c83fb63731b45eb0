#ifndef LPNREACH_REPORT_HPP
#define LPNREACH_REPORT_HPP

#include <string>
#include <vector>

#include "lpnreach/reach.hpp"

namespace lpnreach {

// One benchmark run: the search report plus run metadata. threshold echoes
// the configured flush threshold (only the hybrid backend acts on it).
struct RunReport {
  std::string model;
  std::uint64_t threshold = 0;
  ReachReport reach;
};

// JSON object with alphabetically ordered keys; numbers are emitted in
// shortest round-trip form, so re-parsing yields bit-identical values.
std::string to_json(const RunReport& r);

// JSON array of run objects, for multi-backend invocations.
std::string to_json_array(const std::vector<RunReport>& rs);

// Fixed CSV column set; to_csv_row emits values in header order.
std::string csv_header();
std::string to_csv_row(const RunReport& r);

// Human-readable block.
std::string to_text(const RunReport& r);

}  // namespace lpnreach

#endif
