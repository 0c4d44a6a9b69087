#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lipq/core.hpp"

namespace lipq {

// One verification record. Rendered reports are canonical: fixed float
// formatting, records sorted by (name, inputs), no timestamps, so identical
// config + seed produces byte-identical bodies.
struct CheckRecord {
  std::string name;
  std::string inputs;
  double constant = 0.0;
  bool pass = true;
  std::string witness;  // empty when the check passed
  long samples = 0;
  std::uint64_t seed = 0;
};

std::string fmt_double(double v);   // shortest round-trip-exact decimal
std::string fmt_complex(Complex z);

struct Report {
  std::vector<std::string> header;  // free-form context lines (config echo)
  std::vector<CheckRecord> records;

  void add(CheckRecord rec) { records.push_back(std::move(rec)); }
  bool all_pass() const;
  std::string render() const;  // sorts records, appends a summary line
};

}  // namespace lipq
