#include "lipq/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace lipq {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_complex(Complex z) {
  std::string s = fmt_double(z.real());
  s += z.imag() < 0.0 || (z.imag() == 0.0 && std::signbit(z.imag())) ? "-" : "+";
  s += fmt_double(std::abs(z.imag()));
  s += "i";
  return s;
}

bool Report::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

std::string Report::render() const {
  std::vector<const CheckRecord*> order;
  order.reserve(records.size());
  for (const auto& r : records) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const CheckRecord* a, const CheckRecord* b) {
    if (a->name != b->name) return a->name < b->name;
    return a->inputs < b->inputs;
  });
  std::string out;
  for (const auto& line : header) {
    out += line;
    out += '\n';
  }
  long failed = 0;
  for (const CheckRecord* r : order) {
    out += r->name;
    out += " [";
    out += r->inputs;
    out += "] c=";
    out += fmt_double(r->constant);
    out += " n=";
    out += std::to_string(r->samples);
    out += " seed=";
    out += std::to_string(r->seed);
    if (r->pass) {
      out += " pass";
    } else {
      ++failed;
      out += " FAIL";
      if (!r->witness.empty()) {
        out += " witness: ";
        out += r->witness;
      }
    }
    out += '\n';
  }
  out += "summary: ";
  out += std::to_string(static_cast<long>(order.size()) - failed);
  out += "/";
  out += std::to_string(order.size());
  out += " checks passed\n";
  return out;
}

}  // namespace lipq
