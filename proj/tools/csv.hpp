#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "gibbslab/errors.hpp"

namespace gibbslab::tools {

// CSV with a header row, '.' decimal separator, newline-terminated rows.
// Floats carry 17 significant digits so reruns are byte-comparable.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header) : out_(path) {
    if (!out_) throw resolution_error("cannot open output file '" + path + "'");
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out_ << ',';
      out_ << header[i];
    }
    out_ << '\n';
    columns_ = header.size();
  }

  void row(const std::vector<double>& values) {
    if (values.size() != columns_) throw input_error("csv: column count mismatch");
    char buf[64];
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
      out_ << buf;
    }
    out_ << '\n';
  }

  void flush() { out_.flush(); }

 private:
  std::ofstream out_;
  std::size_t columns_ = 0;
};

}  // namespace gibbslab::tools
