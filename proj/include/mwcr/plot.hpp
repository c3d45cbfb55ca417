// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <istream>
#include <span>
#include <string>
#include <vector>

#include "mwcr/model.hpp"

namespace mwcr {

struct HistogramBin {
  double left;
  double right;
  long count;
};

/// Histogram with Freedman-Diaconis bin width 2 * IQR / n^(1/3). A zero
/// range gives one bin; a zero IQR with nonzero range falls back to
/// Sturges' rule. At most 1000 bins.
std::vector<HistogramBin> histogram(std::span<const double> values);

std::string trace_csv(std::span<const double> values);
std::string histogram_csv(std::span<const HistogramBin> bins);

std::string trace_svg(std::span<const double> values, const std::string& title);
std::string histogram_svg(std::span<const HistogramBin> bins, const std::string& title);

/// Chain file: header "lambda1,lambda2,alpha,beta", one draw per line.
std::string serialize_chain(std::span<const ModelParams> draws);
std::vector<ModelParams> parse_chain(std::istream& in);

}  // namespace mwcr
