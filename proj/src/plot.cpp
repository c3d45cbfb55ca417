// Apache License, Version 2.0, refer to LICENSE.txt

#include "mwcr/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string_view>

#include <fmt/format.h>

#include "mwcr/error.hpp"

namespace mwcr {
namespace {

constexpr long kMaxBins = 1000;
constexpr double kWidth = 640.0;
constexpr double kHeight = 360.0;
constexpr double kMargin = 48.0;

double order_stat(const std::vector<double>& sorted, double q) {
  // Linear interpolation between order statistics (type 7 quantile).
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::string svg_open(const std::string& title) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">{3}</text>\n"
      "<line x1=\"{4}\" y1=\"{5}\" x2=\"{6}\" y2=\"{5}\" stroke=\"black\"/>\n"
      "<line x1=\"{4}\" y1=\"{7}\" x2=\"{4}\" y2=\"{5}\" stroke=\"black\"/>\n",
      kWidth, kHeight, kWidth / 2 - 60, title, kMargin, kHeight - kMargin, kWidth - kMargin, kMargin);
}

std::string axis_labels(double xlo, double xhi, double ylo, double yhi) {
  return fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\">{:.4g}</text>\n"
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">{:.4g}</text>\n"
      "<text x=\"4\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\">{:.4g}</text>\n"
      "<text x=\"4\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\">{:.4g}</text>\n",
      kMargin, kHeight - kMargin + 14, xlo, kWidth - kMargin, kHeight - kMargin + 14, xhi, kHeight - kMargin, ylo,
      kMargin + 4, yhi);
}

}  // namespace

std::vector<HistogramBin> histogram(std::span<const double> values) {
  if (values.empty()) throw DataError("histogram of an empty chain");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  const auto n = static_cast<long>(sorted.size());
  if (!(hi > lo)) return {{lo, hi, n}};

  const double iqr = order_stat(sorted, 0.75) - order_stat(sorted, 0.25);
  long bins = 0;
  if (iqr > 0.0) {
    const double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
    bins = static_cast<long>(std::ceil((hi - lo) / width));
  } else {
    bins = static_cast<long>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
  }
  bins = std::clamp(bins, 1L, kMaxBins);
  const double width = (hi - lo) / static_cast<double>(bins);

  std::vector<HistogramBin> out;
  out.reserve(static_cast<std::size_t>(bins));
  for (long b = 0; b < bins; ++b) {
    const double left = lo + width * static_cast<double>(b);
    const double right = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
    out.push_back({left, right, 0});
  }
  for (double v : sorted) {
    auto b = static_cast<long>((v - lo) / width);
    b = std::clamp(b, 0L, bins - 1);
    ++out[static_cast<std::size_t>(b)].count;
  }
  return out;
}

std::string trace_csv(std::span<const double> values) {
  std::string out = "iteration,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) out += fmt::format("{},{}\n", i + 1, values[i]);
  return out;
}

std::string histogram_csv(std::span<const HistogramBin> bins) {
  std::string out = "bin_left,bin_right,count\n";
  for (const HistogramBin& b : bins) out += fmt::format("{},{},{}\n", b.left, b.right, b.count);
  return out;
}

std::string trace_svg(std::span<const double> values, const std::string& title) {
  if (values.empty()) throw DataError("trace of an empty chain");
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double ylo = *mn;
  const double yhi = *mx > *mn ? *mx : *mn + 1.0;
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  const double n = std::max<double>(1.0, static_cast<double>(values.size() - 1));

  std::string out = svg_open(title);
  out += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"0.6\" points=\"";
  // Long chains are decimated to at most ~4000 vertices.
  const std::size_t stride = std::max<std::size_t>(1, values.size() / 4000);
  for (std::size_t i = 0; i < values.size(); i += stride) {
    const double x = kMargin + plot_w * static_cast<double>(i) / n;
    const double y = kHeight - kMargin - plot_h * (values[i] - ylo) / (yhi - ylo);
    out += fmt::format("{:.2f},{:.2f} ", x, y);
  }
  out += "\"/>\n";
  out += axis_labels(1, static_cast<double>(values.size()), ylo, yhi);
  out += "</svg>\n";
  return out;
}

std::string histogram_svg(std::span<const HistogramBin> bins, const std::string& title) {
  if (bins.empty()) throw DataError("histogram of an empty chain");
  const double xlo = bins.front().left;
  const double xhi = bins.back().right > xlo ? bins.back().right : xlo + 1.0;
  long peak = 1;
  for (const HistogramBin& b : bins) peak = std::max(peak, b.count);
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;

  std::string out = svg_open(title);
  for (const HistogramBin& b : bins) {
    const double x0 = kMargin + plot_w * (b.left - xlo) / (xhi - xlo);
    double x1 = kMargin + plot_w * (b.right - xlo) / (xhi - xlo);
    if (bins.size() == 1) x1 = kWidth - kMargin;
    const double h = plot_h * static_cast<double>(b.count) / static_cast<double>(peak);
    out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"steelblue\" "
                       "stroke=\"white\" stroke-width=\"0.3\"/>\n",
                       x0, kHeight - kMargin - h, std::max(0.0, x1 - x0), h);
  }
  out += axis_labels(xlo, xhi, 0, static_cast<double>(peak));
  out += "</svg>\n";
  return out;
}

std::string serialize_chain(std::span<const ModelParams> draws) {
  std::string out = "lambda1,lambda2,alpha,beta\n";
  for (const ModelParams& d : draws) {
    out += fmt::format("{},{},{},{}\n", d.lambda1(), d.lambda2(), d.alpha(), d.beta());
  }
  return out;
}

std::vector<ModelParams> parse_chain(std::istream& in) {
  std::string text;
  long line_no = 0;
  bool seen_header = false;
  std::vector<ModelParams> draws;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text.front() == '#') continue;
    if (!seen_header) {
      if (text != "lambda1,lambda2,alpha,beta") {
        throw DataError(fmt::format("line {}: expected header 'lambda1,lambda2,alpha,beta'", line_no));
      }
      seen_header = true;
      continue;
    }
    double v[4];
    std::string_view rest = text;
    for (int k = 0; k < 4; ++k) {
      const std::size_t comma = k < 3 ? rest.find(',') : rest.size();
      if (comma == std::string_view::npos) throw DataError(fmt::format("line {}: expected 4 fields", line_no));
      const std::string_view field = rest.substr(0, comma);
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v[k]);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw DataError(fmt::format("line {}: unparseable value '{}'", line_no, field));
      }
      rest = comma < rest.size() ? rest.substr(comma + 1) : std::string_view{};
    }
    if (!rest.empty()) throw DataError(fmt::format("line {}: expected 4 fields", line_no));
    try {
      draws.emplace_back(v[0], v[1], v[2], v[3]);
    } catch (const DomainError& e) {
      throw DataError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  if (!seen_header) throw DataError("missing header");
  return draws;
}

}  // namespace mwcr
