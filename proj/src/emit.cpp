#include "cic/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cic::io {

namespace {

std::string format_value(double v, int significant = 12) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant, v);
  return buffer;
}

void check_columns(const std::vector<Column>& columns) {
  if (columns.empty() || columns[0].values == nullptr) {
    throw validation_error("csv emission requires at least one column");
  }
  const Index rows = columns[0].values->size();
  if (rows == 0) throw validation_error("csv emission requires a non-empty scan");
  for (const Column& column : columns) {
    if (column.values == nullptr || column.values->size() != rows) {
      throw validation_error("csv columns must have equal nonzero length");
    }
  }
}

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw validation_error("write to '" + path + "' failed");
}

void write_csv(const std::string& path, const std::vector<Column>& columns,
               const std::optional<TextColumn>& text_column) {
  check_columns(columns);
  const Index rows = columns[0].values->size();
  if (text_column && (!text_column->values ||
                      static_cast<Index>(text_column->values->size()) != rows)) {
    throw validation_error("csv text column length mismatch");
  }
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out << ',';
    out << columns[c].name;
  }
  if (text_column) out << ',' << text_column->name;
  out << '\n';
  for (Index r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      out << format_value((*columns[c].values)(r));
    }
    if (text_column) out << ',' << (*text_column->values)[static_cast<std::size_t>(r)];
    out << '\n';
  }
  write_text_file(path, out.str());
}

void write_svg(const std::string& path, const RealVector& parameter,
               const RealVector& susceptibility,
               const std::vector<scan::CriticalPoint>& critical_points,
               const std::string& x_label, const std::string& y_label,
               const std::string& title) {
  const Index n = parameter.size();
  if (n == 0 || susceptibility.size() != n) {
    throw validation_error("svg emission requires matching non-empty series");
  }
  constexpr double width = 880.0, height = 560.0;
  constexpr double left = 80.0, right = 30.0, top = 50.0, bottom = 60.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  const double x_min = parameter.minCoeff();
  const double x_max = parameter.maxCoeff();
  double y_min = susceptibility.minCoeff();
  double y_max = susceptibility.maxCoeff();
  if (y_max == y_min) {
    y_max += 1.0;
    y_min -= 1.0;
  }
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;
  const double x_span = x_max > x_min ? x_max - x_min : 1.0;

  auto px = [&](double x) { return left + (x - x_min) / x_span * plot_w; };
  auto py = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

  // Axes.
  svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
      << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n";
  const int ticks = 6;
  for (int t = 0; t <= ticks; ++t) {
    const double fx = x_min + (x_max - x_min) * t / ticks;
    const double gx = px(fx);
    svg << "<line x1=\"" << format_value(gx, 6) << "\" y1=\"" << top + plot_h << "\" x2=\""
        << format_value(gx, 6) << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << format_value(gx, 6) << "\" y=\"" << top + plot_h + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_value(fx, 4) << "</text>\n";
    const double fy = y_min + (y_max - y_min) * t / ticks;
    const double gy = py(fy);
    svg << "<line x1=\"" << left - 5 << "\" y1=\"" << format_value(gy, 6) << "\" x2=\"" << left
        << "\" y2=\"" << format_value(gy, 6) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << left - 8 << "\" y=\"" << format_value(gy + 4, 6)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_value(fy, 4) << "</text>\n";
  }
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 14
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
      << "</text>\n";
  svg << "<text x=\"20\" y=\"" << top + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 20 " << top + plot_h / 2 << ")\">" << y_label << "</text>\n";

  // Critical-point markers behind the curve.
  for (const scan::CriticalPoint& point : critical_points) {
    const double gx = px(point.location);
    svg << "<line class=\"critical-point\" x1=\"" << format_value(gx, 6) << "\" y1=\"" << top
        << "\" x2=\"" << format_value(gx, 6) << "\" y2=\"" << top + plot_h
        << "\" stroke=\"#c0392b\" stroke-dasharray=\"6,4\"/>\n";
    svg << "<text x=\"" << format_value(gx + 4, 6) << "\" y=\"" << top + 14
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#c0392b\">"
        << format_value(point.location, 4) << "</text>\n";
  }

  svg << "<polyline fill=\"none\" stroke=\"#1f618d\" stroke-width=\"1.5\" points=\"";
  for (Index i = 0; i < n; ++i) {
    if (!std::isfinite(susceptibility(i))) continue;
    svg << format_value(px(parameter(i)), 7) << ',' << format_value(py(susceptibility(i)), 7)
        << ' ';
  }
  svg << "\"/>\n</svg>\n";
  write_text_file(path, svg.str());
}

std::string scan_json(const std::string& model, const std::vector<Column>& columns,
                      const std::vector<scan::CriticalPoint>& critical_points) {
  nlohmann::ordered_json root;
  root["model"] = model;
  for (const Column& column : columns) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (Index i = 0; i < column.values->size(); ++i) array.push_back((*column.values)(i));
    root[column.name] = std::move(array);
  }
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const scan::CriticalPoint& point : critical_points) {
    points.push_back({{"location", point.location},
                      {"score", point.score},
                      {"label", point.label}});
  }
  root["critical_points"] = std::move(points);
  return root.dump(2) + "\n";
}

}  // namespace cic::io
