#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cic/scan.hpp"
#include "cic/types.hpp"

namespace cic::io {

struct Column {
  std::string name;
  const RealVector* values = nullptr;
};

struct TextColumn {
  std::string name;
  const std::vector<std::string>* values = nullptr;
};

// Comma-separated values, 12 significant digits, LF line endings; byte
// deterministic for identical inputs.
void write_csv(const std::string& path, const std::vector<Column>& columns,
               const std::optional<TextColumn>& text_column = std::nullopt);

// Self-contained SVG line plot of susceptibility against the scan parameter,
// with detected critical points as dashed vertical markers.
void write_svg(const std::string& path, const RealVector& parameter,
               const RealVector& susceptibility,
               const std::vector<scan::CriticalPoint>& critical_points,
               const std::string& x_label, const std::string& y_label,
               const std::string& title);

// Scan payload as JSON text (stable key order).
std::string scan_json(const std::string& model, const std::vector<Column>& columns,
                      const std::vector<scan::CriticalPoint>& critical_points);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace cic::io
