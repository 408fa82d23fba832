#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pfilm/sweep.hpp"

namespace pfilm {

/// Headered CSV with a leading '#' comment block recording the resolved
/// parameter set and tool version. Same spec + same tolerances => byte
/// identical output (no timestamps).
void write_spectrum_csv(std::ostream& os, const SweepSpec& spec,
                        std::span<const SpectrumRow> rows);

struct FieldRow {
  double x_over_d;
  Complex e;
};

void write_field_csv(std::ostream& os, const FilmProblem& problem, double Omega,
                     std::span<const FieldRow> rows, Complex mean_e, Complex G_ref);

/// Parsed spectrum file: the axis column plus any numeric columns by name.
struct SpectrumTable {
  std::vector<std::string> header;
  std::map<std::string, std::vector<double>> columns;

  const std::vector<double>& column(const std::string& name) const;  // throws on miss
};

SpectrumTable read_spectrum_csv(std::istream& is);

/// Flat `key = value` text (also accepts `key value`); '#' comments.
std::map<std::string, std::string> read_key_value_file(const std::string& path);

std::string format_double(double v);  // shortest round-trip-exact decimal

}  // namespace pfilm
