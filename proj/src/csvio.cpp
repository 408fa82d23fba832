#include "pfilm/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace pfilm {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  // shortest representation that round-trips
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return buf;
}

namespace {

void write_problem_comments(std::ostream& os, const FilmProblem& p) {
  os << "# material = " << p.material.name << "\n";
  os << "# omega_p = " << format_double(p.material.omega_p) << "\n";
  os << "# v_F = " << format_double(p.material.v_F) << "\n";
  os << "# d_nm = " << format_double(p.d_nm) << "\n";
  os << "# theta_deg = " << format_double(p.theta * 180.0 / std::numbers::pi) << "\n";
  os << "# eps = " << format_double(p.eps) << "\n";
  os << "# p = " << format_double(p.p) << "\n";
}

std::string csv_escape(const std::string& s) {
  std::string out;
  for (char ch : s) out += (ch == ',' || ch == '\n') ? ';' : ch;
  return out;
}

}  // namespace

void write_spectrum_csv(std::ostream& os, const SweepSpec& spec,
                        std::span<const SpectrumRow> rows) {
  os << "# pfilm " << version << " spectrum\n";
  os << "# axis = " << to_string(spec.axis) << "\n";
  os << "# range = " << format_double(spec.start) << " : " << format_double(spec.stop)
     << " steps = " << spec.steps << "\n";
  write_problem_comments(os, spec.base);
  if (spec.axis != SweepAxis::omega)
    os << "# omega = " << format_double(spec.omega_fixed) << "\n";
  os << "# variant = " << to_string(spec.options.variant) << "\n";
  os << "# g_method = "
     << (spec.options.g_method ? to_string(*spec.options.g_method) : "auto") << "\n";

  // the omega axis IS the omega column; other axes get their own first column
  const bool extra_axis = spec.axis != SweepAxis::omega;
  if (extra_axis) os << to_string(spec.axis) << ',';
  os << "omega,T,R,A,Re_G,Im_G,Re_eta0,Im_eta0,abs_sigma_ratio,error\n";
  for (const SpectrumRow& r : rows) {
    if (extra_axis) os << format_double(r.axis) << ',';
    os << format_double(r.Omega) << ',' << format_double(r.T) << ','
       << format_double(r.R) << ',' << format_double(r.A) << ','
       << format_double(r.G.real()) << ',' << format_double(r.G.imag()) << ','
       << format_double(r.eta0.real()) << ',' << format_double(r.eta0.imag())
       << ',' << format_double(std::abs(r.sigma_ratio)) << ','
       << csv_escape(r.error) << '\n';
  }
}

void write_field_csv(std::ostream& os, const FilmProblem& problem, double Omega,
                     std::span<const FieldRow> rows, Complex mean_e, Complex G_ref) {
  os << "# pfilm " << version << " field profile\n";
  write_problem_comments(os, problem);
  os << "# omega = " << format_double(Omega) << "\n";
  os << "x_over_d,Re_e,Im_e,abs_e\n";
  for (const FieldRow& r : rows)
    os << format_double(r.x_over_d) << ',' << format_double(r.e.real()) << ','
       << format_double(r.e.imag()) << ',' << format_double(std::abs(r.e)) << '\n';
  os << "# mean_e = " << format_double(mean_e.real()) << " + "
     << format_double(mean_e.imag()) << "i\n";
  os << "# G = " << format_double(G_ref.real()) << " + "
     << format_double(G_ref.imag()) << "i (mean e(x) reproduces G)\n";
}

const std::vector<double>& SpectrumTable::column(const std::string& name) const {
  auto it = columns.find(name);
  if (it == columns.end())
    throw std::invalid_argument("spectrum file: missing column '" + name + "'");
  return it->second;
}

SpectrumTable read_spectrum_csv(std::istream& is) {
  SpectrumTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    if (!have_header) {
      while (std::getline(ss, cell, ',')) {
        if (table.columns.count(cell))
          throw std::invalid_argument("spectrum file: duplicate column '" + cell + "'");
        table.header.push_back(cell);
        table.columns[cell] = {};
      }
      have_header = true;
      continue;
    }
    std::size_t col = 0;
    while (std::getline(ss, cell, ',') && col < table.header.size()) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      table.columns[table.header[col]].push_back(end == cell.c_str() ? std::nan("") : v);
      ++col;
    }
  }
  if (!have_header) throw std::invalid_argument("spectrum file: empty or header missing");
  return table;
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  const auto trim = [](std::string s) {
    const char* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string key, value;
    if (auto eq = line.find('='); eq != std::string::npos) {
      key = trim(line.substr(0, eq));
      value = trim(line.substr(eq + 1));
    } else {
      std::stringstream ss(line);
      ss >> key >> value;
    }
    if (key.empty()) continue;
    if (value.empty())
      throw std::invalid_argument(path + ": key '" + key + "' has no value");
    kv[key] = value;
  }
  return kv;
}

}  // namespace pfilm
