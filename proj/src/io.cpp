#include "ncint/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ncint::io {

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::runtime_error("io: cannot write " + path);
  return out;
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("io: cannot read " + path);
  return in;
}

void check_keys(const nlohmann::json& j, const std::vector<std::string>& allowed,
                const char* what) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const std::string& k : allowed)
      if (key == k) known = true;
    if (!known)
      throw std::invalid_argument(std::string(what) + ": unknown key '" + key + "'");
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit_report(const std::string& path, const Csv& report) {
  std::ofstream out = open_for_write(path);
  for (const std::string& line : report.preamble) out << "# " << line << "\n";
  out << report.header << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ",";
      out << row[i];
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("io: write failed for " + path);
}

void write_spectrum_csv(const std::string& path, const spectra::SpectralSequence& seq) {
  Csv csv;
  csv.header = "index,re,im";
  csv.rows.reserve(seq.values.size());
  for (std::size_t j = 0; j < seq.values.size(); ++j)
    csv.rows.push_back({std::to_string(j), format_double(seq.values[j].real()),
                        format_double(seq.values[j].imag())});
  emit_report(path, csv);
}

spectra::SpectralSequence read_spectrum_csv(const std::string& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("io: empty spectrum file " + path);
  while (!line.empty() && (line.front() == '#')) {
    if (!std::getline(in, line)) throw std::runtime_error("io: header missing in " + path);
  }
  if (line != "index,re,im" && line != "index,re,im\r")
    throw std::invalid_argument("io: spectrum CSV must start with header index,re,im");

  std::vector<cplx> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string idx, re, im;
    if (!std::getline(ss, idx, ',') || !std::getline(ss, re, ',') || !std::getline(ss, im))
      throw std::invalid_argument("io: malformed spectrum row at line " + std::to_string(lineno));
    values.emplace_back(std::stod(re), std::stod(im));
  }
  return spectra::sort_sequence(std::move(values));
}

void write_matrix_json(const std::string& path, const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("io: matrix JSON requires a square matrix");
  nlohmann::json j;
  j["dim"] = m.rows();
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows() * m.cols(); ++i)
    entries.push_back({m.data()[i].real(), m.data()[i].imag()});
  j["entries"] = std::move(entries);
  std::ofstream out = open_for_write(path);
  out << j.dump(1) << "\n";
}

CMatrix read_matrix_json(const std::string& path) {
  std::ifstream in = open_for_read(path);
  nlohmann::json j = nlohmann::json::parse(in);
  check_keys(j, {"dim", "entries"}, "matrix JSON");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != dim * dim)
    throw std::invalid_argument("io: matrix JSON entry count does not match dim^2");
  CMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim * dim; ++i) {
    const auto& e = entries[i];
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("io: matrix JSON entries must be [re, im] pairs");
    m.data()[i] = cplx(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

models::TorusSymbolModel model_from_json(const nlohmann::json& j) {
  check_keys(j, {"n", "m", "cutoff", "symmetrized", "fhat"}, "model JSON");
  models::TorusSymbolModel m;
  m.n = j.at("n").get<int>();
  m.m = j.at("m").get<double>();
  m.cutoff = j.at("cutoff").get<std::size_t>();
  m.symmetrized = j.value("symmetrized", true);
  for (const auto& c : j.at("fhat")) {
    check_keys(c, {"k", "re", "im"}, "model JSON fhat entry");
    models::FourierCoeff fc;
    const auto& k = c.at("k");
    if (!k.is_array() || k.empty() || k.size() > 2)
      throw std::invalid_argument("model JSON: fhat k must be a list of 1 or 2 integers");
    fc.k[0] = k[0].get<int>();
    fc.k[1] = (k.size() == 2) ? k[1].get<int>() : 0;
    fc.value = cplx(c.value("re", 0.0), c.value("im", 0.0));
    m.fhat.push_back(fc);
  }
  return m;
}

nlohmann::json model_to_json(const models::TorusSymbolModel& m) {
  nlohmann::json j;
  j["n"] = m.n;
  j["m"] = m.m;
  j["cutoff"] = m.cutoff;
  j["symmetrized"] = m.symmetrized;
  nlohmann::json fhat = nlohmann::json::array();
  for (const models::FourierCoeff& c : m.fhat) {
    nlohmann::json e;
    e["k"] = (m.n == 2) ? nlohmann::json::array({c.k[0], c.k[1]})
                        : nlohmann::json::array({c.k[0]});
    e["re"] = c.value.real();
    e["im"] = c.value.imag();
    fhat.push_back(std::move(e));
  }
  j["fhat"] = std::move(fhat);
  return j;
}

void write_model_json(const std::string& path, const models::TorusSymbolModel& m) {
  std::ofstream out = open_for_write(path);
  out << model_to_json(m).dump(1) << "\n";
}

models::TorusSymbolModel read_model_json(const std::string& path) {
  std::ifstream in = open_for_read(path);
  return model_from_json(nlohmann::json::parse(in));
}

}  // namespace ncint::io
