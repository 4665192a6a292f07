#include "qchan/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qchan/qubit_geometry.hpp"

namespace qchan {

namespace {
using nlohmann::json;

Mat parse_operator(const json& rows, int n) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("kraus operator: expected " +
                                std::to_string(n) + " rows");
  Mat k(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("kraus operator: ragged row");
    for (int j = 0; j < n; ++j) {
      const json& e = row.at(j);
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("kraus entry: expected [re, im]");
      k(i, j) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return k;
}
}  // namespace

KrausChannel parse_channel_json(const std::string& text) {
  json j = json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "kraus") {
    const int n = j.at("dim").get<int>();
    std::vector<Mat> ops;
    for (const json& op : j.at("operators")) ops.push_back(parse_operator(op, n));
    return KrausChannel(n, std::move(ops));
  }
  if (kind == "pauli") {
    const auto w = j.at("weights");
    if (w.size() != 4)
      throw std::invalid_argument("pauli: expected 4 weights");
    return pauli_channel({w.at(0).get<double>(), w.at(1).get<double>(),
                          w.at(2).get<double>(), w.at(3).get<double>()});
  }
  if (kind == "depolarizing")
    return depolarizing(j.at("dim").get<int>(), j.at("lambda").get<double>());
  if (kind == "bloch") {
    BlochParams p;
    for (int i = 0; i < 3; ++i) {
      p.lambda[i] = j.at("lambda").at(i).get<double>();
      p.t[i] = j.value("t", json::array({0.0, 0.0, 0.0})).at(i).get<double>();
    }
    QubitChoiResult c = choi_qubit(p);
    if (!c.cp)
      throw std::invalid_argument(
          "bloch channel is not completely positive (min Choi eigenvalue " +
          std::to_string(c.min_eigenvalue) + ")");
    return kraus_from_choi(JamiolkowskiState(2, DensityMatrix(c.sigma)));
  }
  if (kind == "coarse_graining") return coarse_graining(j.at("dim").get<int>());
  throw std::invalid_argument("unknown channel kind: " + kind);
}

KrausChannel load_channel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open channel file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_channel_json(os.str());
}

std::string channel_kind(const std::string& text) {
  return json::parse(text).at("kind").get<std::string>();
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace qchan
