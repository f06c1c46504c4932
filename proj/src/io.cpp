#include "rookfft/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "rookfft/combinatorics.hpp"
#include "rookfft/errors.hpp"

namespace rookfft {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json parts_to_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

// nlohmann's typed getters throw type_error; report those as parse errors
template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Complex complex_from_json(const json& j) { return {get_field<double>(j, "re"), get_field<double>(j, "im")}; }

}  // namespace

json element_to_json(const AlgebraElement& f) {
  json terms = json::array();
  for (const auto& [s, c] : f.terms()) {
    terms.push_back(json{{"elem", print_flat(s)}, {"re", c.real()}, {"im", c.imag()}});
  }
  return json{{"n", f.n()}, {"basis", to_string(f.basis())}, {"terms", std::move(terms)}};
}

AlgebraElement element_from_json(const json& j) {
  const int n = get_field<int>(j, "n");
  if (n < 0 || n > 8) throw ParseError("n must be in 0..8");
  AlgebraElement f(n, basis_from_string(get_field<std::string>(j, "basis")));
  const auto terms = get_field<json>(j, "terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  for (const auto& t : terms) {
    f.add(parse_flat(get_field<std::string>(t, "elem"), n), complex_from_json(t));
  }
  f.normalize();
  return f;
}

json coefficients_to_json(const FourierCoefficients& F, bool cells) {
  json blocks = json::array();
  for (std::size_t l = 0; l < F.labels.size(); ++l) {
    const auto& label = F.labels[l];
    const auto& m = F.blocks[l];
    json b{{"lambda", parts_to_json(label.lambda)}, {"k", label.k()}, {"dim", m.rows()}, {"rows", matrix_to_json(m)}};
    if (cells && F.family == Family::stein) {
      const int k = label.k();
      const auto c = binomial(F.n, k);
      const auto d = static_cast<Eigen::Index>(hook_length_dimension(label.lambda));
      json grid = json::array();
      for (std::uint64_t a = 0; a < c; ++a) {
        for (std::uint64_t bb = 0; bb < c; ++bb) {
          grid.push_back(json{{"A", colex_unrank(F.n, k, a)},
                              {"B", colex_unrank(F.n, k, bb)},
                              {"matrix", matrix_to_json(m.block(static_cast<Eigen::Index>(a) * d,
                                                                static_cast<Eigen::Index>(bb) * d, d, d))}});
        }
      }
      b["cells"] = std::move(grid);
    }
    blocks.push_back(std::move(b));
  }
  return json{{"n", F.n}, {"family", to_string(F.family)}, {"blocks", std::move(blocks)}, {"ops", F.ops.multiply_adds}};
}

FourierCoefficients coefficients_from_json(const json& j) {
  FourierCoefficients F;
  F.n = get_field<int>(j, "n");
  if (F.n < 0 || F.n > 8) throw ParseError("n must be in 0..8");
  F.family = family_from_string(get_field<std::string>(j, "family"));
  if (j.contains("ops")) F.ops.multiply_adds = get_field<std::uint64_t>(j, "ops");
  const auto blocks = get_field<json>(j, "blocks");
  if (!blocks.is_array()) throw ParseError("'blocks' must be an array");
  for (const auto& b : blocks) {
    const IrrepLabel label{Partition(get_field<std::vector<int>>(b, "lambda")), F.n};
    if (label.k() > F.n) throw DimensionError("label " + label.to_string() + " has weight above n");
    const auto rows = get_field<json>(b, "rows");
    if (!rows.is_array()) throw ParseError("'rows' must be an array");
    const auto d = static_cast<Eigen::Index>(rows.size());
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
        throw DimensionError("block " + label.to_string() + " is not square");
      }
      for (Eigen::Index c = 0; c < d; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    F.labels.push_back(label);
    F.blocks.push_back(std::move(m));
  }
  return F;
}

json spectrum_to_json(const SpectrumReport& r) {
  json labels = json::array();
  for (const auto& e : r.labels) {
    labels.push_back(json{{"lambda", parts_to_json(e.label.lambda)},
                          {"k", e.label.k()},
                          {"energy", e.energy},
                          {"fraction", e.fraction}});
  }
  return json{{"n", r.n}, {"association", to_string(r.association)}, {"total", r.total}, {"labels", std::move(labels)}};
}

std::string spectrum_to_csv(const SpectrumReport& r) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "lambda,k,energy,fraction\n";
  for (const auto& e : r.labels) {
    std::string lambda;
    for (int p : e.label.lambda.parts()) {
      if (!lambda.empty()) lambda += ' ';
      lambda += std::to_string(p);
    }
    os << lambda << ',' << e.label.k() << ',' << e.energy << ',' << e.fraction << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace rookfft
