#ifndef ROOKFFT_IO_HPP_
#define ROOKFFT_IO_HPP_

#include <string>

#include <json.hpp>

#include "rookfft/algebra.hpp"
#include "rookfft/fft.hpp"
#include "rookfft/spectral.hpp"

namespace rookfft {

// {n, basis, terms: [{elem: "2->1;4->4", re, im}]}, terms in element order.
nlohmann::json element_to_json(const AlgebraElement& f);
AlgebraElement element_from_json(const nlohmann::json& j);

// {n, family, blocks: [{lambda: [parts], k, dim, rows: [[{re, im}]]}], ops}.
// With cells = true, stein blocks also carry cells: [{A, B, matrix}] for
// the C(n,k) x C(n,k) grid.
nlohmann::json coefficients_to_json(const FourierCoefficients& F, bool cells = false);
FourierCoefficients coefficients_from_json(const nlohmann::json& j);

// {n, association, total, labels: [{lambda, k, energy, fraction}]}.
nlohmann::json spectrum_to_json(const SpectrumReport& r);
// Header "lambda,k,energy,fraction"; lambda written as "2 1 1".
std::string spectrum_to_csv(const SpectrumReport& r);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);
// Parses JSON text, turning syntax errors into ParseError.
nlohmann::json parse_json(const std::string& text);

}  // namespace rookfft

#endif  // ROOKFFT_IO_HPP_
