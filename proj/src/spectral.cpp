#include "rookfft/spectral.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "rookfft/errors.hpp"
#include "rookfft/fft.hpp"

namespace rookfft {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

struct RawLine {
  int line;
  std::string ballot;
  std::string count;
};

int largest_symbol(const std::string& ballot) {
  int best = 0;
  int cur = -1;
  for (char ch : ballot) {
    if (ch >= '0' && ch <= '9') {
      cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
      if (cur > 1000) return cur;
    } else {
      best = std::max(best, cur);
      cur = -1;
    }
  }
  return std::max(best, cur);
}

}  // namespace

Dataset parse_ballots(std::istream& in, std::optional<int> n) {
  std::vector<RawLine> raw;
  std::string text;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, text)) {
    ++line_no;
    const std::string line = trim(text);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "ballot,count") throw ParseError("expected header \"ballot,count\"", line_no);
      header_seen = true;
      continue;
    }
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) throw ParseError("expected \"ballot,count\"", line_no);
    raw.push_back({line_no, trim(std::string_view(line).substr(0, comma)),
                   trim(std::string_view(line).substr(comma + 1))});
  }
  if (!header_seen) throw ParseError("missing header \"ballot,count\"", std::max(line_no, 1));

  int size = 1;
  if (n) {
    size = *n;
  } else {
    for (const auto& r : raw) size = std::max(size, largest_symbol(r.ballot));
  }
  if (size < 0 || size > 8) throw DimensionError("ballots need 0 <= n <= 8, got " + std::to_string(size));

  std::map<PartialPermutation, double> merged;
  for (const auto& r : raw) {
    PartialPermutation ballot;
    try {
      ballot = parse_flat(r.ballot, size);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), r.line);
    }
    double count = 0.0;
    const auto* begin = r.count.data();
    const auto* end = begin + r.count.size();
    const auto [ptr, ec] = std::from_chars(begin, end, count);
    if (ec != std::errc() || ptr != end || r.count.empty()) {
      throw ParseError("count '" + r.count + "' is not a decimal number", r.line);
    }
    if (!std::isfinite(count) || count < 0) throw ParseError("count must be finite and >= 0", r.line);
    merged[ballot] += count;
  }
  Dataset d;
  d.n = size;
  for (auto& [ballot, count] : merged) d.records.push_back({ballot, count});
  return d;
}

Dataset ingest(const std::string& path, std::optional<int> n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_ballots(in, n);
}

AlgebraElement to_function(const Dataset& d, Basis association) {
  AlgebraElement f(d.n, association);
  for (const auto& r : d.records) f.add(r.ballot, r.count);
  f.normalize();
  return f;
}

namespace {

AlgebraElement groupoid_image(const AlgebraElement& f) {
  return f.basis() == Basis::groupoid ? f : to_groupoid(f);
}

AlgebraElement project_from(const FourierCoefficients& F, std::size_t keep) {
  FourierCoefficients only = zero_coefficients(F.n, F.family);
  only.blocks[keep] = F.blocks[keep];
  return fourier_invert(only);
}

}  // namespace

AlgebraElement isotypic_project(const AlgebraElement& f, const IrrepLabel& label) {
  const auto all = labels(f.n());
  const auto it = std::find(all.begin(), all.end(), label);
  if (it == all.end()) {
    throw DimensionError("no irreducible " + label.to_string() + " of R_" + std::to_string(f.n()));
  }
  const auto F = stein_fft(groupoid_image(f));
  return project_from(F, static_cast<std::size_t>(it - all.begin()));
}

std::vector<AlgebraElement> isotypic_projections(const AlgebraElement& f) {
  const auto F = stein_fft(groupoid_image(f));
  std::vector<AlgebraElement> out;
  for (std::size_t l = 0; l < F.labels.size(); ++l) out.push_back(project_from(F, l));
  return out;
}

SpectrumReport spectrum(const AlgebraElement& f) {
  const auto g = groupoid_image(f);
  SpectrumReport r;
  r.n = f.n();
  r.association = f.basis();
  r.total = inner2(g, g).real();
  const auto projections = isotypic_projections(g);
  const auto all = labels(f.n());
  for (std::size_t l = 0; l < all.size(); ++l) {
    const double e = inner2(projections[l], projections[l]).real();
    r.labels.push_back({all[l], e, r.total > 0 ? e / r.total : 0.0});
  }
  return r;
}

}  // namespace rookfft
