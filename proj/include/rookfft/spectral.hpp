#ifndef ROOKFFT_SPECTRAL_HPP_
#define ROOKFFT_SPECTRAL_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "rookfft/algebra.hpp"
#include "rookfft/rook_reps.hpp"

namespace rookfft {

// A ballot maps candidate -> position; unranked candidates are undefined.
struct BallotRecord {
  PartialPermutation ballot;
  double count = 0.0;
};

// Records are merged by ballot and kept in PartialPermutation order.
struct Dataset {
  int n = 0;
  std::vector<BallotRecord> records;
};

// Ballot CSV: header "ballot,count", then one "a->b;c->d,count" per line.
// Blank lines and lines starting with '#' are skipped.  When n is absent
// it is the largest symbol that occurs (at least 1).  Errors carry the
// 1-based line number.
Dataset parse_ballots(std::istream& in, std::optional<int> n = std::nullopt);
Dataset ingest(const std::string& path, std::optional<int> n = std::nullopt);

// Coefficient of the basis element of each ballot is its count.
AlgebraElement to_function(const Dataset& d, Basis association);

// Projection of the groupoid image of f onto the isotypic component of
// label: stein transform, keep one block, invert.
AlgebraElement isotypic_project(const AlgebraElement& f, const IrrepLabel& label);
// All projections at once, in labels(n) order, sharing one transform.
std::vector<AlgebraElement> isotypic_projections(const AlgebraElement& f);

struct LabelEnergy {
  IrrepLabel label;
  double energy = 0.0;    // <p, p>_2
  double fraction = 0.0;  // energy / total, 0 when total is 0
};

struct SpectrumReport {
  int n = 0;
  Basis association = Basis::groupoid;
  double total = 0.0;  // <g, g>_2 for the groupoid image g of f
  std::vector<LabelEnergy> labels;
};

// The association is the basis f is expressed in.
SpectrumReport spectrum(const AlgebraElement& f);

}  // namespace rookfft

#endif  // ROOKFFT_SPECTRAL_HPP_
