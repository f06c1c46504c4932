#include "rookfft/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "rookfft/algebra.hpp"
#include "rookfft/combinatorics.hpp"
#include "rookfft/errors.hpp"
#include "rookfft/fft.hpp"
#include "rookfft/io.hpp"
#include "rookfft/parallel.hpp"
#include "rookfft/spectral.hpp"

namespace rookfft {

namespace {

using nlohmann::json;

constexpr double kTolerance = 1e-9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = -1;
  int n_min = 1;
  std::string algorithm = "stein";
  std::string basis;
  std::string association = "groupoid";
  std::vector<std::string> inputs;
  std::string output;
  std::string format;
  bool convert = false;
  bool cells = false;
  std::uint64_t seed = 1;
};

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw IoError("cannot write " + c.output);
  file << text;
}

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

std::optional<int> explicit_n(const Config& c) {
  if (c.n < 0) return std::nullopt;
  return c.n;
}

// JSON elements carry their own basis; ballot CSV takes the given one.
AlgebraElement load_element(const Config& c, const std::string& path, Basis csv_basis) {
  const std::string text = load(path);
  if (looks_like_json(text)) {
    auto f = element_from_json(parse_json(text));
    if (c.n >= 0 && c.n != f.n()) {
      throw UsageError("--n " + std::to_string(c.n) + " disagrees with n = " + std::to_string(f.n()) + " in " + path);
    }
    return f;
  }
  std::istringstream in(text);
  return to_function(parse_ballots(in, explicit_n(c)), csv_basis);
}

const std::string& single_input(const Config& c) {
  if (c.inputs.size() != 1) throw UsageError("expected exactly one --input");
  return c.inputs.front();
}

// --- enumerate -------------------------------------------------------------

int cmd_enumerate(const Config& c, std::ostream& out) {
  if (c.n < 0) throw UsageError("--n is required");
  if (c.n > 8) {
    throw UsageError("refusing to list R_" + std::to_string(c.n) + " (" + std::to_string(rook_size(c.n)) +
                     " elements); n <= 8");
  }
  const auto elements = enumerate(c.n);
  const auto size = rook_size(c.n);
  const auto size_rec = rook_size_recursive(c.n);
  const std::string format = c.format.empty() ? "text" : c.format;
  if (format == "json") {
    json list = json::array();
    for (const auto& s : elements) list.push_back(json{{"cycle_link", print_cycle_link(s)}, {"flat", print_flat(s)}});
    json j{{"n", c.n}, {"size", size}, {"size_recursive", size_rec}, {"match", size == size_rec && size == elements.size()},
           {"elements", std::move(list)}};
    emit(c, j.dump(2) + "\n", out);
  } else if (format == "text") {
    std::ostringstream os;
    for (const auto& s : elements) os << print_cycle_link(s) << '\t' << print_flat(s) << '\n';
    os << "# size=" << size << " size_recursive=" << size_rec
       << " match=" << (size == size_rec && size == elements.size() ? "true" : "false") << '\n';
    emit(c, os.str(), out);
  } else {
    throw UsageError("enumerate supports --format text or json");
  }
  return kExitOk;
}

// --- transform -------------------------------------------------------------

struct BoundCheck {
  std::uint64_t bound;
  bool ok;
};

int cmd_transform(const Config& c, std::ostream& out) {
  const Basis csv_basis = c.basis.empty() ? Basis::groupoid : basis_from_string(c.basis);
  AlgebraElement f = load_element(c, single_input(c), csv_basis);
  const int n = f.n();
  FourierCoefficients F;
  BoundCheck check{0, false};
  if (c.algorithm == "naive") {
    F = naive_transform(f, f.basis() == Basis::groupoid ? Family::stein : Family::halverson);
    const auto size = rook_size(n);
    check.bound = size * size;
  } else if (c.algorithm == "stein") {
    const std::uint64_t b3 = stein_bound_times3(n);
    if (f.basis() == Basis::groupoid) {
      F = stein_fft(f, Execution::parallel);
      check.bound = b3 / 3;
    } else if (c.convert) {
      F = stein_fft_semigroup(f, Execution::parallel);
      check.bound = b3 / 3 + zeta_bound(n);
    } else {
      throw UsageError("stein expects groupoid-basis input; pass --convert to apply the zeta transform");
    }
  } else if (c.algorithm == "recursive") {
    if (f.basis() == Basis::groupoid) {
      if (!c.convert) {
        throw UsageError("recursive expects semigroup-basis input; pass --convert to apply Moebius inversion");
      }
      f = to_semigroup(f, Execution::parallel);
    }
    F = recursive_fft(f, Execution::parallel);
    check.bound = recursive_bound(n);
  } else {
    throw UsageError("unknown algorithm '" + c.algorithm + "'");
  }
  // every bound above is an integer floor of the closed form, and ops is
  // an integer, so ops <= floor(bound) is the exact comparison
  check.ok = F.ops.multiply_adds <= check.bound;
  json j = coefficients_to_json(F, c.cells);
  j["algorithm"] = c.algorithm;
  j["bound"] = check.bound;
  j["bound_ok"] = check.ok;
  emit(c, j.dump(2) + "\n", out);
  return kExitOk;
}

// --- invert / convolve -----------------------------------------------------

int cmd_invert(const Config& c, std::ostream& out) {
  const auto F = coefficients_from_json(parse_json(load(single_input(c))));
  emit(c, element_to_json(fourier_invert(F)).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_convolve(const Config& c, std::ostream& out) {
  if (c.inputs.size() != 2) throw UsageError("convolve takes two --input files");
  const Basis csv_basis = c.basis.empty() ? Basis::groupoid : basis_from_string(c.basis);
  const auto f = load_element(c, c.inputs[0], csv_basis);
  const auto g = load_element(c, c.inputs[1], csv_basis);
  if (f.basis() != g.basis()) throw UsageError("convolve operands are in different bases");
  const auto h = f.basis() == Basis::semigroup ? convolve_semigroup(f, g) : convolve_groupoid(f, g);
  emit(c, element_to_json(h).dump(2) + "\n", out);
  return kExitOk;
}

// --- analyze ---------------------------------------------------------------

int cmd_analyze(const Config& c, std::ostream& out) {
  const Basis association = basis_from_string(c.association);
  const auto f = load_element(c, single_input(c), association);
  const auto report = spectrum(f);
  const std::string format = c.format.empty() ? "json" : c.format;
  if (format == "json") {
    emit(c, spectrum_to_json(report).dump(2) + "\n", out);
  } else if (format == "csv") {
    emit(c, spectrum_to_csv(report), out);
  } else {
    throw UsageError("analyze supports --format json or csv");
  }
  return kExitOk;
}

// --- bench -----------------------------------------------------------------

struct BenchRow {
  int n;
  std::uint64_t size;
  std::uint64_t ops_naive;
  std::uint64_t ops_stein;
  std::uint64_t ops_recursive;
  std::uint64_t bound_naive;
  std::uint64_t bound_stein;  // floor of the Clausen sum, plus 2^n |R_n|
  std::uint64_t bound_recursive;
  bool bounds_ok;
  bool agree;
};

BenchRow bench_one(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(n));
  const auto f = random_element(n, Basis::semigroup, rng);
  const auto g = to_groupoid(f, Execution::parallel);

  const auto naive_h = naive_transform(f, Family::halverson);
  const auto naive_s = naive_transform(g, Family::stein);
  const auto stein = stein_fft_semigroup(f, Execution::parallel);
  const auto rec = recursive_fft(f, Execution::parallel);

  BenchRow r{};
  r.n = n;
  r.size = rook_size(n);
  r.ops_naive = naive_h.ops.multiply_adds;
  r.ops_stein = stein.ops.multiply_adds;
  r.ops_recursive = rec.ops.multiply_adds;
  r.bound_naive = r.size * r.size;
  const std::uint64_t b3 = stein_bound_times3(n) + 3 * zeta_bound(n);
  r.bound_stein = b3 / 3;
  r.bound_recursive = recursive_bound(n);
  r.bounds_ok = r.ops_naive <= r.bound_naive && 3 * r.ops_stein <= b3 && r.ops_recursive <= r.bound_recursive;
  r.agree = max_block_difference(stein, naive_s) <= kTolerance && max_block_difference(rec, naive_h) <= kTolerance;
  return r;
}

int cmd_bench(const Config& c, std::ostream& out, std::ostream& err) {
  const int n_max = c.n < 0 ? 4 : c.n;
  if (n_max > 5) throw UsageError("bench runs the naive oracle, so n <= 5");
  if (c.n_min < 0 || c.n_min > n_max) throw UsageError("need 0 <= --n-min <= --n");
  std::vector<BenchRow> rows;
  for (int n = c.n_min; n <= n_max; ++n) rows.push_back(bench_one(n, c.seed));

  const std::string format = c.format.empty() ? "csv" : c.format;
  if (format == "csv") {
    std::ostringstream os;
    os << "n,size,ops_naive,ops_stein,ops_recursive,bound_naive,bound_stein,bound_recursive,bounds_ok,agree\n";
    for (const auto& r : rows) {
      os << r.n << ',' << r.size << ',' << r.ops_naive << ',' << r.ops_stein << ',' << r.ops_recursive << ','
         << r.bound_naive << ',' << r.bound_stein << ',' << r.bound_recursive << ','
         << (r.bounds_ok ? "true" : "false") << ',' << (r.agree ? "true" : "false") << '\n';
    }
    emit(c, os.str(), out);
  } else if (format == "json") {
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back(json{{"n", r.n},
                          {"size", r.size},
                          {"ops_naive", r.ops_naive},
                          {"ops_stein", r.ops_stein},
                          {"ops_recursive", r.ops_recursive},
                          {"bound_naive", r.bound_naive},
                          {"bound_stein", r.bound_stein},
                          {"bound_recursive", r.bound_recursive},
                          {"bounds_ok", r.bounds_ok},
                          {"agree", r.agree}});
    }
    emit(c, json{{"seed", c.seed}, {"rows", std::move(list)}}.dump(2) + "\n", out);
  } else {
    throw UsageError("bench supports --format csv or json");
  }
  for (const auto& r : rows) {
    if (!r.agree) throw MathError("fast transforms disagree with the naive oracle at n=" + std::to_string(r.n));
    if (!r.bounds_ok) throw MathError("operation count above its bound at n=" + std::to_string(r.n));
  }
  (void)err;
  return kExitOk;
}

std::string one_line(std::string s) {
  for (char& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

int fail(std::ostream& err, const char* kind, const std::string& what, int code) {
  err << "error[" << kind << "]: " << one_line(what) << '\n';
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_limit_from_env();
  CLI::App app{"Fourier analysis on the rook monoid R_n", "rookfft"};
  app.require_subcommand(1);
  Config c;

  auto add_n = [&c](CLI::App* sub, const std::string& help) { sub->add_option("--n", c.n, help)->check(CLI::NonNegativeNumber); };
  auto add_output = [&c](CLI::App* sub) { sub->add_option("--output", c.output, "Write to this file instead of stdout"); };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the elements of R_n");
  add_n(enumerate_cmd, "Ambient size (at most 8)");
  enumerate_cmd->add_option("--format", c.format, "text (default) or json");
  add_output(enumerate_cmd);

  auto* transform_cmd = app.add_subcommand("transform", "Fourier transform of an element or ballot file");
  add_n(transform_cmd, "Ambient size for ballot files (inferred when absent)");
  transform_cmd->add_option("--input", c.inputs, "Element JSON or ballot CSV")->required();
  transform_cmd->add_option("--algorithm", c.algorithm, "naive, stein (default) or recursive")
      ->check(CLI::IsMember({"naive", "stein", "recursive"}));
  transform_cmd->add_option("--basis", c.basis, "Basis for ballot CSV input: semigroup or groupoid (default)")
      ->check(CLI::IsMember({"semigroup", "groupoid"}));
  transform_cmd->add_flag("--convert", c.convert, "Change basis when the algorithm needs the other one");
  transform_cmd->add_flag("--cells", c.cells, "Also write the stein cell grid");
  add_output(transform_cmd);

  auto* invert_cmd = app.add_subcommand("invert", "Fourier inversion to groupoid-basis coefficients");
  invert_cmd->add_option("--input", c.inputs, "Fourier coefficients JSON")->required();
  add_output(invert_cmd);

  auto* convolve_cmd = app.add_subcommand("convolve", "Product of two elements in their common basis");
  add_n(convolve_cmd, "Ambient size for ballot files (inferred when absent)");
  convolve_cmd->add_option("--input", c.inputs, "Two element JSON or ballot CSV files")->required()->expected(1, 2);
  convolve_cmd->add_option("--basis", c.basis, "Basis for ballot CSV input")->check(CLI::IsMember({"semigroup", "groupoid"}));
  add_output(convolve_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "Isotypic energy spectrum of a ballot file");
  add_n(analyze_cmd, "Ambient size (inferred when absent)");
  analyze_cmd->add_option("--input", c.inputs, "Ballot CSV or element JSON")->required();
  analyze_cmd->add_option("--association", c.association, "groupoid (default) or semigroup")
      ->check(CLI::IsMember({"semigroup", "groupoid"}));
  analyze_cmd->add_option("--format", c.format, "json (default) or csv");
  add_output(analyze_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "Operation counts and oracle agreement on random inputs");
  add_n(bench_cmd, "Largest n (default 4, at most 5)");
  bench_cmd->add_option("--n-min", c.n_min, "Smallest n (default 1)");
  bench_cmd->add_option("--seed", c.seed, "Seed for the random inputs (default 1)");
  bench_cmd->add_option("--format", c.format, "csv (default) or json");
  add_output(bench_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, "usage", e.what(), kExitUsage);
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(c, out);
    if (transform_cmd->parsed()) return cmd_transform(c, out);
    if (invert_cmd->parsed()) return cmd_invert(c, out);
    if (convolve_cmd->parsed()) return cmd_convolve(c, out);
    if (analyze_cmd->parsed()) return cmd_analyze(c, out);
    if (bench_cmd->parsed()) return cmd_bench(c, out, err);
  } catch (const UsageError& e) {
    return fail(err, "usage", e.what(), kExitUsage);
  } catch (const BasisError& e) {
    return fail(err, "basis", e.what(), kExitUsage);
  } catch (const IoError& e) {
    return fail(err, "io", e.what(), kExitUsage);
  } catch (const ParseError& e) {
    return fail(err, "parse", e.what(), kExitParse);
  } catch (const DimensionError& e) {
    return fail(err, "input", e.what(), kExitParse);
  } catch (const json::exception& e) {
    return fail(err, "parse", e.what(), kExitParse);
  } catch (const MathError& e) {
    return fail(err, "math", e.what(), kExitMath);
  }
  return fail(err, "usage", "no subcommand", kExitUsage);
}

}  // namespace rookfft
