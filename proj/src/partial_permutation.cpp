#include "rookfft/partial_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "rookfft/combinatorics.hpp"
#include "rookfft/errors.hpp"

namespace rookfft {

// --- OrderedKSubset --------------------------------------------------------

OrderedKSubset::OrderedKSubset(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > n_) {
      throw DimensionError("subset element out of range 1.." + std::to_string(n_));
    }
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      throw DimensionError("subset must be strictly increasing");
    }
  }
}

OrderedKSubset OrderedKSubset::first(int n, int k) {
  std::vector<int> e(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  return OrderedKSubset(n, std::move(e));
}

OrderedKSubset OrderedKSubset::from_colex(int n, int k, std::uint64_t rank) {
  return OrderedKSubset(n, colex_unrank(n, k, rank));
}

bool OrderedKSubset::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::uint64_t OrderedKSubset::colex_rank() const { return rookfft::colex_rank(elements_); }

// --- PartialPermutation ----------------------------------------------------

PartialPermutation::PartialPermutation(int n)
    : n_(n), image_(static_cast<std::size_t>(n), kUndefined) {
  if (n < 0) throw DimensionError("ambient size must be >= 0");
}

PartialPermutation::PartialPermutation(int n, std::vector<int> image)
    : n_(n), image_(std::move(image)) {
  if (n < 0) throw DimensionError("ambient size must be >= 0");
  if (image_.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("image array length must equal n");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    if (v == kUndefined) continue;
    if (v < 1 || v > n) throw DimensionError("image value out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)]) throw DimensionError("partial permutation is not injective");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

PartialPermutation PartialPermutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return PartialPermutation(n, std::move(img));
}

PartialPermutation PartialPermutation::idempotent_on(const OrderedKSubset& a) {
  std::vector<int> img(static_cast<std::size_t>(a.n()), kUndefined);
  for (int x : a.elements()) img[static_cast<std::size_t>(x - 1)] = x;
  return PartialPermutation(a.n(), std::move(img));
}

PartialPermutation PartialPermutation::from_pairs(int n,
                                                  std::span<const std::pair<int, int>> pairs) {
  std::vector<int> img(static_cast<std::size_t>(n), kUndefined);
  for (auto [x, y] : pairs) {
    if (x < 1 || x > n) throw DimensionError("domain symbol out of range");
    if (img[static_cast<std::size_t>(x - 1)] != kUndefined) {
      throw DimensionError("symbol " + std::to_string(x) + " mapped twice");
    }
    img[static_cast<std::size_t>(x - 1)] = y;
  }
  return PartialPermutation(n, std::move(img));
}

int PartialPermutation::rank() const {
  return static_cast<int>(std::count_if(image_.begin(), image_.end(),
                                        [](int v) { return v != kUndefined; }));
}

OrderedKSubset PartialPermutation::domain() const {
  std::vector<int> d;
  for (int x = 1; x <= n_; ++x) {
    if (defined_at(x)) d.push_back(x);
  }
  return OrderedKSubset(n_, std::move(d));
}

OrderedKSubset PartialPermutation::range() const {
  std::vector<int> r;
  for (int v : image_) {
    if (v != kUndefined) r.push_back(v);
  }
  std::sort(r.begin(), r.end());
  return OrderedKSubset(n_, std::move(r));
}

bool PartialPermutation::in_range(int y) const { return preimage(y) != kUndefined; }

int PartialPermutation::preimage(int y) const {
  for (int x = 1; x <= n_; ++x) {
    if ((*this)(x) == y) return x;
  }
  return kUndefined;
}

// --- operations ------------------------------------------------------------

PartialPermutation compose(const PartialPermutation& g, const PartialPermutation& f) {
  if (g.n() != f.n()) {
    throw DimensionError("cannot compose elements of R_" + std::to_string(g.n()) + " and R_" +
                         std::to_string(f.n()));
  }
  std::vector<int> img(static_cast<std::size_t>(f.n()), PartialPermutation::kUndefined);
  for (int x = 1; x <= f.n(); ++x) {
    const int fx = f(x);
    if (fx != PartialPermutation::kUndefined) img[static_cast<std::size_t>(x - 1)] = g(fx);
  }
  return PartialPermutation(f.n(), std::move(img));
}

PartialPermutation operator*(const PartialPermutation& g, const PartialPermutation& f) {
  return compose(g, f);
}

PartialPermutation inverse(const PartialPermutation& s) {
  std::vector<int> img(static_cast<std::size_t>(s.n()), PartialPermutation::kUndefined);
  for (int x = 1; x <= s.n(); ++x) {
    if (s.defined_at(x)) img[static_cast<std::size_t>(s(x) - 1)] = x;
  }
  return PartialPermutation(s.n(), std::move(img));
}

bool leq(const PartialPermutation& s, const PartialPermutation& t) {
  if (s.n() != t.n()) throw DimensionError("leq across different ambient sizes");
  for (int x = 1; x <= s.n(); ++x) {
    if (s.defined_at(x) && s(x) != t(x)) return false;
  }
  return true;
}

int mobius(const PartialPermutation& s, const PartialPermutation& t) {
  if (!leq(s, t)) return 0;
  return ((t.rank() - s.rank()) % 2 == 0) ? 1 : -1;
}

std::vector<PartialPermutation> enumerate(int n) { return RookIndex(n).elements(); }

std::uint64_t size(int n) { return rook_size(n); }

std::uint64_t size_recursive(int n) { return rook_size_recursive(n); }

// --- cycle-link notation ---------------------------------------------------

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

int read_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  int value = 0;
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) {
    throw ParseError("expected an integer at offset " + std::to_string(pos));
  }
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

}  // namespace

PartialPermutation parse_cycle_link(std::string_view text, int n) {
  std::vector<int> img(static_cast<std::size_t>(n), PartialPermutation::kUndefined);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int seen_count = 0;
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    const char open = text[pos];
    if (open != '(' && open != '[') {
      throw ParseError(std::string("unexpected character '") + open + "' in cycle-link text");
    }
    const char close = open == '(' ? ')' : ']';
    ++pos;
    std::vector<int> block;
    for (;;) {
      const int v = read_int(text, pos);
      if (v < 1 || v > n) {
        throw ParseError("symbol " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw ParseError("symbol " + std::to_string(v) + " repeated");
      }
      seen[static_cast<std::size_t>(v)] = true;
      ++seen_count;
      block.push_back(v);
      skip_space(text, pos);
      if (pos >= text.size()) throw ParseError("unterminated block");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] != close) throw ParseError(std::string("expected '") + close + "'");
      ++pos;
      break;
    }
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      img[static_cast<std::size_t>(block[i] - 1)] = block[i + 1];
    }
    if (open == '(') img[static_cast<std::size_t>(block.back() - 1)] = block.front();
    skip_space(text, pos);
  }
  if (seen_count != n) {
    throw ParseError("cycle-link text must mention every symbol 1.." + std::to_string(n));
  }
  return PartialPermutation(n, std::move(img));
}

std::string print_cycle_link(const PartialPermutation& s) {
  const int n = s.n();
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> links;
  for (int x = 1; x <= n; ++x) {
    if (s.in_range(x)) continue;
    std::vector<int> chain;
    for (int y = x; y != PartialPermutation::kUndefined; y = s(y)) {
      chain.push_back(y);
      used[static_cast<std::size_t>(y)] = true;
    }
    links.push_back(std::move(chain));
  }
  std::vector<std::vector<int>> cycles;
  for (int x = 1; x <= n; ++x) {
    if (used[static_cast<std::size_t>(x)]) continue;
    std::vector<int> cycle;
    int y = x;
    do {
      cycle.push_back(y);
      used[static_cast<std::size_t>(y)] = true;
      y = s(y);
    } while (y != x);
    cycles.push_back(std::move(cycle));  // x is the minimum of its cycle
  }
  auto min_of = [](const std::vector<int>& b) { return *std::min_element(b.begin(), b.end()); };
  std::sort(links.begin(), links.end(),
            [&](const auto& a, const auto& b) { return min_of(a) < min_of(b); });

  std::string out;
  auto emit = [&out](const std::vector<int>& block, char open, char close) {
    out += open;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(block[i]);
    }
    out += close;
  };
  for (const auto& c : cycles) emit(c, '(', ')');
  for (const auto& l : links) emit(l, '[', ']');
  return out;
}

// --- flat notation ---------------------------------------------------------

PartialPermutation parse_flat(std::string_view text, int n) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    const int x = read_int(text, pos);
    skip_space(text, pos);
    if (text.substr(pos, 2) != "->") throw ParseError("expected '->' in flat mapping");
    pos += 2;
    const int y = read_int(text, pos);
    if (x < 1 || x > n || y < 1 || y > n) {
      throw ParseError("mapping " + std::to_string(x) + "->" + std::to_string(y) +
                       " out of range 1.." + std::to_string(n));
    }
    pairs.emplace_back(x, y);
    skip_space(text, pos);
    if (pos < text.size()) {
      if (text[pos] != ';') throw ParseError("expected ';' between mappings");
      ++pos;
      skip_space(text, pos);
    }
  }
  try {
    return PartialPermutation::from_pairs(n, pairs);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

std::string print_flat(const PartialPermutation& s) {
  std::string out;
  for (int x = 1; x <= s.n(); ++x) {
    if (!s.defined_at(x)) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(x) + "->" + std::to_string(s(x));
  }
  return out;
}

std::string print_rook_matrix(const PartialPermutation& s) {
  std::ostringstream os;
  for (int row = 1; row <= s.n(); ++row) {
    for (int col = 1; col <= s.n(); ++col) {
      if (col > 1) os << ' ';
      os << (s(col) == row ? 1 : 0);
    }
    os << '\n';
  }
  return os.str();
}

// --- factorization through S_k ---------------------------------------------

PartialPermutation order_preserving(const OrderedKSubset& a, const OrderedKSubset& b) {
  if (a.n() != b.n()) throw DimensionError("order_preserving across different ambient sizes");
  if (a.k() != b.k()) throw DimensionError("order_preserving requires |A| == |B|");
  std::vector<int> img(static_cast<std::size_t>(a.n()), PartialPermutation::kUndefined);
  for (int i = 0; i < a.k(); ++i) {
    img[static_cast<std::size_t>(a.elements()[static_cast<std::size_t>(i)] - 1)] =
        b.elements()[static_cast<std::size_t>(i)];
  }
  return PartialPermutation(a.n(), std::move(img));
}

CanonicalFactorization factorize(const PartialPermutation& s) {
  CanonicalFactorization f{s.range(), {}, s.domain()};
  const auto ran = f.ran.elements();
  for (int b : f.dom.elements()) {
    const auto it = std::lower_bound(ran.begin(), ran.end(), s(b));
    f.y.push_back(static_cast<int>(it - ran.begin()) + 1);
  }
  return f;
}

PartialPermutation reassemble(const CanonicalFactorization& f) {
  const int n = f.ran.n();
  const int k = f.ran.k();
  const auto y = embed_permutation(f.y, n);
  return compose(order_preserving(OrderedKSubset::first(n, k), f.ran),
                 compose(y, order_preserving(f.dom, OrderedKSubset::first(n, k))));
}

PartialPermutation embed_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) > n) throw DimensionError("permutation larger than ambient size");
  std::vector<int> img(static_cast<std::size_t>(n), PartialPermutation::kUndefined);
  std::copy(perm.begin(), perm.end(), img.begin());
  return PartialPermutation(n, std::move(img));
}

// --- RookIndex -------------------------------------------------------------

RookIndex::RookIndex(int n) : n_(n) {
  if (n < 0) throw DimensionError("ambient size must be >= 0");
  if (n > 9) throw DimensionError("RookIndex supports n <= 9");
  elements_.reserve(rook_size(n));
  for (int k = 0; k <= n; ++k) {
    rank_offsets_.push_back(elements_.size());
    const std::uint64_t c = binomial(n, k);
    const std::uint64_t kf = factorial(k);
    std::vector<std::vector<int>> subsets;
    for (std::uint64_t r = 0; r < c; ++r) subsets.push_back(colex_unrank(n, k, r));
    for (const auto& a : subsets) {
      for (const auto& b : subsets) {
        for (std::uint64_t p = 0; p < kf; ++p) {
          const auto y = perm_from_coset_index(k, p);
          std::vector<int> img(static_cast<std::size_t>(n), PartialPermutation::kUndefined);
          for (int j = 0; j < k; ++j) {
            img[static_cast<std::size_t>(b[static_cast<std::size_t>(j)] - 1)] =
                a[static_cast<std::size_t>(y[static_cast<std::size_t>(j)] - 1)];
          }
          elements_.emplace_back(n, std::move(img));
        }
      }
    }
  }
  rank_offsets_.push_back(elements_.size());
}

std::size_t RookIndex::cell_offset(int k, std::uint64_t ran_rank, std::uint64_t dom_rank) const {
  return rank_offset(k) + static_cast<std::size_t>((ran_rank * binomial(n_, k) + dom_rank) * factorial(k));
}

std::size_t RookIndex::index_of(const PartialPermutation& s) const {
  if (s.n() != n_) throw DimensionError("element of R_" + std::to_string(s.n()) + " in index for R_" + std::to_string(n_));
  const auto f = factorize(s);
  return cell_offset(f.ran.k(), f.ran.colex_rank(), f.dom.colex_rank()) +
         static_cast<std::size_t>(coset_index(f.y));
}

const RookIndex& rook_index(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RookIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<RookIndex>(n);
  return *slot;
}

// --- order ideals and filters ----------------------------------------------

namespace {

void extend_from(std::vector<int>& img, const std::vector<int>& free_dom, std::size_t pos,
                 std::vector<bool>& range_used, int n,
                 const std::function<void(const PartialPermutation&)>& fn) {
  if (pos == free_dom.size()) {
    fn(PartialPermutation(n, img));
    return;
  }
  const int x = free_dom[pos];
  extend_from(img, free_dom, pos + 1, range_used, n, fn);
  for (int y = 1; y <= n; ++y) {
    if (range_used[static_cast<std::size_t>(y)]) continue;
    range_used[static_cast<std::size_t>(y)] = true;
    img[static_cast<std::size_t>(x - 1)] = y;
    extend_from(img, free_dom, pos + 1, range_used, n, fn);
    img[static_cast<std::size_t>(x - 1)] = PartialPermutation::kUndefined;
    range_used[static_cast<std::size_t>(y)] = false;
  }
}

}  // namespace

void for_each_extension(const PartialPermutation& s,
                        const std::function<void(const PartialPermutation&)>& fn) {
  const int n = s.n();
  std::vector<int> img(s.image().begin(), s.image().end());
  std::vector<int> free_dom;
  std::vector<bool> range_used(static_cast<std::size_t>(n) + 1, false);
  for (int x = 1; x <= n; ++x) {
    if (s.defined_at(x)) {
      range_used[static_cast<std::size_t>(s(x))] = true;
    } else {
      free_dom.push_back(x);
    }
  }
  extend_from(img, free_dom, 0, range_used, n, fn);
}

void for_each_restriction(const PartialPermutation& s,
                          const std::function<void(const PartialPermutation&)>& fn) {
  const auto dom = s.domain();
  const auto k = static_cast<unsigned>(dom.k());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> img(static_cast<std::size_t>(s.n()), PartialPermutation::kUndefined);
    for (unsigned j = 0; j < k; ++j) {
      if (mask & (1u << j)) {
        const int x = dom.elements()[j];
        img[static_cast<std::size_t>(x - 1)] = s(x);
      }
    }
    fn(PartialPermutation(s.n(), std::move(img)));
  }
}

}  // namespace rookfft

std::size_t std::hash<rookfft::PartialPermutation>::operator()(
    const rookfft::PartialPermutation& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.n());
  for (int v : s.image()) h = h * 31 + static_cast<std::size_t>(v);
  return h;
}
