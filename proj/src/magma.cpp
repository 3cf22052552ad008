#include "magmalab/magma.hpp"

#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace magmalab {

int ElementSet::size() const { return std::popcount(bits_); }

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  for (int x = 0; x < 64; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int x : members()) {
    if (!first) out += ", ";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

Magma::Magma(int order, std::vector<std::uint8_t> row_major_entries)
    : order_(order), table_(std::move(row_major_entries)) {
  if (order < 1) throw MagmaError("magma order must be at least 1");
  if (order > kMaxOrder)
    throw MagmaError("magma order " + std::to_string(order) + " exceeds the supported maximum " +
                     std::to_string(kMaxOrder));
  if (table_.size() != static_cast<std::size_t>(order) * order)
    throw MagmaError("table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(order * order));
  for (std::uint8_t e : table_)
    if (e >= order)
      throw MagmaError("table entry " + std::to_string(e) + " out of range for order " +
                       std::to_string(order));

  transposed_.resize(table_.size());
  col_image_.assign(order_, 0);
  row_image_.assign(order_, 0);
  for (int l = 0; l < order_; ++l) {
    for (int r = 0; r < order_; ++r) {
      const std::uint8_t v = table_[l * order_ + r];
      transposed_[r * order_ + l] = v;
      col_image_[r] |= std::uint64_t{1} << v;
      row_image_[l] |= std::uint64_t{1} << v;
    }
  }
}

Magma from_table(int n, const std::vector<std::vector<int>>& rows) {
  if (n < 1) throw MagmaError("magma order must be at least 1");
  if (rows.size() != static_cast<std::size_t>(n))
    throw MagmaError("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  std::vector<std::uint8_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(n))
      throw MagmaError("row has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(n));
    for (int e : row) {
      if (e < 0 || e >= n)
        throw MagmaError("table entry " + std::to_string(e) + " out of range for order " +
                         std::to_string(n));
      entries.push_back(static_cast<std::uint8_t>(e));
    }
  }
  return Magma(n, std::move(entries));
}

Magma constant(int n, int c) {
  if (n < 1 || n > kMaxOrder) throw MagmaError("bad order for constant groupoid");
  if (c < 0 || c >= n) throw MagmaError("constant value out of range");
  return Magma(n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n,
                                            static_cast<std::uint8_t>(c)));
}

Magma left_zero(int n) {
  std::vector<int> id(static_cast<std::size_t>(n < 0 ? 0 : n));
  std::iota(id.begin(), id.end(), 0);
  return leftoid(n, id);
}

Magma leftoid(int n, std::span<const int> f) {
  if (n < 1 || n > kMaxOrder) throw MagmaError("bad order for leftoid");
  if (f.size() != static_cast<std::size_t>(n)) throw MagmaError("leftoid map must be total");
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (f[x] < 0 || f[x] >= n) throw MagmaError("leftoid map value out of range");
    for (int y = 0; y < n; ++y) entries[x * n + y] = static_cast<std::uint8_t>(f[x]);
  }
  return Magma(n, std::move(entries));
}

Magma rightoid(int n, std::span<const int> g) {
  if (n < 1 || n > kMaxOrder) throw MagmaError("bad order for rightoid");
  if (g.size() != static_cast<std::size_t>(n)) throw MagmaError("rightoid map must be total");
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
  for (int y = 0; y < n; ++y) {
    if (g[y] < 0 || g[y] >= n) throw MagmaError("rightoid map value out of range");
    for (int x = 0; x < n; ++x) entries[x * n + y] = static_cast<std::uint8_t>(g[y]);
  }
  return Magma(n, std::move(entries));
}

Magma cyclic_group(int n) {
  if (n < 1 || n > kMaxOrder) throw MagmaError("bad order for cyclic group");
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) entries[x * n + y] = static_cast<std::uint8_t>((x + y) % n);
  return Magma(n, std::move(entries));
}

Magma symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line order; product composes
  // left argument after right: (p*q)(x) = p(q(x)).
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::uint8_t> entries(36);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      int composed[3];
      for (int x = 0; x < 3; ++x) composed[x] = perms[i][perms[j][x]];
      int idx = -1;
      for (int k = 0; k < 6; ++k)
        if (composed[0] == perms[k][0] && composed[1] == perms[k][1] && composed[2] == perms[k][2])
          idx = k;
      entries[i * 6 + j] = static_cast<std::uint8_t>(idx);
    }
  }
  return Magma(6, std::move(entries));
}

Magma midpoint(int odd_modulus) {
  const int m = odd_modulus;
  if (m < 1 || m > kMaxOrder) throw MagmaError("bad modulus for midpoint groupoid");
  if (m % 2 == 0) throw MagmaError("midpoint modulus must be odd (2 is not invertible)");
  const int inv2 = (m + 1) / 2;  // 2 * (m+1)/2 = m+1 = 1 mod m
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      entries[x * m + y] = static_cast<std::uint8_t>(((x + y) * inv2) % m);
  return Magma(m, std::move(entries));
}

namespace {
bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

Magma affine(int p, int alpha, int beta, int gamma) {
  if (p < 2 || p > kMaxOrder || !is_prime(p)) throw MagmaError("affine modulus must be prime");
  auto in_range = [p](int v) { return v >= 0 && v < p; };
  if (!in_range(alpha) || !in_range(beta) || !in_range(gamma))
    throw MagmaError("affine coefficients must lie in 0..p-1");
  if (beta == 0 || gamma == 0)
    throw MagmaError("affine coefficients beta and gamma must be nonzero");
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(p) * p);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      entries[x * p + y] = static_cast<std::uint8_t>((alpha + beta * x + gamma * y) % p);
  return Magma(p, std::move(entries));
}

Magma saturating_add(int cap) {
  if (cap < 0 || cap + 1 > kMaxOrder) throw MagmaError("bad cap for saturating addition");
  const int n = cap + 1;
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      entries[x * n + y] = static_cast<std::uint8_t>(std::min(x + y, cap));
  return Magma(n, std::move(entries));
}

namespace {

Magma parse_json_table(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MagmaError(std::string("bad JSON table: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw MagmaError("JSON table must be {\"order\": n, \"table\": [[..], ..]}");
  if (!j["order"].is_number_integer()) throw MagmaError("JSON order must be an integer");
  const int n = j["order"].get<int>();
  if (!j["table"].is_array()) throw MagmaError("JSON table must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw MagmaError("JSON table rows must be arrays");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw MagmaError("JSON table entries must be integers");
      r.push_back(e.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return from_table(n, rows);
}

int parse_int_token(std::string_view tok, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw MagmaError(std::string("expected an integer for ") + what + ", got '" +
                     std::string(tok) + "'");
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Magma parse(std::string_view text) {
  // Sniff the JSON form.
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return parse_json_table(text);
    break;
  }

  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    auto toks = split_ws(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty()) throw MagmaError("empty table text");
  if (lines[0].size() != 1) throw MagmaError("malformed header: expected a single order value");
  const int n = parse_int_token(lines[0][0], "the order");
  if (n < 1) throw MagmaError("magma order must be at least 1");
  if (lines.size() - 1 != static_cast<std::size_t>(n))
    throw MagmaError("expected " + std::to_string(n) + " table rows, got " +
                     std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < n; ++r) {
    const auto& toks = lines[r + 1];
    if (toks.size() != static_cast<std::size_t>(n))
      throw MagmaError("row " + std::to_string(r) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(n));
    std::vector<int> row;
    for (const auto& t : toks) row.push_back(parse_int_token(t, "a table entry"));
    rows.push_back(std::move(row));
  }
  return from_table(n, rows);
}

std::string render(const Magma& m) {
  std::string out = std::to_string(m.order());
  out += '\n';
  for (int l = 0; l < m.order(); ++l) {
    for (int r = 0; r < m.order(); ++r) {
      if (r) out += ' ';
      out += std::to_string(m.at(l, r));
    }
    out += '\n';
  }
  return out;
}

}  // namespace magmalab
