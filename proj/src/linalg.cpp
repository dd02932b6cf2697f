#include "cnotsynth/linalg.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cnotsynth {

BoolMatrix::BoolMatrix(int rows, int cols) : cols_(cols), rows_(rows, Bits(cols)) {}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.set(i, i, true);
  return m;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::string>& rows) {
  BoolMatrix m;
  for (const auto& r : rows) {
    Bits b = bits_from_string(r);
    if (m.rows_.empty()) m.cols_ = static_cast<int>(b.size());
    if (static_cast<int>(b.size()) != m.cols_) throw std::invalid_argument("ragged matrix rows");
    m.rows_.push_back(b);
  }
  return m;
}

void BoolMatrix::row_add(int src, int dst) {
  if (src < 1 || dst < 1 || src > rows() || dst > rows())
    throw std::out_of_range("row_add: row index out of range");
  if (src == dst) throw std::invalid_argument("row_add: src equals dst");
  rows_[dst - 1] ^= rows_[src - 1];
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix t(cols_, rows());
  for (int r = 1; r <= rows(); ++r)
    for (int c = 1; c <= cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BoolMatrix BoolMatrix::block(int nr, int nc) const {
  BoolMatrix b(nr, nc);
  for (int r = 1; r <= nr; ++r)
    for (int c = 1; c <= nc; ++c) b.set(r, c, get(r, c));
  return b;
}

BoolMatrix row_add(BoolMatrix m, int src, int dst) {
  m.row_add(src, dst);
  return m;
}

BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  BoolMatrix out(a.rows(), b.cols());
  for (int r = 1; r <= a.rows(); ++r)
    for (int k = 1; k <= a.cols(); ++k)
      if (a.get(r, k)) out.row(r) ^= b.row(k);
  return out;
}

std::optional<BoolMatrix> inverse(const BoolMatrix& square) {
  const int n = square.rows();
  if (square.cols() != n) return std::nullopt;
  BoolMatrix a = square, inv = BoolMatrix::identity(n);
  for (int c = 1; c <= n; ++c) {
    int p = 0;
    for (int r = c; r <= n && !p; ++r)
      if (a.get(r, c)) p = r;
    if (!p) return std::nullopt;
    if (p != c) {
      std::swap(a.row(p), a.row(c));
      std::swap(inv.row(p), inv.row(c));
    }
    for (int r = 1; r <= n; ++r)
      if (r != c && a.get(r, c)) {
        a.row_add(c, r);
        inv.row_add(c, r);
      }
  }
  return inv;
}

bool is_invertible(const BoolMatrix& square) { return inverse(square).has_value(); }

bool is_upper_triangular(const BoolMatrix& m) {
  for (int r = 1; r <= m.rows(); ++r)
    for (int c = 1; c < r && c <= m.cols(); ++c)
      if (m.get(r, c)) return false;
  return true;
}

std::string dump_matrix(const BoolMatrix& m) {
  std::ostringstream os;
  for (int r = 1; r <= m.rows(); ++r) {
    for (int c = 1; c <= m.cols(); ++c) os << (c > 1 ? " " : "") << (m.get(r, c) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

BoolMatrix parse_matrix(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string row;
    for (char ch : line) {
      if (ch == '#') break;
      if (ch == '0' || ch == '1') row += ch;
      else if (!std::isspace(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("matrix: unexpected character '" + std::string(1, ch) + "'");
    }
    if (!row.empty()) rows.push_back(row);
  }
  return BoolMatrix::from_rows(rows);
}

AugmentedLinearTransform::AugmentedLinearTransform(BoolMatrix full)
    : n(full.rows()), m(std::move(full)) {
  if (m.cols() != n + 1) throw std::invalid_argument("augmented transform needs n+1 columns");
}

AugmentedLinearTransform AugmentedLinearTransform::identity(int n) {
  BoolMatrix m(n, n + 1);
  for (int i = 1; i <= n; ++i) m.set(i, i, true);
  return AugmentedLinearTransform(std::move(m));
}

AugmentedLinearTransform apply_gate_to_transform(AugmentedLinearTransform a, const Gate& g) {
  switch (g.kind) {
    case GateKind::CNOT:
      a.m.row_add(g.control, g.target);
      break;
    case GateKind::X:
      a.m.set(g.target, a.n + 1, !a.m.get(g.target, a.n + 1));
      break;
    default:
      throw std::invalid_argument("apply_gate_to_transform: only CNOT and X are linear");
  }
  return a;
}

std::string dump_transform(const AugmentedLinearTransform& a) {
  return "n " + std::to_string(a.n) + "\n" + dump_matrix(a.m);
}

AugmentedLinearTransform parse_transform(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, body;
  int n = -1;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (n < 0 && first != std::string::npos && line[first] == 'n') {
      std::istringstream ls(line.substr(first + 1));
      if (!(ls >> n) || n < 1) throw std::invalid_argument("matrix: bad 'n <k>' header");
      continue;
    }
    body += line + "\n";
  }
  if (n < 0) throw std::invalid_argument("matrix: missing 'n <k>' header");
  BoolMatrix m = parse_matrix(body);
  if (m.rows() != n) throw std::invalid_argument("matrix: expected n rows");
  if (m.cols() == n) {
    BoolMatrix aug(n, n + 1);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) aug.set(r, c, m.get(r, c));
    m = aug;
  }
  return AugmentedLinearTransform(std::move(m));
}

ParityMatrix ParityMatrix::from_terms(int n, const std::vector<ParityColumn>& terms) {
  ParityMatrix p;
  p.n = n;
  std::map<std::pair<Bits, bool>, std::size_t> index;
  for (const auto& t : terms) {
    if (static_cast<int>(t.bits.size()) != n)
      throw std::invalid_argument("parity width does not match n");
    if (t.bits.none()) continue;
    auto key = std::make_pair(t.bits, t.flip);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, p.columns.size());
      p.columns.push_back({t.bits, t.flip, ((t.coeff % 8) + 8) % 8});
    } else {
      auto& c = p.columns[it->second].coeff;
      c = (c + t.coeff % 8 + 8) % 8;
    }
  }
  std::erase_if(p.columns, [](const ParityColumn& c) { return c.coeff == 0; });
  return p;
}

std::string dump_terms(const ParityMatrix& p) {
  std::ostringstream os;
  for (const auto& c : p.columns)
    os << c.coeff << ' ' << (c.flip ? 1 : 0) << ' ' << bits_to_string(c.bits) << '\n';
  return os.str();
}

ParityMatrix parse_terms(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<ParityColumn> terms;
  int n = -1, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    int c, b;
    std::string bits;
    if (!(ls >> c)) continue;
    if (!(ls >> b >> bits) || (b != 0 && b != 1))
      throw std::invalid_argument("terms line " + std::to_string(lineno) +
                                  ": expected '<c> <bitflip> <parity bits>'");
    Bits parity = bits_from_string(bits);
    if (n < 0) n = static_cast<int>(parity.size());
    if (static_cast<int>(parity.size()) != n)
      throw std::invalid_argument("terms line " + std::to_string(lineno) + ": width mismatch");
    terms.push_back({parity, b == 1, c});
  }
  if (n < 0) throw std::invalid_argument("terms: no terms given");
  return ParityMatrix::from_terms(n, terms);
}

Bits bits_from_string(std::string_view s) {
  Bits b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("bit string must be 0/1");
    b[i] = s[i] == '1';
  }
  return b;
}

std::string bits_to_string(const Bits& b) {
  std::string s(b.size(), '0');
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) s[i] = '1';
  return s;
}

}  // namespace cnotsynth
