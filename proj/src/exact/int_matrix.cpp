#include "k3ml/exact/int_matrix.hpp"

#include <fstream>
#include <sstream>

#include "k3ml/error.hpp"

namespace k3ml::exact {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DomainError("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool IntMatrix::is_symmetric() const { return is_square() && asymmetric_positions().empty(); }

std::vector<std::pair<std::size_t, std::size_t>> IntMatrix::asymmetric_positions() const {
  if (!is_square()) throw DomainError("asymmetric_positions: matrix is not square");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) out.emplace_back(r, c);
  return out;
}

IntMatrix IntMatrix::symmetrized_from_upper() const {
  IntMatrix m = *this;
  for (auto [r, c] : asymmetric_positions()) m(c, r) = m(r, c);
  return m;
}

IntMatrix IntMatrix::symmetrized_from_lower() const {
  IntMatrix m = *this;
  for (auto [r, c] : asymmetric_positions()) m(r, c) = m(c, r);
  return m;
}

IntMatrix parse_int_matrix_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<BigInt> entries;
  std::size_t rows = 0, cols = 0, offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t count = 0, pos = 0;
    for (;;) {
      const auto comma = line.find(',', pos);
      std::string cell = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      if (b == std::string::npos) throw ParseError("empty matrix cell", line_start + pos);
      cell = cell.substr(b, e - b + 1);
      BigInt v;
      if (v.set_str(cell[0] == '+' ? cell.substr(1) : cell, 10) != 0)
        throw ParseError("malformed integer '" + cell + "'", line_start + pos);
      entries.push_back(v);
      ++count;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (rows == 0) cols = count;
    else if (count != cols) throw ParseError("ragged matrix row " + std::to_string(rows + 1), line_start);
    ++rows;
  }
  return IntMatrix(rows, cols, std::move(entries));
}

IntMatrix read_int_matrix_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open matrix file " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_int_matrix_csv(ss.str());
}

BigInt det_exact(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("det_exact: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace k3ml::exact
