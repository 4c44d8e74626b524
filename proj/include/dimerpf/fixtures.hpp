#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "dimerpf/error.hpp"
#include "dimerpf/matrix.hpp"
#include "dimerpf/poly.hpp"
#include "dimerpf/rational.hpp"

// Printed reference matrices (upper triangles, row by row) and their expected Pfaffians.
namespace dimerpf::fixtures {

// Parses sums like "1+x", "-1-x", "x", "-z", "0" (linear in one variable).
inline SparsePoly parse_linear(const std::string& text, int var, char symbol) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorKind::ParseError, "empty matrix entry");
  SparsePoly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string tok = s.substr(i, j - i);
    if (tok.empty()) fail(ErrorKind::ParseError, "bad matrix entry '" + text + "'");
    if (tok.back() == symbol) {
      std::string coef = tok.substr(0, tok.size() - 1);
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      Rational c = coef.empty() ? Rational(1) : parse_rational(coef);
      out += SparsePoly::variable(var, sign * c);
    } else {
      out += SparsePoly(sign * parse_rational(tok));
    }
    i = j;
  }
  return out;
}

inline std::vector<std::string> split_entries(const std::string& row) {
  std::vector<std::string> out;
  std::stringstream ss(row);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

// Row i lists entries (i, i+1) .. (i, n-1).
inline SkewMatrix<SparsePoly> from_upper_rows(const std::vector<std::string>& rows, int var = kVarX, char symbol = 'x') {
  const std::size_t n = rows.size() + 1;
  SkewMatrix<SparsePoly> a(n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto entries = split_entries(rows[i]);
    if (entries.size() != n - 1 - i) fail(ErrorKind::ParseError, "fixture row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t k = 0; k < entries.size(); ++k) a.set(i, i + 1 + k, parse_linear(entries[k], var, symbol));
  }
  return a;
}

struct MatrixFixture {
  std::string name;
  std::vector<std::string> rows;
  std::vector<long> expected;  // dense coefficients, constant first
  int var = kVarX;
  char symbol = 'x';
  Rational scale = 1;  // expected = scale * pf
};

inline SparsePoly dense(int var, const std::vector<long>& coefficients) {
  std::vector<Rational> c;
  for (long v : coefficients) c.emplace_back(v);
  return SparsePoly::from_dense(var, c);
}

inline const std::vector<MatrixFixture>& matrix_fixtures() {
  static const std::vector<MatrixFixture> all = {
      {"no-interior",
       {"1+x,-x,x,-x,x,-x,1+x", "1+x,-x,x,-x,1+x,-x", "1+x,1-x,x,1-x,x", "1+x,-x,x,-x", "1+x,-x,x", "1+x,-x",
        "1+x"},
       {3, 28, 33, 11, 1}},
      {"l-shape",
       {"1+x,-x,x,-x,x,-x,1+x", "1+x,-x,1+x,-x,x,-x", "1+x,-x,x,-x,x", "1+x,-x,x,-x", "1+x,-x,1+x", "1+x,-x",
        "1+x"},
       {4, 24, 28, 10, 1}},
      {"square-grid",
       {"1+x,-x,x,-x,x,-x,x,-x,x,-x,1+x,0,0,0,0",
        "1+x,-x,x,-x,x,-x,x,-x,x,-x,1,0,0,0",
        "1+x,-x,x,-x,x,-x,x,-x,x,0,0,1,0",
        "1+x,-x,x,-x,x,-x,x,-x,0,0,0,0",
        "1+x,-x,x,-x,x,-x,x,0,0,1,0",
        "1+x,-x,x,-x,x,-x,0,0,0,-1",
        "1+x,-x,x,-x,x,0,0,0,0",
        "1+x,-x,x,-x,0,0,0,-1",
        "1+x,-x,x,0,-1,0,0",
        "1+x,-x,0,0,0,0",
        "1+x,0,-1,0,0",
        "-1,0,0,0",
        "1,-1,0",
        "0,1",
        "1"},
       {36, 336, 776, 680, 256, 40, 2}},
      {"enclosed",
       {"1+x,-x,x,-x,x,-x,1+x,0,0,0,0,1,0,0,-1",
        "1+x,-x,x,-x,x,-x,0,0,0,0,0,0,0,0",
        "1+x,-x,x,-x,x,0,0,0,0,0,0,-1,0",
        "1+x,1-x,x,-1-x,0,1,0,1,0,-1,0,0",
        "1+x,-x,x,0,0,0,0,0,0,0,0",
        "1+x,-x,1,0,0,0,0,0,0,0",
        "1+x,1,0,-1,0,0,0,0,0",
        "0,-1,-1,0,-1,0,0,0",
        "0,1,1,0,0,0,0",
        "0,0,0,0,0,0",
        "1,0,0,0,0",
        "0,0,0,0",
        "1,0,0",
        "1,-1",
        "0"},
       {4, 40, 22}},
      {"no-boundary-circuit",
       {"1+x,-x,x,-x,x,-x,x,-x,x,-x,x,-1-x,1,0,0",
        "1+x,-x,x,-x,x,-x,x,-x,x,-x,1+x,1,0,0",
        "1+x,-x,x,-x,1+x,-x,x,1-x,1+x,-x,0,1,0",
        "1+x,1-x,1+x,-x,x,-x,x,-x,x,0,0,0",
        "x,-x,x,-x,x,-x,x,-x,0,0,0",
        "x,-x,x,-x,x,-x,x,0,0,0",
        "x,-x,x,-x,x,-x,0,0,0",
        "1+x,-x,x,-x,x,0,0,0",
        "1+x,-x,x,-x,0,1,0",
        "1+x,-x,x,0,1,0",
        "1+x,-x,0,0,-1",
        "x,0,0,0",
        "1,0,0",
        "0,0",
        "1"},
       {0, 27, 234, 389, 222, 47, 3}},
      {"square-theorem1", {"1+z^2,-z^2,1+z^2", "1+z^2,-z^2", "1+z^2"}, {2, 0, 4, 0, 1}, kVarZ, 'z'},
      {"square-bijection",
       {"1,0,1,z,0,0,-z", "1,0,-z,-z,0,0", "1,0,z,z,0", "0,0,-z,-z", "1,0,1", "1,0", "1"},
       {2, 0, 4, 0, 1},
       kVarZ,
       'z',
       Rational(1, 2)},
  };
  return all;
}

// Entries of the square Theorem-1 matrix use z^2; the linear parser reads them in x = z^2.
inline SkewMatrix<SparsePoly> fixture_matrix(const MatrixFixture& f) {
  if (f.name == "square-theorem1") {
    std::vector<std::string> rows;
    for (std::string r : f.rows) {
      std::string out;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r.compare(i, 3, "z^2") == 0) {
          out += 'x';
          i += 2;
        } else {
          out += r[i];
        }
      }
      rows.push_back(out);
    }
    return from_upper_rows(rows, kVarX, 'x');
  }
  return from_upper_rows(f.rows, f.var, f.symbol);
}

// Polynomial the fixture's Pfaffian should equal, in the fixture matrix's own variable.
inline SparsePoly fixture_expected(const MatrixFixture& f) {
  if (f.name == "square-theorem1") return dense(kVarZ, f.expected).scale_exponents(kVarZ, 1, 2).rename(kVarZ, kVarX);
  return dense(f.var, f.expected);
}

struct FullFixture {
  std::string name;
  int cols;
  int rows;
  std::vector<long> expected;  // in x, constant first
  std::size_t pfaffians;
};

inline const std::vector<FullFixture>& full_fixtures() {
  static const std::vector<FullFixture> all = {
      {"rectangle-4x3", 4, 3, {11, 123, 302, 267, 102, 17, 1}, 2},
      {"rectangle-6x6",
       6,
       6,
       {6728, 363536, 5580152, 39277112, 154396898, 377446076, 613605045, 693650988, 562203148, 333518324,
        146702793, 48145820, 11785382, 2135356, 281514, 26172, 1622, 60, 1},
       256},
  };
  return all;
}

}  // namespace dimerpf::fixtures
