#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sepinv/field.hpp"
#include "sepinv/partition.hpp"

namespace sepinv {

/// n rows of m coordinates: row i holds (x(1)_i, ..., x(m)_i), so column j
/// is one vector of the m-tuple being acted on by row permutations.
class Point {
 public:
  Point(FieldSpec field, std::size_t n, std::size_t m);
  static Point from_rows(FieldSpec field, std::vector<std::vector<FieldElement>> rows);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  FieldSpec field() const { return field_; }

  FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * m_ + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }

  std::vector<FieldElement> column(std::size_t j) const;
  std::vector<FieldElement> row(std::size_t i) const;

  /// Text form: n lines of m whitespace-separated elements.
  std::string to_text() const;
  static Point parse(std::istream& in, const FieldSpec& field);
  static Point parse_text(const std::string& text, const FieldSpec& field);

  bool operator==(const Point& o) const;
  bool operator!=(const Point& o) const { return !(*this == o); }

 private:
  FieldSpec field_;
  std::size_t n_ = 0, m_ = 0;
  std::vector<FieldElement> entries_;  // row-major
};

/// Row action: row s(i) of the result is row i of p.
Point apply_perm(const Permutation& s, const Point& p);

/// Orbit representative: rows sorted lexicographically.
Point canonical_form(const Point& p);

/// True when some row permutation carries p to q.
bool same_orbit(const Point& p, const Point& q);

}  // namespace sepinv
