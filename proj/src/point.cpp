#include "sepinv/point.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sepinv {

Point::Point(FieldSpec field, std::size_t n, std::size_t m)
    : field_(field), n_(n), m_(m), entries_(n * m, FieldElement::zero(field)) {
  if (n_ == 0 || m_ == 0) throw std::invalid_argument("point: n and m must be positive");
}

Point Point::from_rows(FieldSpec field, std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("point: n and m must be positive");
  Point p(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < p.n_; ++i) {
    if (rows[i].size() != p.m_) throw std::invalid_argument("point: ragged rows");
    for (std::size_t j = 0; j < p.m_; ++j) {
      if (!(rows[i][j].field() == field)) throw std::invalid_argument("point: entry field mismatch");
      p.at(i, j) = std::move(rows[i][j]);
    }
  }
  return p;
}

std::vector<FieldElement> Point::column(std::size_t j) const {
  if (j >= m_) throw std::invalid_argument("point: column out of range");
  std::vector<FieldElement> c;
  c.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) c.push_back(at(i, j));
  return c;
}

std::vector<FieldElement> Point::row(std::size_t i) const {
  if (i >= n_) throw std::invalid_argument("point: row out of range");
  std::vector<FieldElement> r;
  r.reserve(m_);
  for (std::size_t j = 0; j < m_; ++j) r.push_back(at(i, j));
  return r;
}

std::string Point::to_text() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (j) s += ' ';
      s += at(i, j).to_string();
    }
    s += '\n';
  }
  return s;
}

Point Point::parse(std::istream& in, const FieldSpec& field) {
  std::vector<std::vector<FieldElement>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<FieldElement> row;
    std::string tok;
    while (ls >> tok) row.push_back(FieldElement::parse(field, tok));
    if (row.empty()) continue;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("point: no rows");
  return from_rows(field, std::move(rows));
}

Point Point::parse_text(const std::string& text, const FieldSpec& field) {
  std::istringstream in(text);
  return parse(in, field);
}

bool Point::operator==(const Point& o) const {
  if (!(field_ == o.field_) || n_ != o.n_ || m_ != o.m_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != o.entries_[i]) return false;
  }
  return true;
}

Point apply_perm(const Permutation& s, const Point& p) {
  if (s.size() != p.n()) throw std::invalid_argument("apply_perm: size mismatch");
  Point r(p.field(), p.n(), p.m());
  for (unsigned i = 0; i < p.n(); ++i) {
    for (std::size_t j = 0; j < p.m(); ++j) r.at(s(i), j) = p.at(i, j);
  }
  return r;
}

Point canonical_form(const Point& p) {
  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(p.n());
  for (std::size_t i = 0; i < p.n(); ++i) rows.push_back(p.row(i));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return Point::from_rows(p.field(), std::move(rows));
}

bool same_orbit(const Point& p, const Point& q) {
  if (!(p.field() == q.field())) throw std::invalid_argument("same_orbit: field mismatch");
  if (p.n() != q.n() || p.m() != q.m()) throw std::invalid_argument("same_orbit: shape mismatch");
  return canonical_form(p) == canonical_form(q);
}

}  // namespace sepinv
