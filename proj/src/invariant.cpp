#include "sepinv/invariant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sepinv {

unsigned total_degree(const MultiExponent& k) {
  unsigned s = 0;
  for (unsigned v : k) s += v;
  return s;
}

std::string Invariant::to_string() const {
  std::string s = "sigma " + std::to_string(t);
  for (unsigned v : k) s += ' ' + std::to_string(v);
  return s;
}

Invariant tr(MultiExponent k) { return Invariant{1, std::move(k)}; }

InvariantSet::InvariantSet(std::size_t m) : m_(m) {
  if (m == 0) throw std::invalid_argument("invariant set: m must be positive");
}

bool InvariantSet::add(Invariant f) {
  if (f.k.size() != m_) throw std::invalid_argument("invariant set: exponent length differs from m");
  if (f.t == 0) throw std::invalid_argument("invariant set: t must be positive");
  if (!index_.insert(f).second) return false;
  order_.push_back(std::move(f));
  return true;
}

InvariantSet InvariantSet::without(const Invariant& f) const {
  InvariantSet r(m_);
  for (const Invariant& g : order_) {
    if (!(g == f)) r.add(g);
  }
  return r;
}

InvariantSet InvariantSet::sorted() const {
  InvariantSet r(m_);
  for (const Invariant& g : index_) r.add(g);
  return r;
}

std::string InvariantSet::to_text() const {
  std::string s = "m " + std::to_string(m_) + '\n';
  for (const Invariant& g : order_) s += g.to_string() + '\n';
  return s;
}

InvariantSet InvariantSet::parse(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_m = false;
  std::size_t m = 0;
  std::vector<Invariant> pending;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (head == "m") {
      if (have_m) throw std::invalid_argument("invariant set: duplicate m header" + where);
      if (!(ls >> m) || m == 0) throw std::invalid_argument("invariant set: bad m header" + where);
      have_m = true;
    } else if (head == "sigma") {
      if (!have_m) throw std::invalid_argument("invariant set: descriptor before m header" + where);
      Invariant f;
      if (!(ls >> f.t)) throw std::invalid_argument("invariant set: bad descriptor" + where);
      unsigned v = 0;
      while (ls >> v) f.k.push_back(v);
      if (!ls.eof()) throw std::invalid_argument("invariant set: bad exponent" + where);
      if (f.k.size() != m) throw std::invalid_argument("invariant set: expected " + std::to_string(m) + " exponents" + where);
      pending.push_back(std::move(f));
    } else {
      throw std::invalid_argument("invariant set: unknown line \"" + head + "\"" + where);
    }
  }
  if (!have_m) throw std::invalid_argument("invariant set: missing m header");
  InvariantSet s(m);
  for (Invariant& f : pending) s.add(std::move(f));
  return s;
}

InvariantSet InvariantSet::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

FieldElement eval_row_monomial(const Point& p, std::size_t i, const MultiExponent& k) {
  if (k.size() != p.m()) throw std::invalid_argument("eval: exponent length differs from point width");
  if (i >= p.n()) throw std::invalid_argument("eval: row out of range");
  FieldElement r = FieldElement::one(p.field());
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j]) r = r * pow_nonneg(p.at(i, j), k[j]);
  }
  return r;
}

FieldElement eval_invariant(const Invariant& f, const Point& p) {
  if (f.t < 1 || f.t > p.n()) {
    throw std::invalid_argument("eval: t = " + std::to_string(f.t) + " outside 1.." + std::to_string(p.n()));
  }
  const FieldElement zero = FieldElement::zero(p.field());
  std::vector<FieldElement> e(f.t + 1, zero);
  e[0] = FieldElement::one(p.field());
  for (std::size_t i = 0; i < p.n(); ++i) {
    const FieldElement v = eval_row_monomial(p, i, f.k);
    const std::size_t top = std::min<std::size_t>(f.t, i + 1);
    for (std::size_t l = top; l >= 1; --l) e[l] = e[l] + e[l - 1] * v;
  }
  return e[f.t];
}

MultiExponent multidegree(const Invariant& f) {
  MultiExponent d = f.k;
  for (unsigned& v : d) v *= f.t;
  return d;
}

std::vector<std::vector<unsigned>> admissible_tuples(std::size_t m0, std::size_t m) {
  if (m0 == 0 || m0 > m) throw std::invalid_argument("admissible_tuples: need 1 <= m0 <= m");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> j(m0);
  for (std::size_t s = 0; s < m0; ++s) j[s] = static_cast<unsigned>(s + 1);
  while (true) {
    out.push_back(j);
    // advance the rightmost entry that still has room
    std::size_t s = m0;
    while (s > 0 && j[s - 1] == m - m0 + s) --s;
    if (s == 0) break;
    ++j[s - 1];
    for (std::size_t u = s; u < m0; ++u) j[u] = j[u - 1] + 1;
  }
  return out;
}

Invariant expand_invariant(const Invariant& f, const std::vector<unsigned>& j, std::size_t m) {
  if (j.size() != f.k.size()) throw std::invalid_argument("expand: tuple length differs from exponent length");
  Invariant r;
  r.t = f.t;
  r.k.assign(m, 0);
  unsigned prev = 0;
  for (std::size_t s = 0; s < j.size(); ++s) {
    if (j[s] <= prev || j[s] > m) throw std::invalid_argument("expand: tuple must be strictly increasing within 1..m");
    prev = j[s];
    r.k[j[s] - 1] = f.k[s];
  }
  return r;
}

InvariantSet expand_set(const InvariantSet& s, std::size_t m) {
  if (s.m() > m) throw std::invalid_argument("expand: target m smaller than source");
  InvariantSet r(m);
  const auto tuples = admissible_tuples(s.m(), m);
  for (const Invariant& f : s.elements()) {
    for (const auto& j : tuples) r.add(expand_invariant(f, j, m));
  }
  return r;
}

bool is_elementary_set(const InvariantSet& s) {
  for (const Invariant& f : s.elements()) {
    for (unsigned l = 1; l < f.t; ++l) {
      if (!s.contains(Invariant{l, f.k})) return false;
    }
  }
  return true;
}

bool satisfies_condition_c(const InvariantSet& s) {
  for (const Invariant& f : s.elements()) {
    for (std::size_t i = 0; i < f.k.size(); ++i) {
      if (f.k[i] != 0) continue;
      MultiExponent reduced;
      reduced.reserve(f.k.size() - 1);
      for (std::size_t u = 0; u < f.k.size(); ++u) {
        if (u != i) reduced.push_back(f.k[u]);
      }
      for (std::size_t pos = 0; pos < f.k.size(); ++pos) {
        MultiExponent cand = reduced;
        cand.insert(cand.begin() + pos, 0);
        if (!s.contains(Invariant{f.t, cand})) return false;
      }
    }
  }
  return true;
}

}  // namespace sepinv
