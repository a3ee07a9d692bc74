#include "sepinv/domain.hpp"

#include <sstream>
#include <stdexcept>

namespace sepinv {

DomainSpec DomainSpec::grid(FieldSpec field, std::size_t n, std::size_t m, std::vector<FieldElement> coords) {
  DomainSpec d;
  d.mode = Mode::GridExhaustive;
  d.field = field;
  d.n = n;
  d.m = m;
  d.coords = std::move(coords);
  d.validate();
  return d;
}

DomainSpec DomainSpec::sample(FieldSpec field, std::size_t n, std::size_t m, std::vector<FieldElement> coords,
                              std::uint64_t count, std::uint64_t seed) {
  DomainSpec d;
  d.mode = Mode::RandomSample;
  d.field = field;
  d.n = n;
  d.m = m;
  d.coords = std::move(coords);
  d.sample_count = count;
  d.seed = seed;
  d.validate();
  return d;
}

void DomainSpec::validate() const {
  if (n == 0 || m == 0) throw std::invalid_argument("domain: n and m must be positive");
  if (coords.empty()) throw std::invalid_argument("domain: coordinate list must be nonempty");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!(coords[i].field() == field)) throw std::invalid_argument("domain: coordinate field mismatch");
    for (std::size_t j = i + 1; j < coords.size(); ++j) {
      if (coords[i] == coords[j]) throw std::invalid_argument("domain: duplicate coordinate " + coords[i].to_string());
    }
  }
  if (mode == Mode::RandomSample && sample_count == 0) throw std::invalid_argument("domain: sample count must be positive");
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error(what);
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t DomainSpec::row_count() const {
  return checked_pow(coords.size(), m, "domain: row count overflow");
}

std::uint64_t DomainSpec::grid_size() const {
  return checked_pow(row_count(), n, "domain: grid size overflow");
}

std::vector<std::uint32_t> DomainSpec::row_digits(std::uint64_t row_id) const {
  const std::uint64_t b = coords.size();
  std::vector<std::uint32_t> digits(m);
  for (std::size_t j = m; j-- > 0;) {
    digits[j] = static_cast<std::uint32_t>(row_id % b);
    row_id /= b;
  }
  return digits;
}

std::vector<std::uint64_t> DomainSpec::grid_row_ids(std::uint64_t index) const {
  const std::uint64_t r = row_count();
  std::vector<std::uint64_t> ids(n);
  for (std::size_t i = n; i-- > 0;) {
    ids[i] = index % r;
    index /= r;
  }
  return ids;
}

Point DomainSpec::point_from_row_ids(const std::vector<std::uint64_t>& ids) const {
  if (ids.size() != n) throw std::invalid_argument("domain: expected n row ids");
  Point p(field, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto digits = row_digits(ids[i]);
    for (std::size_t j = 0; j < m; ++j) p.at(i, j) = coords[digits[j]];
  }
  return p;
}

Point DomainSpec::grid_point(std::uint64_t index) const {
  if (index >= grid_size()) throw std::invalid_argument("domain: point index out of range");
  return point_from_row_ids(grid_row_ids(index));
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::uint64_t> DomainSpec::sample_row_ids(std::uint64_t index) const {
  const std::uint64_t b = coords.size();
  const std::uint64_t lim = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t state = seed ^ (0x2545f4914f6cdd1dull * (index + 1));
  std::vector<std::uint64_t> ids(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t x;
      do {
        x = splitmix64(state);  // rejection keeps the draw uniform
      } while (x >= lim);
      ids[i] = ids[i] * b + x % b;
    }
  }
  return ids;
}

Point DomainSpec::sample_point(std::uint64_t index) const {
  return point_from_row_ids(sample_row_ids(index));
}

std::string DomainSpec::describe() const {
  std::string s = mode == Mode::GridExhaustive ? "grid" : "sample";
  s += " coords";
  for (const FieldElement& c : coords) s += ' ' + c.to_string();
  if (mode == Mode::RandomSample) {
    s += " count " + std::to_string(sample_count) + " seed " + std::to_string(seed);
  }
  return s;
}

std::vector<FieldElement> parse_coords(const FieldSpec& field, const std::string& text) {
  std::vector<FieldElement> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("coords: empty entry");
    out.push_back(FieldElement::parse(field, token));
  }
  if (out.empty()) throw std::invalid_argument("coords: empty list");
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i] == out[j]) {
        throw std::invalid_argument("coords: duplicate value " + out[i].to_string() + " after reduction into " +
                                    field.to_string());
      }
    }
  }
  return out;
}

}  // namespace sepinv
