#pragma once

#include <cstdint>
#include <vector>

#include "sepinv/field.hpp"
#include "sepinv/point.hpp"

namespace sepinv {

/// Search space for the verification engines: either every point of the
/// grid coords^(n*m) in lexicographic order (row-major entries), or a
/// seed-deterministic stream of samples from that grid.
struct DomainSpec {
  enum class Mode { GridExhaustive, RandomSample };

  Mode mode = Mode::GridExhaustive;
  FieldSpec field;
  std::size_t n = 0, m = 0;
  std::vector<FieldElement> coords;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;

  static DomainSpec grid(FieldSpec field, std::size_t n, std::size_t m, std::vector<FieldElement> coords);
  static DomainSpec sample(FieldSpec field, std::size_t n, std::size_t m, std::vector<FieldElement> coords,
                           std::uint64_t count, std::uint64_t seed);

  void validate() const;

  /// |coords|^m, the number of distinct rows. Throws on overflow.
  std::uint64_t row_count() const;
  /// |coords|^(n*m). Throws on overflow.
  std::uint64_t grid_size() const;

  /// Row id -> m coordinate indices (first column most significant).
  std::vector<std::uint32_t> row_digits(std::uint64_t row_id) const;
  /// Point index -> n row ids (first row most significant).
  std::vector<std::uint64_t> grid_row_ids(std::uint64_t index) const;
  /// Sample index -> n row ids, from a seed-keyed counter stream; the
  /// stream is random access, so any index subset is reproducible.
  std::vector<std::uint64_t> sample_row_ids(std::uint64_t index) const;

  Point grid_point(std::uint64_t index) const;
  Point point_from_row_ids(const std::vector<std::uint64_t>& ids) const;
  Point sample_point(std::uint64_t index) const;

  std::string describe() const;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Parses a comma-separated integer list into distinct field elements.
std::vector<FieldElement> parse_coords(const FieldSpec& field, const std::string& text);

}  // namespace sepinv
