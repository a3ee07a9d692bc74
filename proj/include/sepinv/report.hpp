#pragma once

#include <cstdint>
#include <string>

#include "sepinv/domain.hpp"
#include "sepinv/verify.hpp"

namespace sepinv {

/// Run identification echoed into every report record. Worker counts are
/// intentionally absent (reports must be identical for any job count), and
/// sets are described by content, so a catalog and a file holding the same
/// set produce identical records.
struct RunMeta {
  std::string op;
  std::vector<std::string> set_elements;  // descriptor text, set order
  DomainSpec domain;
  bool has_budget = false;
  std::uint64_t budget = 0;
};

RunMeta run_meta(std::string op, const InvariantSet& s, DomainSpec domain);

std::string human_report(const RunMeta& meta, const SeparationReport& rep);
std::string human_report(const RunMeta& meta, const MinimalityReport& rep);

/// Single-line self-contained JSON record, keys in writing order.
std::string machine_report(const RunMeta& meta, const SeparationReport& rep);
std::string machine_report(const RunMeta& meta, const MinimalityReport& rep);

}  // namespace sepinv
