#include "sepinv/report.hpp"

#include <sstream>

#include <json.hpp>

namespace sepinv {
namespace {

using ordered_json = nlohmann::ordered_json;

void meta_lines(std::ostream& out, const RunMeta& meta) {
  out << "record " << meta.op << '\n';
  out << "field " << meta.domain.field.to_string() << '\n';
  out << "n " << meta.domain.n << '\n';
  out << "m " << meta.domain.m << '\n';
  out << "domain " << meta.domain.describe() << '\n';
  out << "elements " << meta.set_elements.size() << '\n';
  if (meta.has_budget) out << "budget " << meta.budget << '\n';
}

ordered_json meta_json(const RunMeta& meta) {
  ordered_json j;
  j["op"] = meta.op;
  j["set"] = meta.set_elements;
  j["field"] = meta.domain.field.to_string();
  j["n"] = meta.domain.n;
  j["m"] = meta.domain.m;
  ordered_json d;
  d["mode"] = meta.domain.mode == DomainSpec::Mode::GridExhaustive ? "grid" : "sample";
  ordered_json coords = ordered_json::array();
  for (const FieldElement& c : meta.domain.coords) coords.push_back(c.to_string());
  d["coords"] = coords;
  if (meta.domain.mode == DomainSpec::Mode::RandomSample) {
    d["count"] = meta.domain.sample_count;
    d["seed"] = meta.domain.seed;
  }
  j["domain"] = d;
  if (meta.has_budget) j["budget"] = meta.budget;
  return j;
}

ordered_json point_json(const Point& p) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < p.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < p.m(); ++j) row.push_back(p.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

RunMeta run_meta(std::string op, const InvariantSet& s, DomainSpec domain) {
  RunMeta meta;
  meta.op = std::move(op);
  for (const Invariant& f : s.elements()) meta.set_elements.push_back(f.to_string());
  meta.domain = std::move(domain);
  return meta;
}

std::string human_report(const RunMeta& meta, const SeparationReport& rep) {
  std::ostringstream out;
  meta_lines(out, meta);
  out << "verdict " << to_string(rep.verdict) << '\n';
  out << "points_checked " << rep.points_checked << '\n';
  out << "buckets " << rep.buckets << '\n';
  if (rep.counterexample) {
    out << "counterexample p\n" << rep.counterexample->first.to_text();
    out << "counterexample q\n" << rep.counterexample->second.to_text();
  }
  out << "end record\n";
  return out.str();
}

std::string human_report(const RunMeta& meta, const MinimalityReport& rep) {
  std::ostringstream out;
  meta_lines(out, meta);
  out << "verdict " << (rep.all_witness() ? "AllWitness" : "UnknownPresent") << '\n';
  std::size_t found = 0;
  for (const auto& e : rep.entries) found += e.witness ? 1 : 0;
  out << "witnesses " << found << '\n';
  for (const auto& e : rep.entries) {
    out << "element " << e.f.to_string() << ' ' << (e.witness ? "Witness" : "Unknown") << '\n';
    if (e.witness) {
      out << "witness p\n" << e.witness->first.to_text();
      out << "witness q\n" << e.witness->second.to_text();
    }
  }
  out << "end record\n";
  return out.str();
}

std::string machine_report(const RunMeta& meta, const SeparationReport& rep) {
  ordered_json j = meta_json(meta);
  j["verdict"] = to_string(rep.verdict);
  j["points_checked"] = rep.points_checked;
  j["buckets"] = rep.buckets;
  if (rep.counterexample) {
    ordered_json cx;
    cx["p"] = point_json(rep.counterexample->first);
    cx["q"] = point_json(rep.counterexample->second);
    j["counterexample"] = cx;
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump();
}

std::string machine_report(const RunMeta& meta, const MinimalityReport& rep) {
  ordered_json j = meta_json(meta);
  j["verdict"] = rep.all_witness() ? "AllWitness" : "UnknownPresent";
  ordered_json elems = ordered_json::array();
  for (const auto& e : rep.entries) {
    ordered_json el;
    el["invariant"] = e.f.to_string();
    el["outcome"] = e.witness ? "Witness" : "Unknown";
    if (e.witness) {
      el["p"] = point_json(e.witness->first);
      el["q"] = point_json(e.witness->second);
    }
    elems.push_back(el);
  }
  j["elements"] = elems;
  return j.dump();
}

}  // namespace sepinv
