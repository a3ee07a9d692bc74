#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepinv/catalog.hpp"
#include "sepinv/domain.hpp"
#include "sepinv/field.hpp"
#include "sepinv/invariant.hpp"
#include "sepinv/point.hpp"
#include "sepinv/report.hpp"
#include "sepinv/verify.hpp"

namespace {

using namespace sepinv;
using ordered_json = nlohmann::ordered_json;

struct SetSource {
  std::string label;
  InvariantSet set;
  std::optional<CatalogId> catalog;
};

// Catalog ids take precedence over file paths of the same spelling.
SetSource load_set(const std::string& text) {
  if (auto id = CatalogId::parse(text)) {
    return {id->to_string(), build_catalog(*id), id};
  }
  std::ifstream in(text);
  if (!in) throw std::runtime_error("--set: no such catalog or file: " + text);
  return {text, InvariantSet::parse(in), std::nullopt};
}

std::size_t resolve_n(const SetSource& src, std::size_t n_flag) {
  if (src.catalog) {
    if (n_flag != 0 && n_flag != src.catalog->n) {
      throw std::runtime_error("--n = " + std::to_string(n_flag) + " conflicts with " + src.label);
    }
    return src.catalog->n;
  }
  if (n_flag == 0) throw std::runtime_error("--n is required with a set file");
  return n_flag;
}

// Verification of a T or M family is meaningful only under the separating
// hypothesis on the characteristic; reject early instead of reporting a
// misleading verdict.
void guard_catalog_char(const SetSource& src, const FieldSpec& field, std::size_t n) {
  if (!src.catalog) return;
  const auto kind = src.catalog->kind;
  if (kind != CatalogId::Kind::T && kind != CatalogId::Kind::M) return;
  if (!char_ok_for(field, n)) {
    throw std::runtime_error("catalog " + src.label + " over " + field.to_string() +
                             " violates the hypothesis char(K) = 0 or char(K) > n (n = " +
                             std::to_string(n) + ")");
  }
}

std::vector<FieldElement> default_coords(const FieldSpec& field) {
  if (field.kind != FieldSpec::Kind::Prime) {
    throw std::runtime_error("--coords is required over the rationals");
  }
  if (field.p > 4096) throw std::runtime_error("--coords is required for primes above 4096");
  std::vector<FieldElement> out;
  for (std::uint64_t v = 0; v < field.p; ++v) out.push_back(FieldElement::prime(v, field.p));
  return out;
}

Point read_point(const std::string& path, const FieldSpec& field) {
  if (path.empty() || path == "-") return Point::parse(std::cin, field);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("no such point file: " + path);
  return Point::parse(in, field);
}

ordered_json point_rows(const Point& p) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < p.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < p.m(); ++j) row.push_back(p.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

struct Options {
  std::string set_text;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t m0 = 0;
  std::string field_text = "rational";
  std::string coords_text;
  std::string mode = "grid";
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
  unsigned jobs = 1;
  std::string output = "human";
  std::string point_a;
  std::string point_b;
};

DomainSpec make_domain(const FieldSpec& field, std::size_t n, std::size_t m, const Options& o) {
  auto coords = o.coords_text.empty() ? default_coords(field) : parse_coords(field, o.coords_text);
  if (o.mode == "grid") return DomainSpec::grid(field, n, m, std::move(coords));
  if (o.samples == 0) throw std::runtime_error("--mode sample requires --samples");
  return DomainSpec::sample(field, n, m, std::move(coords), o.samples, o.seed);
}

void add_domain_flags(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field_text, "rational or fp:<p>")->capture_default_str();
  sub->add_option("--coords", o.coords_text, "comma-separated grid values (default: all of F_p)");
  sub->add_option("--mode", o.mode, "grid or sample")->check(CLI::IsMember({"grid", "sample"}))
      ->capture_default_str();
  sub->add_option("--samples", o.samples, "sample count for --mode sample");
  sub->add_option("--seed", o.seed, "sample seed")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "worker threads (output is identical for any value)")
      ->capture_default_str();
  sub->add_option("--output", o.output, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}))->capture_default_str();
}

int run_build(const Options& o) {
  const SetSource src = load_set(o.set_text);
  std::cout << src.set.to_text();
  return 0;
}

int run_eval(const Options& o) {
  const SetSource src = load_set(o.set_text);
  const FieldSpec field = FieldSpec::parse(o.field_text);
  const Point p = read_point(o.point_a, field);
  if (p.m() != src.set.m()) throw std::runtime_error("point width does not match the set");
  const std::vector<FieldElement> values = fingerprint(src.set, p);
  if (o.output == "machine") {
    ordered_json j;
    j["op"] = "eval";
    j["set"] = src.label;
    j["field"] = field.to_string();
    j["point"] = point_rows(p);
    ordered_json vals = ordered_json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      ordered_json v;
      v["invariant"] = src.set.elements()[i].to_string();
      v["value"] = values[i].to_string();
      vals.push_back(v);
    }
    j["values"] = vals;
    std::cout << j.dump() << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::cout << src.set.elements()[i].to_string() << " = " << values[i].to_string() << '\n';
  }
  return 0;
}

int run_orbit(const Options& o) {
  const FieldSpec field = FieldSpec::parse(o.field_text);
  const Point p = read_point(o.point_a, field);
  const Point q = read_point(o.point_b, field);
  const bool same = same_orbit(p, q);
  if (o.output == "machine") {
    ordered_json j;
    j["op"] = "orbit";
    j["field"] = field.to_string();
    j["n"] = p.n();
    j["m"] = p.m();
    j["same_orbit"] = same;
    j["canonical_p"] = point_rows(canonical_form(p));
    j["canonical_q"] = point_rows(canonical_form(q));
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "same_orbit " << (same ? "true" : "false") << '\n';
    std::cout << "canonical p\n" << canonical_form(p).to_text();
    std::cout << "canonical q\n" << canonical_form(q).to_text();
  }
  return same ? 0 : 1;
}

int run_verify_separating(const Options& o) {
  const SetSource src = load_set(o.set_text);
  const FieldSpec field = FieldSpec::parse(o.field_text);
  const std::size_t n = resolve_n(src, o.n);
  guard_catalog_char(src, field, n);
  const DomainSpec d = make_domain(field, n, src.set.m(), o);
  EngineOptions eo;
  eo.jobs = o.jobs;
  const SeparationReport rep = verify_separating(src.set, d, eo);
  const RunMeta meta = run_meta("verify-separating", src.set, d);
  std::cout << (o.output == "machine" ? machine_report(meta, rep) + "\n" : human_report(meta, rep));
  return rep.verdict == Verdict::Separating ? 0 : 1;
}

int run_verify_minimal(const Options& o) {
  const SetSource src = load_set(o.set_text);
  const FieldSpec field = FieldSpec::parse(o.field_text);
  const std::size_t n = resolve_n(src, o.n);
  guard_catalog_char(src, field, n);
  const DomainSpec d = make_domain(field, n, src.set.m(), o);
  EngineOptions eo;
  eo.jobs = o.jobs;
  const MinimalityReport rep = verify_minimal(src.set, d, o.budget, eo);
  RunMeta meta = run_meta("verify-minimal", src.set, d);
  meta.has_budget = true;
  meta.budget = o.budget;
  std::cout << (o.output == "machine" ? machine_report(meta, rep) + "\n" : human_report(meta, rep));
  return rep.all_witness() ? 0 : 1;
}

int run_verify_expansion(const Options& o) {
  const FieldSpec field = FieldSpec::parse(o.field_text);
  if (o.n == 0 || o.m == 0) throw std::runtime_error("--n and --m are required");
  const std::size_t m0 = o.m0 == 0 ? m0_of(o.n) : o.m0;
  if (!char_ok_for(field, o.n)) {
    throw std::runtime_error("expansion of M over " + field.to_string() +
                             " violates the hypothesis char(K) = 0 or char(K) > n (n = " +
                             std::to_string(o.n) + ")");
  }
  const DomainSpec d = make_domain(field, o.n, o.m, o);
  EngineOptions eo;
  eo.jobs = o.jobs;
  const SeparationReport rep = verify_expansion_theorem(o.n, m0, o.m, d, eo);
  const InvariantSet expanded = expand_set(build_M(o.n, m0), o.m).sorted();
  const RunMeta meta = run_meta("verify-expansion", expanded, d);
  std::cout << (o.output == "machine" ? machine_report(meta, rep) + "\n" : human_report(meta, rep));
  return rep.verdict == Verdict::Separating ? 0 : 1;
}

int run_stats(const Options& o) {
  if (o.n == 0 || o.m == 0) throw std::runtime_error("--n and --m are required");
  const std::size_t m0 = m0_of(o.n);
  const std::uint64_t msz = m_size(o.n, o.m);
  const std::uint64_t ssz = s_size(o.n, o.m);
  const RatioAsymptotics ratio = asymptotic_ratio_constant(o.n);
  mpq_class normalized(0);
  if (msz != 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), o.m, ratio.exponent);
    normalized = mpq_class(mpz_class(ssz) * scale, mpz_class(msz));
    normalized.canonicalize();
  }
  std::optional<std::uint64_t> tsz;
  if ((o.n >= 2 && o.n <= 4) && o.m >= 2) tsz = build_T(o.n, o.m).size();
  if (o.output == "machine") {
    ordered_json j;
    j["op"] = "stats";
    j["n"] = o.n;
    j["m"] = o.m;
    j["m0"] = m0;
    j["M_size"] = msz;
    j["S_size"] = ssz;
    if (tsz) j["T_size"] = *tsz;
    j["ratio_constant"] = ratio.constant.get_str();
    j["ratio_exponent"] = ratio.exponent;
    j["normalized_ratio"] = normalized.get_str();
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "n " << o.n << "\nm " << o.m << "\nm0 " << m0 << '\n';
  std::cout << "M_size " << msz << '\n';
  std::cout << "S_size " << ssz << '\n';
  if (tsz) std::cout << "T_size " << *tsz << '\n';
  std::cout << "ratio_constant " << ratio.constant.get_str() << '\n';
  std::cout << "ratio_exponent " << ratio.exponent << '\n';
  std::cout << "normalized_ratio " << normalized.get_str() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elementary multisymmetric invariants: catalogs, evaluation, orbit checks, verification"};
  app.require_subcommand(1);
  Options o;

  CLI::App* build = app.add_subcommand("build", "print a set in the set text format");
  build->add_option("set", o.set_text, "M:<n>:<m>, S:<n>:<m>, T:<n>:<m>, CX:S3, or a set file")->required();

  CLI::App* eval = app.add_subcommand("eval", "evaluate every descriptor of a set at one point");
  eval->add_option("--set", o.set_text, "catalog id or set file")->required();
  eval->add_option("--field", o.field_text, "rational or fp:<p>")->capture_default_str();
  eval->add_option("--point", o.point_a, "point file (default: stdin)");
  eval->add_option("--output", o.output, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}))->capture_default_str();

  CLI::App* orbit = app.add_subcommand("orbit", "decide whether two points share an orbit");
  orbit->add_option("p", o.point_a, "first point file")->required();
  orbit->add_option("q", o.point_b, "second point file")->required();
  orbit->add_option("--field", o.field_text, "rational or fp:<p>")->capture_default_str();
  orbit->add_option("--output", o.output, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}))->capture_default_str();

  CLI::App* vsep = app.add_subcommand("verify-separating", "bucket a domain by fingerprint and hunt counterexamples");
  vsep->add_option("--set", o.set_text, "catalog id or set file")->required();
  vsep->add_option("--n", o.n, "rows (required for set files)");
  add_domain_flags(vsep, o);

  CLI::App* vmin = app.add_subcommand("verify-minimal", "search a witness pair for every set element");
  vmin->add_option("--set", o.set_text, "catalog id or set file")->required();
  vmin->add_option("--n", o.n, "rows (required for set files)");
  vmin->add_option("--budget", o.budget, "max orbit classes scanned per level / samples drawn; 0 = unbounded")
      ->capture_default_str();
  add_domain_flags(vmin, o);

  CLI::App* vexp = app.add_subcommand("verify-expansion", "expand the power-sum set from m0 to m and verify separation");
  vexp->add_option("--n", o.n, "rows")->required();
  vexp->add_option("--m0", o.m0, "source width (default: floor(n/2) + 1)");
  vexp->add_option("--m", o.m, "target width")->required();
  add_domain_flags(vexp, o);

  CLI::App* stats = app.add_subcommand("stats", "set sizes and the asymptotic size ratio");
  stats->add_option("--n", o.n, "rows")->required();
  stats->add_option("--m", o.m, "variable sets")->required();
  stats->add_option("--output", o.output, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) return run_build(o);
    if (*eval) return run_eval(o);
    if (*orbit) return run_orbit(o);
    if (*vsep) return run_verify_separating(o);
    if (*vmin) return run_verify_minimal(o);
    if (*vexp) return run_verify_expansion(o);
    if (*stats) return run_stats(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
