// Compares the reference engine against the parallel one, then shows how the
// parallel engine scales with the worker count. Not a test; run by hand.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "sepinv/catalog.hpp"
#include "sepinv/verify.hpp"

using namespace sepinv;

namespace {

std::vector<FieldElement> coords(const FieldSpec& field, std::initializer_list<int> xs) {
  std::vector<FieldElement> out;
  for (int x : xs) out.push_back(FieldElement::from_integer(field, x));
  return out;
}

template <class F>
double time_run(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* label, double secs, double base) {
  std::printf("  %-28s %8.3fs  x%.2f\n", label, secs, base / secs);
}

}  // namespace

int main() {
  const FieldSpec q = FieldSpec::rational();
  const FieldSpec f5 = FieldSpec::prime(5);

  {
    std::printf("T:3:3 over rationals, grid {0,1,2} (19683 points)\n");
    const InvariantSet s = build_T(3, 3);
    const DomainSpec d = DomainSpec::grid(q, 3, 3, coords(q, {0, 1, 2}));
    const double ref = time_run([&] { verify_separating_reference(s, d); });
    report("reference", ref, ref);
    for (unsigned jobs : {1u, 2u, 4u}) {
      EngineOptions o;
      o.jobs = jobs;
      const double t = time_run([&] { verify_separating(s, d, o); });
      report(("engine jobs=" + std::to_string(jobs)).c_str(), t, ref);
    }
  }

  {
    std::printf("T:4:3 over F_5, grid {0,1,2,3} (4^12 points)\n");
    const InvariantSet s = build_T(4, 3);
    const DomainSpec d = DomainSpec::grid(f5, 4, 3, coords(f5, {0, 1, 2, 3}));
    double base = 0;
    for (unsigned jobs : {1u, 2u, 4u}) {
      EngineOptions o;
      o.jobs = jobs;
      const double t = time_run([&] { verify_separating(s, d, o); });
      if (jobs == 1) base = t;
      report(("engine jobs=" + std::to_string(jobs)).c_str(), t, base);
    }
  }
  return 0;
}
