// Acceptance gate: runs the full verification suite once and grades each
// criterion from the records, printing one pass/fail line per criterion.
// Everything is exact rational equality; there are no tolerances to tune.

#include <mukai/verify.hpp>

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

struct Criterion {
  std::string description;
  bool pass = false;
  std::string detail;
};

long sum_instances(const mukai::VerificationReport& report, const std::string& prefix,
                   bool* all_pass) {
  long instances = 0;
  for (const auto& c : report.checks) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    instances += c.instances;
    if (!c.pass) *all_pass = false;
  }
  return instances;
}

int count_checks(const mukai::VerificationReport& report, const std::string& prefix,
                 bool* all_pass) {
  int count = 0;
  for (const auto& c : report.checks) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    ++count;
    if (!c.pass) *all_pass = false;
  }
  return count;
}

}  // namespace

int main() {
  mukai::VerifyOptions opts;  // the default seed; every value below is exact
  const mukai::VerificationReport report = mukai::run_verification(opts);

  std::vector<Criterion> criteria;

  {
    Criterion c;
    bool ok = true;
    const long instances = sum_instances(report, "theorem1/pairing_identity/", &ok);
    const int spaces = count_checks(report, "theorem1/pairing_identity/", &ok);
    c.description = "1. pairing comparison: shk(a,b) == mukai(vee(b),a) on every corpus space";
    c.pass = ok && instances >= 500 && spaces == 10;
    c.detail = std::to_string(instances) + " instances over " + std::to_string(spaces) + " spaces";
    criteria.push_back(c);
  }
  {
    Criterion c;
    bool ok = true;
    const int grams = count_checks(report, "theorem1/nondegenerate/", &ok);
    c.description = "2. non-degeneracy: both Gram matrices invertible on every corpus space";
    c.pass = ok && grams == 20;
    c.detail = std::to_string(grams) + " Gram matrices";
    criteria.push_back(c);
  }
  {
    Criterion c;
    bool ok = true;
    const long instances = sum_instances(report, "prop2/identity_kernel/", &ok);
    c.description = "3. identity kernel: convolution is the identity and the coefficients "
                    "invert the Shklyarov Gram matrix";
    c.pass = ok && count_checks(report, "prop2/identity_kernel/", &ok) == 10;
    c.detail = std::to_string(instances) + " instances";
    criteria.push_back(c);
  }
  {
    Criterion c;
    bool ok = true;
    const long instances = sum_instances(report, "prop1/functoriality/", &ok);
    sum_instances(report, "prop1/compose_routes/", &ok);
    sum_instances(report, "prop1/associativity/", &ok);
    c.description = "4. functoriality: convolve(compose(F,G)) == convolve(G) after convolve(F) "
                    "on both kernel chains";
    c.pass = ok;
    c.detail = std::to_string(instances) + " basis instances";
    criteria.push_back(c);
  }
  {
    Criterion c;
    bool ok = true;
    const long adj = sum_instances(report, "prop3/adjointness/", &ok);
    const long serre = sum_instances(report, "prop3/serre_twist/", &ok);
    c.description = "5. adjoints: the bilinear adjointness identity plus the Serre-twist "
                    "identities on every space";
    c.pass = ok;
    c.detail = std::to_string(adj) + " pairings, " + std::to_string(serre) + " identities";
    criteria.push_back(c);
  }
  {
    Criterion c;
    bool ok = true;
    const long eq = sum_instances(report, "theorem2/convolve_equals_mukai/", &ok);
    const long box = sum_instances(report, "theorem2/external_factorization/", &ok);
    sum_instances(report, "theorem2/point_kernel_factorization/", &ok);
    c.description = "6. transform comparison: convolve == mukai_convolve for every catalog "
                    "kernel, and external products factor";
    c.pass = ok;
    c.detail = std::to_string(eq) + " matrix columns, " + std::to_string(box) + " factorizations";
    criteria.push_back(c);
  }
  {
    Criterion c;
    bool ok = true;
    const long instances = sum_instances(report, "theorem3/", &ok);
    c.description = "7. projection Riemann-Roch at degree zero, including chi(O(d)) tables "
                    "on the line and the plane for d in [-3, 3]";
    c.pass = ok;
    c.detail = std::to_string(instances) + " instances";
    criteria.push_back(c);
  }
  {
    Criterion c;
    bool ok = true;
    const int checks = count_checks(report, "quiver/", &ok);
    c.description = "8. quiver cross-check: Euler matrix [[1,2],[0,1]] matches the geometric "
                    "matrix; the negative control fails";
    c.pass = ok && checks == 4;
    c.detail = std::to_string(checks) + " checks";
    criteria.push_back(c);
  }
  {
    Criterion c;
    const std::string first = mukai::report_json(mukai::run_verification(opts));
    const std::string second = mukai::report_json(mukai::run_verification(opts));
    c.description = "9. determinism: two runs with the same seed serialize byte-identically";
    c.pass = first == second && !first.empty();
    c.detail = std::to_string(first.size()) + " bytes";
    criteria.push_back(c);
  }

  int failures = 0;
  for (const auto& c : criteria) {
    std::printf("[%s] %s (%s)\n", c.pass ? "PASS" : "FAIL", c.description.c_str(),
                c.detail.c_str());
    if (!c.pass) ++failures;
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
