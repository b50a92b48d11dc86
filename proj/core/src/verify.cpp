#include <mukai/verify.hpp>

#include <mukai/catalog.hpp>
#include <mukai/quiver.hpp>
#include <mukai/serialize.hpp>
#include <mukai/version.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

namespace mukai {

namespace {

using nlohmann::json;

struct Runner {
  const VerifyOptions& opts;
  Corpus corpus;
  std::vector<CheckRecord> records;

  explicit Runner(const VerifyOptions& o) : opts(o), corpus(make_corpus(o.corrupt_todd)) {}

  bool enabled(const std::string& suite) const { return opts.suite == "all" || opts.suite == suite; }

  void run(const std::string& name, const std::string& statement,
           const std::function<void(CheckRecord&)>& body) {
    CheckRecord rec;
    rec.name = name;
    rec.statement = statement;
    rec.pass = true;
    const auto start = std::chrono::steady_clock::now();
    body(rec);
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
    records.push_back(std::move(rec));
  }
};

void fail_with(CheckRecord& rec, json witness) {
  if (rec.pass) rec.witness = witness.dump();
  rec.pass = false;
}

void expect_rational(CheckRecord& rec, const Rational& lhs, const Rational& rhs, json inputs) {
  ++rec.instances;
  if (lhs == rhs) return;
  inputs["lhs"] = fraction_string(lhs);
  inputs["rhs"] = fraction_string(rhs);
  fail_with(rec, std::move(inputs));
}

void expect_class(CheckRecord& rec, const HodgeClass& lhs, const HodgeClass& rhs, json inputs) {
  ++rec.instances;
  if (lhs.coeffs() == rhs.coeffs()) return;
  inputs["lhs"] = format_class(lhs);
  inputs["rhs"] = format_class(rhs);
  fail_with(rec, std::move(inputs));
}

// ---------------------------------------------------------------- theorem1

void run_theorem1(Runner& r) {
  for (const auto& [label, space] : r.corpus.named()) {
    r.run("theorem1/pairing_identity/" + label,
          "shk(a, b) == mukai(vee(b), a) for all basis pairs and seeded random pairs",
          [&, label = label, space = space](CheckRecord& rec) {
            const int d = space->ring->dim();
            for (int i = 0; i < d; ++i) {
              for (int j = 0; j < d; ++j) {
                HHClass a = basis_hh(space, i);
                HHClass b = basis_hh(space, j);
                HHClass vb{space, vee(b.value)};
                expect_rational(rec, shklyarov_pairing(a, b), mukai_pairing(vb, a),
                                {{"space", label},
                                 {"a", space->ring->element(i).name},
                                 {"b", space->ring->element(j).name}});
              }
            }
            std::mt19937_64 rng(mix_seed(r.opts.seed, "theorem1/" + label));
            for (int k = 0; k < 25; ++k) {
              HHClass a{space, random_class(space->ring, rng)};
              HHClass b{space, random_class(space->ring, rng)};
              HHClass vb{space, vee(b.value)};
              expect_rational(rec, shklyarov_pairing(a, b), mukai_pairing(vb, a),
                              {{"space", label},
                               {"a", format_class(a.value)},
                               {"b", format_class(b.value)}});
            }
          });

    for (const char* which : {"mukai", "shk"}) {
      r.run(std::string("theorem1/nondegenerate/") + which + "/" + label,
            "the pairing Gram matrix over the full basis is invertible",
            [&, which, space = space, label = label](CheckRecord& rec) {
              const RationalMatrix gram =
                  std::string(which) == "mukai" ? mukai_gram(space) : shklyarov_gram(space);
              ++rec.instances;
              try {
                matrix_inverse(gram);
              } catch (const DegenerateRing&) {
                fail_with(rec, {{"space", label}, {"gram", format_matrix(gram)}});
              }
            });
    }
  }
}

// ------------------------------------------------------------------- prop2

void run_prop2(Runner& r) {
  for (const auto& [label, space] : r.corpus.named()) {
    r.run("prop2/identity_kernel/" + label,
          "convolve(identity_kernel, x) == x on the basis; the kernel matrix is the "
          "inverse Shklyarov Gram matrix (dual-basis contract)",
          [&, label = label, space = space](CheckRecord& rec) {
            const Kernel id = identity_kernel(space);
            for (int i = 0; i < space->ring->dim(); ++i) {
              HHClass x = basis_hh(space, i);
              expect_class(rec, convolve(id, x).value, x.value,
                           {{"space", label}, {"x", space->ring->element(i).name}});
            }
            const RationalMatrix product = matrix_product(kernel_matrix(id), shklyarov_gram(space));
            ++rec.instances;
            if (!is_identity(product)) {
              fail_with(rec, {{"space", label}, {"kernel * gram", format_matrix(product)}});
            }
          });
  }
}

// ------------------------------------------------------------------- prop1

void run_prop1(Runner& r) {
  struct Chain {
    std::string label;
    SpacePtr x, y, z;
  };
  const std::vector<Chain> chains = {{"P^1->P^1->P^1", r.corpus.p1, r.corpus.p1, r.corpus.p1},
                                     {"P^1->E->P^1", r.corpus.p1, r.corpus.g1, r.corpus.p1}};

  for (const auto& chain : chains) {
    const auto first = kernel_catalog(chain.x, chain.y, r.opts.seed);
    const auto second = kernel_catalog(chain.y, chain.z, r.opts.seed);

    r.run("prop1/functoriality/" + chain.label,
          "convolve(compose(F, G), x) == convolve(G, convolve(F, x)) for all catalog "
          "kernel pairs, exhaustively over basis inputs",
          [&](CheckRecord& rec) {
            for (const auto& f : first) {
              for (const auto& g : second) {
                const Kernel composite = compose(f, g);
                for (int i = 0; i < chain.x->ring->dim(); ++i) {
                  HHClass x = basis_hh(chain.x, i);
                  expect_class(rec, convolve(composite, x).value, convolve(g, convolve(f, x)).value,
                               {{"chain", chain.label},
                                {"F", f.label},
                                {"G", g.label},
                                {"x", chain.x->ring->element(i).name}});
                }
              }
            }
          });

    r.run("prop1/compose_routes/" + chain.label,
          "Kunneth-coordinate composition equals the pullback-cup-pushforward composition",
          [&](CheckRecord& rec) {
            for (const auto& f : first) {
              for (const auto& g : second) {
                const Kernel a = compose(f, g);
                const Kernel b = compose_via_pushforward(f, g);
                ++rec.instances;
                if (!same_kernel_coefficients(a, b)) {
                  fail_with(rec, {{"chain", chain.label},
                                  {"F", f.label},
                                  {"G", g.label},
                                  {"kunneth", format_class(a.ch.value)},
                                  {"pushforward", format_class(b.ch.value)}});
                }
              }
            }
          });
  }

  r.run("prop1/associativity/P^1-chain",
        "compose(compose(F, G), H) == compose(F, compose(G, H)) coefficientwise",
        [&](CheckRecord& rec) {
          auto cat = kernel_catalog(r.corpus.p1, r.corpus.p1, r.opts.seed);
          if (cat.size() > 7) cat.resize(7);
          for (const auto& f : cat) {
            for (const auto& g : cat) {
              for (const auto& h : cat) {
                const Kernel left = compose(compose(f, g), h);
                const Kernel right = compose(f, compose(g, h));
                ++rec.instances;
                if (!same_kernel_coefficients(left, right)) {
                  fail_with(rec, {{"F", f.label}, {"G", g.label}, {"H", h.label}});
                }
              }
            }
          }
        });
}

// ------------------------------------------------------------------- prop3

std::vector<std::pair<SpacePtr, SpacePtr>> kernel_pair_set(const Corpus& c) {
  return {{c.p1, c.p1}, {c.p1, c.g1}, {c.g1, c.p1}, {c.g1, c.g1}, {c.p2, c.p1}, {c.p1, c.p1xp1}};
}

void run_prop3(Runner& r) {
  for (const auto& [x, y] : kernel_pair_set(r.corpus)) {
    const std::string pair_label = x->label + "->" + y->label;
    r.run("prop3/adjointness/" + pair_label,
          "mukai(convolve(F, x), y) == mukai(x, convolve(adjoint(F), y)) for all basis "
          "pairs and catalog kernels",
          [&, x = x, y = y](CheckRecord& rec) {
            for (const auto& f : kernel_catalog(x, y, r.opts.seed)) {
              const Kernel dual = adjoint(f);
              for (int i = 0; i < x->ring->dim(); ++i) {
                HHClass xi = basis_hh(x, i);
                const HHClass image = convolve(f, xi);
                for (int j = 0; j < y->ring->dim(); ++j) {
                  HHClass yj = basis_hh(y, j);
                  expect_rational(rec, mukai_pairing(image, yj),
                                  mukai_pairing(xi, convolve(dual, yj)),
                                  {{"kernel", f.label},
                                   {"pair", pair_label},
                                   {"x", x->ring->element(i).name},
                                   {"y", y->ring->element(j).name}});
                }
              }
            }
          });
  }

  for (const auto& [label, space] : r.corpus.named()) {
    r.run("prop3/serre_twist/" + label,
          "serre_ch == (-1)^n canonical_ch and todd * canonical_ch == star(todd)",
          [&, label = label, space = space](CheckRecord& rec) {
            const Rational sign = space->n % 2 ? Rational(-1) : Rational(1);
            expect_class(rec, space->serre_ch, sign * space->canonical_ch,
                         {{"space", label}, {"identity", "serre == (-1)^n canonical"}});
            expect_class(rec, space->todd * space->canonical_ch, star(space->todd),
                         {{"space", label}, {"identity", "td * ch(Omega^n) == star(td)"}});
          });
  }
}

// ---------------------------------------------------------------- theorem2

void run_theorem2(Runner& r) {
  for (const auto& [x, y] : kernel_pair_set(r.corpus)) {
    const std::string pair_label = x->label + "->" + y->label;
    r.run("theorem2/convolve_equals_mukai/" + pair_label,
          "the convolution transform and the Mukai-pairing transform agree as matrices "
          "for every catalog kernel",
          [&, x = x, y = y](CheckRecord& rec) {
            for (const auto& f : kernel_catalog(x, y, r.opts.seed)) {
              for (int i = 0; i < x->ring->dim(); ++i) {
                HHClass xi = basis_hh(x, i);
                expect_class(rec, convolve(f, xi).value, mukai_convolve(f, xi).value,
                             {{"kernel", f.label},
                              {"pair", pair_label},
                              {"x", x->ring->element(i).name}});
              }
            }
          });
  }

  struct Combo {
    std::string label;
    SpacePtr x, y, xp, yp;
  };
  const std::vector<Combo> combos = {
      {"(P^1->P^1)x(E->E)", r.corpus.p1, r.corpus.p1, r.corpus.g1, r.corpus.g1},
      {"(P^1->E)x(E->P^1)", r.corpus.p1, r.corpus.g1, r.corpus.g1, r.corpus.p1}};
  for (const auto& combo : combos) {
    r.run("theorem2/external_factorization/" + combo.label,
          "convolve(F boxtimes G, a x b) == convolve(F, a) x convolve(G, b)",
          [&](CheckRecord& rec) {
            auto first = kernel_catalog(combo.x, combo.y, r.opts.seed);
            auto second = kernel_catalog(combo.xp, combo.yp, r.opts.seed);
            if (first.size() > 6) first.resize(6);
            if (second.size() > 6) second.resize(6);
            for (const auto& f : first) {
              for (const auto& g : second) {
                const Kernel external = external_product(f, g);
                for (int i = 0; i < combo.x->ring->dim(); ++i) {
                  HHClass a = basis_hh(combo.x, i);
                  for (int j = 0; j < combo.xp->ring->dim(); ++j) {
                    HHClass b = basis_hh(combo.xp, j);
                    const HHClass lhs =
                        convolve(external, kunneth(a, b, external.source));
                    const HHClass rhs =
                        kunneth(convolve(f, a), convolve(g, b), external.target);
                    expect_class(rec, lhs.value, rhs.value,
                                 {{"combo", combo.label},
                                  {"F", f.label},
                                  {"G", g.label},
                                  {"a", combo.x->ring->element(i).name},
                                  {"b", combo.xp->ring->element(j).name}});
                  }
                }
              }
            }
          });
  }

  struct PointCase {
    std::string label;
    SpacePtr x, y;
  };
  const std::vector<PointCase> point_cases = {{"P^1->P^1", r.corpus.p1, r.corpus.p1},
                                              {"P^1->E", r.corpus.p1, r.corpus.g1}};
  for (const auto& pc : point_cases) {
    r.run("theorem2/point_kernel_factorization/" + pc.label,
          "a kernel factors through its point-to-product form: composing "
          "(id boxtimes F_pt) with (diagonal boxtimes id) returns F",
          [&](CheckRecord& rec) {
            const SpacePtr pt = point();
            auto catalog = kernel_catalog(pc.x, pc.y, r.opts.seed);
            if (catalog.size() > 4) catalog.resize(4);
            for (const auto& f : catalog) {
              // F as a kernel pt -> X x Y
              SpacePtr pt_domain = product(pt, f.domain);
              Kernel f_pt = make_kernel(pt, f.domain, pt_domain,
                                        reinterpret_on(f.ch.value, pt_domain->ring), "F_pt");
              // the diagonal class as a kernel X x X -> pt
              const Kernel id_x = identity_kernel(pc.x);
              SpacePtr diag_domain = product(id_x.domain, pt);
              Kernel diag = make_kernel(id_x.domain, pt, diag_domain,
                                        reinterpret_on(id_x.ch.value, diag_domain->ring), "diag");

              const Kernel theta = external_product(id_x, f_pt);
              const Kernel lambda = external_product(diag, identity_kernel(pc.y));
              const Kernel glued = compose(retarget(theta, pc.x, lambda.source), lambda);
              const Kernel back = retarget(glued, pc.x, pc.y);
              ++rec.instances;
              if (!same_kernel_coefficients(back, f)) {
                fail_with(rec, {{"kernel", f.label},
                                {"reconstructed", format_class(back.ch.value)},
                                {"original", format_class(f.ch.value)}});
              }
            }
          });
  }
}

// ---------------------------------------------------------------- theorem3

void run_theorem3(Runner& r) {
  r.run("theorem3/chi/P^1", "pushforward to the point matches the cohomology catalog; "
                            "chi(O(d)) == d + 1 on the line for d in [-3, 3]",
        [&](CheckRecord& rec) {
          for (int d = -3; d <= 3; ++d) {
            const GrrReport g = grr_projection_check(r.corpus.p1, -1, {d});
            ++rec.instances;
            if (!g.ok) fail_with(rec, {{"case", g.description}, {"lhs", g.lhs}, {"rhs", g.rhs}});
            expect_rational(rec, euler_characteristic_oracle(r.corpus.p1, d), Rational(d + 1),
                            {{"d", d}});
          }
        });

  r.run("theorem3/chi/P^2", "pushforward to the point matches the cohomology catalog; "
                            "chi(O(d)) == (d+1)(d+2)/2 on the plane for d in [-3, 3]",
        [&](CheckRecord& rec) {
          for (int d = -3; d <= 3; ++d) {
            const GrrReport g = grr_projection_check(r.corpus.p2, -1, {d});
            ++rec.instances;
            if (!g.ok) fail_with(rec, {{"case", g.description}, {"lhs", g.lhs}, {"rhs", g.rhs}});
            expect_rational(rec, euler_characteristic_oracle(r.corpus.p2, d),
                            Rational((d + 1) * (d + 2), 2), {{"d", d}});
          }
        });

  r.run("theorem3/chi/curves",
        "pushforward to the point matches the curve Riemann-Roch catalog, genus <= 3",
        [&](CheckRecord& rec) {
          for (const SpacePtr& c : {r.corpus.g0, r.corpus.g1, r.corpus.g2, r.corpus.g3}) {
            for (int d = -2; d <= 2; ++d) {
              const GrrReport g = grr_projection_check(c, -1, {d});
              ++rec.instances;
              if (!g.ok) fail_with(rec, {{"case", g.description}, {"lhs", g.lhs}, {"rhs", g.rhs}});
            }
          }
        });

  r.run("theorem3/relative/P^1xP^1",
        "pushforward along either projection of the quadric matches "
        "ch(pushforward) * td for O(a) x O(b), a, b in [-2, 2]",
        [&](CheckRecord& rec) {
          for (int onto = 0; onto <= 1; ++onto) {
            for (int a = -2; a <= 2; ++a) {
              for (int b = -2; b <= 2; ++b) {
                const GrrReport g = grr_projection_check(r.corpus.p1xp1, onto, {a, b});
                ++rec.instances;
                if (!g.ok) {
                  fail_with(rec, {{"case", g.description},
                                  {"a", a},
                                  {"b", b},
                                  {"lhs", g.lhs},
                                  {"rhs", g.rhs}});
                }
              }
            }
          }
        });
}

// ------------------------------------------------------------------ quiver

void run_quiver(Runner& r) {
  r.run("quiver/euler_matrix", "the Kronecker path-count matrix is [[1,2],[0,1]]",
        [&](CheckRecord& rec) {
          const auto e = euler_matrix(kronecker_algebra());
          ++rec.instances;
          if (e != std::vector<std::vector<long>>{{1, 2}, {0, 1}}) {
            fail_with(rec, {{"euler", json{{e[0][0], e[0][1]}, {e[1][0], e[1][1]}}}});
          }
        });

  r.run("quiver/hh0", "HH_0 of the Kronecker algebra is spanned by the two idempotent classes",
        [&](CheckRecord& rec) {
          const HH0Data data = hh0_classes(kronecker_algebra());
          ++rec.instances;
          if (data.dimension != 2 || !data.arrows_in_commutator_span ||
              !data.idempotents_span_quotient) {
            fail_with(rec, {{"dimension", data.dimension},
                            {"arrows_in_span", data.arrows_in_commutator_span},
                            {"idempotents_span", data.idempotents_span_quotient}});
          }
        });

  r.run("quiver/cross_check",
        "dim e_i A e_j equals integral( vee(ch O(i)) ch O(j) td ) on the line",
        [&](CheckRecord& rec) {
          const CrossCheckReport report = geometric_cross_check(r.opts.corrupt_todd);
          ++rec.instances;
          if (!report.ok) {
            fail_with(rec, {{"algebra", format_matrix(RationalMatrix{
                                {Rational(report.algebra_matrix[0][0]),
                                 Rational(report.algebra_matrix[0][1])},
                                {Rational(report.algebra_matrix[1][0]),
                                 Rational(report.algebra_matrix[1][1])}})},
                            {"geometric", format_matrix(report.geometric_matrix)}});
          }
        });

  r.run("quiver/negative_control",
        "dropping the curvature term of td must break the cross-check",
        [&](CheckRecord& rec) {
          ++rec.instances;
          if (geometric_cross_check(true).ok) {
            fail_with(rec, {{"note", "corrupted td still matched the path-count matrix"}});
          }
        });
}

}  // namespace

int VerificationReport::passed() const {
  int count = 0;
  for (const auto& c : checks) count += c.pass ? 1 : 0;
  return count;
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> suites = {"theorem1", "prop1",    "prop2",  "prop3",
                                                  "theorem2", "theorem3", "quiver", "all"};
  return suites;
}

bool is_valid_suite(const std::string& name) {
  const auto& suites = verification_suites();
  return std::find(suites.begin(), suites.end(), name) != suites.end();
}

VerificationReport run_verification(const VerifyOptions& opts) {
  if (!is_valid_suite(opts.suite)) throw ParseError("unknown suite: " + opts.suite);
  Runner runner(opts);
  if (runner.enabled("theorem1")) run_theorem1(runner);
  if (runner.enabled("prop1")) run_prop1(runner);
  if (runner.enabled("prop2")) run_prop2(runner);
  if (runner.enabled("prop3")) run_prop3(runner);
  if (runner.enabled("theorem2")) run_theorem2(runner);
  if (runner.enabled("theorem3")) run_theorem3(runner);
  if (runner.enabled("quiver")) run_quiver(runner);

  VerificationReport report;
  report.engine_version = std::string(kEngineVersion);
  report.seed = opts.seed;
  report.suite = opts.suite;
  report.checks = std::move(runner.records);
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return report;
}

std::string report_json(const VerificationReport& report) {
  json out;
  out["schema"] = "mukai.verify.report/v1";
  out["engine"] = {{"name", std::string(kEngineName)}, {"version", report.engine_version}};
  out["seed"] = report.seed;
  out["suite"] = report.suite;
  out["summary"] = {{"total", report.checks.size()},
                    {"passed", report.passed()},
                    {"failed", report.failed()}};
  json checks = json::array();
  for (const auto& c : report.checks) {
    json rec;
    rec["name"] = c.name;
    rec["statement"] = c.statement;
    rec["status"] = c.pass ? "pass" : "fail";
    rec["instances"] = c.instances;
    rec["witness"] = c.witness.empty() ? json() : json::parse(c.witness);
    checks.push_back(std::move(rec));
  }
  out["checks"] = std::move(checks);
  return out.dump(2) + "\n";
}

}  // namespace mukai
