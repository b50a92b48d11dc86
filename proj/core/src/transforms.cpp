#include <mukai/transforms.hpp>

#include <utility>

namespace mukai {

namespace {

int source_dim(const Kernel& k) { return k.source->ring->dim(); }
int target_dim(const Kernel& k) { return k.target->ring->dim(); }

const Rational& coeff(const Kernel& k, int a, int b) {
  return k.ch.value[a * k.target->ring->dim() + b];
}

}  // namespace

Kernel make_kernel(SpacePtr source, SpacePtr target, SpacePtr domain, HodgeClass ch,
                   std::string label) {
  if (!domain->is_product() || domain->factors[0] != source || domain->factors[1] != target) {
    throw SpaceMismatch("kernel domain must be product(source, target)");
  }
  if (ch.owner() != domain->ring) throw SpaceMismatch("kernel class lives off its domain");
  const auto& ring = *domain->ring;
  for (int i = 0; i < ch.dim(); ++i) {
    if (ch[i] != 0 && hh_degree(ring.element(i).degree) != 0) {
      throw ShapeError("kernel class must have total Hochschild degree zero");
    }
  }
  HHClass hh{domain, std::move(ch)};
  return Kernel{std::move(source), std::move(target), std::move(domain), std::move(hh),
                std::move(label)};
}

Kernel zero_kernel(const SpacePtr& x, const SpacePtr& y) {
  SpacePtr domain = product(x, y);
  return make_kernel(x, y, domain, domain->ring->zero(), "0");
}

Kernel rank_one_kernel(const SpacePtr& x, const SpacePtr& y, const HodgeClass& left,
                       const HodgeClass& right, std::string label) {
  SpacePtr domain = product(x, y);
  if (label.empty()) label = "rank_one";
  return make_kernel(x, y, domain, outer_product(left, right, domain->ring), std::move(label));
}

HHClass convolve(const Kernel& k, const HHClass& x) {
  if (x.space != k.source) throw SpaceMismatch("input does not live on the kernel source");
  const int da = source_dim(k);
  const int db = target_dim(k);
  const HodgeClass weighted = x.value * k.source->todd;
  std::vector<Rational> out(db, Rational(0));
  for (int a = 0; a < da; ++a) {
    const Rational w = integral_against_basis(weighted, a);
    if (w == 0) continue;
    for (int b = 0; b < db; ++b) {
      const Rational& m = coeff(k, a, b);
      if (m == 0) continue;
      out[b] += w * m;
    }
  }
  return HHClass{k.target, HodgeClass(k.target->ring, std::move(out))};
}

HHClass mukai_convolve(const Kernel& k, const HHClass& x) {
  if (x.space != k.source) throw SpaceMismatch("input does not live on the kernel source");
  const int da = source_dim(k);
  const int db = target_dim(k);
  const HHClass wx{k.source, w_involution(x.value)};
  std::vector<Rational> out(db, Rational(0));
  for (int a = 0; a < da; ++a) {
    const Rational w = mukai_pairing(wx, basis_hh(k.source, a));
    if (w == 0) continue;
    for (int b = 0; b < db; ++b) {
      const Rational& m = coeff(k, a, b);
      if (m == 0) continue;
      out[b] += w * m;
    }
  }
  return HHClass{k.target, HodgeClass(k.target->ring, std::move(out))};
}

Kernel compose(const Kernel& f, const Kernel& g) {
  if (f.target != g.source) throw SpaceMismatch("middle spaces of the composition differ");
  const int dx = source_dim(f);
  const int dy = target_dim(f);
  const int dz = target_dim(g);
  const RationalMatrix middle = shklyarov_gram(f.target);

  SpacePtr domain = product(f.source, g.target);
  std::vector<Rational> out(dx * dz, Rational(0));
  for (int a = 0; a < dx; ++a) {
    for (int b = 0; b < dy; ++b) {
      const Rational& m = coeff(f, a, b);
      if (m == 0) continue;
      for (int c = 0; c < dy; ++c) {
        if (middle[b][c] == 0) continue;
        const Rational scale = m * middle[b][c];
        for (int d = 0; d < dz; ++d) {
          const Rational& nn = coeff(g, c, d);
          if (nn == 0) continue;
          out[a * dz + d] += scale * nn;
        }
      }
    }
  }
  return make_kernel(f.source, g.target, domain, HodgeClass(domain->ring, std::move(out)),
                     g.label + " \xE2\x88\x98 " + f.label);
}

Kernel compose_via_pushforward(const Kernel& f, const Kernel& g) {
  if (f.target != g.source) throw SpaceMismatch("middle spaces of the composition differ");
  SpacePtr triple = product(f.domain, g.target);  // (X x Y) x Z
  const int leaves_x = static_cast<int>(flatten_factors(f.source->ring).size());
  const int leaves_y = static_cast<int>(flatten_factors(f.target->ring).size());
  const int leaves_z = static_cast<int>(flatten_factors(g.target->ring).size());

  HodgeClass pulled_f = pullback_proj(f.ch.value, 0, triple);
  HodgeClass pulled_g = embed_at_leaf_offset(g.ch.value, triple->ring, leaves_x);
  HodgeClass middle_todd = embed_at_leaf_offset(f.target->todd, triple->ring, leaves_x);

  HodgeClass total = pulled_f * pulled_g * middle_todd;
  SpacePtr domain = product(f.source, g.target);
  HodgeClass pushed = integrate_out_leaves(
      total,
      {{0, leaves_x}, {leaves_x + leaves_y, leaves_x + leaves_y + leaves_z}},
      domain->ring);
  return make_kernel(f.source, g.target, domain, std::move(pushed),
                     g.label + " \xE2\x88\x98 " + f.label + " (pushforward)");
}

Kernel identity_kernel(const SpacePtr& x) {
  SpacePtr domain = product(x, x);
  HodgeClass ch = diagonal_pushforward(unit_inverse(x->todd), domain->ring);
  return make_kernel(x, x, domain, std::move(ch), "id(" + x->label + ")");
}

Kernel adjoint(const Kernel& f) {
  const int dx = source_dim(f);
  const int dy = target_dim(f);
  const auto& x_ring = *f.source->ring;
  const auto& y_ring = *f.target->ring;

  SpacePtr domain = product(f.target, f.source);
  std::vector<Rational> out(dy * dx, Rational(0));
  for (int a = 0; a < dx; ++a) {
    // (-1)^i W(alpha) with alpha = e_a collapses to (-1)^form(a) e_a.
    HodgeClass twisted = x_ring.basis_class(a) * f.source->serre_ch;
    if (twisted.is_zero()) continue;
    const bool form_sign = x_ring.element(a).degree.form % 2 != 0;
    for (int b = 0; b < dy; ++b) {
      const Rational& m = coeff(f, a, b);
      if (m == 0) continue;
      const bool coh_sign = y_ring.element(b).degree.coh % 2 != 0;
      const Rational scale = (form_sign != coh_sign) ? -m : m;
      for (int k = 0; k < dx; ++k) {
        if (twisted[k] == 0) continue;
        out[b * dx + k] += scale * twisted[k];
      }
    }
  }
  return make_kernel(f.target, f.source, domain, HodgeClass(domain->ring, std::move(out)),
                     f.label + "!");
}

Kernel external_product(const Kernel& f, const Kernel& g) {
  const int dx = source_dim(f), dy = target_dim(f);
  const int dxp = source_dim(g), dyp = target_dim(g);
  SpacePtr src = product(f.source, g.source);
  SpacePtr tgt = product(f.target, g.target);
  SpacePtr domain = product(src, tgt);

  std::vector<Rational> out(domain->ring->dim(), Rational(0));
  const int tgt_dim = dy * dyp;
  for (int a = 0; a < dx; ++a) {
    for (int b = 0; b < dy; ++b) {
      const Rational& m = coeff(f, a, b);
      if (m == 0) continue;
      const bool b_odd = is_odd_degree(f.target->ring->element(b).degree);
      for (int c = 0; c < dxp; ++c) {
        const bool flip = b_odd && is_odd_degree(g.source->ring->element(c).degree);
        for (int d = 0; d < dyp; ++d) {
          const Rational& nn = coeff(g, c, d);
          if (nn == 0) continue;
          Rational v = m * nn;
          if (flip) v = -v;
          out[(a * dxp + c) * tgt_dim + (b * dyp + d)] += v;
        }
      }
    }
  }
  return make_kernel(src, tgt, domain, HodgeClass(domain->ring, std::move(out)),
                     f.label + " \xE2\x8A\xA0 " + g.label);
}

Kernel retarget(const Kernel& k, const SpacePtr& new_source, const SpacePtr& new_target) {
  SpacePtr domain = product(new_source, new_target);
  HodgeClass ch = reinterpret_on(k.ch.value, domain->ring);
  return make_kernel(new_source, new_target, domain, std::move(ch), k.label);
}

RationalMatrix transform_matrix(const Kernel& k) {
  const int dx = source_dim(k), dy = target_dim(k);
  RationalMatrix out(dy, std::vector<Rational>(dx, Rational(0)));
  for (int a = 0; a < dx; ++a) {
    HHClass image = convolve(k, basis_hh(k.source, a));
    for (int b = 0; b < dy; ++b) out[b][a] = image.value[b];
  }
  return out;
}

RationalMatrix kernel_matrix(const Kernel& k) {
  const int dx = source_dim(k), dy = target_dim(k);
  RationalMatrix out(dx, std::vector<Rational>(dy, Rational(0)));
  for (int a = 0; a < dx; ++a) {
    for (int b = 0; b < dy; ++b) out[a][b] = coeff(k, a, b);
  }
  return out;
}

bool same_kernel_coefficients(const Kernel& a, const Kernel& b) {
  if (flatten_factors(a.domain->ring) != flatten_factors(b.domain->ring)) return false;
  return a.ch.value.coeffs() == b.ch.value.coeffs();
}

Rational euler_characteristic_oracle(const SpacePtr& leaf, int twist) {
  const int n = leaf->n;
  const int dim = leaf->ring->dim();
  if (dim == n + 1) {
    // P^n: chi = h^0 + (-1)^n h^n with clamped binomial dimensions.
    const Rational h0 = twist >= 0 ? binomial(n + twist, n) : Rational(0);
    const Rational hn = twist <= -n - 1 ? binomial(-twist - 1, n) : Rational(0);
    return (n % 2) ? Rational(h0 - hn) : Rational(h0 + hn);
  }
  if (n == 1 && dim % 2 == 0) {
    const int g = (dim - 2) / 2;
    return Rational(twist + 1 - g);  // degree-twist line bundle on a genus-g curve
  }
  throw OutOfCatalog("no Euler-characteristic formula for " + leaf->label);
}

namespace {

// External line bundle character following the factor tree; consumes one
// twist per nontrivial leaf, in flattened order.
HodgeClass external_line_bundle_ch(const SpacePtr& space, const std::vector<int>& twists,
                                   std::size_t& next) {
  if (space->is_product()) {
    HodgeClass left = external_line_bundle_ch(space->factors[0], twists, next);
    HodgeClass right = external_line_bundle_ch(space->factors[1], twists, next);
    return outer_product(left, right, space->ring);
  }
  if (space->ring->dim() == 1) return space->ring->unit();
  if (next >= twists.size()) throw OutOfCatalog("too few twists for the leaf factors");
  const int d = twists[next++];
  return exp_class(Rational(d) * hyperplane_class(space));
}

}  // namespace

GrrReport grr_projection_check(const SpacePtr& total, int onto, const std::vector<int>& twists) {
  const auto leaves = leaf_spaces(total);
  if (twists.size() != leaves.size()) {
    throw OutOfCatalog("need exactly one twist per leaf factor");
  }
  std::size_t cursor = 0;
  const HodgeClass alpha_ch = external_line_bundle_ch(total, twists, cursor);

  GrrReport report;
  if (onto < 0) {
    Rational lhs = integrate(alpha_ch * total->todd);
    Rational rhs(1);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      rhs *= euler_characteristic_oracle(leaves[i], twists[i]);
    }
    report.ok = lhs == rhs;
    report.lhs = fraction_string(lhs);
    report.rhs = fraction_string(rhs);
    report.description = "projection " + total->label + " -> pt";
    return report;
  }

  if (!total->is_product() || onto > 1) throw OutOfCatalog("kept factor out of range");
  const SpacePtr kept = total->factors[onto];
  const SpacePtr dropped = total->factors[1 - onto];
  if (kept->is_product() || dropped->is_product()) {
    throw OutOfCatalog("relative check expects leaf factors");
  }
  const int kept_twist = twists[onto];
  const int dropped_twist = twists[1 - onto];

  HodgeClass lhs = pushforward_proj(alpha_ch * total->todd, onto, total);
  HodgeClass rhs = euler_characteristic_oracle(dropped, dropped_twist) *
                   exp_class(Rational(kept_twist) * hyperplane_class(kept)) * kept->todd;
  report.ok = lhs == rhs;
  report.lhs = format_class(lhs);
  report.rhs = format_class(rhs);
  report.description =
      "projection " + total->label + " -> " + kept->label + " (factor " + std::to_string(onto) + ")";
  return report;
}

}  // namespace mukai
