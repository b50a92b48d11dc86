#include <mukai/characteristic.hpp>

#include <utility>

namespace mukai {

namespace {

using Series = std::vector<Rational>;  // dense coefficients, index = degree

Series series_mul(const Series& a, const Series& b, int cap) {
  Series out(cap + 1, Rational(0));
  for (int i = 0; i <= cap && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= cap && j < static_cast<int>(b.size()); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// inverse of a series with unit constant term
Series series_inverse(const Series& a, int cap) {
  Series out(cap + 1, Rational(0));
  out[0] = Rational(1) / a[0];
  for (int k = 1; k <= cap; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc += a[j] * out[k - j];
    out[k] = -acc / a[0];
  }
  return out;
}

// log(1 + u) for a series 1 + u
Series series_log(const Series& a, int cap) {
  Series u(a);
  u[0] = 0;
  Series out(cap + 1, Rational(0));
  Series power{Rational(1)};
  for (int m = 1; m <= cap; ++m) {
    power = series_mul(power, u, cap);
    const Rational sign = (m % 2) ? Rational(1) : Rational(-1);
    for (int d = 0; d <= cap; ++d) out[d] += sign * power[d] / m;
  }
  return out;
}

HodgeClass signed_by_degree(const HodgeClass& x, bool use_form) {
  std::vector<Rational> out(x.coeffs());
  const auto& ring = *x.owner();
  for (int i = 0; i < x.dim(); ++i) {
    if (out[i] == 0) continue;
    const Bidegree d = ring.element(i).degree;
    const int exponent = use_form ? d.form : d.coh;
    if (exponent % 2) out[i] = -out[i];
  }
  return HodgeClass(x.owner(), std::move(out));
}

}  // namespace

BundleData bundle_from_roots(int rank, std::vector<HodgeClass> roots) {
  BundleData b;
  b.rank = rank;
  b.chern_roots = std::move(roots);
  return b;
}

BundleData bundle_from_ch(HodgeClass ch) {
  BundleData b;
  const HodgeClass constant = component_of_bidegree(ch, Bidegree{0, 0});
  const Rational r = constant[ch.owner()->unit_index()];
  b.rank = static_cast<int>(numerator(r) / denominator(r));
  b.ch = std::move(ch);
  return b;
}

BundleData line_bundle(const SpacePtr& x, int twist) {
  return bundle_from_roots(1, {Rational(twist) * hyperplane_class(x)});
}

HodgeClass chern_character(const BundleData& bundle, const SpaceModel& x) {
  if (!bundle.chern_roots.empty() || !bundle.ch) {
    if (static_cast<int>(bundle.chern_roots.size()) != bundle.rank) {
      throw ShapeError("inconsistent rank: rank must equal the number of Chern roots");
    }
    HodgeClass out = x.ring->zero();
    for (const auto& root : bundle.chern_roots) {
      if (root.owner() != x.ring) throw SpaceMismatch("Chern root on a different space");
      if (!root.is_homogeneous(Bidegree{1, 1})) {
        throw ShapeError("Chern roots must be homogeneous of bidegree (1,1)");
      }
      out += exp_class(root);
    }
    return out;
  }
  if (bundle.ch->owner() != x.ring) throw SpaceMismatch("character on a different space");
  return *bundle.ch;
}

HodgeClass todd_class(const BundleData& bundle, const SpaceModel& x) {
  if (!bundle.chern_roots.empty() || !bundle.ch) {
    if (static_cast<int>(bundle.chern_roots.size()) != bundle.rank) {
      throw ShapeError("inconsistent rank: rank must equal the number of Chern roots");
    }
    const auto series = todd_series(x.n);
    HodgeClass out = x.ring->unit();
    for (const auto& root : bundle.chern_roots) {
      if (root.owner() != x.ring) throw SpaceMismatch("Chern root on a different space");
      if (!root.is_homogeneous(Bidegree{1, 1})) {
        throw ShapeError("Chern roots must be homogeneous of bidegree (1,1)");
      }
      HodgeClass factor = x.ring->zero();
      HodgeClass power = x.ring->unit();
      for (int k = 0; k <= x.n; ++k) {
        factor += series[k] * power;
        power = power * root;
        if (power.is_zero()) break;
      }
      out = out * factor;
    }
    return out;
  }
  if (bundle.ch->owner() != x.ring) throw SpaceMismatch("character on a different space");
  return todd_from_ch(*bundle.ch);
}

HodgeClass star(const HodgeClass& x) { return signed_by_degree(x, /*use_form=*/false); }

HodgeClass vee(const HodgeClass& x) { return signed_by_degree(x, /*use_form=*/true); }

HodgeClass w_involution(const HodgeClass& x) { return star(x); }

std::vector<Rational> todd_series(int max_degree) {
  // (1 - e^{-x})/x has coefficients (-1)^k / (k+1)!
  Series denom(max_degree + 1, Rational(0));
  for (int k = 0; k <= max_degree; ++k) {
    denom[k] = Rational((k % 2) ? -1 : 1) / factorial(k + 1);
  }
  return series_inverse(denom, max_degree);
}

std::vector<Rational> todd_log_series(int max_degree) {
  return series_log(todd_series(max_degree), max_degree);
}

HodgeClass exp_class(const HodgeClass& x) {
  if (x[x.owner()->unit_index()] != 0) throw ShapeError("exp_class needs a vanishing constant term");
  HodgeClass acc = x.owner()->unit();
  HodgeClass power = x.owner()->unit();
  const int bound = 2 * x.owner()->n() + 1;
  for (int k = 1; k <= bound; ++k) {
    power = power * x;
    power *= Rational(1, k);
    if (power.is_zero()) break;
    acc += power;
  }
  return acc;
}

HodgeClass unit_inverse(const HodgeClass& u) {
  const int unit = u.owner()->unit_index();
  const Rational c = u[unit];
  if (c == 0) throw ShapeError("unit_inverse needs a nonzero constant term");
  HodgeClass w = u.owner()->unit() - (Rational(1) / c) * u;  // nilpotent part
  HodgeClass acc = u.owner()->unit();
  HodgeClass power = u.owner()->unit();
  const int bound = 2 * u.owner()->n() + 1;
  for (int k = 1; k <= bound; ++k) {
    power = power * w;
    if (power.is_zero()) break;
    acc += power;
  }
  return (Rational(1) / c) * acc;
}

HodgeClass todd_from_ch(const HodgeClass& ch) {
  const auto& ring = ch.owner();
  const int n = ring->n();
  const auto t = todd_log_series(n);
  HodgeClass arg = ring->zero();
  for (int k = 1; k <= n; ++k) {
    if (t[k] == 0) continue;
    HodgeClass pk = factorial(k) * component_of_bidegree(ch, Bidegree{k, k});
    arg += t[k] * pk;
  }
  return exp_class(arg);
}

}  // namespace mukai
