#include "conehodge/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "conehodge/bott.hpp"

namespace conehodge {

int CatalogSpec::total_dim() const {
  return std::accumulate(factors.begin(), factors.end(), 0);
}

int CatalogSpec::resolved_window() const { return window ? *window : default_window(total_dim()); }

std::string CatalogSpec::selector() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += "P" + std::to_string(factors[i]);
  }
  out += "@";
  for (std::size_t i = 0; i < polarization.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(polarization[i]);
  }
  return out;
}

int default_window(int n) { return std::max(2 * (n + 1), 8); }

namespace {

void validate_spec(const CatalogSpec& spec) {
  if (spec.factors.empty()) throw error("catalog spec: empty factor list");
  if (spec.factors.size() != spec.polarization.size()) {
    throw error("catalog spec: polarization length != factor count");
  }
  for (int n : spec.factors) {
    if (n < 1) throw error("catalog spec: factors must be positive (use P0@d directly for a point)");
  }
  for (int a : spec.polarization) {
    if (a < 1) throw error("catalog spec: polarization must be ample (all a_i >= 1)");
  }
  if (spec.window && *spec.window < 1) throw error("catalog spec: window must be positive");
}

// h^0(P^n, Omega^p(d m)) as a polynomial in m:
// C(dm+n-p, n-p) * C(dm-1, p). Exact for d*m > p; its integer zeros
// cover 1 <= d*m <= p, so it matches the closed form for all m >= 1.
Polynomial h0_polynomial(int n, int p, int d) {
  Polynomial poly = Polynomial::constant(1);
  for (int t = 1; t <= n - p; ++t) {
    poly = poly * Polynomial::linear(d, t);
  }
  for (int t = 0; t <= p - 1; ++t) {
    poly = poly * Polynomial::linear(d, -1 - t);
  }
  Rational scale(1);
  for (int t = 2; t <= n - p; ++t) scale *= t;
  for (int t = 2; t <= p; ++t) scale *= t;
  return poly * Rational(1, 1) * (Rational(1) / scale);
}

// h^n(P^n, Omega^p(d m)) as a polynomial in m:
// C(-dm+p, p) * C(-dm-1, n-p), exact for d*m < p - n.
Polynomial hn_polynomial(int n, int p, int d) {
  Polynomial poly = Polynomial::constant(1);
  for (int t = 1; t <= p; ++t) {
    poly = poly * Polynomial::linear(-d, t);
  }
  for (int t = 0; t <= n - p - 1; ++t) {
    poly = poly * Polynomial::linear(-d, -1 - t);
  }
  Rational scale(1);
  for (int t = 2; t <= p; ++t) scale *= t;
  for (int t = 2; t <= n - p; ++t) scale *= t;
  return poly * (Rational(1) / scale);
}

GradedDimension ring_record(const GradedDimension& sections, int window_hi) {
  GradedDimension ring;
  ring.window_lo = 0;
  ring.window_hi = window_hi;
  for (const auto& [m, v] : sections.values) {
    if (m >= 0 && v != 0) ring.values[m] = v;
  }
  ring.pos_tail = sections.pos_tail;
  ring.neg_tail = Tail::zero();
  return ring;
}

std::vector<std::int64_t> palindromic_betti(const std::vector<int>& factors) {
  const int n = std::accumulate(factors.begin(), factors.end(), 0);
  // Coefficients of prod_i (1 + t^2 + ... + t^(2 n_i)).
  std::vector<std::int64_t> even(n + 1, 0);
  even[0] = 1;
  for (int ni : factors) {
    std::vector<std::int64_t> next(n + 1, 0);
    for (int a = 0; a <= n; ++a) {
      if (even[a] == 0) continue;
      for (int b = 0; b <= ni && a + b <= n; ++b) next[a + b] += even[a];
    }
    even = std::move(next);
  }
  std::vector<std::int64_t> betti(2 * n + 1, 0);
  for (int j = 0; j <= n; ++j) betti[2 * j] = even[j];
  return betti;
}

// Exponent vectors e with 0 <= e_i <= n_i and |e| = degree, ascending
// lexicographic order. This is the basis of H^{degree,degree}.
std::vector<std::vector<int>> monomial_basis(const std::vector<int>& factors, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(factors.size(), 0);
  while (true) {
    int sum = std::accumulate(e.begin(), e.end(), 0);
    if (sum == degree) out.push_back(e);
    int i = static_cast<int>(e.size()) - 1;
    while (i >= 0 && e[i] == factors[i]) {
      e[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::pair<HodgeDuBoisTable, LefschetzOperator> projective_space_table(int n, int d,
                                                                      std::optional<int> window) {
  if (n < 0) throw error("projective_space_table: n must be >= 0");
  if (d <= 0) throw error("projective_space_table: L = O(d) must be ample (d >= 1)");
  const int M = window ? *window : default_window(n);
  if (M < 1) throw error("projective_space_table: window must be positive");

  HodgeDuBoisTable table;
  table.name = "P" + std::to_string(n) + "@" + std::to_string(d);
  table.n = n;
  table.smooth = true;
  table.seminormal = true;
  table.lcdef_x = 0;

  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      GradedDimension g;
      g.window_lo = -M;
      g.window_hi = M;
      for (int m = -M; m <= M; ++m) {
        const std::int64_t v = bott_dimension(n, p, q, static_cast<std::int64_t>(d) * m);
        if (v != 0) g.values[m] = v;
      }
      g.pos_tail = (q == 0) ? Tail::polynomial(h0_polynomial(n, p, d)) : Tail::zero();
      g.neg_tail = (q == n) ? Tail::polynomial(hn_polynomial(n, p, d)) : Tail::zero();
      table.entries[{p, q}] = std::move(g);
    }
  }

  std::vector<std::int64_t> betti(2 * n + 1, 0);
  for (int j = 0; j <= n; ++j) betti[2 * j] = 1;
  table.betti = betti;
  table.coordinate_ring = ring_record(table.entry(0, 0), M);

  LefschetzOperator op;
  for (int p = 0; p <= n - 1; ++p) {
    RationalMatrix block(1, 1);
    block.at(0, 0) = d;
    op.matrices[{p, p}] = std::move(block);
  }
  return {std::move(table), std::move(op)};
}

std::pair<HodgeDuBoisTable, LefschetzOperator> product_table(const CatalogSpec& spec) {
  validate_spec(spec);
  const int r = static_cast<int>(spec.factors.size());
  const int n = spec.total_dim();
  const int M = spec.resolved_window();

  HodgeDuBoisTable table;
  table.name = spec.selector();
  table.n = n;
  table.smooth = true;
  table.seminormal = true;
  table.lcdef_x = 0;

  // Kunneth: dim(p, q, m) = sum over factorwise (p_i, q_i) of
  // prod_i bott(n_i, p_i, q_i, a_i m), assembled as an iterated 2D
  // convolution.
  for (int m = -M; m <= M; ++m) {
    std::vector<std::vector<std::int64_t>> acc(1, std::vector<std::int64_t>(1, 1));
    int np = 0;
    for (int i = 0; i < r; ++i) {
      const int ni = spec.factors[i];
      const std::int64_t twist = static_cast<std::int64_t>(spec.polarization[i]) * m;
      std::vector<std::vector<std::int64_t>> next(np + ni + 1,
                                                  std::vector<std::int64_t>(np + ni + 1, 0));
      for (int p = 0; p <= np; ++p) {
        for (int q = 0; q <= np; ++q) {
          if (acc[p][q] == 0) continue;
          for (int pi = 0; pi <= ni; ++pi) {
            for (int qi = 0; qi <= ni; ++qi) {
              const std::int64_t b = bott_dimension(ni, pi, qi, twist);
              if (b != 0) next[p + pi][q + qi] += acc[p][q] * b;
            }
          }
        }
      }
      acc = std::move(next);
      np += ni;
    }
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        if (acc[p][q] == 0) continue;
        auto& g = table.entries[{p, q}];
        g.values[m] = acc[p][q];
      }
    }
  }

  // Windows and tails. All q = 0 factors contribute to the positive
  // tail, all q_i = n_i to the negative one; everything else is
  // eventually zero on both sides.
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      auto& g = table.entries[{p, q}];
      g.window_lo = -M;
      g.window_hi = M;
      g.pos_tail = Tail::zero();
      g.neg_tail = Tail::zero();
      if (q == 0 || q == n) {
        // Sum over compositions p = sum p_i of the factor polynomials.
        std::vector<std::vector<int>> comps = monomial_basis(spec.factors, p);
        Polynomial sum;
        for (const auto& comp : comps) {
          Polynomial prod = Polynomial::constant(1);
          for (int i = 0; i < r; ++i) {
            prod = prod * (q == 0 ? h0_polynomial(spec.factors[i], comp[i], spec.polarization[i])
                                  : hn_polynomial(spec.factors[i], comp[i], spec.polarization[i]));
          }
          sum = sum + prod;
        }
        if (q == 0) g.pos_tail = Tail::polynomial(sum);
        if (q == n) g.neg_tail = Tail::polynomial(sum);
      }
    }
  }

  table.betti = palindromic_betti(spec.factors);
  table.coordinate_ring = ring_record(table.entry(0, 0), M);

  // Lefschetz blocks: multiplication by sum a_i h_i between monomial
  // bases of consecutive diagonal degrees.
  LefschetzOperator op;
  for (int p = 0; p <= n - 1; ++p) {
    const auto source = monomial_basis(spec.factors, p);
    const auto target = monomial_basis(spec.factors, p + 1);
    std::map<std::vector<int>, int> target_index;
    for (std::size_t i = 0; i < target.size(); ++i) target_index[target[i]] = static_cast<int>(i);
    RationalMatrix block(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
      for (int i = 0; i < r; ++i) {
        if (source[j][i] + 1 > spec.factors[i]) continue;  // h_i^(n_i+1) = 0
        std::vector<int> t = source[j];
        ++t[i];
        block.at(target_index.at(t), j) = spec.polarization[i];
      }
    }
    if (block.rows() > 0 && block.cols() > 0) op.matrices[{p, p}] = std::move(block);
  }
  return {std::move(table), std::move(op)};
}

std::pair<HodgeDuBoisTable, LefschetzOperator> make_catalog_table(const CatalogSpec& spec) {
  if (spec.factors.size() == 1 && spec.factors[0] >= 0) {
    std::optional<int> window = spec.window;
    if (spec.polarization.size() != 1) throw error("catalog spec: polarization length != factor count");
    return projective_space_table(spec.factors[0], spec.polarization[0], window);
  }
  return product_table(spec);
}

int segre_veronese_ambient_dim(const CatalogSpec& spec) {
  BigInt dim = 1;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    dim *= binomial(spec.factors[i] + spec.polarization[i], spec.factors[i]);
  }
  dim -= 1;
  return static_cast<int>(to_int64(dim));
}

ConeDescriptor catalog_descriptor(const CatalogSpec& spec, bool classical) {
  auto [table, op] = make_catalog_table(spec);
  return make_descriptor(std::move(table), std::move(op), classical,
                         segre_veronese_ambient_dim(spec), /*projectively_normal=*/true);
}

bool selector_is_file(const std::string& text) {
  if (text.find('/') != std::string::npos || text.find('\\') != std::string::npos) return true;
  return text.size() >= 5 && text.substr(text.size() - 5) == ".json";
}

CatalogSpec parse_selector(const std::string& selector) {
  for (const auto& [name, spec] : catalog_manifest()) {
    if (name == selector) return spec;
  }
  std::string body = selector;
  std::string pol;
  if (auto at = selector.find('@'); at != std::string::npos) {
    body = selector.substr(0, at);
    pol = selector.substr(at + 1);
  }
  CatalogSpec spec;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != 'P') throw error("bad variety selector '" + selector + "': expected 'P'");
    ++pos;
    std::size_t end = pos;
    while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
    if (end == pos) throw error("bad variety selector '" + selector + "': missing dimension");
    spec.factors.push_back(std::stoi(body.substr(pos, end - pos)));
    pos = end;
    if (pos < body.size()) {
      if (body[pos] != 'x') throw error("bad variety selector '" + selector + "': expected 'x'");
      ++pos;
      if (pos == body.size()) {
        throw error("bad variety selector '" + selector + "': trailing 'x'");
      }
    }
  }
  if (spec.factors.empty()) throw error("bad variety selector '" + selector + "'");
  if (pol.empty()) {
    spec.polarization.assign(spec.factors.size(), 1);
  } else {
    std::size_t start = 0;
    while (start <= pol.size()) {
      std::size_t comma = pol.find(',', start);
      std::string token = pol.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (token.empty()) throw error("bad polarization in selector '" + selector + "'");
      spec.polarization.push_back(std::stoi(token));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (spec.polarization.size() != spec.factors.size()) {
    throw error("selector '" + selector + "': polarization count != factor count");
  }
  if (spec.factors.size() > 1) validate_spec(spec);
  return spec;
}

const std::vector<std::pair<std::string, CatalogSpec>>& catalog_manifest() {
  static const std::vector<std::pair<std::string, CatalogSpec>> manifest = [] {
    std::vector<std::pair<std::string, CatalogSpec>> out;
    auto add = [&](const std::string& name, std::vector<int> factors, std::vector<int> pol) {
      out.push_back({name, CatalogSpec{std::move(factors), std::move(pol), std::nullopt}});
    };
    add("point", {0}, {1});
    add("P1", {1}, {1});
    add("P2", {2}, {1});
    add("P3", {3}, {1});
    add("P4", {4}, {1});
    add("conic", {1}, {2});
    add("twisted-cubic", {1}, {3});
    add("veronese", {2}, {2});
    add("quadric-surface", {1, 1}, {1, 1});
    add("segre-threefold", {1, 2}, {1, 1});
    add("P1xP1xP1", {1, 1, 1}, {1, 1, 1});
    add("P2xP2", {2, 2}, {1, 1});
    return out;
  }();
  return manifest;
}

}  // namespace conehodge
