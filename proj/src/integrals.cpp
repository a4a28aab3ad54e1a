#include "spheroidal/integrals.hpp"

#include <array>
#include <numbers>
#include <utility>

namespace sph {

double PiRational::value() const { return coeff.get_d() * std::numbers::pi; }

std::string to_string(const PiRational& value) { return to_string(value.coeff); }

namespace {

Rational ball_even_moment(int i, int j, int k) {
  // Surface moment 2 pi (1/2)_i (1/2)_j (1/2)_k / (1/2)_{i+j+k+1}, divided by
  // the radial factor 2(i+j+k) + 3.
  const auto h = [](int e) { return pochhammer(kOneHalf, static_cast<unsigned>(e)); };
  return Rational(2) * h(i) * h(j) * h(k) / (h(i + j + k + 1) * Rational(2 * (i + j + k) + 3));
}

Rational spheroid_moment(int a, int b, int c, const Rational& t) {
  if (a % 2 != 0 || b % 2 != 0 || c % 2 != 0) return 0;
  return ball_even_moment(a / 2, b / 2, c / 2) * pow(Rational(1 - t), static_cast<unsigned>((b + c) / 2 + 1));
}

int parity_class(const Monomial& m) { return (m.e[0] & 1) | ((m.e[1] & 1) << 1) | ((m.e[2] & 1) << 2); }

}  // namespace

PiRational monomial_integral(int a, int b, int c, const SpheroidParam& sp) {
  return {spheroid_moment(a, b, c, sp.t())};
}

const Rational& SpheroidIntegrator::moment(int a, int b, int c) {
  const long key = (static_cast<long>(a) << 40) | (static_cast<long>(b) << 20) | static_cast<long>(c);
  auto it = moments_.find(key);
  if (it == moments_.end()) it = moments_.emplace(key, spheroid_moment(a, b, c, sp_.t())).first;
  return it->second;
}

PiRational SpheroidIntegrator::integrate(const TriPoly& p) {
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    if (parity_class(m) != 0) continue;
    sum += c * moment(m.e[0], m.e[1], m.e[2]);
  }
  return {sum};
}

PiRational SpheroidIntegrator::integrate_product(const TriPoly& p, const TriPoly& q) {
  if (p.is_zero() || q.is_zero()) return {Rational(0)};
  // Only pairs whose exponent parities agree in every variable survive.
  std::array<std::vector<std::pair<const Monomial*, const Rational*>>, 8> buckets;
  for (const auto& [m, c] : q.terms()) buckets[static_cast<std::size_t>(parity_class(m))].emplace_back(&m, &c);
  Rational sum(0);
  Rational inner;
  for (const auto& [ma, ca] : p.terms()) {
    const auto& bucket = buckets[static_cast<std::size_t>(parity_class(ma))];
    if (bucket.empty()) continue;
    inner = 0;
    for (const auto& [mb, cb] : bucket)
      inner += *cb * moment(ma.e[0] + mb->e[0], ma.e[1] + mb->e[1], ma.e[2] + mb->e[2]);
    sum += ca * inner;
  }
  return {sum};
}

PiRational SpheroidIntegrator::inner_product(const QPoly& f, const QPoly& g) {
  PiRational total{Rational(0)};
  for (int i = 0; i < 4; ++i) total += integrate_product(f[i], g[i]);
  return total;
}

PiRational inner_product(const QPoly& f, const QPoly& g, const SpheroidParam& sp) {
  SpheroidIntegrator integrator(sp);
  return integrator.inner_product(f, g);
}

// ---------------------------------------------------------------------------

bool GramMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (i != j && entries[i][j] != 0) return false;
  return true;
}

bool GramMatrix::has_positive_diagonal() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i][i] <= 0) return false;
  return true;
}

std::size_t GramMatrix::rank() const { return exact_rank(entries); }

GramMatrix gram(const std::vector<LabeledQPoly>& elements, const SpheroidParam& sp) {
  SpheroidIntegrator integrator(sp);
  GramMatrix g;
  const std::size_t n = elements.size();
  g.entries.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    g.labels.push_back(elements[i].label);
    for (std::size_t j = i; j < n; ++j) {
      Rational v = integrator.inner_product(elements[i].value, elements[j].value).coeff;
      g.entries[j][i] = v;
      g.entries[i][j] = std::move(v);
    }
  }
  return g;
}

std::vector<std::vector<Rational>> cross_gram(const std::vector<QPoly>& rows, const std::vector<QPoly>& cols,
                                              SpheroidIntegrator& integrator) {
  std::vector<std::vector<Rational>> out(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = integrator.inner_product(rows[i], cols[j]).coeff;
  return out;
}

std::size_t exact_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t orthogonal_complement_dimension(const std::vector<QPoly>& basis, const std::vector<QPoly>& constraints,
                                            const SpheroidParam& sp) {
  SpheroidIntegrator integrator(sp);
  return basis.size() - exact_rank(cross_gram(constraints, basis, integrator));
}

PiRational garabedian_norm_closed_form(int n, int m, Parity parity, const SpheroidParam& sp) {
  validate_index({n, m, parity}, 1);
  const auto mu = sp.rational_mu();
  if (!mu || *mu == 0) throw UnsupportedRegime("closed-form norm needs a prolate t with rational sqrt(t)");
  if (m == n + 1) return {Rational(0)};
  const auto h = [](int e) { return pochhammer(kOneHalf, static_cast<unsigned>(e)); };
  Rational kappa = Rational(n + m + 1) * factorial_q(n + m + 1) * factorial_q(n - m + 2) /
                   (pow(Rational(2), static_cast<unsigned>(2 * n + 1)) * h(n + 1) * h(n + 2));
  // (tau^2 - 1)^m P_n^{(m)} P_{n+2}^{(m)}: the positive branch on (1, inf).
  const UniPoly tau2_minus_1(std::vector<Rational>{-1, 0, 1});
  UniPoly integrand = legendre_derivative(n, m) * legendre_derivative(n + 2, m);
  for (int i = 0; i < m; ++i) integrand = integrand * tau2_minus_1;
  const Rational integral = integrand.integrate(Rational(1), Rational(1) / *mu);
  const Rational delta_factor = m == 0 ? Rational(1) : make_rational(1, 2);
  return {delta_factor * kappa * pow(*mu, static_cast<unsigned>(2 * n + 3)) * integral};
}

}  // namespace sph
