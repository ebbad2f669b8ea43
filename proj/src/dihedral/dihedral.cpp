#include "fzddn/dihedral/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>

#include "fzddn/core/error.hpp"
#include "fzddn/core/tensor.hpp"

namespace fzddn {
namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

void require_same(const DihedralElement& a, const DihedralElement& b) {
  if (a.n != b.n) throw Error(ErrorKind::invalid_context, "dihedral elements of different order");
}

}  // namespace

RootContext::RootContext(int n) : n_(n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::invalid_context, "n must be odd and >= 3");
  w_table_.resize(n);
  lambda_table_.resize(2 * n);
  for (int k = 0; k < n; ++k) w_table_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
  // lambda = -w^{-2} = exp(i pi (1 - 4/n)) = exp(i pi (n - 4) / n)
  for (int k = 0; k < 2 * n; ++k)
    lambda_table_[k] = std::polar(1.0, std::numbers::pi * static_cast<double>(mod(static_cast<long>(k) * (n - 4), 2 * n)) / n);
  w_ = w_table_[1];
  lambda_ = lambda_table_[1];

  if (std::abs(lambda_ + 1.0 / (w_ * w_)) > 1e-14) throw Error(ErrorKind::invalid_context, "lambda != -w^-2");
  for (int k = 1; k < n; ++k)
    if (std::abs(w_table_[k] - 1.0) < 1e-14) throw Error(ErrorKind::invalid_context, "w is not primitive");
  for (int k = 1; k < 2 * n; ++k)
    if (std::abs(lambda_table_[k] - 1.0) < 1e-14) throw Error(ErrorKind::invalid_context, "lambda is not primitive");
}

cplx RootContext::w_pow(long k) const { return w_table_[mod(k, n_)]; }
cplx RootContext::lambda_pow(long k) const { return lambda_table_[mod(k, 2L * n_)]; }

DihedralElement DihedralElement::normalized() const { return {n, mod(k, n), mod(s, 2)}; }

int DihedralElement::act(int x) const {
  const auto g = normalized();
  return mod((g.s ? -x : x) + g.k, n);
}

std::string DihedralElement::label() const {
  const auto g = normalized();
  return "s^" + std::to_string(g.k) + " t^" + std::to_string(g.s);
}

DihedralElement group_compose(const DihedralElement& a, const DihedralElement& b) {
  require_same(a, b);
  const auto x = a.normalized();
  const auto y = b.normalized();
  return DihedralElement{x.n, x.k + (x.s ? -y.k : y.k), x.s ^ y.s}.normalized();
}

DihedralElement group_inverse(const DihedralElement& a) {
  const auto x = a.normalized();
  return x.s ? x : DihedralElement{x.n, -x.k, 0}.normalized();
}

DihedralElement group_power(const DihedralElement& a, int p) {
  DihedralElement out = DihedralElement::identity(a.n);
  const DihedralElement base = p >= 0 ? a : group_inverse(a);
  for (int q = 0; q < std::abs(p); ++q) out = group_compose(out, base);
  return out;
}

std::vector<DihedralElement> dihedral_elements(int n) {
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < n; ++k) out.push_back({n, k, s});
  return out;
}

DihedralElement element_from_index(int n, int index) { return {n, index % n, index / n}; }

std::vector<DihedralElement> conjugacy_class(const DihedralElement& a) {
  std::vector<DihedralElement> out;
  for (const auto& g : dihedral_elements(a.n)) {
    const auto c = group_compose(group_compose(g, a), group_inverse(g));
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.index() < y.index(); });
  return out;
}

DihedralElement parse_dihedral(const std::string& text, int n) {
  static const std::regex factor(R"(\s*([st])\s*(?:\^\s*(-?\d+))?\s*)");
  if (text == "e" || text.empty()) return DihedralElement::identity(n);
  DihedralElement g = DihedralElement::identity(n);
  auto it = std::sregex_iterator(text.begin(), text.end(), factor);
  std::size_t consumed = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != consumed)
      throw Error(ErrorKind::invalid_spec, "cannot parse group element '" + text + "'");
    consumed += m.length();
    const int power = m[2].matched ? std::stoi(m[2].str()) : 1;
    const auto gen = m[1].str() == "s" ? DihedralElement::sigma(n) : DihedralElement::tau(n);
    g = group_compose(g, group_power(gen, power));
  }
  if (consumed != text.size()) throw Error(ErrorKind::invalid_spec, "cannot parse group element '" + text + "'");
  return g;
}

CMatrix rep_g(const RootContext& ctx, const DihedralElement& g) {
  const int n = ctx.n();
  if (g.n != n) throw Error(ErrorKind::invalid_context, "element order does not match context");
  CMatrix m = CMatrix::Zero(n, n);
  for (int i = 1; i <= n; ++i) m(position(g.act(i), n), position(i, n)) = 1.0;
  return m;
}

CMatrix rep_gstar(const RootContext& ctx, const DihedralElement& g) {
  const int n = ctx.n();
  if (g.n != n) throw Error(ErrorKind::invalid_context, "element order does not match context");
  CMatrix m = CMatrix::Zero(n, n);
  const auto x = g.normalized();
  if (!x.is_reflection()) return m;
  // sigma^{2j} tau = g  <=>  2j = k (mod n)  <=>  j = k (n+1)/2
  const int j = mod(static_cast<long>(x.k) * ((n + 1) / 2), n);
  m(position(j, n), position(j, n)) = 1.0;
  return m;
}

}  // namespace fzddn
