#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

cplx w(int n) { return std::exp(cplx(0, 2 * std::numbers::pi / n)); }
cplx lambda(int n) { return -std::pow(w(n), -2); }

int pos(long i, int n) { return static_cast<int>((((i - 1) % n) + n) % n); }

Mat unit(int n, long a, long b) {
  Mat m = Mat::Zero(n, n);
  m(pos(a, n), pos(b, n)) = 1.0;
  return m;
}

Mat ee(int n, long a, long b, long c, long d) {
  Mat m = Mat::Zero(n * n, n * n);
  m(pos(a, n) * n + pos(c, n), pos(b, n) * n + pos(d, n)) = 1.0;
  return m;
}

namespace {

// the shorter representative of l modulo n, using W(l) = W(-l)
int shortest(long l, int n) {
  const int r = static_cast<int>(((l % n) + n) % n);
  return r <= n - r ? r : n - r;
}

}  // namespace

cplx W(int n, cplx z, long l) {
  const cplx lam = lambda(n);
  cplx r = 1.0;
  for (int j = 1; j <= shortest(l, n); ++j) r *= (std::pow(lam, 2 * j - 1) * z - 1.0) / (std::pow(lam, 2 * j - 1) - z);
  return r;
}

cplx Wbar(int n, cplx z, long l) {
  const cplx lam = lambda(n);
  cplx r = 1.0;
  for (int j = 1; j <= shortest(l, n); ++j) r *= (std::pow(lam, 2 * j - 1) - lam * z) / (std::pow(lam, 2 * j) * z - 1.0);
  return r;
}

Mat fz_rmatrix(int n, cplx x1, cplx x2, cplx y1, cplx y2) {
  Mat r = Mat::Zero(n * n, n * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          r += Wbar(n, x1 / y1, b - c) * W(n, x2 / y1, b - d) * Wbar(n, x2 / y2, a - d) * W(n, x1 / y2, a - c) *
               ee(n, a, b, c, d);
  return r;
}

Mat raw_limit(int n, cplx z1, cplx z2) {
  Mat r = Mat::Zero(n * n, n * n);
  const cplx lam = lambda(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          const double sign = ((a + b + c + d) % 2 == 0) ? 1.0 : -1.0;
          const int e = (a - c) * (a - c) - (b - d) * (b - d);
          r += sign * std::pow(lam, e) * Wbar(n, z1, b - c) * Wbar(n, 1.0 / z2, a - d) * ee(n, a, b, c, d);
        }
  return r;
}

Mat rmatrix_dd(int n, cplx z1, cplx z2) {
  Mat r = Mat::Zero(n * n, n * n);
  const cplx ww = w(n);
  for (int a = 1; a <= n; ++a)
    for (int j = 1; j <= n; ++j) {
      cplx coeff = 0.0;
      for (int b = 1; b <= n; ++b) coeff += std::pow(ww, -2 * a * (2 * b - j)) * Wbar(n, z1, b) * Wbar(n, 1.0 / z2, b - j);
      for (int i = 1; i <= n; ++i) r += coeff * ee(n, i + j, i + a, i + a + j, i);
    }
  return r;
}

Mat swap(int n) {
  Mat p = Mat::Zero(n * n, n * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) p += ee(n, a, b, b, a);
  return p;
}

Mat projector(int n, int a, int b) {
  const double c = (a == 0 && b == 0) ? 0.5 : 1.0;
  const cplx ww = w(n);
  Mat p = Mat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p += std::pow(ww, 2 * b * j) * ee(n, i + a + j, i + a, i + j, i) +
           std::pow(ww, -2 * b * j) * ee(n, i - a + j, i - a, i + j, i);
  return c / n * p;
}

Mat h1(int n) {
  const cplx ww = w(n);
  Mat h = Mat::Zero(n * n, n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n - 1; ++l) {
        const double sign = l % 2 == 0 ? 1.0 : -1.0;
        h += sign * std::pow(ww, -2 * l * (i - j)) / (std::pow(ww, 2 * l) - std::pow(ww, -2 * l)) *
             ee(n, i + l, i, j + l, j);
      }
  return cplx(0, 1) * h;
}

Mat h2(int n) {
  const cplx ww = w(n);
  Mat h = Mat::Zero(n * n, n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n - 1; ++l) {
        const double sign = l % 2 == 0 ? 1.0 : -1.0;
        h += sign * std::pow(ww, 2 * l * (i - j)) / (std::pow(ww, 2 * l) - std::pow(ww, -2 * l)) *
             ee(n, i + l, i, j + l, j);
      }
  return cplx(0, 1) * h;
}

Mat rep_group(int n, int k, int s) {
  Mat m = Mat::Zero(n, n);
  for (int x = 1; x <= n; ++x) m += unit(n, (s ? -x : x) + k, x);
  return m;
}

Mat rep_dual(int n, int k, int s) {
  Mat m = Mat::Zero(n, n);
  if (!s) return m;
  // fixed point of x -> k - x
  for (int x = 1; x <= n; ++x)
    if (pos(k - x, n) == pos(x, n)) m += unit(n, x, x);
  return m;
}

namespace {

std::vector<int> digits(long idx, int n, int L) {
  std::vector<int> d(L);
  for (int s = L - 1; s >= 0; --s) {
    d[s] = static_cast<int>(idx % n);
    idx /= n;
  }
  return d;
}

long undigits(const std::vector<int>& d, int n) {
  long idx = 0;
  for (int x : d) idx = idx * n + x;
  return idx;
}

}  // namespace

Mat embed(const Mat& op, int i, int j, int n, int L) {
  long dim = 1;
  for (int s = 0; s < L; ++s) dim *= n;
  Mat out = Mat::Zero(dim, dim);
  for (long col = 0; col < dim; ++col) {
    const auto d = digits(col, n, L);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const cplx v = op(a * n + b, d[i - 1] * n + d[j - 1]);
        if (v == 0.0) continue;
        auto e = d;
        e[i - 1] = a;
        e[j - 1] = b;
        out(undigits(e, n), col) += v;
      }
  }
  return out;
}

Mat embed1(const Mat& op, int i, int n, int L) {
  long dim = 1;
  for (int s = 0; s < L; ++s) dim *= n;
  Mat out = Mat::Zero(dim, dim);
  for (long col = 0; col < dim; ++col) {
    const auto d = digits(col, n, L);
    for (int a = 0; a < n; ++a) {
      auto e = d;
      e[i - 1] = a;
      out(undigits(e, n), col) += op(a, d[i - 1]);
    }
  }
  return out;
}

double ybe(const Mat& a, const Mat& b, const Mat& c, int n) {
  const Mat x = embed(a, 1, 2, n, 3);
  const Mat y = embed(b, 1, 3, n, 3);
  const Mat z = embed(c, 2, 3, n, 3);
  const Mat lhs = x * y * z;
  return (lhs - z * y * x).norm() / lhs.norm();
}

Mat partial_trace_aux(const Mat& m, int d0) {
  const long rest = m.rows() / d0;
  Mat out = Mat::Zero(rest, rest);
  for (int a = 0; a < d0; ++a) out += m.block(a * rest, a * rest, rest, rest);
  return out;
}

cplx bethe_lhs_periodic(int n, int L, cplx y, cplx bc_ratio) {
  const cplx i(0, 1);
  const cplx ww = w(n);
  const double sign = (L + 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(bc_ratio, L) * std::pow((1.0 + i / ww * y) / (1.0 - i * ww * y), L);
}

cplx bethe_lhs_open(int n, int L, cplx y) {
  const cplx i(0, 1);
  const cplx ww = w(n);
  const cplx y2 = y * y;
  const double sign = (L + 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * ((1.0 - ww * ww * y2) / (1.0 - y2 / (ww * ww))) * ((1.0 + y2 / (ww * ww)) / (1.0 + ww * ww * y2)) *
         std::pow((1.0 + i / ww * y) / (1.0 - i * ww * y), 2 * L);
}

cplx bethe_rhs(int n, const std::vector<cplx>& ys, int j) {
  const cplx ww = w(n);
  cplx r = 1.0;
  for (const cplx& yk : ys) r *= (yk - ww * ww * ys[j]) / (yk - ys[j] / (ww * ww));
  return r;
}

}  // namespace oracle
