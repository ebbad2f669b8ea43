#pragma once

// Brute-force reference constructions written directly from the defining
// sums, with their own root-of-unity arithmetic. They share only the matrix
// type with the library.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

cplx w(int n);       // e^{2 pi i / n}
cplx lambda(int n);  // -w^{-2}

// 1-based index i reduced to a 0-based position modulo n
int pos(long i, int n);

// e_{a,b} (x) e_{c,d} with 1-based, mod-n indices
Mat ee(int n, long a, long b, long c, long d);
Mat unit(int n, long a, long b);

cplx W(int n, cplx z, long l);
cplx Wbar(int n, cplx z, long l);

Mat fz_rmatrix(int n, cplx x1, cplx x2, cplx y1, cplx y2);
Mat raw_limit(int n, cplx z1, cplx z2);
Mat rmatrix_dd(int n, cplx z1, cplx z2);
Mat swap(int n);
Mat projector(int n, int a, int b);
Mat h1(int n);
Mat h2(int n);

// rep of sigma^k tau^s acting on 1-based labels: x -> (-1)^s x + k
Mat rep_group(int n, int k, int s);
// rep of (sigma^k tau^s)*: the projector onto the fixed label of a reflection
Mat rep_dual(int n, int k, int s);

// op on factors i, j (1-based) of (C^n)^{(x)L}, by explicit digit loops
Mat embed(const Mat& op, int i, int j, int n, int L);
Mat embed1(const Mat& op, int i, int n, int L);

// R12 R13 R23 - R23 R13 R12 relative residual using explicit embeddings
double ybe(const Mat& a, const Mat& b, const Mat& c, int n);

// tr_0 of a product of operators on C^{d0} (x) (C^n)^{(x)L}, all given on
// the full space with the auxiliary factor first
Mat partial_trace_aux(const Mat& m, int d0);

// Bethe equation sides exactly as printed: periodic (optionally with a
// braided constant ratio) and open.
cplx bethe_lhs_periodic(int n, int L, cplx y, cplx bc_ratio = 1.0);
cplx bethe_lhs_open(int n, int L, cplx y);
cplx bethe_rhs(int n, const std::vector<cplx>& ys, int j);

}  // namespace oracle
