// Copyright 2026 The qsi developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "density.hpp"
#include "fisher.hpp"

namespace qsi {

/// Symmetrized variance (1/2) tr rho (A*A + AA*) - |tr rho A|^2. Defined for
/// arbitrary, possibly non-Hermitian A; always real and non-negative.
double variance(const DensityMatrix& rho, const ComplexMatrix& a);

/// (1/2) tr rho (A*B + BA*) - (tr rho A*)(tr rho B); conjugate-linear in A,
/// linear in B, and covariance(rho, A, A) = variance(rho, A).
complexd covariance(const DensityMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b);

/// Metric-adjusted skew information computed from its defining trace form:
/// (1/2) tr( i[rho, A*] . k(L,R) i[rho, A] ) with the regularized kernel
/// k(x,y) = f(0) / (y f(x/y)). Requires a regular function.
double skew_info(const FisherFunction& f, const DensityMatrix& rho, const ComplexMatrix& a);

/// Sesquilinear extension of skew_info; skew_bilinear(f,rho,A,A) equals
/// skew_info(f,rho,A).
complexd skew_bilinear(const FisherFunction& f, const DensityMatrix& rho, const ComplexMatrix& a,
                       const ComplexMatrix& b);

/// Equivalent second form tr rho A^2 - tr A k(L,R) A with
/// k(x,y) = y * tilde_f(x/y); Hermitian observables only.
double skew_info_alt(const FisherFunction& f, const DensityMatrix& rho, const HermitianMatrix& a);

/// -(1/2) tr [rho^p, A][rho^{1-p}, A]; the direct power formula, an
/// independent route that must match skew_info with the wyd function.
double wyd_direct(double p, const DensityMatrix& rho, const HermitianMatrix& a);

/// Gram matrices of the two sesquilinear forms over an observable tuple,
/// Hermitized to scrub rounding noise. Both are positive semidefinite, and
/// the covariance Gram dominates the skew Gram.
struct GramPair {
  ComplexMatrix skew_gram;
  ComplexMatrix cov_gram;
};
GramPair gram_pair(const FisherFunction& f, const DensityMatrix& rho,
                   const std::vector<ComplexMatrix>& tuple);

/// Real part of z after checking the contracted-to-real policy
/// |Im z| <= 1e-11 (1 + |Re z|); larger residues raise
/// numerical_inconsistency instead of being silently truncated.
double real_checked(complexd z, const char* what);

/// Determinant of a Hermitian matrix via its eigenvalues.
double hermitian_determinant(const HermitianMatrix& m);

}  // namespace qsi
