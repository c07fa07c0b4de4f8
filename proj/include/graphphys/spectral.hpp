#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace graphphys {

/// Distinct eigenvalue together with its multiplicity.
struct EigenGroup {
    double value;
    std::size_t multiplicity;
};

/**
 * Eigendecomposition of a real symmetric matrix.
 *
 * values are sorted descending; column j of vectors belongs to values[j].
 */
struct Spectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    std::vector<EigenGroup> groups;
    double tolerance = 0.0;

    std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
    /// Number of eigenvalues within tolerance of x.
    std::size_t multiplicity_of(double x) const;
};

/// Largest absolute entry, used as the matrix scale for tolerances.
double matrix_scale(const Eigen::MatrixXd &a);
bool is_symmetric(const Eigen::MatrixXd &a, double rel_tol = 1e-12);

Spectrum eig_symmetric(const Eigen::MatrixXd &a);

/// f applied through the eigendecomposition: V f(Λ) Vᵀ.
Eigen::MatrixXd apply_spectral(const Spectrum &s, const std::function<double(double)> &f);

enum class MatrixFunctionKind { Exp, Sinh, Cosh, ScaledExp, Resolvent };

struct MatrixFunction {
    MatrixFunctionKind kind = MatrixFunctionKind::Exp;
    /// β for ScaledExp, η for Resolvent.
    double parameter = 1.0;
};

Eigen::MatrixXd matrix_function(const Eigen::MatrixXd &a, MatrixFunction f);

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd &a, double beta = 1.0);
Eigen::MatrixXd matrix_sinh(const Eigen::MatrixXd &a);
Eigen::MatrixXd matrix_cosh(const Eigen::MatrixXd &a);
/// exp of an arbitrary square matrix (Padé scaling and squaring).
Eigen::MatrixXd matrix_exp_general(const Eigen::MatrixXd &a);

/// (I - A/eta)^{-1} by column-wise LU solves; SingularResolvent near an eigenvalue.
Eigen::MatrixXd resolvent(const Eigen::MatrixXd &a, double eta);

/// Moore-Penrose inverse of a connected graph Laplacian, as Σ_{μ_k>0} U_k U_kᵀ / μ_k.
Eigen::MatrixXd laplacian_pseudoinverse(const Eigen::MatrixXd &laplacian);
/// Same quantity through (L + J/n)^{-1} - J/n.
Eigen::MatrixXd laplacian_pseudoinverse_dense(const Eigen::MatrixXd &laplacian);

} // namespace graphphys
