#include <graphphys/spectral.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include <graphphys/error.hpp>

namespace graphphys {

namespace {

void require_square(const Eigen::MatrixXd &a) {
    if (a.rows() != a.cols())
        fail(ErrorCode::InvalidArgument, "matrix is not square");
}

void require_symmetric(const Eigen::MatrixXd &a) {
    require_square(a);
    if (!is_symmetric(a))
        fail(ErrorCode::NotSymmetric, "matrix is not symmetric");
}

} // namespace

double matrix_scale(const Eigen::MatrixXd &a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_symmetric(const Eigen::MatrixXd &a, double rel_tol) {
    if (a.rows() != a.cols())
        return false;
    if (a.size() == 0)
        return true;
    return (a - a.transpose()).cwiseAbs().maxCoeff() <= rel_tol * std::max(1.0, matrix_scale(a));
}

std::size_t Spectrum::multiplicity_of(double x) const {
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (std::abs(values[i] - x) <= tolerance)
            ++k;
    return k;
}

Spectrum eig_symmetric(const Eigen::MatrixXd &a) {
    require_symmetric(a);
    const Eigen::Index n = a.rows();
    Spectrum s;
    if (n == 0) {
        s.values.resize(0);
        s.vectors.resize(0, 0);
        return s;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::NoConvergence, "symmetric eigensolver did not converge");
    // Eigen returns ascending order.
    s.values = solver.eigenvalues().reverse();
    s.vectors = solver.eigenvectors().rowwise().reverse();
    const double norm = std::max(s.values.cwiseAbs().maxCoeff(), matrix_scale(a));
    s.tolerance = 1e-8 * std::max(1.0, norm);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!s.groups.empty() && std::abs(s.groups.back().value - s.values[i]) <= s.tolerance) {
            ++s.groups.back().multiplicity;
        } else {
            s.groups.push_back({s.values[i], 1});
        }
    }
    return s;
}

Eigen::MatrixXd apply_spectral(const Spectrum &s, const std::function<double(double)> &f) {
    Eigen::VectorXd fv = s.values.unaryExpr(f);
    Eigen::MatrixXd r = s.vectors * fv.asDiagonal() * s.vectors.transpose();
    return 0.5 * (r + r.transpose());
}

Eigen::MatrixXd matrix_function(const Eigen::MatrixXd &a, MatrixFunction f) {
    switch (f.kind) {
    case MatrixFunctionKind::Exp:
        return apply_spectral(eig_symmetric(a), [](double x) { return std::exp(x); });
    case MatrixFunctionKind::Sinh:
        return apply_spectral(eig_symmetric(a), [](double x) { return std::sinh(x); });
    case MatrixFunctionKind::Cosh:
        return apply_spectral(eig_symmetric(a), [](double x) { return std::cosh(x); });
    case MatrixFunctionKind::ScaledExp: {
        const double beta = f.parameter;
        return apply_spectral(eig_symmetric(a), [beta](double x) { return std::exp(beta * x); });
    }
    case MatrixFunctionKind::Resolvent:
        require_symmetric(a);
        return resolvent(a, f.parameter);
    }
    fail(ErrorCode::InvalidArgument, "unknown matrix function");
}

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd &a, double beta) {
    return matrix_function(a, {MatrixFunctionKind::ScaledExp, beta});
}

Eigen::MatrixXd matrix_sinh(const Eigen::MatrixXd &a) {
    return matrix_function(a, {MatrixFunctionKind::Sinh, 1.0});
}

Eigen::MatrixXd matrix_cosh(const Eigen::MatrixXd &a) {
    return matrix_function(a, {MatrixFunctionKind::Cosh, 1.0});
}

Eigen::MatrixXd matrix_exp_general(const Eigen::MatrixXd &a) {
    require_square(a);
    if (a.size() == 0)
        return a;
    return a.exp();
}

Eigen::MatrixXd resolvent(const Eigen::MatrixXd &a, double eta) {
    require_square(a);
    if (eta == 0.0 || !std::isfinite(eta))
        fail(ErrorCode::InvalidArgument, "resolvent parameter must be finite and nonzero");
    const Eigen::Index n = a.rows();
    if (n == 0)
        return a;
    const double scale = std::max(1.0, matrix_scale(a));
    if (is_symmetric(a)) {
        const Spectrum s = eig_symmetric(a);
        for (Eigen::Index i = 0; i < n; ++i)
            if (std::abs(s.values[i] - eta) <= 1e-8 * scale)
                fail(ErrorCode::SingularResolvent,
                     "eta = " + std::to_string(eta) + " is an eigenvalue");
    }
    const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - a / eta;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible())
        fail(ErrorCode::SingularResolvent, "I - A/eta is singular");
    Eigen::MatrixXd r(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        r.col(j) = lu.solve(Eigen::VectorXd::Unit(n, j));
    return r;
}

Eigen::MatrixXd laplacian_pseudoinverse(const Eigen::MatrixXd &laplacian) {
    const Spectrum s = eig_symmetric(laplacian);
    const Eigen::Index n = laplacian.rows();
    if (n == 0)
        return laplacian;
    // The zero mode sits at the bottom of the descending order.
    if (n > 1 && std::abs(s.values[n - 2]) <= s.tolerance)
        fail(ErrorCode::Disconnected, "Laplacian has a repeated zero eigenvalue");
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k + 1 < n; ++k)
        p += s.vectors.col(k) * s.vectors.col(k).transpose() / s.values[k];
    return 0.5 * (p + p.transpose());
}

Eigen::MatrixXd laplacian_pseudoinverse_dense(const Eigen::MatrixXd &laplacian) {
    require_symmetric(laplacian);
    const Eigen::Index n = laplacian.rows();
    if (n == 0)
        return laplacian;
    const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
    Eigen::FullPivLU<Eigen::MatrixXd> lu(laplacian + j);
    lu.setThreshold(1e-10);
    if (!lu.isInvertible())
        fail(ErrorCode::Disconnected, "L + J/n is singular");
    Eigen::MatrixXd inv = lu.inverse();
    Eigen::MatrixXd p = inv - j;
    return 0.5 * (p + p.transpose());
}

} // namespace graphphys
