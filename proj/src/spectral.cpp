#include "blowup/spectral.hpp"

#include "blowup/error.hpp"

#include <Eigen/Dense>

namespace blowup {

HoffmanBound hoffman_bound(const Graph& g)
{
    if (g.order() == 0)
        throw InvalidParameter("Hoffman bound is undefined for the empty graph");
    HoffmanBound out;
    if (g.edge_count() == 0) {
        out.value = 1.0;
        out.edgeless = true;
        return out;
    }
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw InternalError("symmetric eigensolver did not converge");
    // Eigenvalues come back in ascending order.
    out.lambda_min = solver.eigenvalues()(0);
    out.lambda_max = solver.eigenvalues()(n - 1);
    out.value = (out.lambda_max - out.lambda_min) / (-out.lambda_min);
    return out;
}

} // namespace blowup
