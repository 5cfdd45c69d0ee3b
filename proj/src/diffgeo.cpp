#include "flatfront/diffgeo.hpp"

#include <algorithm>
#include <cmath>

namespace flatfront {

int numerical_rank(const Mat& M, double eps) {
    Eigen::JacobiSVD<Mat> svd(M);
    const Vec sv = svd.singularValues();
    const double top = sv.size() ? sv[0] : 0.0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > eps * (1.0 + top)) ++r;
    return r;
}

RankProfile gauss_rank_profile(const Front& front, const std::vector<Vec>& grid,
                               double eps) {
    RankProfile prof;
    prof.eps_rank = eps;
    prof.flat = true;
    for (const Vec& p : grid) {
        const Mat J = front.jacobian(p);
        const Mat N = front.normal_jacobian(p);
        Eigen::JacobiSVD<Mat> svd_j(J), svd_n(N);
        prof.points.push_back(p);
        prof.df_singular_values.push_back(svd_j.singularValues());
        prof.dnu_singular_values.push_back(svd_n.singularValues());
        prof.df_rank.push_back(numerical_rank(J, eps));
        prof.dnu_rank.push_back(numerical_rank(N, eps));
        const Vec& sn = prof.dnu_singular_values.back();
        if (sn.size() > 1) {
            prof.max_secondary_dnu = std::max(prof.max_secondary_dnu, sn[1]);
            if (sn[1] > eps * (1.0 + sn[0])) prof.flat = false;
        }
    }
    return prof;
}

double codazzi_residual(const Front& front, const Vec& p, double h) {
    const int n = front.dim();
    const Mat J = front.jacobian(p);
    if (numerical_rank(J) < n)
        throw SingularSample("codazzi_residual: rank(df) < n; use the parallel front");
    const Vec nu = front.normal(p);
    const Mat P = Mat::Identity(n + 1, n + 1) - nu * nu.transpose();

    auto col = [&front](const Vec& q, int i) -> Vec {
        return front.jacobian(q).col(i);
    };
    auto partial = [&](int along, int of) {
        Vec qp = p, qm = p;
        qp[along] += h;
        qm[along] -= h;
        return Vec(((col(qp, of) - col(qm, of)) / (2.0 * h)).eval());
    };

    double worst = 0.0;
    for (int j = 1; j < n; ++j) {
        const Vec lhs = partial(0, j);  // d_t f_{w_j}
        const Vec rhs = partial(j, 0);  // d_{w_j} f_t
        worst = std::max(worst, (P * (lhs - rhs)).norm());
    }
    return worst;
}

namespace {

// Smooth section fields of nu^perp around p: projections of a fixed
// orthonormal basis of nu(p)^perp.
std::vector<Vec> section_basis(const Front& front, const Vec& p) {
    const Vec nu = front.normal(p);
    const int m = nu.size();
    std::vector<Vec> basis;
    for (int axis = 0; axis < m && static_cast<int>(basis.size()) < m - 1; ++axis) {
        Vec v = Vec::Unit(m, axis);
        v -= v.dot(nu) * nu;
        for (const Vec& b : basis) v -= v.dot(b) * b;
        const double nrm = v.norm();
        if (nrm < 1e-6) continue;
        basis.push_back(v / nrm);
    }
    return basis;
}

Vec section_at(const Front& front, const Vec& q, const Vec& b) {
    const Vec nu = front.normal(q);
    return b - b.dot(nu) * nu;
}

// D_i s at q: tangential part of the ambient directional derivative.
Vec covariant_partial(const Front& front, const Vec& q, int i, const Vec& b,
                      double h) {
    Vec qp = q, qm = q;
    qp[i] += h;
    qm[i] -= h;
    const Vec ds = (section_at(front, qp, b) - section_at(front, qm, b)) / (2.0 * h);
    const Vec nu = front.normal(q);
    return ds - ds.dot(nu) * nu;
}

}  // namespace

double bundle_curvature_residual(const Front& front, const Vec& p, double h) {
    const int n = front.dim();
    const Vec nu = front.normal(p);
    double worst = 0.0;
    for (const Vec& b : section_basis(front, p)) {
        for (int j = 1; j < n; ++j) {
            auto D_t_of_Dj = [&](const Vec& q) {
                return covariant_partial(front, q, j, b, h);
            };
            auto D_j_of_Dt = [&](const Vec& q) {
                return covariant_partial(front, q, 0, b, h);
            };
            Vec qp = p, qm = p;
            qp[0] += h;
            qm[0] -= h;
            Vec term1 = (D_t_of_Dj(qp) - D_t_of_Dj(qm)) / (2.0 * h);
            term1 -= term1.dot(nu) * nu;
            qp = p; qm = p;
            qp[j] += h;
            qm[j] -= h;
            Vec term2 = (D_j_of_Dt(qp) - D_j_of_Dt(qm)) / (2.0 * h);
            term2 -= term2.dot(nu) * nu;
            worst = std::max(worst, (term1 - term2).norm());
        }
    }
    return worst;
}

double connection_metric_residual(const Front& front, const Vec& p, double h) {
    const std::vector<Vec> basis = section_basis(front, p);
    const int n = front.dim();
    double worst = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t c = a; c < basis.size(); ++c) {
            for (int i = 0; i < n; ++i) {
                Vec qp = p, qm = p;
                qp[i] += h;
                qm[i] -= h;
                const double lhs =
                    (section_at(front, qp, basis[a]).dot(section_at(front, qp, basis[c])) -
                     section_at(front, qm, basis[a]).dot(section_at(front, qm, basis[c]))) /
                    (2.0 * h);
                const double rhs =
                    covariant_partial(front, p, i, basis[a], h)
                        .dot(section_at(front, p, basis[c])) +
                    section_at(front, p, basis[a])
                        .dot(covariant_partial(front, p, i, basis[c], h));
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return worst;
}

double lift_geodesic_residual(const Front& front, const Vec& p, int j,
                              double h) {
    const int n = front.dim();
    const Mat G = front.lift_metric(p);
    std::vector<Mat> dG(n);
    for (int k = 0; k < n; ++k) {
        Vec qp = p, qm = p;
        qp[k] += h;
        qm[k] -= h;
        dG[k] = (front.lift_metric(qp) - front.lift_metric(qm)) / (2.0 * h);
    }
    Vec gamma_low(n);
    for (int k = 0; k < n; ++k)
        gamma_low[k] = dG[j](k, j) - 0.5 * dG[k](j, j);
    const Vec christoffel = G.ldlt().solve(gamma_low);
    return christoffel.norm();
}

UmbilicResult classify_umbilic(const Front& front, const Vec& p, double tol) {
    const Mat J = front.jacobian(p);
    const Mat N = front.normal_jacobian(p);
    const int m = static_cast<int>(J.size());
    Mat stacked(2, m);
    stacked.row(0) = Eigen::Map<const Vec>(J.data(), m).transpose();
    stacked.row(1) = Eigen::Map<const Vec>(N.data(), m).transpose();
    Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullU);
    const Vec sv = svd.singularValues();
    UmbilicResult res;
    res.dependence_sv = sv.size() > 1 ? sv[1] : 0.0;
    const bool umb = res.dependence_sv < tol * (1.0 + sv[0]);
    res.cls = umb ? UmbilicClass::umbilic : UmbilicClass::non_umbilic;
    if (umb) {
        Vec u = svd.matrixU().col(1);
        // u . rows == 0, i.e. u0 * vec(df) + u1 * vec(dnu) == 0.
        res.delta1 = u[0];
        res.delta2 = -u[1];
        if (std::abs(res.delta1) >= std::abs(res.delta2) ? res.delta1 < 0
                                                         : res.delta2 < 0) {
            res.delta1 = -res.delta1;
            res.delta2 = -res.delta2;
        }
    }
    return res;
}

std::vector<double> principal_curvatures(const Front& front, const Vec& p,
                                         double rank_tol) {
    const Mat J = front.jacobian(p);
    const int n = front.dim();
    if (numerical_rank(J, rank_tol) < n)
        throw NotImmersed("principal_curvatures: rank(df) < n at sample");
    const Mat N = front.normal_jacobian(p);
    const Mat G = J.transpose() * J;
    Mat A = J.transpose() * N;
    A = -0.5 * (A + A.transpose()).eval();
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(A, G);
    std::vector<double> lam(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(lam.begin(), lam.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    return lam;
}

}  // namespace flatfront
