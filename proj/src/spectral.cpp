#include "cliffspec/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "cliffspec/rng.hpp"

namespace cliffspec {

CliffordMatrix q_pencil_matrix(const CliffordMatrix& t, const Paravector& s) {
    const double n2 = s.norm() * s.norm();
    CliffordMatrix q = t * t;
    q -= (2.0 * s.s0) * t;
    q += CliffordMatrix::scalar(t.n(), CliffordNum(t.d(), n2));
    return q;
}

PencilEvaluation q_pencil(const CliffordMatrix& t, const Paravector& s) {
    PencilEvaluation ev{s, q_pencil_matrix(t, s), 0.0};
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(realify_left(ev.q).mat);
    ev.sigma_min = svd.singularValues().tail(1)(0);
    return ev;
}

bool in_resolvent_svd(const CliffordMatrix& t, const Paravector& s, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(realify_left(q_pencil_matrix(t, s)).mat);
    const auto& sv = svd.singularValues();
    double smin = sv(sv.size() - 1);
    if (tol < 0.0) tol = 1e-10 * sv(0);
    return smin > tol;
}

RealifiedMatrix first_order_realified(const CliffordMatrix& t, const Paravector& s) {
    RealifiedMatrix r = realify_left(t);
    r.mat -= realify_right_mult(s.to_clifford(), t.n()).mat;
    r.source = RealifiedMatrix::Source::derived;
    return r;
}

double resolvent_factorization_check(const CliffordMatrix& t, const Paravector& s) {
    Eigen::MatrixXd qr = realify_left(q_pencil_matrix(t, s)).mat;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(qr);
    const Eigen::Index N = qr.rows();
    Eigen::MatrixXd qinv = lu.solve(Eigen::MatrixXd::Identity(N, N));

    Eigen::MatrixXd a = first_order_realified(t, Paravector{s.conj()}).mat;
    Eigen::MatrixXd b = first_order_realified(t, s).mat;
    Eigen::MatrixXd rhs = a.partialPivLu().solve(b.partialPivLu().solve(Eigen::MatrixXd::Identity(N, N)));
    return spectral_norm(qinv - rhs);
}

// ---------------------------------------------------------------------------

double SpectralSet::distance(double x, double r) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& sp : spheres)
        best = std::min(best, std::hypot(x - sp.x, r - sp.r));
    return best;
}

double SpectralSet::distance(const Paravector& s) const {
    return distance(s.s0, s.im_norm());
}

int SpectralSet::total_multiplicity() const {
    int m = 0;
    for (const auto& sp : spheres) m += sp.multiplicity;
    return m;
}

double hausdorff(const SpectralSet& a, const SpectralSet& b) {
    if (a.spheres.empty() || b.spheres.empty())
        return (a.spheres.empty() && b.spheres.empty()) ? 0.0
                                                        : std::numeric_limits<double>::infinity();
    double h = 0.0;
    for (const auto& sp : a.spheres) h = std::max(h, b.distance(sp.x, sp.r));
    for (const auto& sp : b.spheres) h = std::max(h, a.distance(sp.x, sp.r));
    return h;
}

SpectralSet spectrum_exact(const CliffordMatrix& t, double merge_tol_rel) {
    Eigen::MatrixXd rt = realify_left(t).mat;
    Eigen::EigenSolver<Eigen::MatrixXd> es(rt, /*computeEigenvectors=*/false);
    Eigen::VectorXcd ev = es.eigenvalues();
    if (es.info() != Eigen::Success) {
        // Real QR occasionally stalls; the complex Schur shift strategy does
        // not, so retry there before giving up.
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(rt.cast<std::complex<double>>(),
                                                        /*computeEigenvectors=*/false);
        if (ces.info() != Eigen::Success)
            throw std::runtime_error("eigenvalue iteration did not converge");
        ev = ces.eigenvalues();
    }

    double scale = std::max(1.0, rt.cwiseAbs().maxCoeff());
    double tol = merge_tol_rel * scale;

    // Collapse lambda = x + i y onto (x, |y|) and merge clusters.
    std::vector<std::pair<double, double>> pts;
    pts.reserve(std::size_t(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        pts.emplace_back(ev(i).real(), std::fabs(ev(i).imag()));
    std::sort(pts.begin(), pts.end());

    SpectralSet out;
    out.tol = tol;
    std::vector<bool> used(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (used[i]) continue;
        double sx = pts[i].first, sr = pts[i].second;
        int cnt = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (used[j]) continue;
            if (std::hypot(pts[j].first - sx / cnt, pts[j].second - sr / cnt) <= tol) {
                sx += pts[j].first;
                sr += pts[j].second;
                ++cnt;
                used[j] = true;
            }
        }
        SpectralSphere sp;
        sp.x = sx / cnt;
        sp.r = sr / cnt;
        if (sp.r <= tol) sp.r = 0.0;
        // Conjugate pairs (and M-invariant real eigenspaces) come in twos.
        sp.multiplicity = std::max(1, cnt / 2);
        out.spheres.push_back(sp);
    }
    std::sort(out.spheres.begin(), out.spheres.end(),
              [](const SpectralSphere& a, const SpectralSphere& b) {
                  return a.x != b.x ? a.x < b.x : a.r < b.r;
              });
    return out;
}

CliffordMatrix pencil_inverse(const CliffordMatrix& t, const Paravector& s) {
    Eigen::MatrixXd qr = realify_left(q_pencil_matrix(t, s)).mat;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(qr);
    double rcond_probe = std::fabs(lu.determinant());
    if (rcond_probe == 0.0) throw std::domain_error("singular pencil: s in sigma_S(T)");
    const Eigen::Index N = qr.rows();
    Eigen::MatrixXd qinv = lu.solve(Eigen::MatrixXd::Identity(N, N));
    return from_realified(qinv, t.n(), t.d());
}

CliffordMatrix s_resolvent_left(const CliffordMatrix& t, const Paravector& s) {
    CliffordMatrix qinv = pencil_inverse(t, s);
    return qinv.right_scaled(s.conj().to_clifford()) - t * qinv;
}

CliffordMatrix s_resolvent_right(const CliffordMatrix& t, const Paravector& s) {
    CliffordMatrix qinv = pencil_inverse(t, s);
    return (CliffordMatrix::scalar(t.n(), s.conj().to_clifford()) - t) * qinv;
}

AdjointSpectrumReport adjoint_spectrum_check(const CliffordMatrix& t, std::uint64_t seed,
                                             int points) {
    AdjointSpectrumReport rep;
    CliffordMatrix ts = adjoint(t);
    SpectralSet sig = spectrum_exact(t);
    SpectralSet sig_star = spectrum_exact(ts);
    rep.hausdorff_distance = hausdorff(sig, sig_star);

    double scale = std::max(1.0, operator_norm(t));
    Rng rng(seed);
    while (rep.points_checked < points) {
        Paravector s = rng.paravector(t.d(), 2.0 * scale);
        // Stay well clear of the spectrum so resolvent norms are O(1).
        if (sig.distance(s) < 0.5 * scale) continue;
        CliffordMatrix lhs_l = s_resolvent_left(ts, s);
        CliffordMatrix rhs_l = adjoint(s_resolvent_right(t, Paravector{s.conj()}));
        CliffordMatrix lhs_r = s_resolvent_right(ts, s);
        CliffordMatrix rhs_r = adjoint(s_resolvent_left(t, Paravector{s.conj()}));
        rep.max_left_identity_residual =
            std::max(rep.max_left_identity_residual, operator_norm(lhs_l - rhs_l));
        rep.max_right_identity_residual =
            std::max(rep.max_right_identity_residual, operator_norm(lhs_r - rhs_r));
        ++rep.points_checked;
    }
    return rep;
}

} // namespace cliffspec
