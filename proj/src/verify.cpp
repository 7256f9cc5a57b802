#include "framekit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string_view>
#include <utility>

#include "framekit/eig.hpp"
#include "framekit/hs.hpp"
#include "framekit/rng.hpp"
#include "framekit/serialize.hpp"
#include "framekit/tolerances.hpp"

namespace framekit {

namespace {

// Sentinel residual for instances that threw instead of returning a number.
constexpr double error_residual = 1e308;

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double rel(double err, double scale) {
    return err / std::max(scale, tol::abs_floor);
}

double entry_max_diff(const CMatrix& a, const CMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

double elementwise_residual(const OperatorFrame& a, const OperatorFrame& b) {
    double worst = 0.0;
    for (std::size_t n = 0; n < a.count(); ++n)
        worst = std::max(worst, rel(frobenius_norm(a[n].matrix() - b[n].matrix()),
                                    frobenius_norm(b[n].matrix())));
    return worst;
}

CMatrix diag_real(const std::vector<double>& d) {
    std::vector<cplx> cd(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        cd[i] = cplx{d[i], 0.0};
    return CMatrix::diagonal(cd);
}

Frame draw_frame(Rng& rng, std::size_t dim, std::size_t count) {
    std::vector<CVector> elems;
    elems.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        elems.push_back(rng.gaussian_vector(dim));
    return Frame(dim, std::move(elems));
}

OperatorFrame draw_op_frame(Rng& rng, std::size_t dh, std::size_t dk, std::size_t count) {
    std::vector<HSElement> elems;
    elems.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        elems.push_back(HSElement(random_gaussian_matrix(dh, dk, rng)));
    return OperatorFrame(std::move(elems));
}

CMatrix draw_hermitian(Rng& rng, std::size_t d) {
    const CMatrix g = random_gaussian_matrix(d, d, rng);
    return cplx{0.5, 0.0} * (g + dagger(g));
}

CMatrix draw_hpd(Rng& rng, std::size_t d) {
    const CMatrix g = random_gaussian_matrix(d, d, rng);
    return dagger(g) * g + cplx{0.5, 0.0} * CMatrix::identity(d);
}

CMatrix draw_unitary(Rng& rng, std::size_t d) {
    return orthonormal_columns(random_gaussian_matrix(d, d, rng));
}

// Invertible with singular values in [0.6, 1.8], so transform envelopes
// stay well away from the invertibility threshold.
CMatrix draw_well_conditioned(Rng& rng, std::size_t d) {
    const CMatrix u = draw_unitary(rng, d);
    const CMatrix v = draw_unitary(rng, d);
    std::vector<double> s(d);
    for (std::size_t i = 0; i < d; ++i)
        s[i] = rng.uniform(0.6, 1.8);
    return u * diag_real(s) * dagger(v);
}

cplx draw_nonzero_scalar(Rng& rng) {
    const double mag = rng.uniform(0.6, 1.6);
    const double phase = rng.uniform(0.0, 6.283185307179586);
    return cplx{mag * std::cos(phase), mag * std::sin(phase)};
}

double coefficient_energy(const Frame& f, const CVector& x) {
    double e = 0.0;
    for (std::size_t n = 0; n < f.count(); ++n) {
        const double a = std::abs(inner(x, f[n]));
        e += a * a;
    }
    return e;
}

// ---- shared check bodies (random and user instances run the same code) ----

double frame_inequality_residual(const Frame& f, Rng& rng) {
    const FrameBounds b = frame_bounds(f);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const CVector x = rng.gaussian_vector(f.dim());
        const double nx2 = x.norm() * x.norm();
        const double e = coefficient_energy(f, x);
        const double slack =
            std::max({b.lower * nx2 - e, e - b.upper * nx2, 0.0});
        worst = std::max(worst, rel(slack, b.upper * nx2));
    }
    return worst;
}

double dual_bounds_residual(const Frame& f) {
    const FrameBounds b = frame_bounds(f);
    const FrameBounds d = frame_bounds(canonical_dual(f));
    return std::max(rel(std::abs(d.lower - 1.0 / b.upper), 1.0 / b.upper),
                    rel(std::abs(d.upper - 1.0 / b.lower), 1.0 / b.lower));
}

double dual_energy_residual(const Frame& f, Rng& rng) {
    const CMatrix s = frame_operator(f);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const CVector x = rng.gaussian_vector(f.dim());
        const CVector u = hpd_solve(s, x);
        const cplx lhs = inner(x, u);
        const double rhs = coefficient_energy(f, u);
        worst = std::max(worst, rel(std::abs(lhs - cplx{rhs, 0.0}), rhs));
    }
    return worst;
}

double dual_involution_residual(const Frame& f) {
    const Frame dd = canonical_dual(canonical_dual(f));
    double worst = 0.0;
    for (std::size_t n = 0; n < f.count(); ++n)
        worst = std::max(worst, rel((dd[n] - f[n]).norm(), f[n].norm()));
    return worst;
}

double reconstruction_residual(const Frame& f, Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        worst = std::max(worst, reconstruct(f, rng.gaussian_vector(f.dim())).residual);
    return worst;
}

double adjoint_bounds_residual(const OperatorFrame& of) {
    const FrameBounds b = op_frame_bounds(of);
    const OperatorFrame adj = adjoint_frame(of);
    const FrameBounds ab = op_frame_bounds(adj);
    const double scale = std::max(b.upper, tol::abs_floor);
    double worst = std::max(rel(std::abs(ab.lower - b.lower), scale),
                            rel(std::abs(ab.upper - b.upper), scale));
    const OperatorFrame back = adjoint_frame(adj);
    for (std::size_t n = 0; n < of.count(); ++n)
        if (!(back[n] == of[n]))
            worst = std::max(worst, 1.0);
    return worst;
}

double slice_containment_residual(const OperatorFrame& of, Rng& rng) {
    const FrameBounds b = op_frame_bounds(of);
    const CVector y0 = rng.gaussian_vector(of.dim_k());
    const CVector x0 = rng.gaussian_vector(of.dim_h());
    const double ny2 = y0.norm() * y0.norm();
    const double nx2 = x0.norm() * x0.norm();
    const FrameBounds sl = frame_bounds(slice_left(of, y0));
    const FrameBounds sr = frame_bounds(slice_right(of, x0));
    const double viol_l =
        std::max({b.lower * ny2 - sl.lower, sl.upper - b.upper * ny2, 0.0});
    const double viol_r =
        std::max({b.lower * nx2 - sr.lower, sr.upper - b.upper * nx2, 0.0});
    return std::max(rel(viol_l, b.upper * ny2), rel(viol_r, b.upper * nx2));
}

double dual_adjoint_commute_residual(const OperatorFrame& of) {
    const OperatorFrame lhs = op_canonical_dual(adjoint_frame(of));
    const OperatorFrame rhs = adjoint_frame(op_canonical_dual(of));
    return elementwise_residual(lhs, rhs);
}

struct Verifier {
    const VerifyOptions& opts;
    std::vector<CheckResult> results;
    std::map<std::string, std::size_t> next_index;

    Rng rng_for(std::string_view check, std::uint64_t salt) const {
        return Rng(fnv1a(check) ^
                   splitmix64(opts.seed * 0x9e3779b97f4a7c15ULL + salt));
    }

    void record(const std::string& check, std::string desc, double tolerance,
                double residual) {
        CheckResult r;
        r.check = check;
        r.instance_index = next_index[check]++;
        r.instance = std::move(desc);
        r.residual = residual;
        r.tolerance = tolerance;
        r.pass = residual <= tolerance;
        results.push_back(std::move(r));
    }

    template <typename Fn>
    void random_check(const std::string& check, double tolerance, Fn&& fn) {
        for (std::size_t t = 0; t < opts.trials; ++t) {
            Rng rng = rng_for(check, t);
            std::string desc = "trial " + std::to_string(t);
            double residual = error_residual;
            try {
                residual = fn(rng, desc);
            } catch (const std::exception& e) {
                desc += std::string("; error: ") + e.what();
            }
            record(check, std::move(desc), tolerance, residual);
        }
    }

    template <typename Fn>
    void user_instance(const std::string& check, double tolerance,
                       const std::string& label, std::uint64_t salt, Fn&& fn) {
        Rng rng = rng_for(check, 0x8000000000000000ULL + salt);
        std::string desc = label;
        double residual = error_residual;
        try {
            residual = fn(rng);
        } catch (const std::exception& e) {
            desc += std::string("; error: ") + e.what();
        }
        record(check, std::move(desc), tolerance, residual);
    }
};

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (const char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

std::string render_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
    if (opts.trials == 0 && opts.user_frames.empty() && opts.user_operator_frames.empty())
        throw Error("verify: nothing to run (zero trials and no user instances)");

    Verifier v{opts, {}, {}};

    const auto dim24 = [](Rng& rng) { return std::size_t(2 + rng.bits() % 3); };
    const auto count6 = [](Rng& rng, std::size_t dim) {
        return dim + std::size_t(rng.bits() % (7 - dim));
    };
    const auto dim23 = [](Rng& rng) { return std::size_t(2 + rng.bits() % 2); };
    const auto count5 = [](Rng& rng, std::size_t dim) {
        return dim + std::size_t(rng.bits() % 3);
    };
    const auto describe = [](std::string& desc, std::size_t dim, std::size_t count) {
        desc += ", dim=" + std::to_string(dim) + " count=" + std::to_string(count);
    };
    const auto describe2 = [](std::string& desc, std::size_t d1, std::size_t c1,
                              std::size_t d2, std::size_t c2) {
        desc += ", dims=" + std::to_string(d1) + "x" + std::to_string(d2) +
                " counts=" + std::to_string(c1) + "x" + std::to_string(c2);
    };

    // ---- dense linear algebra ----

    v.random_check("eigen_reconstruction", tol::eig,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t d = 2 + rng.bits() % 7;
        desc += ", dim=" + std::to_string(d);
        const CMatrix a = draw_hermitian(rng, d);
        const HermitianEig e = hermitian_eig(a);
        const CMatrix recon =
            e.eigenvectors * diag_real(e.eigenvalues) * dagger(e.eigenvectors);
        return rel(frobenius_norm(recon - a), frobenius_norm(a));
    });

    v.random_check("kron_spectrum", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t da = dim23(rng);
        const std::size_t db = dim23(rng);
        desc += ", dims=" + std::to_string(da) + "x" + std::to_string(db);
        const CMatrix a = draw_hpd(rng, da);
        const CMatrix b = draw_hpd(rng, db);
        const std::vector<double> ea = hermitian_eig(a).eigenvalues;
        const std::vector<double> eb = hermitian_eig(b).eigenvalues;
        std::vector<double> prod;
        prod.reserve(da * db);
        for (const double la : ea)
            for (const double lb : eb)
                prod.push_back(la * lb);
        std::sort(prod.begin(), prod.end());
        const std::vector<double> ek = hermitian_eig(kron(a, b)).eigenvalues;
        double worst = 0.0;
        for (std::size_t i = 0; i < prod.size(); ++i)
            worst = std::max(worst, rel(std::abs(ek[i] - prod[i]), prod.back()));
        return worst;
    });

    v.random_check("hpd_solve_roundtrip", 1e-10, [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t k = 1 + rng.bits() % 3;
        desc += ", dim=" + std::to_string(d) + " rhs=" + std::to_string(k);
        const CMatrix a = draw_hpd(rng, d);
        const CMatrix b = random_gaussian_matrix(d, k, rng);
        const CMatrix x = hpd_solve(a, b);
        return rel(frobenius_norm(a * x - b), frobenius_norm(a) * frobenius_norm(b));
    });

    v.random_check("opnorm_kron_multiplicative", 1e-9,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t da = dim23(rng);
        const std::size_t db = dim23(rng);
        desc += ", dims=" + std::to_string(da) + "x" + std::to_string(db);
        const CMatrix a = random_gaussian_matrix(da, da, rng);
        const CMatrix b = random_gaussian_matrix(db, db, rng);
        const double prod = operator_norm_2(a) * operator_norm_2(b);
        return rel(std::abs(operator_norm_2(kron(a, b)) - prod), prod);
    });

    // ---- frames in one space ----

    v.random_check("frame_inequality", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t c = count6(rng, d);
        describe(desc, d, c);
        return frame_inequality_residual(draw_frame(rng, d, c), rng);
    });

    v.random_check("tight_frame_reconstruction", 1e-10,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t c = count6(rng, d);
        describe(desc, d, c);
        const Frame f = random_tight_frame(d, c, rng.bits());
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const CVector x = rng.gaussian_vector(d);
            const CVector back = synthesis(f, analysis(f, x));
            worst = std::max(worst, rel((back - x).norm(), x.norm()));
        }
        return worst;
    });

    v.random_check("dual_bounds_reciprocal", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t c = count6(rng, d);
        describe(desc, d, c);
        return dual_bounds_residual(draw_frame(rng, d, c));
    });

    v.random_check("dual_energy_identity", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t c = count6(rng, d);
        describe(desc, d, c);
        const Frame f = draw_frame(rng, d, c);
        return dual_energy_residual(f, rng);
    });

    v.random_check("dual_involution", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t c = count6(rng, d);
        describe(desc, d, c);
        return dual_involution_residual(draw_frame(rng, d, c));
    });

    v.random_check("dual_scaling", 1e-10, [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t c = count6(rng, d);
        describe(desc, d, c);
        const Frame f = draw_frame(rng, d, c);
        const Frame fd = canonical_dual(f);
        const cplx lambdas[] = {cplx{2.0, 0.0}, cplx{0.0, 2.0}, cplx{-1.0, 1.0}};
        double worst = 0.0;
        for (const cplx lam : lambdas) {
            const Frame lhs = canonical_dual(scale_frame(f, lam));
            const Frame rhs = scale_frame(fd, cplx{1.0, 0.0} / std::conj(lam));
            for (std::size_t n = 0; n < f.count(); ++n)
                worst = std::max(worst, rel((lhs[n] - rhs[n]).norm(), rhs[n].norm()));
        }
        return worst;
    });

    v.random_check("reconstruction_identities", 1e-9,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t c = count6(rng, d);
        describe(desc, d, c);
        const Frame f = draw_frame(rng, d, c);
        return reconstruction_residual(f, rng);
    });

    // ---- the tensor product as antilinear maps ----

    v.random_check("adjoint_defining_identity", 1e-12,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim24(rng);
        const std::size_t dk = dim24(rng);
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk);
        const HSElement t(random_gaussian_matrix(dh, dk, rng));
        const HSElement ts = adjoint(t);
        const double scale = 1.0 + hs_norm(t);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const CVector x = rng.gaussian_vector(dh);
            const CVector y = rng.gaussian_vector(dk);
            const cplx lhs = inner(apply(ts, x), y);
            const cplx rhs = inner(apply(t, y), x);
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
        return worst;
    });

    v.random_check("parseval_basis_independence", 1e-12,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim24(rng);
        const std::size_t dk = dim24(rng);
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk);
        const HSElement t(random_gaussian_matrix(dh, dk, rng));
        const HSElement ts = adjoint(t);
        double dom = 0.0, ran = 0.0;
        for (std::size_t j = 0; j < dk; ++j) {
            const double a = apply(t, CVector::unit(dk, j)).norm();
            dom += a * a;
        }
        for (std::size_t i = 0; i < dh; ++i) {
            const double a = apply(ts, CVector::unit(dh, i)).norm();
            ran += a * a;
        }
        return rel(std::abs(dom - ran), dom);
    });

    v.random_check("tensor_norm_multiplicative", 1e-12,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim24(rng);
        const std::size_t dk = dim24(rng);
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk);
        const CVector x = rng.gaussian_vector(dh);
        const CVector y = rng.gaussian_vector(dk);
        const double prod = x.norm() * y.norm();
        return rel(std::abs(hs_norm(simple_tensor(x, y)) - prod), prod);
    });

    v.random_check("tensor_inner_factorization", 1e-12,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim24(rng);
        const std::size_t dk = dim24(rng);
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk);
        const CVector x = rng.gaussian_vector(dh);
        const CVector x2 = rng.gaussian_vector(dh);
        const CVector y = rng.gaussian_vector(dk);
        const CVector y2 = rng.gaussian_vector(dk);
        const cplx lhs = hs_inner(simple_tensor(x, y), simple_tensor(x2, y2));
        const cplx rhs = inner(x, x2) * inner(y, y2);
        return rel(std::abs(lhs - rhs),
                   x.norm() * x2.norm() * y.norm() * y2.norm());
    });

    v.random_check("basis_expansion", 1e-12, [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim24(rng);
        const std::size_t dk = dim24(rng);
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk);
        const HSElement t(random_gaussian_matrix(dh, dk, rng));
        const HSExpansion ex = expand_basis(t);
        return std::max(entry_max_diff(ex.over_range.matrix(), t.matrix()),
                        entry_max_diff(ex.over_domain.matrix(), t.matrix()));
    });

    v.random_check("tight_expansion", 1e-10, [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim23(rng);
        const std::size_t dk = dim23(rng);
        const std::size_t ch = count6(rng, dh);
        const std::size_t ck = count6(rng, dk);
        describe2(desc, dh, ch, dk, ck);
        const Frame fh = random_tight_frame(dh, ch, rng.bits());
        const Frame fk = random_tight_frame(dk, ck, rng.bits());
        const HSElement t(random_gaussian_matrix(dh, dk, rng));
        const HSExpansion ex = expand_tight(t, fh, fk);
        const double scale = frobenius_norm(t.matrix());
        return std::max(rel(frobenius_norm(ex.over_range.matrix() - t.matrix()), scale),
                        rel(frobenius_norm(ex.over_domain.matrix() - t.matrix()), scale));
    });

    v.random_check("tight_inner_formula", 1e-10, [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim24(rng);
        const std::size_t dk = dim24(rng);
        const std::size_t c1 = count6(rng, dk);
        const std::size_t c2 = count6(rng, dk);
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk);
        const Frame fk1 = random_tight_frame(dk, c1, rng.bits());
        const Frame fk2 = random_tight_frame(dk, c2, rng.bits());
        const HSElement q(random_gaussian_matrix(dh, dk, rng));
        const HSElement t(random_gaussian_matrix(dh, dk, rng));
        const cplx base = hs_inner(q, t);
        const double scale = hs_norm(q) * hs_norm(t);
        return std::max(rel(std::abs(tight_inner(q, t, fk1) - base), scale),
                        rel(std::abs(tight_inner(q, t, fk2) - base), scale));
    });

    v.random_check("tight_energy_invariance", 1e-10,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim24(rng);
        const std::size_t dk = dim24(rng);
        const std::size_t c1 = count6(rng, dk);
        const std::size_t c2 = count6(rng, dk);
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk);
        const Frame fk1 = random_tight_frame(dk, c1, rng.bits());
        const Frame fk2 = random_tight_frame(dk, c2, rng.bits());
        const HSElement t(random_gaussian_matrix(dh, dk, rng));
        const double n2 = hs_norm(t) * hs_norm(t);
        const double e1 = tight_energy(t, fk1);
        const double e2 = tight_energy(t, fk2);
        return std::max(rel(std::abs(e1 - n2), n2), rel(std::abs(e1 - e2), n2));
    });

    // ---- frame constructions in the tensor product ----

    v.random_check("product_bounds", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const Frame f1 = draw_frame(rng, d1, c1);
        const Frame f2 = draw_frame(rng, d2, c2);
        const FrameBounds b1 = frame_bounds(f1);
        const FrameBounds b2 = frame_bounds(f2);
        const FrameBounds ob = op_frame_bounds(tensor_operator_frame(f1, f2));
        return std::max(
            rel(std::abs(ob.lower - b1.lower * b2.lower), b1.lower * b2.lower),
            rel(std::abs(ob.upper - b1.upper * b2.upper), b1.upper * b2.upper));
    });

    v.random_check("product_bounds_triple", 1e-9, [&](Rng& rng, std::string& desc) {
        std::vector<Frame> factors;
        double lo = 1.0, hi = 1.0;
        for (int i = 0; i < 3; ++i) {
            const std::size_t c = 2 + rng.bits() % 2;
            factors.push_back(draw_frame(rng, 2, c));
            const FrameBounds b = frame_bounds(factors.back());
            lo *= b.lower;
            hi *= b.upper;
        }
        desc += ", dims=2x2x2";
        const FrameBounds tb = frame_bounds(tensor_frame(factors));
        return std::max(rel(std::abs(tb.lower - lo), lo),
                        rel(std::abs(tb.upper - hi), hi));
    });

    v.random_check("analysis_energy_bracket", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const Frame f1 = draw_frame(rng, d1, c1);
        const Frame f2 = draw_frame(rng, d2, c2);
        const HSElement t(random_gaussian_matrix(d1, d2, rng));
        double energy = 0.0;
        for (std::size_t m = 0; m < f2.count(); ++m) {
            const double a = apply(t, f2[m]).norm();
            energy += a * a;
        }
        double total = 0.0;
        for (std::size_t n = 0; n < f1.count(); ++n)
            for (std::size_t m = 0; m < f2.count(); ++m) {
                const double a = std::abs(hs_inner(t, simple_tensor(f1[n], f2[m])));
                total += a * a;
            }
        const FrameBounds b = frame_bounds(f1);
        const double slack =
            std::max({b.lower * energy - total, total - b.upper * energy, 0.0});
        return rel(slack, b.upper * energy);
    });

    v.random_check("component_energy_bracket", 1e-9,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c2 = count5(rng, d2);
        desc += ", dims=" + std::to_string(d1) + "x" + std::to_string(d2) +
                " count=" + std::to_string(c2);
        const Frame f2 = draw_frame(rng, d2, c2);
        const HSElement t(random_gaussian_matrix(d1, d2, rng));
        double energy = 0.0;
        for (std::size_t m = 0; m < f2.count(); ++m) {
            const double a = apply(t, f2[m]).norm();
            energy += a * a;
        }
        const double n2 = hs_norm(t) * hs_norm(t);
        const FrameBounds b = frame_bounds(f2);
        const double slack =
            std::max({b.lower * n2 - energy, energy - b.upper * n2, 0.0});
        return rel(slack, b.upper * n2);
    });

    v.random_check("tight_tensor_closure", 1e-10, [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const Frame f1 = random_tight_frame(d1, c1, rng.bits());
        const Frame f2 = random_tight_frame(d2, c2, rng.bits());
        const FrameBounds b = op_frame_bounds(tensor_operator_frame(f1, f2));
        return std::max(std::abs(b.lower - 1.0), std::abs(b.upper - 1.0));
    });

    v.random_check("slice_bound_containment", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const OperatorFrame of =
            tensor_operator_frame(draw_frame(rng, d1, c1), draw_frame(rng, d2, c2));
        return slice_containment_residual(of, rng);
    });

    v.random_check("slice_tight_constant", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const Frame f1 = scale_frame(random_tight_frame(d1, c1, rng.bits()),
                                     draw_nonzero_scalar(rng));
        const Frame f2 = scale_frame(random_tight_frame(d2, c2, rng.bits()),
                                     draw_nonzero_scalar(rng));
        const OperatorFrame of = tensor_operator_frame(f1, f2);
        const FrameBounds b = op_frame_bounds(of);
        const CVector y0 = rng.gaussian_vector(d2);
        const CVector x0 = rng.gaussian_vector(d1);
        const double cl = b.lower * y0.norm() * y0.norm();
        const double cr = b.lower * x0.norm() * x0.norm();
        const FrameBounds sl = frame_bounds(slice_left(of, y0));
        const FrameBounds sr = frame_bounds(slice_right(of, x0));
        return std::max(
            std::max(rel(std::abs(sl.lower - cl), cl), rel(std::abs(sl.upper - cl), cl)),
            std::max(rel(std::abs(sr.lower - cr), cr), rel(std::abs(sr.upper - cr), cr)));
    });

    v.random_check("sandwich_composition", 1e-12, [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = 2 + rng.bits() % 2;
        const std::size_t c2 = 2 + rng.bits() % 2;
        describe2(desc, d1, c1, d2, c2);
        const OperatorFrame of =
            tensor_operator_frame(draw_frame(rng, d1, c1 + d1 - 2),
                                  draw_frame(rng, d2, c2 + d2 - 2));
        const CVector y0 = rng.gaussian_vector(d2);
        const CVector x0 = rng.gaussian_vector(d1);
        const OperatorFrame sw = sandwich_frame(of, y0, x0);
        const HSElement bridge = simple_tensor(y0, x0);
        double worst = op_frame_bounds(sw).is_frame ? 0.0 : 1.0;
        for (std::size_t n = 0; n < of.count(); ++n)
            for (std::size_t m = 0; m < of.count(); ++m) {
                CMatrix comp(d1, d2);
                for (std::size_t j = 0; j < d2; ++j) {
                    const CVector col = apply(
                        of[n], apply(bridge, apply(of[m], CVector::unit(d2, j))));
                    for (std::size_t i = 0; i < d1; ++i)
                        comp(i, j) = col[i];
                }
                const HSElement& el = sw[n * of.count() + m];
                worst = std::max(
                    worst, rel(entry_max_diff(el.matrix(), comp), hs_norm(el)));
            }
        return worst;
    });

    v.random_check("transform_containment", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const OperatorFrame of =
            tensor_operator_frame(draw_frame(rng, d1, c1), draw_frame(rng, d2, c2));
        const FrameBounds b = op_frame_bounds(of);
        const CMatrix q = draw_well_conditioned(rng, d1);
        const CMatrix r = draw_well_conditioned(rng, d2);
        const std::optional<CMatrix> none;
        const struct {
            std::optional<CMatrix> q, r;
        } variants[] = {{q, none}, {none, r}, {q, r}};
        double worst = 0.0;
        for (const auto& [qo, ro] : variants) {
            const FrameBounds tb = op_frame_bounds(transform(of, qo, ro));
            const double qmin = qo ? smallest_singular_value(*qo) : 1.0;
            const double qmax = qo ? operator_norm_2(*qo) : 1.0;
            const double rmin = ro ? smallest_singular_value(*ro) : 1.0;
            const double rmax = ro ? operator_norm_2(*ro) : 1.0;
            const double lo = b.lower * qmin * qmin * rmin * rmin;
            const double hi = b.upper * qmax * qmax * rmax * rmax;
            const double slack = std::max({lo - tb.lower, tb.upper - hi, 0.0});
            worst = std::max(worst, rel(slack, hi));
        }
        return worst;
    });

    v.random_check("transform_unitary_invariance", 1e-9,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const OperatorFrame of =
            tensor_operator_frame(draw_frame(rng, d1, c1), draw_frame(rng, d2, c2));
        const FrameBounds b = op_frame_bounds(of);
        const FrameBounds tb = op_frame_bounds(transform(
            of, draw_unitary(rng, d1), draw_unitary(rng, d2)));
        return std::max(rel(std::abs(tb.lower - b.lower), b.lower),
                        rel(std::abs(tb.upper - b.upper), b.upper));
    });

    v.random_check("adjoint_bound_equality", 1e-10, [&](Rng& rng, std::string& desc) {
        const std::size_t dh = dim23(rng);
        const std::size_t dk = dim23(rng);
        const std::size_t c = 2 + rng.bits() % 5;
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk) +
                " count=" + std::to_string(c);
        return adjoint_bounds_residual(draw_op_frame(rng, dh, dk, c));
    });

    v.random_check("frame_operator_factorization", 1e-10,
                   [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const Frame f1 = draw_frame(rng, d1, c1);
        const Frame f2 = draw_frame(rng, d2, c2);
        const OperatorFrame of = tensor_operator_frame(f1, f2);
        const HSElement t(random_gaussian_matrix(d1, d2, rng));
        const CMatrix brute = op_frame_operator_apply(of, t).matrix();
        const CMatrix fact = factored_frame_operator(f1, f2, t).matrix();
        const CMatrix kr = unvec(
            kron(frame_operator(f1), frame_operator(f2)) * vec(t.matrix()), d1, d2);
        const double scale = frobenius_norm(brute);
        return std::max({rel(frobenius_norm(brute - fact), scale),
                         rel(frobenius_norm(brute - kr), scale),
                         rel(frobenius_norm(fact - kr), scale)});
    });

    v.random_check("dual_of_product", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t d1 = dim23(rng);
        const std::size_t d2 = dim23(rng);
        const std::size_t c1 = count5(rng, d1);
        const std::size_t c2 = count5(rng, d2);
        describe2(desc, d1, c1, d2, c2);
        const Frame f1 = draw_frame(rng, d1, c1);
        const Frame f2 = draw_frame(rng, d2, c2);
        const OperatorFrame of = tensor_operator_frame(f1, f2);
        const OperatorFrame lhs = op_canonical_dual(of);
        const OperatorFrame rhs =
            tensor_operator_frame(canonical_dual(f1), canonical_dual(f2));
        double worst = elementwise_residual(lhs, rhs);
        const HSElement t(random_gaussian_matrix(d1, d2, rng));
        const HSElement back =
            op_frame_operator_apply(lhs, op_frame_operator_apply(of, t));
        worst = std::max(worst, rel(frobenius_norm(back.matrix() - t.matrix()),
                                    frobenius_norm(t.matrix())));
        return worst;
    });

    v.random_check("dual_adjoint_commute", 1e-9, [&](Rng& rng, std::string& desc) {
        const std::size_t dh = 2;
        const std::size_t dk = dim23(rng);
        const std::size_t c = dh * dk + rng.bits() % 3;
        desc += ", dims=" + std::to_string(dh) + "x" + std::to_string(dk) +
                " count=" + std::to_string(c);
        return dual_adjoint_commute_residual(draw_op_frame(rng, dh, dk, c));
    });

    v.random_check("serialization_roundtrip", 0.0, [&](Rng& rng, std::string& desc) {
        const std::size_t d = dim24(rng);
        const std::size_t c = count6(rng, d);
        describe(desc, d, c);
        const Frame f = draw_frame(rng, d, c);
        const Frame back = std::get<Frame>(parse_file(to_json(f)));
        bool same = back.dim() == f.dim() && back.count() == f.count();
        for (std::size_t n = 0; same && n < f.count(); ++n)
            same = back[n] == f[n];
        const OperatorFrame of = draw_op_frame(rng, d, 2, c);
        const OperatorFrame oback = std::get<OperatorFrame>(parse_file(to_json(of)));
        bool osame = oback.count() == of.count();
        for (std::size_t n = 0; osame && n < of.count(); ++n)
            osame = oback[n] == of[n];
        const CVector x = rng.gaussian_vector(d);
        const CVector xback = std::get<CVector>(parse_file(to_json(x)));
        return (same && osame && xback == x) ? 0.0 : 1.0;
    });

    // ---- user-supplied instances ----

    for (std::size_t i = 0; i < opts.user_frames.size(); ++i) {
        const Frame& f = opts.user_frames[i];
        const std::string label = "user frame " + std::to_string(i) + ", dim=" +
                                  std::to_string(f.dim()) + " count=" +
                                  std::to_string(f.count());
        v.user_instance("frame_inequality", 1e-9, label, i,
                        [&](Rng& rng) { return frame_inequality_residual(f, rng); });
        v.user_instance("dual_bounds_reciprocal", 1e-9, label, i,
                        [&](Rng&) { return dual_bounds_residual(f); });
        v.user_instance("dual_energy_identity", 1e-9, label, i,
                        [&](Rng& rng) { return dual_energy_residual(f, rng); });
        v.user_instance("dual_involution", 1e-9, label, i,
                        [&](Rng&) { return dual_involution_residual(f); });
        v.user_instance("reconstruction_identities", 1e-9, label, i,
                        [&](Rng& rng) { return reconstruction_residual(f, rng); });
    }
    for (std::size_t i = 0; i < opts.user_operator_frames.size(); ++i) {
        const OperatorFrame& of = opts.user_operator_frames[i];
        const std::string label = "user operator frame " + std::to_string(i) +
                                  ", dims=" + std::to_string(of.dim_h()) + "x" +
                                  std::to_string(of.dim_k()) + " count=" +
                                  std::to_string(of.count());
        v.user_instance("adjoint_bound_equality", 1e-10, label, i,
                        [&](Rng&) { return adjoint_bounds_residual(of); });
        v.user_instance("slice_bound_containment", 1e-9, label, i,
                        [&](Rng& rng) { return slice_containment_residual(of, rng); });
        v.user_instance("dual_adjoint_commute", 1e-9, label, i,
                        [&](Rng&) { return dual_adjoint_commute_residual(of); });
    }

    VerifyReport report;
    report.results = std::move(v.results);
    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         if (a.check != b.check)
                             return a.check < b.check;
                         return a.instance_index < b.instance_index;
                     });
    for (const CheckResult& r : report.results)
        (r.pass ? report.passed : report.failed) += 1;
    return report;
}

std::string render_text(const VerifyReport& report) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-32s %9s %7s %13s %10s  %s\n", "check",
                  "instances", "failed", "max residual", "tolerance", "status");
    out += line;
    std::size_t i = 0;
    while (i < report.results.size()) {
        std::size_t j = i;
        std::size_t failed = 0;
        double worst = 0.0;
        while (j < report.results.size() &&
               report.results[j].check == report.results[i].check) {
            failed += report.results[j].pass ? 0 : 1;
            worst = std::max(worst, report.results[j].residual);
            ++j;
        }
        std::snprintf(line, sizeof(line), "%-32s %9zu %7zu %13.3e %10.1e  %s\n",
                      report.results[i].check.c_str(), j - i, failed, worst,
                      report.results[i].tolerance, failed == 0 ? "pass" : "FAIL");
        out += line;
        i = j;
    }
    std::snprintf(line, sizeof(line),
                  "\n%zu instances: %zu passed, %zu failed -> %s\n",
                  report.results.size(), report.passed, report.failed,
                  report.all_pass() ? "PASS" : "FAIL");
    out += line;
    return out;
}

std::string render_machine(const VerifyReport& report) {
    std::string out = "{\n  \"schema_version\": 1,\n  \"kind\": \"verify_report\",\n";
    out += "  \"checks\": [\n";
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        const CheckResult& r = report.results[i];
        out += "    {\"check\": \"" + json_escape(r.check) + "\", \"instance\": \"" +
               json_escape(r.instance) + "\", \"residual\": " + render_double(r.residual) +
               ", \"tolerance\": " + render_double(r.tolerance) + ", \"pass\": " +
               (r.pass ? "true" : "false") + "}";
        out += i + 1 < report.results.size() ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"summary\": {\"total\": " + std::to_string(report.results.size()) +
           ", \"passed\": " + std::to_string(report.passed) +
           ", \"failed\": " + std::to_string(report.failed) + "}\n}\n";
    return out;
}

} // namespace framekit
