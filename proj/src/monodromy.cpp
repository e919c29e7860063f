#include "lemni/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

namespace lemni {

namespace {

using cplx = std::complex<double>;

bool location_less(const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

double coeff_norm_inf(const NumPoly& p) {
    double n = 0.0;
    for (const auto& c : p.coeffs()) n = std::max(n, std::abs(c));
    return n;
}

// Newton refinement that keeps the best iterate seen; multiple roots make
// plain iteration oscillate near the attainable accuracy.
cplx polish_root(const NumPoly& p, const NumPoly& dp, cplx w) {
    cplx best = w;
    double best_res = std::abs(eval(p, w));
    for (int it = 0; it < 12; ++it) {
        const cplx d = eval(dp, w);
        if (d == 0.0) break;
        w -= eval(p, w) / d;
        const double res = std::abs(eval(p, w));
        if (res < best_res) {
            best_res = res;
            best = w;
        }
    }
    return best;
}

} // namespace

std::vector<cplx> univariate_roots(const NumPoly& p) {
    if (p.degree() < 1) throw ZeroOrConstantInput("root finding needs degree >= 1");
    const int n = p.degree();
    const cplx lc = p.leading();

    std::vector<cplx> roots;
    if (n == 1) {
        roots.push_back(-p.coeff(0) / lc);
    } else {
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 0; i < n - 1; ++i) companion(i + 1, i) = 1.0;
        for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / lc;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        if (solver.info() != Eigen::Success) throw ConvergenceFailure("eigenvalue solver failed");
        for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
    }

    const NumPoly dp = derivative(p);
    const double scale = coeff_norm_inf(p);
    for (auto& r : roots) {
        r = polish_root(p, dp, r);
        const double bound = 1e-10 * scale * std::pow(std::max(1.0, std::abs(r)), n);
        if (!(std::abs(eval(p, r)) <= bound))
            throw ConvergenceFailure("root residual above tolerance");
    }
    std::sort(roots.begin(), roots.end(), location_less);
    return roots;
}

std::vector<cplx> univariate_roots(const ExactPoly& p) {
    std::vector<cplx> roots;
    for (const auto& part : squarefree_decompose(p).parts)
        for (const auto& r : univariate_roots(to_numeric(part.factor)))
            for (int k = 0; k < part.exponent; ++k) roots.push_back(r);
    std::sort(roots.begin(), roots.end(), location_less);
    return roots;
}

std::vector<cplx> distinct_roots(const ExactPoly& p) {
    std::vector<cplx> roots;
    for (const auto& part : squarefree_decompose(p).parts)
        for (const auto& r : univariate_roots(to_numeric(part.factor))) roots.push_back(r);
    std::sort(roots.begin(), roots.end(), location_less);
    return roots;
}

namespace {

std::vector<cplx> dedupe_points(std::vector<cplx> pts, double tol) {
    std::sort(pts.begin(), pts.end(), location_less);
    std::vector<cplx> sums;
    std::vector<int> counts;
    for (const auto& p : pts) {
        bool merged = false;
        for (std::size_t k = 0; k < sums.size(); ++k) {
            if (std::abs(p - sums[k] / static_cast<double>(counts[k])) <= tol) {
                sums[k] += p;
                ++counts[k];
                merged = true;
                break;
            }
        }
        if (!merged) {
            sums.push_back(p);
            counts.push_back(1);
        }
    }
    std::vector<cplx> out;
    for (std::size_t k = 0; k < sums.size(); ++k)
        out.push_back(sums[k] / static_cast<double>(counts[k]));
    std::sort(out.begin(), out.end(), location_less);
    return out;
}

} // namespace

std::vector<cplx> branch_points(const ExactPoly& p, const ExactPoly& q) {
    if (p.degree() < 1 || q.degree() < 1)
        throw ZeroOrConstantInput("branch points need two non-constant polynomials");

    std::vector<cplx> pts = distinct_roots(p);
    if (q.degree() >= 2) {
        const NumPoly pn = to_numeric(p);
        for (const auto& w_crit : distinct_roots(derivative(q))) {
            const cplx v = eval_numeric(q, w_crit);
            if (std::abs(v) <= 1e-10) continue; // v = 0 has no finite preimage of 1/v
            std::vector<cplx> shifted(pn.coeffs());
            shifted[0] -= 1.0 / v;
            for (const auto& z : univariate_roots(NumPoly(pn.var(), std::move(shifted))))
                pts.push_back(z);
        }
    }
    return dedupe_points(std::move(pts), 1e-8);
}

FiberData fiber_at(const ExactPoly& p, const ExactPoly& q, cplx base, double min_separation) {
    const cplx pz = eval_numeric(p, base);
    if (std::abs(pz) < 1e-12) throw DegenerateBasepoint("basepoint too close to a zero of P");

    NumPoly qn = to_numeric(q);
    std::vector<cplx> shifted(qn.coeffs());
    shifted[0] -= 1.0 / pz;
    FiberData fiber{base, univariate_roots(NumPoly(qn.var(), std::move(shifted)))};
    for (std::size_t i = 0; i < fiber.roots_w.size(); ++i)
        for (std::size_t j = i + 1; j < fiber.roots_w.size(); ++j)
            if (std::abs(fiber.roots_w[i] - fiber.roots_w[j]) <= min_separation)
                throw DegenerateBasepoint("fiber roots too close at basepoint");
    return fiber;
}

namespace {

struct Tracker {
    NumPoly pn, qn, dqn;
    std::vector<double> qabs; // |q_k|, for the evaluation noise floor

    explicit Tracker(const ExactPoly& p, const ExactPoly& q)
        : pn(to_numeric(p)), qn(to_numeric(q)), dqn(derivative(qn)) {
        for (const auto& c : qn.coeffs()) qabs.push_back(std::abs(c));
    }

    cplx target(cplx z) const { return 1.0 / eval(pn, z); }

    double eval_noise(double w_mag, double s_mag) const {
        double acc = 0.0;
        for (std::size_t k = qabs.size(); k-- > 0;) acc = acc * w_mag + qabs[k];
        return std::numeric_limits<double>::epsilon() * (acc + s_mag);
    }

    // Newton on Q(w) = s from the predictor w. Converged once the residual
    // reaches the evaluation noise floor (a relative step criterion alone is
    // unattainable when the coefficients dwarf the residual).
    bool correct(cplx& w, cplx s) const {
        for (int it = 0; it < 40; ++it) {
            const cplx fw = eval(qn, w) - s;
            if (std::abs(fw) <= 32.0 * eval_noise(std::abs(w), std::abs(s))) return true;
            const cplx d = eval(dqn, w);
            if (d == 0.0) return false;
            const cplx dw = fw / d;
            w -= dw;
            if (std::abs(dw) <= 1e-13 * std::max(1.0, std::abs(w))) return true;
        }
        return false;
    }

    // One corrector move of the whole fiber to the target value at z. False
    // when a root stalls, moves by a sheet-distance-sized amount, lands
    // nearer some other root's predecessor than its own (a sheet swap), or
    // two roots land on top of each other.
    bool try_step(std::vector<cplx>& roots, cplx z) const {
        const cplx s = target(z);
        const std::size_t n = roots.size();
        std::vector<double> sep(n, std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = std::abs(roots[i] - roots[j]);
                sep[i] = std::min(sep[i], d);
                sep[j] = std::min(sep[j], d);
            }
        std::vector<cplx> next = roots;
        for (std::size_t i = 0; i < n; ++i) {
            if (!correct(next[i], s)) return false;
            if (std::abs(next[i] - roots[i]) > 0.4 * sep[i]) return false;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && std::abs(next[i] - roots[j]) <= std::abs(next[i] - roots[i]))
                    return false;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::abs(next[i] - next[j]) <= 1e-12 * std::max(1.0, std::abs(next[i])))
                    return false;
        roots = std::move(next);
        return true;
    }

    // Continuation from z = from to z = to, bisecting wherever the corrector
    // loses its footing (a segment passing near another branch point, say).
    // Bottoming out means the path runs through a degenerate fiber.
    //
    // The fiber moves with the target value s = 1/P(z), so the step also has
    // to resolve the motion of s itself: near a root of P, arg(s) swings by
    // multiples of pi and the large-|s| fiber is a near-regular root ring --
    // a step that rotates the ring by about one slot aliases to a coherent
    // sheet shift that no per-root guard can see.
    void advance(std::vector<cplx>& roots, cplx from, cplx to, int depth = 0) const {
        const cplx s_from = target(from), s_to = target(to);
        const double ratio = std::abs(s_to) / std::abs(s_from);
        const bool s_resolved =
            ratio > 0.75 && ratio < 4.0 / 3.0 && std::abs(std::arg(s_to / s_from)) < 0.35;
        if (s_resolved) {
            std::vector<cplx> attempt = roots;
            if (try_step(attempt, to)) {
                roots = std::move(attempt);
                return;
            }
        }
        if (depth >= 24) throw PathCollision("path passes through a degenerate fiber");
        const cplx mid = 0.5 * (from + to);
        advance(roots, from, mid, depth + 1);
        advance(roots, mid, to, depth + 1);
    }

    void advance_path(std::vector<cplx>& roots, cplx start,
                      const std::vector<cplx>& waypoints) const {
        cplx cur = start;
        for (const cplx& z : waypoints) {
            advance(roots, cur, z);
            cur = z;
        }
    }
};

std::vector<cplx> circle_path(cplx center, cplx from, int steps) {
    std::vector<cplx> path;
    path.reserve(static_cast<std::size_t>(steps));
    const cplx offset = from - center;
    for (int k = 1; k <= steps; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / steps;
        path.push_back(center + offset * cplx(std::cos(theta), std::sin(theta)));
    }
    return path;
}

std::vector<cplx> segment_path(cplx from, cplx to, int steps) {
    std::vector<cplx> path;
    path.reserve(static_cast<std::size_t>(steps));
    for (int k = 1; k <= steps; ++k)
        path.push_back(from + (to - from) * (static_cast<double>(k) / steps));
    return path;
}

std::vector<int> match_to_fiber(const std::vector<cplx>& tracked,
                                const std::vector<cplx>& fiber_roots) {
    std::vector<int> perm(tracked.size(), -1);
    std::vector<bool> taken(fiber_roots.size(), false);
    for (std::size_t i = 0; i < tracked.size(); ++i) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        double second_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < fiber_roots.size(); ++j) {
            const double d = std::abs(tracked[i] - fiber_roots[j]);
            if (d < best_d) {
                second_d = best_d;
                best_d = d;
                best = static_cast<int>(j);
            } else {
                second_d = std::min(second_d, d);
            }
        }
        if (best_d > 0.0 && second_d < 10.0 * best_d)
            throw MatchingAmbiguity("closest fiber roots within 10:1 of each other");
        if (taken[static_cast<std::size_t>(best)])
            throw MatchingAmbiguity("two tracked roots matched the same fiber root");
        taken[static_cast<std::size_t>(best)] = true;
        perm[i] = best;
    }
    return perm;
}

} // namespace

LoopResult track_loop(const ExactPoly& p, const ExactPoly& q, const FiberData& fiber,
                      cplx center, double radius, int steps) {
    if (std::abs(fiber.base_z - center) <= radius)
        throw Error("basepoint lies inside the loop disc");
    const Tracker tracker(p, q);

    for (int halving = 0; halving < 2; ++halving) {
        const int n = steps << halving; // one adaptive halving level
        try {
            const cplx dir = (fiber.base_z - center) / std::abs(fiber.base_z - center);
            const cplx entry = center + radius * dir;
            std::vector<cplx> roots = fiber.roots_w;
            tracker.advance_path(roots, fiber.base_z, segment_path(fiber.base_z, entry, n));
            tracker.advance_path(roots, entry, circle_path(center, entry, n));
            tracker.advance_path(roots, entry, segment_path(entry, fiber.base_z, n));

            LoopResult result;
            result.permutation = match_to_fiber(roots, fiber.roots_w);
            const cplx s = tracker.target(fiber.base_z);
            for (const auto& w : roots)
                result.return_residual =
                    std::max(result.return_residual, std::abs(eval(tracker.qn, w) - s));
            return result;
        } catch (const PathCollision&) {
            if (halving == 1) throw;
        }
    }
    throw PathCollision(); // unreachable
}

int local_monodromy_cycles(const ExactPoly& p, const ExactPoly& q, cplx center, double radius,
                           int steps) {
    const Tracker tracker(p, q);
    const double golden = 2.399963229728653; // offsets successive entry angles

    for (int attempt = 0; attempt < 8; ++attempt) {
        const double theta = attempt * golden;
        const cplx entry = center + radius * cplx(std::cos(theta), std::sin(theta));
        FiberData fiber;
        try {
            fiber = fiber_at(p, q, entry, 1e-6);
        } catch (const DegenerateBasepoint&) {
            continue;
        }
        for (int halving = 0; halving < 2; ++halving) {
            try {
                std::vector<cplx> roots = fiber.roots_w;
                tracker.advance_path(roots, entry, circle_path(center, entry, steps << halving));
                const std::vector<int> perm = match_to_fiber(roots, fiber.roots_w);
                int cycles = 0;
                std::vector<bool> seen(perm.size(), false);
                for (std::size_t i = 0; i < perm.size(); ++i) {
                    if (seen[i]) continue;
                    ++cycles;
                    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j]))
                        seen[j] = true;
                }
                return cycles;
            } catch (const PathCollision&) {
                if (halving == 1) break; // try the next entry angle
            } catch (const MatchingAmbiguity&) {
                break;
            }
        }
    }
    throw ConvergenceFailure("local monodromy tracking failed for all entry angles");
}

std::vector<std::vector<int>> permutation_orbits(const std::vector<std::vector<int>>& perms,
                                                 int n) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& perm : perms)
        for (int i = 0; i < n; ++i) {
            const int a = find(i), b = find(perm[static_cast<std::size_t>(i)]);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }

    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int root = find(i);
        if (orbit_of[static_cast<std::size_t>(root)] < 0) {
            orbit_of[static_cast<std::size_t>(root)] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(root)])].push_back(i);
    }
    return orbits;
}

MonodromyCertificate component_count(const ExactPoly& p, const ExactPoly& q, std::uint64_t seed) {
    if (p.degree() < 1 || q.degree() < 1)
        throw ZeroOrConstantInput("component count needs two non-constant polynomials");

    const std::vector<cplx> bps = branch_points(p, q);
    double max_mag = 0.0;
    for (const auto& b : bps) max_mag = std::max(max_mag, std::abs(b));
    const double base_radius = 1.5 * (1.0 + max_mag);

    std::vector<double> loop_radius(bps.size(), 1.0);
    for (std::size_t i = 0; i < bps.size(); ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < bps.size(); ++j)
            if (j != i) nearest = std::min(nearest, std::abs(bps[i] - bps[j]));
        loop_radius[i] = std::min(nearest / 3.0, 1.0);
    }

    for (int attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(attempt));
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

        FiberData fiber;
        bool have_fiber = false;
        for (int draw = 0; draw < 32 && !have_fiber; ++draw) {
            const double theta = angle(rng);
            try {
                fiber = fiber_at(p, q, base_radius * cplx(std::cos(theta), std::sin(theta)));
                have_fiber = true;
            } catch (const DegenerateBasepoint&) {
            } catch (const ConvergenceFailure&) {
            }
        }
        if (!have_fiber) throw DegenerateBasepoint("no generic basepoint after 32 draws");

        try {
            MonodromyCertificate cert;
            cert.branch_points = bps;
            for (std::size_t i = 0; i < bps.size(); ++i)
                cert.permutations.push_back(
                    track_loop(p, q, fiber, bps[i], loop_radius[i]).permutation);
            cert.orbits = permutation_orbits(cert.permutations, q.degree());
            cert.orbit_count = static_cast<int>(cert.orbits.size());
            return cert;
        } catch (const PathCollision&) {
            if (attempt >= 2) throw;
        } catch (const MatchingAmbiguity&) {
            if (attempt >= 2) throw;
        } catch (const ConvergenceFailure&) {
            if (attempt >= 2) throw;
        }
    }
}

} // namespace lemni
