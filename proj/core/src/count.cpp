#include "cy8/count.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "cy8/parallel.hpp"

namespace cy8 {

namespace {

// normalized representatives of P^{n-1}(F_p) indexed 0..(p^{n-1}+...+1)-1:
// leading block of zeros, then 1, then free coordinates
struct ProjectiveReps {
    unsigned n;
    std::uint64_t p;
    std::vector<std::uint64_t> block_size;  // p^{n-lead-1}

    ProjectiveReps(unsigned n_, std::uint64_t p_) : n(n_), p(p_) {
        for (unsigned lead = 0; lead < n; ++lead) {
            std::uint64_t b = 1;
            for (unsigned i = 0; i + lead + 1 < n; ++i) b *= p;
            block_size.push_back(b);
        }
    }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto b : block_size) t += b;
        return t;
    }
    void decode(std::uint64_t idx, std::uint64_t* pt) const {
        for (unsigned lead = 0; lead < n; ++lead) {
            if (idx >= block_size[lead]) {
                idx -= block_size[lead];
                continue;
            }
            for (unsigned i = 0; i < lead; ++i) pt[i] = 0;
            pt[lead] = 1;
            for (unsigned i = lead + 1; i < n; ++i) {
                pt[i] = idx % p;
                idx /= p;
            }
            return;
        }
        throw std::logic_error("ProjectiveReps: index out of range");
    }
};

}  // namespace

std::uint64_t count_double_octic(const Poly& branch, const PrimeField& F, unsigned width) {
    if (!branch.homogeneous(8)) throw std::invalid_argument("count_double_octic: branch must be an octic form");
    if (branch.vars().size() != 4) throw std::invalid_argument("count_double_octic: branch must live in P^3");
    Poly scaled = branch * (Rat(1) / branch.content());
    ReducedForm rf(scaled.to_form(), F);
    ProjectiveReps reps(4, F.p());
    return parallel_chunked_sum<std::uint64_t>(reps.total(), width, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t pt[4];
        std::uint64_t acc = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            reps.decode(i, pt);
            acc += static_cast<std::uint64_t>(1 + F.legendre(rf.eval(pt, F)));
        }
        return acc;
    });
}

std::uint64_t count_quadric_intersection(const std::vector<Poly>& quadrics, const PrimeField& F, unsigned width) {
    if (quadrics.size() != 4) throw std::invalid_argument("count_quadric_intersection: need four quadrics");
    std::vector<ReducedForm> rf;
    bool all_zero = true;
    for (const auto& q : quadrics) {
        if (!q.homogeneous(2)) throw std::invalid_argument("count_quadric_intersection: non-quadric form");
        all_zero &= q.is_zero();
        rf.emplace_back(q.to_form(), F);
    }
    if (all_zero) throw std::invalid_argument("count_quadric_intersection: all forms are zero");
    std::uint64_t p = F.p();
    std::uint64_t total = p * p * p * p;
    std::uint64_t cone = parallel_chunked_sum<std::uint64_t>(total, width, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t pt[4];
        std::uint64_t acc = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::uint64_t k = i;
            pt[0] = k % p;
            k /= p;
            pt[1] = k % p;
            k /= p;
            pt[2] = k % p;
            pt[3] = k / p;
            std::uint64_t prod = 1;
            for (const auto& f : rf) {
                prod *= static_cast<std::uint64_t>(1 + F.legendre(f.eval(pt, F)));
                if (prod == 0) break;
            }
            acc += prod;
        }
        return acc;
    });
    if ((cone - 1) % (p - 1) != 0)
        throw std::logic_error("count_quadric_intersection: cone count " + std::to_string(cone) +
                               " not congruent to 1 mod p-1 (engine bug)");
    return (cone - 1) / (p - 1);
}

std::uint64_t count_fermi(const PrimeField& F) {
    std::uint64_t p = F.p();
    std::vector<std::uint64_t> hist(p, 0);
    for (std::uint64_t x = 1; x < p; ++x) {
        for (std::uint64_t y = 1; y < p; ++y) {
            std::uint64_t g = F.mul(F.mul(F.add(x, y), F.add(F.mul(x, y), 1)), F.inv(F.mul(x, y)));
            ++hist[g];
        }
    }
    std::uint64_t acc = 0;
    for (auto h : hist) acc += h * h;
    return acc;
}

std::uint64_t oracle_double_octic_weighted(const Poly& branch, const PrimeField& F) {
    // enumerate (P, w) with w^2 = f8(P) over normalized representatives of
    // the weighted space P(1,1,1,1,4); the base point (0:0:0:0:1) is off the
    // cover since w^2 = 1 != 0 there
    Poly scaled = branch * (Rat(1) / branch.content());
    ReducedForm rf(scaled.to_form(), F);
    ProjectiveReps reps(4, F.p());
    std::uint64_t pt[4];
    std::uint64_t acc = 0;
    for (std::uint64_t i = 0; i < reps.total(); ++i) {
        reps.decode(i, pt);
        std::uint64_t v = rf.eval(pt, F);
        for (std::uint64_t w = 0; w < F.p(); ++w)
            if (F.mul(w, w) == v) ++acc;
    }
    return acc;
}

std::uint64_t oracle_quadric_cone(const std::vector<Poly>& quadrics, const PrimeField& F) {
    std::vector<ReducedForm> rf;
    for (const auto& q : quadrics) rf.emplace_back(q.to_form(), F);
    std::uint64_t p = F.p();
    std::uint64_t acc = 0;
    std::uint64_t pt[4];
    for (pt[0] = 0; pt[0] < p; ++pt[0])
        for (pt[1] = 0; pt[1] < p; ++pt[1])
            for (pt[2] = 0; pt[2] < p; ++pt[2])
                for (pt[3] = 0; pt[3] < p; ++pt[3]) {
                    std::array<std::uint64_t, 4> vals;
                    for (int i = 0; i < 4; ++i) vals[static_cast<std::size_t>(i)] = rf[static_cast<std::size_t>(i)].eval(pt, F);
                    std::uint64_t ways = 1;
                    for (auto v : vals) {
                        std::uint64_t w = 0;
                        for (std::uint64_t u = 0; u < p; ++u)
                            if (F.mul(u, u) == v) ++w;
                        ways *= w;
                        if (!ways) break;
                    }
                    acc += ways;
                }
    if ((acc - 1) % (p - 1) != 0) throw std::logic_error("oracle_quadric_cone: inconsistent cone count");
    return (acc - 1) / (p - 1);
}

std::uint64_t oracle_fermi(const PrimeField& F) {
    std::uint64_t p = F.p();
    std::uint64_t acc = 0;
    for (std::uint64_t x = 1; x < p; ++x)
        for (std::uint64_t y = 1; y < p; ++y)
            for (std::uint64_t z = 1; z < p; ++z)
                for (std::uint64_t t = 1; t < p; ++t) {
                    std::uint64_t s = F.add(F.add(x, F.inv(x)), F.add(y, F.inv(y)));
                    s = F.add(s, F.add(z, F.inv(z)));
                    s = F.add(s, F.add(t, F.inv(t)));
                    if (s == 0) ++acc;
                }
    return acc;
}

FiberProductCount count_fiber_product(const WeierstrassModel& left, const WeierstrassModel& right,
                                      const Moebius& matching, const PrimeField& F) {
    std::uint64_t p = F.p();
    FiberProductCount out{0, 0};
    for (std::uint64_t t0 = 0; t0 <= p; ++t0) {
        bool finite = t0 < p;
        std::uint64_t n1 = left.fiber_count(finite ? t0 : 0, !finite, F);
        auto [mt, mfin] = matching.apply(finite ? t0 : 0, finite, F);
        std::uint64_t n2 = right.fiber_count(mt, !mfin, F);
        out.raw += n1 * n2;
        long long a1 = static_cast<long long>(p + 1) - static_cast<long long>(n1);
        long long a2 = static_cast<long long>(p + 1) - static_cast<long long>(n2);
        out.trace += a1 * a2;
    }
    return out;
}

std::uint64_t oracle_fiber_product_raw(const WeierstrassModel& left, const WeierstrassModel& right,
                                       const Moebius& matching, const PrimeField& F) {
    // direct affine cubic enumeration per fiber, plus the point at infinity
    std::uint64_t p = F.p();
    auto count_affine = [&](const WeierstrassModel& E, std::uint64_t t0, bool at_inf) {
        const WeierstrassModel& m = at_inf ? E.infinity_model() : E;
        std::uint64_t tv = at_inf ? 0 : t0;
        auto evalc = [&](const RatFunc& g) {
            std::uint64_t nv = 0, dv = 0;
            std::uint64_t tp = 1;
            for (std::size_t i = 0; i < g.num().coeffs().size(); ++i) {
                nv = F.add(nv, F.mul(F.reduce(g.num()[i]), tp));
                tp = F.mul(tp, tv);
            }
            tp = 1;
            for (std::size_t i = 0; i < g.den().coeffs().size(); ++i) {
                dv = F.add(dv, F.mul(F.reduce(g.den()[i]), tp));
                tp = F.mul(tp, tv);
            }
            return F.mul(nv, F.inv(dv));
        };
        std::uint64_t a = evalc(m.A()), b = evalc(m.B()), c = evalc(m.C());
        std::uint64_t n = 1;
        for (std::uint64_t x = 0; x < p; ++x) {
            std::uint64_t rhs = F.add(F.mul(F.add(F.mul(F.add(x, a), x), b), x), c);
            for (std::uint64_t y = 0; y < p; ++y)
                if (F.mul(y, y) == rhs) ++n;
        }
        return n;
    };
    std::uint64_t acc = 0;
    for (std::uint64_t t0 = 0; t0 <= p; ++t0) {
        bool finite = t0 < p;
        auto [mt, mfin] = matching.apply(finite ? t0 : 0, finite, F);
        acc += count_affine(left, finite ? t0 : 0, !finite) * count_affine(right, mt, !mfin);
    }
    return acc;
}

bool arrangement_equisingular(const std::vector<Poly>& linear_forms, const PrimeField& F) {
    // compare ranks of every subset of size 2..5 over Q and over F_p
    std::size_t n = linear_forms.size();
    if (n > 12) throw std::invalid_argument("arrangement_equisingular: too many forms");
    unsigned dim = static_cast<unsigned>(linear_forms.at(0).vars().size());
    std::vector<std::vector<Rat>> rows;
    for (const auto& f : linear_forms) {
        std::vector<Rat> row(dim, Rat(0));
        for (const auto& [e, c] : f.terms())
            for (unsigned i = 0; i < dim; ++i)
                if (e[i] == 1) row[i] = c;
        rows.push_back(row);
    }
    auto rank_q = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<Rat>> m;
        for (auto i : idx) m.push_back(rows[i]);
        unsigned r = 0;
        for (unsigned c = 0; c < dim && r < m.size(); ++c) {
            unsigned piv = r;
            while (piv < m.size() && m[piv][c] == 0) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[r], m[piv]);
            for (unsigned i = 0; i < m.size(); ++i) {
                if (i == r || m[i][c] == 0) continue;
                Rat f = m[i][c] / m[r][c];
                for (unsigned j = 0; j < dim; ++j) m[i][j] -= f * m[r][j];
            }
            ++r;
        }
        return r;
    };
    auto rank_p = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<std::uint64_t>> m;
        for (auto i : idx) {
            std::vector<std::uint64_t> row(dim);
            for (unsigned j = 0; j < dim; ++j) row[j] = F.reduce(rows[i][j]);
            m.push_back(row);
        }
        unsigned r = 0;
        for (unsigned c = 0; c < dim && r < m.size(); ++c) {
            unsigned piv = r;
            while (piv < m.size() && m[piv][c] == 0) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[r], m[piv]);
            std::uint64_t inv = F.inv(m[r][c]);
            for (unsigned j = 0; j < dim; ++j) m[r][j] = F.mul(m[r][j], inv);
            for (unsigned i = 0; i < m.size(); ++i) {
                if (i == r || m[i][c] == 0) continue;
                std::uint64_t f = m[i][c];
                for (unsigned j = 0; j < dim; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
            }
            ++r;
        }
        return r;
    };
    // iterate subsets of size up to 5 (rank can only change when <= dim+1
    // forms are involved)
    std::vector<std::size_t> idx;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t want) {
        if (idx.size() == want) return rank_q(idx) == rank_p(idx);
        for (std::size_t i = start; i < n; ++i) {
            idx.push_back(i);
            bool ok = rec(i + 1, want);
            idx.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (std::size_t k = 2; k <= std::min<std::size_t>(5, n); ++k)
        if (!rec(0, k)) return false;
    return true;
}

std::vector<std::uint64_t> good_primes(const VarietySpec& v, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (auto p : odd_primes_in(lo, hi)) {
        PrimeField F(p);
        bool good = true;
        if (v.shape == VarietyShape::DoubleOctic) {
            bool all_linear = true;
            for (const auto& f : v.branch_factors) all_linear &= f.homogeneous(1);
            if (all_linear) good = arrangement_equisingular(v.branch_factors, F);
        }
        // quadric intersections and non-linear branches: all odd primes are
        // treated as good; the congruence checks are the arbiter
        if (good) out.push_back(p);
    }
    return out;
}

CountReport lefschetz_congruence(const VarietySpec& v, const PrimeField& F, const Int& a_p, unsigned width) {
    CountReport r;
    r.variety = v.id;
    r.p = F.p();
    Int chi_d = kronecker(v.model_twist, Int(static_cast<unsigned long>(F.p())));
    Int used = chi_d * a_p;
    r.a_p = used;
    switch (v.shape) {
        case VarietyShape::DoubleOctic:
            r.raw = count_double_octic(v.branch, F, width);
            r.applicable = v.congruence_checked;
            break;
        case VarietyShape::QuadricIntersection:
            r.raw = count_quadric_intersection(v.quadrics, F, width);
            r.applicable = v.congruence_checked;
            break;
        case VarietyShape::FermiAffine:
            r.raw = count_fermi(F);
            r.applicable = false;
            r.note = "affine model; congruence reported for information only";
            break;
        default:
            throw std::invalid_argument("lefschetz_congruence: no counting engine for shape " +
                                        shape_name(v.shape));
    }
    Int p(static_cast<unsigned long>(F.p()));
    Int res = (Int(static_cast<unsigned long>(r.raw)) - (1 - used)) % p;
    if (res < 0) res += p;
    r.residue = res;
    r.pass = !r.applicable || res == 0;
    return r;
}

Rat h11_from_count(const Int& resolved_count, std::uint64_t p, const Int& a_p) {
    Int pp(static_cast<unsigned long>(p));
    Int num = resolved_count - 1 - pp * pp * pp + a_p;
    Rat h(num, pp + pp * pp);
    h.canonicalize();
    if (h.get_den() != 1)
        throw std::domain_error("h11_from_count: non-integral value " + h.get_str() +
                                " (wrong corrections or unsuitable prime)");
    return h;
}

std::vector<std::array<std::uint64_t, 8>> singular_point_scan(const std::vector<Poly>& quadrics,
                                                              const PrimeField& F) {
    std::vector<ReducedForm> rf;
    std::vector<std::vector<ReducedForm>> grad;
    for (const auto& q : quadrics) {
        rf.emplace_back(q.to_form(), F);
        std::vector<ReducedForm> g;
        for (unsigned v = 0; v < 4; ++v) g.emplace_back(q.derivative(v).to_form(), F);
        grad.push_back(std::move(g));
    }
    std::uint64_t p = F.p();
    ProjectiveReps reps(4, p);
    std::vector<std::array<std::uint64_t, 8>> out;

    auto rank_lt4 = [&](const std::array<std::array<std::uint64_t, 8>, 4>& M0) {
        auto M = M0;
        unsigned r = 0;
        for (unsigned c = 0; c < 8 && r < 4; ++c) {
            unsigned piv = r;
            while (piv < 4 && M[piv][c] == 0) ++piv;
            if (piv == 4) continue;
            std::swap(M[r], M[piv]);
            std::uint64_t inv = F.inv(M[r][c]);
            for (unsigned j = 0; j < 8; ++j) M[r][j] = F.mul(M[r][j], inv);
            for (unsigned i = 0; i < 4; ++i) {
                if (i == r || M[i][c] == 0) continue;
                std::uint64_t f = M[i][c];
                for (unsigned j = 0; j < 8; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
            }
            ++r;
        }
        return r < 4;
    };

    std::uint64_t pt[4];
    for (std::uint64_t i = 0; i < reps.total(); ++i) {
        reps.decode(i, pt);
        std::array<std::uint64_t, 4> vals;
        std::array<std::vector<std::uint64_t>, 4> sqrts;
        bool on = true;
        for (unsigned k = 0; k < 4; ++k) {
            vals[k] = rf[k].eval(pt, F);
            int chi = F.legendre(vals[k]);
            if (chi == -1) {
                on = false;
                break;
            }
            if (vals[k] == 0) {
                sqrts[k] = {0};
            } else {
                for (std::uint64_t u = 1; u <= p / 2; ++u)
                    if (F.mul(u, u) == vals[k]) {
                        sqrts[k] = {u, p - u};
                        break;
                    }
            }
        }
        if (!on) continue;
        // enumerate sign choices
        std::array<std::size_t, 4> pick{0, 0, 0, 0};
        for (;;) {
            std::array<std::uint64_t, 8> pnt;
            for (unsigned k = 0; k < 4; ++k) pnt[k] = pt[k];
            for (unsigned k = 0; k < 4; ++k) pnt[4 + k] = sqrts[k][pick[k]];
            std::array<std::array<std::uint64_t, 8>, 4> J{};
            for (unsigned r = 0; r < 4; ++r) {
                for (unsigned c = 0; c < 4; ++c) J[r][c] = F.neg(grad[r][c].eval(pt, F));
                J[r][4 + r] = F.add(pnt[4 + r], pnt[4 + r]);
            }
            if (rank_lt4(J)) out.push_back(pnt);
            unsigned k = 0;
            for (; k < 4; ++k) {
                if (pick[k] + 1 < sqrts[k].size()) {
                    ++pick[k];
                    for (unsigned j = 0; j < k; ++j) pick[j] = 0;
                    break;
                }
            }
            if (k == 4) break;
        }
    }
    return out;
}

NodeScan rational_nodes(const VarietySpec& v, const PrimeField& F) {
    if (v.shape != VarietyShape::QuadricIntersection)
        throw std::invalid_argument("rational_nodes: " + v.id + " is not a quadric intersection");
    if (!v.nodes_isolated)
        throw std::invalid_argument("rational_nodes: " + v.id +
                                    " has a non-isolated singular locus; node listing refused");
    NodeScan scan;
    scan.points = singular_point_scan(v.quadrics, F);
    scan.isolated = true;
    if (v.node_count && scan.points.size() > *v.node_count)
        throw std::logic_error("rational_nodes: found more rational singular points than the declared node count");
    return scan;
}

HodgeRow hodge_row(const VarietySpec& v, const PrimeField& F, const Int& a_p, unsigned width) {
    HodgeRow row{};
    row.p = F.p();
    auto scan = rational_nodes(v, F);
    row.rational_nodes = static_cast<unsigned>(scan.points.size());
    row.raw = count_quadric_intersection(v.quadrics, F, width);
    row.eligible = v.node_count && row.rational_nodes == *v.node_count;
    Int resolved = Int(static_cast<unsigned long>(row.raw)) +
                   Int(static_cast<unsigned long>(F.p())) * Int(row.rational_nodes);
    if (!row.eligible) {
        row.note = "only " + std::to_string(row.rational_nodes) + " of " +
                   (v.node_count ? std::to_string(*v.node_count) : std::string("?")) +
                   " nodes rational: Frobenius moves exceptional classes, formula not applicable";
        return row;
    }
    try {
        Rat h = h11_from_count(resolved, F.p(), a_p);
        row.h11 = static_cast<long>(h.get_num().get_si());
        row.note = "h11 from count with one exceptional line per rational node";
    } catch (const std::domain_error& e) {
        row.note = e.what();
    }
    return row;
}

std::vector<Int> ap_candidates(std::uint64_t p, const Int& count) {
    Int pp(static_cast<unsigned long>(p));
    Int r = (1 - count) % pp;
    if (r < 0) r += pp;
    // |a| <= 2 p^{3/2}  <=>  a^2 <= 4 p^3
    Int bound2 = 4 * pp * pp * pp;
    std::vector<Int> out;
    Int a = r;
    while (a * a <= bound2) a -= pp;  // step below the bound
    for (a += pp; a * a <= bound2 || out.empty(); a += pp) {
        if (a * a <= bound2) out.push_back(a);
        if (a > 0 && a * a > bound2) break;
    }
    return out;
}

}  // namespace cy8
