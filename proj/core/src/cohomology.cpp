#include "grassbal/cohomology.hpp"

#include <algorithm>
#include <functional>

#include "grassbal/fp_matrix.hpp"

namespace grassbal {

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t job_seed(std::uint64_t global, std::int64_t a, std::int64_t b, std::int64_t d,
                       std::uint32_t p, std::uint64_t index) {
    std::uint64_t s = mix_seed(global);
    for (std::uint64_t v : {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                            static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(p), index}) {
        s = mix_seed(s ^ v);
    }
    return s;
}

std::vector<int> balanced_partition(std::int64_t d, std::int64_t parts) {
    if (parts < 1 || d < 0) throw std::invalid_argument("balanced_partition needs parts >= 1, d >= 0");
    std::vector<int> out(static_cast<std::size_t>(parts), static_cast<int>(d / parts));
    for (std::int64_t i = 0; i < d % parts; ++i) ++out[static_cast<std::size_t>(i)];
    return out;
}

bool chart_is_valid(const PolyMatrix& phi) {
    if (phi.cols() == 0 || phi.rows() < phi.cols()) return false;
    try {
        return minors_gcd(phi, phi.cols()).is_unit();
    } catch (const AllMinorsZero&) {
        return false;
    }
}

CurveChart make_chart(std::int64_t a, std::int64_t b, PolyMatrix phi, std::uint64_t seed) {
    if (a < 1 || b < 1 || a * b < 2) throw InvalidChart("chart needs a, b >= 1 and ab >= 2");
    if (phi.cols() != static_cast<std::size_t>(a) || phi.rows() != static_cast<std::size_t>(a + b)) {
        throw InvalidChart("chart matrix must be (a+b) x a");
    }
    CurveChart chart;
    chart.a = a;
    chart.b = b;
    chart.field = phi.field();
    chart.seed = seed;
    chart.d = 0;
    for (std::size_t j = 0; j < phi.cols(); ++j) {
        const int e = phi.at(0, j).degree();
        if (e < 0) throw InvalidChart("column degrees must be non-negative");
        for (std::size_t i = 1; i < phi.rows(); ++i) {
            if (phi.at(i, j).degree() != e) throw InvalidChart("column " + std::to_string(j) + " is not homogeneous");
        }
        if (j > 0 && e > chart.e.back()) throw InvalidChart("column degrees must be non-increasing");
        chart.e.push_back(e);
        chart.d += e;
    }
    if (chart.d < 1) throw InvalidChart("chart has degree 0");
    if (!chart_is_valid(phi)) throw InvalidChart("maximal minors of the chart have a common zero");
    chart.phi = std::move(phi);
    return chart;
}

CurveChart sample_chart(std::int64_t a, std::int64_t b, std::int64_t d, std::uint32_t p,
                        std::uint64_t seed, int max_attempts) {
    if (a < 1 || b < 1 || a * b < 2 || d < 1) {
        throw std::invalid_argument("sample_chart needs a, b >= 1, ab >= 2, d >= 1");
    }
    const PrimeField F(p);
    const std::vector<int> e = balanced_partition(d, a);
    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        PolyMatrix phi = PolyMatrix::with_column_degrees(F, static_cast<std::size_t>(a + b), e);
        for (std::size_t i = 0; i < phi.rows(); ++i) {
            for (std::size_t j = 0; j < phi.cols(); ++j) {
                for (int k = 0; k <= e[j]; ++k) phi.at(i, j).set_coeff(k, static_cast<Residue>(rng() % p));
            }
        }
        if (chart_is_valid(phi)) {
            CurveChart chart;
            chart.a = a;
            chart.b = b;
            chart.d = d;
            chart.field = F;
            chart.e = e;
            chart.phi = std::move(phi);
            chart.seed = seed;
            return chart;
        }
    }
    throw SamplingExhausted("no valid chart for (a, b, d, p) = (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(d) + ", " + std::to_string(p) +
                            ") after " + std::to_string(max_attempts) + " attempts");
}

std::string to_string(ModKind k) { return k == ModKind::Lower ? "lower" : "upper"; }

namespace {

FpMatrix column_block(const FpMatrix& m, const std::vector<Residue>& extra) {
    FpMatrix out(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
        out.at(i, m.cols()) = extra[i];
    }
    return out;
}

// h * phi(x), a row of length a.
std::vector<Residue> covector_on_columns(const FpMatrix& phix, const std::vector<Residue>& h) {
    const PrimeField& F = phix.field();
    std::vector<Residue> w(phix.cols(), 0);
    for (std::size_t j = 0; j < phix.cols(); ++j) {
        for (std::size_t k = 0; k < phix.rows(); ++k) w[j] = F.add(w[j], F.mul(h[k], phix.at(k, j)));
    }
    return w;
}

bool same_point(const PrimeField& F, LinePoint x, LinePoint y) {
    return F.mul(x.s, y.t) == F.mul(y.s, x.t);
}

}  // namespace

namespace {

// The pointing subbundle has rank a (lower) or b (upper) inside N of rank ab - 1.
void require_room_for(const CurveChart& chart, ModKind kind) {
    const std::int64_t sub_rank = kind == ModKind::Lower ? chart.a : chart.b;
    if (sub_rank > chart.a * chart.b - 1) {
        throw InvalidModification(to_string(kind) + " modification needs rank " + std::to_string(sub_rank) +
                                  " <= ab - 1 = " + std::to_string(chart.a * chart.b - 1));
    }
}

}  // namespace

void validate_modification(const CurveChart& chart, const ModificationSpec& mod) {
    const PrimeField& F = chart.field;
    if (mod.vec.size() != static_cast<std::size_t>(chart.a + chart.b)) {
        throw InvalidModification("modification vector must have length a + b");
    }
    if (F.reduce(mod.point.s) == 0 && F.reduce(mod.point.t) == 0) {
        throw InvalidModification("(0 : 0) is not a point");
    }
    require_room_for(chart, mod.kind);
    const FpMatrix phix = chart.phi.eval(mod.point);
    if (mod.kind == ModKind::Lower) {
        if (rank(column_block(phix, mod.vec)) != static_cast<std::size_t>(chart.a + 1)) {
            throw InvalidModification("lower modification point lies in the subspace at x");
        }
    } else {
        const auto w = covector_on_columns(phix, mod.vec);
        if (std::all_of(w.begin(), w.end(), [](Residue r) { return r == 0; })) {
            throw InvalidModification("upper modification hyperplane contains the subspace at x");
        }
    }
}

ModificationSpec random_modification(const CurveChart& chart, ModKind kind, LinePoint point, Rng& rng) {
    require_room_for(chart, kind);
    const auto p = chart.field.modulus();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ModificationSpec spec{point, kind, std::vector<Residue>(static_cast<std::size_t>(chart.a + chart.b))};
        for (auto& v : spec.vec) v = static_cast<Residue>(rng() % p);
        try {
            validate_modification(chart, spec);
            return spec;
        } catch (const InvalidModification&) {
        }
    }
    throw SamplingExhausted("no valid " + to_string(kind) + " modification vector found");
}

std::vector<ModificationSpec> random_modifications(const CurveChart& chart,
                                                   const std::vector<ModKind>& kinds, Rng& rng) {
    if (kinds.size() > chart.field.modulus()) {
        throw InvalidModification("more modifications than affine points of the line");
    }
    std::vector<ModificationSpec> out;
    for (std::size_t j = 0; j < kinds.size(); ++j) {
        out.push_back(random_modification(chart, kinds[j], LinePoint{static_cast<Residue>(j), 1}, rng));
    }
    return out;
}

std::int64_t normal_rank(const CurveChart& chart) { return chart.a * chart.b - 1; }

std::int64_t modified_normal_degree(const CurveChart& chart, const std::vector<ModificationSpec>& mods) {
    std::int64_t deg = (chart.a + chart.b) * chart.d - 2;
    for (const auto& m : mods) deg += m.kind == ModKind::Lower ? chart.a : chart.b;
    return deg;
}

namespace {

// Values s^(D-c) t^c at x for c = 0..D.
std::vector<Residue> monomial_values(const PrimeField& F, int D, LinePoint x) {
    std::vector<Residue> out(static_cast<std::size_t>(D + 1));
    for (int c = 0; c <= D; ++c) {
        out[static_cast<std::size_t>(c)] = F.mul(F.pow(x.s, static_cast<std::uint64_t>(D - c)),
                                                 F.pow(x.t, static_cast<std::uint64_t>(c)));
    }
    return out;
}

// Unknown coefficients of psi: row i has degree D_i = m - e_i.
struct PsiLayout {
    std::vector<int> row_degree;
    std::vector<std::size_t> offset;
    std::size_t cols_v = 0;
    std::size_t total = 0;

    PsiLayout(const CurveChart& chart, std::int64_t m) : cols_v(static_cast<std::size_t>(chart.a + chart.b)) {
        for (int e : chart.e) {
            const int D = static_cast<int>(m) - e;
            row_degree.push_back(D);
            offset.push_back(total);
            if (D >= 0) total += cols_v * static_cast<std::size_t>(D + 1);
        }
    }
    std::size_t var(std::size_t i, std::size_t k, int c) const {
        return offset[i] + k * static_cast<std::size_t>(row_degree[i] + 1) + static_cast<std::size_t>(c);
    }
};

void check_distinct_points(const CurveChart& chart, const std::vector<ModificationSpec>& mods) {
    for (std::size_t i = 0; i < mods.size(); ++i) {
        for (std::size_t j = i + 1; j < mods.size(); ++j) {
            if (same_point(chart.field, mods[i].point, mods[j].point)) {
                throw InvalidModification("modifications must sit at pairwise distinct points");
            }
        }
    }
}

std::int64_t sections_dim_unchecked(const CurveChart& chart, const std::vector<ModificationSpec>& mods,
                                    std::int64_t m) {
    const PrimeField& F = chart.field;
    const PsiLayout L(chart, m);
    if (L.total == 0) return 0;
    const std::size_t a = static_cast<std::size_t>(chart.a);
    FpMatrix sys(F, 0, L.total);

    // psi phi = 0
    for (std::size_t i = 0; i < a; ++i) {
        const int D = L.row_degree[i];
        if (D < 0) continue;
        for (std::size_t j = 0; j < a; ++j) {
            const int ej = chart.e[j];
            for (int tau = 0; tau <= D + ej; ++tau) {
                const std::size_t r = sys.add_row();
                for (std::size_t k = 0; k < L.cols_v; ++k) {
                    const BinaryForm& f = chart.phi.at(k, j);
                    for (int c = std::max(0, tau - ej); c <= std::min(D, tau); ++c) {
                        sys.accumulate(r, L.var(i, k, c), f.coeff(tau - c));
                    }
                }
            }
        }
    }

    // trace(psi d_s phi) = 0, a form of degree m - 1
    if (m >= 1) {
        const PolyMatrix dphi = chart.phi.derivative_s();
        const std::size_t first = sys.rows();
        for (std::int64_t tau = 0; tau <= m - 1; ++tau) sys.add_row();
        for (std::size_t i = 0; i < a; ++i) {
            const int D = L.row_degree[i];
            const int de = chart.e[i] - 1;
            if (D < 0 || de < 0) continue;
            for (std::size_t k = 0; k < L.cols_v; ++k) {
                const BinaryForm& f = dphi.at(k, i);
                for (int c = 0; c <= D; ++c) {
                    for (int u = 0; u <= de; ++u) {
                        sys.accumulate(first + static_cast<std::size_t>(c + u), L.var(i, k, c), f.coeff(u));
                    }
                }
            }
        }
    }

    for (const auto& mod : mods) {
        if (mod.kind == ModKind::Lower) {
            // psi(x) p = 0
            for (std::size_t i = 0; i < a; ++i) {
                const int D = L.row_degree[i];
                if (D < 0) continue;
                const auto mono = monomial_values(F, D, mod.point);
                const std::size_t r = sys.add_row();
                for (std::size_t k = 0; k < L.cols_v; ++k) {
                    for (int c = 0; c <= D; ++c) {
                        sys.accumulate(r, L.var(i, k, c), F.mul(mod.vec[k], mono[static_cast<std::size_t>(c)]));
                    }
                }
            }
        } else {
            // (h phi(x)) psi(x) = 0
            const auto w = covector_on_columns(chart.phi.eval(mod.point), mod.vec);
            for (std::size_t k = 0; k < L.cols_v; ++k) {
                const std::size_t r = sys.add_row();
                for (std::size_t i = 0; i < a; ++i) {
                    const int D = L.row_degree[i];
                    if (D < 0) continue;
                    const auto mono = monomial_values(F, D, mod.point);
                    for (int c = 0; c <= D; ++c) {
                        sys.accumulate(r, L.var(i, k, c), F.mul(w[i], mono[static_cast<std::size_t>(c)]));
                    }
                }
            }
        }
    }
    return static_cast<std::int64_t>(L.total - rank(std::move(sys)));
}

// Scans h(m) upward from m = -1 until the first difference equals `rank` at
// two consecutive twists.
std::vector<HilbertSample> scan_window(const std::function<std::int64_t(std::int64_t)>& h, std::int64_t rank,
                                       std::int64_t m_max) {
    std::vector<HilbertSample> window{{-1, h(-1)}};
    if (window.front().h0 != 0) throw Ramified("sections at twist -1: the bundle has a negative summand");
    int stable = 0;
    for (std::int64_t m = 0; stable < 2; ++m) {
        if (m > m_max) {
            throw WindowOverrun("Hilbert function did not stabilize by twist " + std::to_string(m_max));
        }
        window.push_back({m, h(m)});
        const std::int64_t diff = window.back().h0 - window[window.size() - 2].h0;
        if (diff > rank) throw Ramified("Hilbert difference " + std::to_string(diff) + " exceeds the rank");
        stable = diff == rank ? stable + 1 : 0;
    }
    return window;
}

}  // namespace

std::int64_t normal_sections_dim(const CurveChart& chart, const std::vector<ModificationSpec>& mods,
                                 std::int64_t m) {
    check_distinct_points(chart, mods);
    for (const auto& mod : mods) validate_modification(chart, mod);
    return sections_dim_unchecked(chart, mods, m);
}

ComputedBundle normal_splitting(const CurveChart& chart, const std::vector<ModificationSpec>& mods,
                                const WindowOptions& options) {
    check_distinct_points(chart, mods);
    for (const auto& mod : mods) validate_modification(chart, mod);

    ComputedBundle out;
    out.a = chart.a;
    out.b = chart.b;
    out.d = chart.d;
    out.p = chart.field.modulus();
    out.seed = chart.seed;
    for (const auto& mod : mods) ++(mod.kind == ModKind::Lower ? out.n_lower : out.n_upper);

    const std::int64_t r = normal_rank(chart);
    const std::int64_t deg = modified_normal_degree(chart, mods);
    auto& diag = out.diagnostics;
    diag.window = scan_window([&](std::int64_t m) { return sections_dim_unchecked(chart, mods, m); }, r,
                              deg + options.overrun_slack);
    diag.m_lo = diag.window.front().twist;
    diag.m_hi = diag.window.back().twist;

    const SplittingType conormal = type_from_hilbert(diag.window);
    out.type = dual(conormal);
    diag.rank_ok = static_cast<std::int64_t>(out.type.rank()) == r;
    diag.degree_ok = out.type.degree() == deg;
    diag.riemann_roch_ok = true;
    for (std::size_t k = diag.window.size() - 2; k < diag.window.size(); ++k) {
        const auto& s = diag.window[k];
        if (s.h0 != r * (s.twist + 1) - deg) diag.riemann_roch_ok = false;
    }
    if (!diag.rank_ok || !diag.degree_ok || !diag.riemann_roch_ok) {
        throw Ramified("observed " + out.type.str() + " has degree " + std::to_string(out.type.degree()) +
                       ", expected " + std::to_string(deg));
    }
    return out;
}

SplittingType restricted_bundle_splitting(const CurveChart& chart, RestrictedBundle which) {
    const PrimeField& F = chart.field;
    const std::size_t n = static_cast<std::size_t>(chart.a + chart.b);
    const std::size_t a = static_cast<std::size_t>(chart.a);

    if (which == RestrictedBundle::Q) {
        // h^0(Q^dual(m)): rows r of degree-m forms with r phi = 0.
        auto h = [&](std::int64_t m) -> std::int64_t {
            if (m < 0) return 0;
            const std::size_t width = static_cast<std::size_t>(m + 1);
            FpMatrix sys(F, 0, n * width);
            for (std::size_t j = 0; j < a; ++j) {
                const int ej = chart.e[j];
                for (int tau = 0; tau <= m + ej; ++tau) {
                    const std::size_t r = sys.add_row();
                    for (std::size_t k = 0; k < n; ++k) {
                        for (int c = std::max(0, tau - ej); c <= std::min<int>(static_cast<int>(m), tau); ++c) {
                            sys.accumulate(r, k * width + static_cast<std::size_t>(c),
                                           chart.phi.at(k, j).coeff(tau - c));
                        }
                    }
                }
            }
            return static_cast<std::int64_t>(n * width - rank(std::move(sys)));
        };
        const auto window = scan_window(h, chart.b, chart.d + 2);
        return dual(type_from_hilbert(window, chart.b));
    }

    // h^0(S(m)) = rank of c -> phi c with c_i of degree m - e_i.
    auto h = [&](std::int64_t m) -> std::int64_t {
        if (m < 0) return 0;
        std::vector<std::size_t> offset;
        std::size_t total = 0;
        for (int e : chart.e) {
            offset.push_back(total);
            if (m - e >= 0) total += static_cast<std::size_t>(m - e + 1);
        }
        if (total == 0) return 0;
        const std::size_t width = static_cast<std::size_t>(m + 1);
        FpMatrix image(F, n * width, total);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < a; ++i) {
                const int D = static_cast<int>(m) - chart.e[i];
                for (int c = 0; c <= D; ++c) {
                    for (int u = 0; u <= chart.e[i]; ++u) {
                        image.accumulate(k * width + static_cast<std::size_t>(c + u),
                                         offset[i] + static_cast<std::size_t>(c), chart.phi.at(k, i).coeff(u));
                    }
                }
            }
        }
        return static_cast<std::int64_t>(rank(std::move(image)));
    };
    // S has entries -e_i <= 0; its window starts one below the smallest e_i.
    const std::int64_t lo = chart.e.back() - 1;
    std::vector<HilbertSample> window;
    int stable = 0;
    for (std::int64_t m = lo; stable < 2; ++m) {
        if (m > chart.e.front() + 2) throw WindowOverrun("S window did not stabilize");
        window.push_back({m, h(m)});
        if (window.size() >= 2) {
            const std::int64_t diff = window.back().h0 - window[window.size() - 2].h0;
            stable = diff == chart.a ? stable + 1 : 0;
        }
    }
    return dual(type_from_hilbert(window, chart.a));
}

CurveChart project_chart(const CurveChart& chart, std::size_t coordinate_index) {
    if (coordinate_index >= static_cast<std::size_t>(chart.a + chart.b)) {
        throw InvalidProjection("coordinate index out of range");
    }
    if (chart.b < 2 || chart.a * (chart.b - 1) < 2) {
        throw InvalidProjection("projection would leave no room for a curve");
    }
    PolyMatrix reduced = chart.phi.without_row(coordinate_index);
    if (!chart_is_valid(reduced)) {
        throw InvalidProjection("projection from coordinate " + std::to_string(coordinate_index) +
                                " meets the curve");
    }
    CurveChart out = chart;
    out.b = chart.b - 1;
    out.phi = std::move(reduced);
    return out;
}

SampleOutcome sample_normal_bundles(const SampleRequest& req) {
    SampleOutcome out;
    for (int i = 0; i < req.samples; ++i) {
        for (std::uint64_t attempt = 0;; ++attempt) {
            const std::uint64_t seed =
                job_seed(req.seed, req.a, req.b, req.d, req.p, (static_cast<std::uint64_t>(i) << 24) | attempt);
            try {
                const CurveChart chart = sample_chart(req.a, req.b, req.d, req.p, seed);
                Rng rng(mix_seed(seed ^ 0x6d6f6473ULL));
                const auto mods = random_modifications(chart, req.mods, rng);
                out.bundles.push_back(normal_splitting(chart, mods));
                break;
            } catch (const Ramified&) {
            } catch (const WindowOverrun&) {
            } catch (const SamplingExhausted&) {
            }
            if (++out.rejected > req.max_rejections) {
                throw SamplingExhausted("too many rejected samples for (a, b, d, p) = (" + std::to_string(req.a) +
                                        ", " + std::to_string(req.b) + ", " + std::to_string(req.d) + ", " +
                                        std::to_string(req.p) + ")");
            }
        }
    }
    std::vector<SplittingType> types;
    for (const auto& bundle : out.bundles) types.push_back(bundle.type);
    out.maxima = dominance_maxima(types);
    return out;
}

}  // namespace grassbal
