/*
   Copyright 2026 the gagc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GAGC_CENSUS_HPP
#define GAGC_CENSUS_HPP

#include "place.hpp"

namespace gagc {

struct PlaceCensus {
    unsigned t = 0;
    std::vector<std::uint64_t> counts;        // counts[j-1] = A_j
    std::vector<std::uint64_t> point_counts;  // planar backend: N_l = #X(F_{q^l}); empty for kummer

    std::uint64_t a(unsigned j) const {
        if (j == 0 || j > t) throw std::out_of_range("census degree out of range");
        return counts[j - 1];
    }
    std::string to_csv() const {
        std::ostringstream os;
        os << "degree,count\n";
        for (unsigned j = 1; j <= t; ++j) os << j << "," << counts[j - 1] << "\n";
        return os.str();
    }
};

struct CensusResult {
    CurvePtr curve;
    PlaceCensus census;
    std::vector<PlacePtr> places;  // canonical order

    std::vector<PlacePtr> places_of_degree(unsigned j) const {
        std::vector<PlacePtr> out;
        for (const auto& p : places)
            if (p->degree() == j) out.push_back(p);
        return out;
    }
};

struct EnumOptions {
    unsigned threads = 1;
    std::uint64_t field_budget = kDefaultFieldBudget;
};

// ---------------------------------------------------------------------------
// planar backend: affine sweep + line at infinity, grouped into orbits
// ---------------------------------------------------------------------------

/// Raw geometric census of point orbits of a plane model. Does not require
/// smoothness; for smooth models this is the place census.
inline CensusResult point_orbit_census(const CurvePtr& curve, unsigned t, const EnumOptions& opts = {}) {
    if (t < 1) throw std::invalid_argument("census needs t >= 1");
    if (!curve->is_planar()) throw std::invalid_argument("point enumeration requires a plane model");
    const Field* fq = curve->fq;
    const std::uint64_t q = fq->size();
    CensusResult res;
    res.curve = curve;
    res.census.t = t;
    res.census.counts.assign(t, 0);
    res.census.point_counts.assign(t, 0);

    const BiPoly affine = dehomogenize(curve->poly, 2);
    const UniPoly at_inf = detail::restrict_to_infinity(curve->poly, fq);  // F(T,1,0)
    const bool has_100 = fq->v_is_zero(dehomogenize(curve->poly, 0).eval(fq, fq->zero(), fq->zero()));

    std::map<std::array<std::uint64_t, 3>, std::vector<ProjPoint>> orbits;  // per level, keyed by canonical rep

    for (unsigned l = 1; l <= t; ++l) {
        const Field* K = Field::extension(fq, l);
        if (!K->size_fits() || K->size() > opts.field_budget) throw budget_error("extension field exceeds the enumeration budget");
        const std::uint64_t Q = K->size();

        // affine points, data-parallel over x
        std::vector<std::vector<ProjPoint>> found(opts.threads ? opts.threads : 1);
        parallel_for(Q, opts.threads, [&](std::size_t lo, std::size_t hi, unsigned worker) {
            auto& sink = found[worker];
            for (std::uint64_t xi = lo; xi < hi; ++xi) {
                cvec x0 = K->decode(xi);
                UniPoly fy = affine.eval_x(K, x0);
                if (fy.is_zero()) {
                    for (std::uint64_t yi = 0; yi < Q; ++yi) sink.push_back(ProjPoint{K, x0, K->decode(yi), K->one()});
                    continue;
                }
                if (fy.degree() < 1) continue;
                for (const auto& [y0, mult] : roots_in(fy, K)) {
                    (void)mult;
                    sink.push_back(ProjPoint{K, x0, y0, K->one()});
                }
            }
        });

        std::vector<ProjPoint> pts;
        for (auto& chunk : found)
            for (auto& p : chunk) pts.push_back(std::move(p));

        // points on the line z = 0
        if (at_inf.degree() >= 1)
            for (const auto& [x0, mult] : roots_in(at_inf, K)) {
                (void)mult;
                pts.push_back(ProjPoint{K, x0, K->one(), K->zero()});
            }
        if (has_100) pts.push_back(ProjPoint{K, K->one(), K->zero(), K->zero()});

        res.census.point_counts[l - 1] = pts.size();

        // group new points (orbit size exactly l) into places
        std::map<std::array<std::uint64_t, 3>, std::vector<ProjPoint>> level_orbits;
        for (auto& p : pts) {
            ProjPoint cur = p;
            cur.normalize();
            std::vector<ProjPoint> orbit{cur};
            for (;;) {
                ProjPoint next = point_frobenius(orbit.back(), q);
                if (next == orbit.front()) break;
                orbit.push_back(std::move(next));
                if (orbit.size() > l) break;
            }
            if (orbit.size() != l) continue;  // defined over a proper subfield (or not new at this level)
            std::size_t best = 0;
            for (std::size_t i = 1; i < orbit.size(); ++i)
                if (orbit[i] < orbit[best]) best = i;
            std::rotate(orbit.begin(), orbit.begin() + static_cast<std::ptrdiff_t>(best), orbit.end());
            level_orbits.emplace(orbit.front().key(), std::move(orbit));
        }
        res.census.counts[l - 1] = level_orbits.size();
        for (auto& [k, orbit] : level_orbits) orbits.emplace(k, std::move(orbit));

        // Sigma_{j | l} j*A_j must equal the direct point count
        std::uint64_t acc = 0;
        for (unsigned j = 1; j <= l; ++j)
            if (l % j == 0) acc += j * res.census.counts[j - 1];
        if (acc != res.census.point_counts[l - 1]) throw std::runtime_error("place census does not match the point count");
    }

    for (auto& [k, orbit] : orbits) {
        (void)k;
        res.places.push_back(Place::make_planar(curve, std::move(orbit)));
    }
    std::sort(res.places.begin(), res.places.end(), PlaceKeyLess{});
    return res;
}

// ---------------------------------------------------------------------------
// kummer backend
// ---------------------------------------------------------------------------

namespace detail {

/// Number of roots of T^np = c in the residue-field extension of degree e
/// (root-count criterion), overflow-safe in the exponents.
inline std::uint64_t kummer_root_count(const Field* K, const cvec& c, unsigned np, unsigned e) {
    const std::uint64_t Q = K->size();
    // g = gcd(np, Q^e - 1) via modular exponentiation
    std::uint64_t qe_mod = detail::powmod_u64(Q % np, e, np);
    std::uint64_t g = std::gcd<std::uint64_t>(np, (qe_mod + np - 1) % np);
    if (g == 0) g = np;
    // solvability: c^((Q^e-1)/g) == 1 -- reduce the exponent mod (Q-1)
    const std::uint64_t modulus = g * (Q - 1);
    std::uint64_t qe_mod2 = detail::powmod_u64(Q % modulus, e, modulus);
    std::uint64_t num = (qe_mod2 + modulus - 1) % modulus;  // (Q^e - 1) mod g(Q-1)
    if (num % g != 0) throw std::logic_error("root count bookkeeping failed");
    std::uint64_t exp = (num / g) % (Q - 1);
    cvec probe = K->v_pow(c, exp);
    return K->v_is_one(probe) ? g : 0;
}

/// Factor degree multiset of T^np - c over K via root counts per level.
inline std::map<unsigned, std::uint64_t> kummer_factor_degrees(const Field* K, const cvec& c, unsigned np, unsigned max_deg) {
    std::map<unsigned, std::uint64_t> exact;  // degree -> #roots of exact degree
    std::map<unsigned, std::uint64_t> out;
    for (unsigned e = 1; e <= max_deg; ++e) {
        std::uint64_t roots = kummer_root_count(K, c, np, e);
        std::uint64_t lower = 0;
        for (unsigned d = 1; d < e; ++d)
            if (e % d == 0) lower += exact[d];
        if (roots < lower) throw std::logic_error("root counts are inconsistent");
        exact[e] = roots - lower;
        if (exact[e] % e != 0) throw std::logic_error("root counts are inconsistent");
        if (exact[e]) out[e] = exact[e] / e;
    }
    return out;
}

/// Minimal polynomial over F_q of an element alpha in F_{q^d} of exact degree d.
inline UniPoly min_poly_over_base(const Field* fq, const Field* K, const cvec& alpha, unsigned d) {
    const std::uint64_t q = fq->size();
    UniPoly m = UniPoly::one(K);
    cvec conj = alpha;
    for (unsigned i = 0; i < d; ++i) {
        m = m * UniPoly(K, {K->v_neg(conj), K->one()});
        conj = K->v_pow(conj, q);
    }
    std::vector<cvec> coeffs;
    for (int i = 0; i <= m.degree(); ++i) {
        Element e(K, m.coeff(i));
        while (e.field() != fq) e = project_down(e);
        coeffs.push_back(e.coeffs());
    }
    return UniPoly(fq, std::move(coeffs));
}

}  // namespace detail

/// Places of degree <= t of the Kummer cover y^n = f(x), computed from the
/// splitting of places of F_q(x). Census counts only; place objects carry
/// (p, e, splitting factor).
inline CensusResult kummer_census(const CurvePtr& curve, unsigned t, const EnumOptions& opts = {}) {
    if (t < 1) throw std::invalid_argument("census needs t >= 1");
    const Field* fq = curve->fq;
    const unsigned n = curve->kummer_n;
    const UniPoly& f = curve->kummer_f;

    CensusResult res;
    res.curve = curve;
    res.census.t = t;
    res.census.counts.assign(t, 0);

    auto emit_from = [&](bool infinite, const UniPoly& p, unsigned d, const Field* K, const cvec& c0, long a) {
        const unsigned np = a == 0 ? n : static_cast<unsigned>(std::gcd<long>(std::labs(a), n));
        const unsigned e = n / np;
        const unsigned max_dd = t / d;
        if (max_dd == 0) return;

        // counts by the root-count criterion, cross-checked below by the factors
        auto degree_counts = detail::kummer_factor_degrees(K, c0, np, max_dd);

        // materialize the factors of degree <= max_dd
        std::vector<UniPoly> factors;
        {
            // linear factors: the np-th roots of c0 in K
            if (max_dd >= 1)
                for (const auto& z : all_nth_roots(K, c0, np)) factors.emplace_back(UniPoly(K, {K->v_neg(z), K->one()}));
            if (max_dd >= 2) {
                // strip the linear part, then split the rest degree by degree
                UniPoly rem = UniPoly::monomial(K, np, K->one()) - UniPoly::constant(K, c0);
                for (const auto& lin : factors) rem = rem / lin;
                for (unsigned dd = 2; dd <= max_dd && rem.degree() >= static_cast<int>(dd); ++dd) {
                    std::uint64_t qdd = 1;
                    for (unsigned i = 0; i < dd; ++i) qdd *= K->size();
                    UniPoly part = gcd(rem, UniPoly::x(K).powmod(qdd, rem) - UniPoly::x(K));
                    if (part.degree() > 0) {
                        std::mt19937_64 rng(kDefaultSeed);
                        std::vector<UniPoly> irr;
                        detail::edf(part.monic(), static_cast<int>(dd), rng, irr);
                        for (auto& h : irr) factors.push_back(std::move(h));
                        rem = rem / part;
                    }
                }
            }
        }
        // cross-check the criterion against the materialized factors
        std::map<unsigned, std::uint64_t> seen;
        for (const auto& h : factors) ++seen[static_cast<unsigned>(h.degree())];
        for (const auto& [dd, cnt] : degree_counts) {
            if (seen[dd] != cnt) throw std::logic_error("kummer splitting cross-check failed");
        }

        std::sort(factors.begin(), factors.end(), [&](const UniPoly& A, const UniPoly& B) {
            if (A.degree() != B.degree()) return A.degree() < B.degree();
            for (int i = 0; i <= A.degree(); ++i) {
                std::uint64_t ca = K->encode(A.coeff(i)), cb = K->encode(B.coeff(i));
                if (ca != cb) return ca < cb;
            }
            return false;
        });
        for (auto& h : factors) {
            const unsigned deg = d * static_cast<unsigned>(h.degree());
            if (deg > t) continue;
            res.census.counts[deg - 1]++;
            res.places.push_back(Place::make_kummer(curve, infinite, p, e, std::move(h), deg));
        }
    };

    // the infinite place of F_q(x)
    {
        const Field* K = fq;
        cvec c0 = f.lc();
        emit_from(true, UniPoly::zero(fq), 1, K, c0, -static_cast<long>(f.degree()));
    }

    // finite places: orbits of elements of exact degree d
    for (unsigned d = 1; d <= t; ++d) {
        const Field* K = Field::extension(fq, d);
        if (!K->size_fits() || K->size() > opts.field_budget) throw budget_error("extension field exceeds the enumeration budget");
        const std::uint64_t q = fq->size();
        const UniPoly fK = f.lift_to(K);

        // orbit-minimal elements of exact degree d, found in parallel chunks
        std::vector<std::vector<std::uint64_t>> found(std::max(1u, opts.threads));
        parallel_for(K->size(), opts.threads, [&](std::size_t lo, std::size_t hi, unsigned worker) {
            auto& sink = found[worker];
            for (std::uint64_t ai = lo; ai < hi; ++ai) {
                cvec alpha = K->decode(ai);
                cvec conj = alpha;
                bool minimal = true;
                unsigned size = 0;
                for (unsigned i = 1; i <= d; ++i) {
                    conj = K->v_pow(conj, q);
                    if (conj == alpha) {
                        size = i;
                        break;
                    }
                    if (K->encode(conj) < ai) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal && size == d) sink.push_back(ai);
            }
        });
        std::vector<std::uint64_t> reps;
        for (auto& chunk : found) reps.insert(reps.end(), chunk.begin(), chunk.end());
        std::sort(reps.begin(), reps.end());

        for (std::uint64_t ai : reps) {
            cvec alpha = K->decode(ai);
            UniPoly p = detail::min_poly_over_base(fq, K, alpha, d);
            long a = 0;
            UniPoly g = f;
            if (K->v_is_zero(fK.eval(alpha))) {
                for (;;) {
                    auto [quo, rem] = g.divrem(p);
                    if (!rem.is_zero()) break;
                    g = quo;
                    ++a;
                    if (g.is_zero()) break;
                }
            }
            cvec c0 = g.lift_to(K).eval(alpha);
            if (K->v_is_zero(c0)) throw std::logic_error("kummer residue must be a unit");
            emit_from(false, p, d, K, c0, a);
        }
    }

    std::sort(res.places.begin(), res.places.end(), PlaceKeyLess{});
    return res;
}

/// Dispatch: smooth planar enumeration or kummer splitting.
inline CensusResult enumerate_places(const CurvePtr& curve, unsigned t, const EnumOptions& opts = {}) {
    CensusResult res = curve->is_planar() ? point_orbit_census(curve, t, opts) : kummer_census(curve, t, opts);
    // Hasse-Weil sanity check on the rational count when sqrt(q) is an integer
    const std::uint64_t q = curve->fq->size();
    const std::uint64_t r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    if (r * r == q) {
        const std::uint64_t bound = q + 1 + 2ULL * curve->genus * r;
        if (res.census.a(1) > bound) throw std::runtime_error("census violates the Hasse-Weil bound");
    }
    return res;
}

}  // namespace gagc

#endif
