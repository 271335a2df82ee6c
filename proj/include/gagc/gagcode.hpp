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

#ifndef GAGC_GAGCODE_HPP
#define GAGC_GAGCODE_HPP

#include <json.hpp>

#include "census.hpp"
#include "inner.hpp"
#include "rroch.hpp"

namespace gagc {

/// Recipe for a generalised AG code C(k; B_1,...,B_t).
struct ConstructionSpec {
    unsigned t = 0;
    std::vector<std::uint64_t> B;  // B_1..B_t, places used per degree
    enum class Recipe { one_point_infinity, two_point };
    Recipe recipe = Recipe::two_point;
    long m = -1;         // divisor parameter; derived from k_target when negative
    long k_target = -1;  // requested dimension (sets m = k + g - 1)
    std::vector<std::vector<std::uint64_t>> eval_overrides;  // optional explicit index lists per degree
    std::uint64_t seed = kDefaultSeed;
};

struct CodeParams {
    unsigned n = 0;
    long k_lower = 0;
    bool k_exact = false;
    long designed = 0;
};

struct GagCode {
    CurvePtr curve;
    Mat gen;
    unsigned n = 0, k = 0;
    long designed = 0;
    Divisor G;
    FunctionSpace space;
    std::vector<PlacePtr> eval_places;               // column-block order
    std::vector<std::pair<unsigned, unsigned>> inner_params;  // per degree used: (n_j, d_j)
    ConstructionSpec spec;

    GagCode(CurvePtr c, Mat m0, Divisor g0, FunctionSpace s0) : curve(std::move(c)), gen(std::move(m0)), G(std::move(g0)), space(std::move(s0)) {}

    std::string summary() const {
        std::ostringstream os;
        os << "[" << n << "," << k << ",d>=" << designed << "]_" << curve->fq->size();
        return os.str();
    }
};

namespace detail {

inline long resolve_m(const Curve& curve, const ConstructionSpec& spec) {
    if (spec.m >= 0 && spec.k_target >= 0) throw std::invalid_argument("give either m or a target dimension, not both");
    if (spec.m < 0 && spec.k_target < 0) throw std::invalid_argument("a divisor parameter m or a target dimension is required");
    if (spec.m >= 0) return spec.m;
    return spec.k_target + static_cast<long>(curve.genus) - 1;
}

/// Tentative selection, divisor support choice, final selection.
struct Selection {
    std::vector<PlacePtr> eval;      // in column-block order (ascending degree, canonical within)
    PlacePtr Q, R;                   // two_point only
    PlacePtr P_inf;                  // one_point_infinity only
};

inline Selection select_places(const CensusResult& census, const ConstructionSpec& spec, Divisor& G_out, long m) {
    const CurvePtr& curve = census.curve;
    Selection sel;

    if (spec.B.size() != spec.t) throw std::invalid_argument("B vector length must equal t");
    for (unsigned j = 1; j <= spec.t; ++j) {
        if (j > census.census.t) throw std::invalid_argument("census does not cover degree " + std::to_string(j));
        if (spec.B[j - 1] > census.census.a(j))
            throw std::invalid_argument("B_" + std::to_string(j) + " exceeds the number of available places A_" + std::to_string(j));
    }

    std::vector<std::vector<PlacePtr>> by_degree(spec.t + 1);
    for (const auto& p : census.places)
        if (p->degree() <= spec.t) by_degree[p->degree()].push_back(p);

    // divisor support
    if (spec.recipe == ConstructionSpec::Recipe::one_point_infinity) {
        sel.P_inf = hermitian_infinity(curve);
        G_out = one_point_divisor(sel.P_inf, m);
    } else {
        // tentative prefix selection, ignoring the divisor
        auto tentatively_selected = [&](const PlacePtr& p) {
            const auto& pool = by_degree[p->degree()];
            for (std::uint64_t i = 0; i < spec.B[p->degree() - 1] && i < pool.size(); ++i)
                if (same_place(pool[i], p)) return true;
            return false;
        };
        auto first_outside = [&](unsigned deg) -> PlacePtr {
            if (deg > census.census.t) throw std::invalid_argument("census does not cover the divisor degree " + std::to_string(deg));
            for (const auto& p : census.places) {
                if (p->degree() != deg) continue;
                if (deg <= spec.t && tentatively_selected(p)) continue;
                return p;
            }
            throw std::invalid_argument("no free place of degree " + std::to_string(deg) + " for the divisor");
        };
        sel.Q = first_outside(4);
        sel.R = first_outside(3);
        G_out = two_point_divisor(sel.Q, sel.R, m);
    }

    // final selection: canonical prefix (or explicit lists) avoiding supp(G)
    for (unsigned j = 1; j <= spec.t; ++j) {
        std::vector<PlacePtr> avail;
        for (const auto& p : by_degree[j])
            if (G_out.coeff(p) == 0) avail.push_back(p);
        const std::uint64_t want = spec.B[j - 1];
        if (!spec.eval_overrides.empty()) {
            if (spec.eval_overrides.size() != spec.t) throw std::invalid_argument("eval override list must cover every degree");
            const auto& idx = spec.eval_overrides[j - 1];
            if (idx.size() != want) throw std::invalid_argument("override count does not match B");
            for (auto i : idx) {
                if (i >= by_degree[j].size()) throw std::invalid_argument("override index out of range");
                if (G_out.coeff(by_degree[j][i]) != 0) throw std::invalid_argument("override selects a divisor place");
                sel.eval.push_back(by_degree[j][i]);
            }
            continue;
        }
        if (want > avail.size())
            throw std::invalid_argument("not enough places of degree " + std::to_string(j) + " outside supp(G)");
        for (std::uint64_t i = 0; i < want; ++i) sel.eval.push_back(avail[i]);
    }
    return sel;
}

}  // namespace detail

/// Parameters (n, k_lower, d*) straight from the census, no basis needed.
inline CodeParams params(const CensusResult& census, const ConstructionSpec& spec) {
    const CurvePtr& curve = census.curve;
    if (spec.B.size() != spec.t) throw std::invalid_argument("B vector length must equal t");
    const long m = detail::resolve_m(*curve, spec);
    const long g = curve->genus;
    CodeParams out;
    long sum_d = 0;
    for (unsigned j = 1; j <= spec.t; ++j) {
        if (spec.B[j - 1] > census.census.a(j))
            throw std::invalid_argument("B_" + std::to_string(j) + " exceeds the number of available places A_" + std::to_string(j));
        out.n += static_cast<unsigned>(spec.B[j - 1] * (2 * j - 1));
        sum_d += static_cast<long>(spec.B[j - 1]) * j;
    }
    out.k_lower = m - g + 1;
    out.k_exact = m >= 2 * g - 1;
    out.designed = sum_d - g - out.k_lower + 1;
    if (out.designed < 1) throw std::invalid_argument("designed distance fell below 1");
    return out;
}

/// Assemble the generator matrix: rows are Riemann-Roch basis elements,
/// column blocks are sigma(pi(f(P))) per selected place.
inline GagCode assemble(const CensusResult& census, const ConstructionSpec& spec) {
    const CurvePtr& curve = census.curve;
    if (!curve->is_planar())
        throw std::invalid_argument("generator-matrix construction needs the planar backend (this curve supports census/params only)");
    const Field* fq = curve->fq;
    const long m = detail::resolve_m(*curve, spec);
    const long g = curve->genus;

    Divisor G(curve);
    detail::Selection sel = detail::select_places(census, spec, G, m);

    FunctionSpace space = spec.recipe == ConstructionSpec::Recipe::one_point_infinity
                              ? hermitian_onepoint_basis(curve, static_cast<unsigned>(m))
                              : brill_noether_basis(curve, G);
    if (spec.k_target >= 0) {
        if (m >= 2 * g - 1 && static_cast<long>(space.dim) != spec.k_target)
            throw std::logic_error("basis dimension disagrees with the requested k");
        // m < 2g-1: the actual basis dimension is used
    }
    const unsigned k = space.dim;
    if (k < 1) throw std::invalid_argument("empty message space");

    unsigned n = 0;
    long sum_d = 0;
    for (unsigned j = 1; j <= spec.t; ++j) {
        n += static_cast<unsigned>(spec.B[j - 1] * (2 * j - 1));
        sum_d += static_cast<long>(spec.B[j - 1]) * j;
    }
    const long designed = sum_d - g - static_cast<long>(k) + 1;
    if (designed < 1) throw std::invalid_argument("designed distance fell below 1");

    GagCode code(curve, Mat(fq, k, n), G, space);
    code.n = n;
    code.k = k;
    code.designed = designed;
    code.eval_places = sel.eval;
    code.spec = spec;
    for (unsigned j = 1; j <= spec.t; ++j)
        if (spec.B[j - 1]) code.inner_params.emplace_back(2 * j - 1, j);

    std::size_t col = 0;
    for (const auto& place : sel.eval) {
        const unsigned j = place->degree();
        const InnerCode& inner = inner_registry(fq, j);
        for (unsigned row = 0; row < k; ++row) {
            Element v = evaluate(curve, place, space.basis[row]);
            std::vector<fidx> msg = detail::fq_coordinates(v.field(), fq, v.coeffs());
            std::vector<fidx> word = inner.encode(msg);
            for (unsigned c = 0; c < inner.n; ++c) code.gen.at(row, col + c) = word[c];
        }
        col += inner.n;
    }
    if (col != n) throw std::logic_error("column bookkeeping failed");
    if (code.gen.rank() != k)
        throw std::logic_error("rank deficiency: the evaluation map is not injective in this parameter regime");
    return code;
}

/// Goppa special case C(k; N,0,...,0): only rational places, the inner map
/// is the identity and M is the classical evaluation matrix [f_l(P_i)].
inline GagCode goppa_mode(const CensusResult& census, const ConstructionSpec& spec) {
    for (unsigned j = 2; j <= spec.t; ++j)
        if (spec.B[j - 1] != 0) throw std::invalid_argument("goppa mode uses only rational places");
    GagCode code = assemble(census, spec);
    const InnerCode& c1 = inner_registry(census.curve->fq, 1);
    if (c1.n != 1 || c1.gen.at(0, 0) != 1) throw std::logic_error("degree-1 inner code is not the identity");
    for (std::size_t i = 0; i < code.k; ++i)
        for (std::size_t j = 0; j < code.eval_places.size(); ++j) {
            Element v = evaluate(code.curve, code.eval_places[j], code.space.basis[i]);
            if (static_cast<fidx>(v.code()) != code.gen.at(i, j)) throw std::logic_error("goppa matrix is not the evaluation matrix");
        }
    return code;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

inline std::string write_matrix_text(const GagCode& code) {
    std::ostringstream os;
    os << code.curve->fq->size() << " " << code.n << " " << code.k << " " << code.designed << "\n";
    for (unsigned i = 0; i < code.k; ++i) {
        for (unsigned j = 0; j < code.n; ++j) {
            if (j) os << " ";
            os << code.gen.at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

struct MatrixFile {
    std::uint64_t q = 0;
    unsigned n = 0, k = 0;
    long designed = 0;
    Mat gen;
};

inline MatrixFile read_matrix_text(std::istream& in) {
    std::uint64_t q;
    unsigned n, k;
    long d;
    if (!(in >> q >> n >> k >> d)) throw std::invalid_argument("malformed matrix header");
    // reconstruct the canonical field for q = p^deg
    unsigned p = 2;
    {
        std::uint64_t qq = q;
        for (p = 2; p <= 255; ++p)
            if (qq % p == 0) break;
        unsigned deg = 0;
        while (qq > 1) {
            if (qq % p) throw std::invalid_argument("q is not a prime power");
            qq /= p;
            ++deg;
        }
        const Field* fq = deg == 1 ? Field::prime(p) : Field::extension(Field::prime(p), deg);
        MatrixFile mf{q, n, k, d, Mat(fq, k, n)};
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < n; ++j) {
                std::uint64_t v;
                if (!(in >> v) || v >= q) throw std::invalid_argument("malformed matrix entry");
                mf.gen.at(i, j) = static_cast<fidx>(v);
            }
        return mf;
    }
}

inline std::string metadata_json(const GagCode& code) {
    nlohmann::json j;
    j["field"] = code.curve->fq->describe();
    j["curve"] = {{"label", code.curve->label}, {"signature", code.curve->signature()}, {"genus", code.curve->genus}};
    j["n"] = code.n;
    j["k"] = code.k;
    j["d_designed"] = code.designed;
    j["t"] = code.spec.t;
    j["B"] = code.spec.B;
    j["m"] = detail::resolve_m(*code.curve, code.spec);
    j["recipe"] = code.spec.recipe == ConstructionSpec::Recipe::one_point_infinity ? "one_point_infinity" : "two_point";
    j["seed"] = code.spec.seed;
    std::vector<std::string> divisor_desc;
    for (const auto& [p, c] : code.G.support()) divisor_desc.push_back(std::to_string(c) + " * [" + p->to_string() + "]");
    j["divisor"] = divisor_desc;
    std::vector<std::string> places;
    places.reserve(code.eval_places.size());
    for (const auto& p : code.eval_places) places.push_back(p->to_string());
    j["evaluation_places"] = places;
    std::vector<std::string> inners;
    for (const auto& [nj, dj] : code.inner_params)
        inners.push_back("[" + std::to_string(nj) + "," + std::to_string(dj) + "," + std::to_string(dj) + "]");
    j["inner_codes"] = inners;
    std::vector<std::string> basis;
    for (const auto& f : code.space.basis) basis.push_back(f.num.to_string() + " / " + f.den.to_string());
    j["basis"] = basis;
    return j.dump(2);
}

}  // namespace gagc

#endif
