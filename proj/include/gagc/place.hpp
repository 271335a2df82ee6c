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

#ifndef GAGC_PLACE_HPP
#define GAGC_PLACE_HPP

#include "curve.hpp"

namespace gagc {

/// Projective point over F_{q^l}, kept normalized: the last nonzero
/// coordinate is scaled to 1.
struct ProjPoint {
    const Field* K = nullptr;
    cvec x, y, z;

    void normalize() {
        const cvec* last = nullptr;
        if (!K->v_is_zero(z))
            last = &z;
        else if (!K->v_is_zero(y))
            last = &y;
        else if (!K->v_is_zero(x))
            last = &x;
        else
            throw std::invalid_argument("(0:0:0) is not a projective point");
        cvec s = K->v_inv(*last);
        x = K->v_mul(x, s);
        y = K->v_mul(y, s);
        z = K->v_mul(z, s);
    }

    std::array<std::uint64_t, 3> key() const { return {K->encode(x), K->encode(y), K->encode(z)}; }
    bool operator==(const ProjPoint& o) const { return K == o.K && x == o.x && y == o.y && z == o.z; }
    bool operator<(const ProjPoint& o) const { return key() < o.key(); }

    std::string to_string() const {
        std::ostringstream os;
        os << "(" << K->encode(x) << ":" << K->encode(y) << ":" << K->encode(z) << ")";
        return os.str();
    }
};

/// q-power Frobenius on coordinates.
inline ProjPoint point_frobenius(const ProjPoint& p, std::uint64_t q) {
    ProjPoint r{p.K, p.K->v_pow(p.x, q), p.K->v_pow(p.y, q), p.K->v_pow(p.z, q)};
    r.normalize();
    return r;
}

/// A place of a curve's function field.
///
/// Planar backend: a Frobenius orbit of l conjugate points with coordinates
/// in F_{q^l}; the representative is the orbit's lexicographically smallest
/// normalized point.
///
/// Kummer backend: the place sits above a place of F_q(x) (a monic
/// irreducible p, or the infinite place) and is identified by an irreducible
/// factor h of T^n' - c over the residue field; e is the ramification index.
class Place {
   public:
    enum class Kind { planar, kummer };

    static std::shared_ptr<const Place> make_planar(CurvePtr curve, std::vector<ProjPoint> orbit) {
        auto p = std::shared_ptr<Place>(new Place(std::move(curve)));
        p->kind_ = Kind::planar;
        p->degree_ = static_cast<unsigned>(orbit.size());
        p->orbit_ = std::move(orbit);
        p->build_key();
        return p;
    }

    static std::shared_ptr<const Place> make_kummer(CurvePtr curve, bool infinite_base, UniPoly p_underlying, unsigned ram_e,
                                                    UniPoly splitting_factor, unsigned degree) {
        auto p = std::shared_ptr<Place>(new Place(std::move(curve)));
        p->kind_ = Kind::kummer;
        p->degree_ = degree;
        p->infinite_base_ = infinite_base;
        p->p_ = std::move(p_underlying);
        p->e_ = ram_e;
        p->h_ = std::move(splitting_factor);
        p->build_key();
        return p;
    }

    Kind kind() const { return kind_; }
    unsigned degree() const { return degree_; }
    const CurvePtr& curve() const { return curve_; }

    const ProjPoint& representative() const {
        require(Kind::planar);
        return orbit_.front();
    }
    const std::vector<ProjPoint>& orbit() const {
        require(Kind::planar);
        return orbit_;
    }

    bool infinite_base() const {
        require(Kind::kummer);
        return infinite_base_;
    }
    const UniPoly& underlying() const {
        require(Kind::kummer);
        return p_;
    }
    unsigned ramification_index() const {
        require(Kind::kummer);
        return e_;
    }
    const UniPoly& splitting_factor() const {
        require(Kind::kummer);
        return h_;
    }

    /// Total order: (degree, then representative lexicographic) for planar
    /// places, (degree, deg p, p lex, factor lex) for kummer places.
    const std::vector<std::uint64_t>& key() const { return key_; }

    std::string to_string() const {
        std::ostringstream os;
        if (kind_ == Kind::planar) {
            os << "deg=" << degree_ << " rep=" << orbit_.front().to_string();
        } else {
            os << "deg=" << degree_ << " p=" << (infinite_base_ ? "inf" : p_.to_string()) << " e=" << e_ << " h=" << h_.to_string("T");
        }
        return os.str();
    }

   private:
    explicit Place(CurvePtr c) : curve_(std::move(c)), p_(nullptr), h_(nullptr) {}
    void require(Kind k) const {
        if (kind_ != k) throw std::logic_error("place backend mismatch");
    }
    void build_key() {
        key_.clear();
        key_.push_back(degree_);
        if (kind_ == Kind::planar) {
            key_.push_back(0);
            auto k = orbit_.front().key();
            key_.insert(key_.end(), k.begin(), k.end());
        } else {
            key_.push_back(1);
            key_.push_back(infinite_base_ ? 0 : 1);
            key_.push_back(infinite_base_ ? 0 : static_cast<std::uint64_t>(p_.degree()));
            if (!infinite_base_) {
                const Field* fq = p_.field();
                for (int i = 0; i <= p_.degree(); ++i) key_.push_back(fq->encode(p_.coeff(i)));
            }
            const Field* kr = h_.field();
            key_.push_back(static_cast<std::uint64_t>(h_.degree()));
            for (int i = 0; i <= h_.degree(); ++i) key_.push_back(kr->encode(h_.coeff(i)));
        }
    }

    CurvePtr curve_;
    Kind kind_ = Kind::planar;
    unsigned degree_ = 0;
    std::vector<ProjPoint> orbit_;
    bool infinite_base_ = false;
    UniPoly p_;
    unsigned e_ = 1;
    UniPoly h_;
    std::vector<std::uint64_t> key_;
};

using PlacePtr = std::shared_ptr<const Place>;

struct PlaceKeyLess {
    bool operator()(const PlacePtr& a, const PlacePtr& b) const { return a->key() < b->key(); }
};

inline bool same_place(const PlacePtr& a, const PlacePtr& b) {
    return a->key() == b->key() && a->curve()->signature() == b->curve()->signature();
}

/// Closes a point under the q-power Frobenius; validates membership on the
/// curve; the representative is the lexicographically smallest orbit point
/// and the stored orbit starts there.
inline PlacePtr frobenius_orbit(const CurvePtr& curve, ProjPoint pt) {
    if (!curve->is_planar()) throw std::invalid_argument("frobenius orbits require the planar backend");
    pt.normalize();
    const Field* K = pt.K;
    if (!K->v_is_zero(curve->poly.eval(K, pt.x, pt.y, pt.z))) throw std::invalid_argument("point does not lie on the curve");
    const std::uint64_t q = curve->fq->size();
    std::vector<ProjPoint> orbit{pt};
    for (;;) {
        ProjPoint next = point_frobenius(orbit.back(), q);
        if (next == orbit.front()) break;
        orbit.push_back(std::move(next));
        if (orbit.size() > 4096) throw std::runtime_error("frobenius orbit failed to close");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < orbit.size(); ++i)
        if (orbit[i] < orbit[best]) best = i;
    std::rotate(orbit.begin(), orbit.begin() + static_cast<std::ptrdiff_t>(best), orbit.end());
    return Place::make_planar(curve, std::move(orbit));
}

}  // namespace gagc

#endif
