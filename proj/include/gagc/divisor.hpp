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

#ifndef GAGC_DIVISOR_HPP
#define GAGC_DIVISOR_HPP

#include "place.hpp"

namespace gagc {

/// Integer-weighted formal sum of places with finite support.
class Divisor {
   public:
    explicit Divisor(CurvePtr curve) : curve_(std::move(curve)) {}

    const CurvePtr& curve() const { return curve_; }
    bool is_zero() const { return m_.empty(); }

    void add(const PlacePtr& p, long c) {
        if (c == 0) return;
        if (p->curve()->signature() != curve_->signature()) throw std::invalid_argument("place belongs to a different curve");
        auto it = m_.find(p->key());
        if (it == m_.end()) {
            m_.emplace(p->key(), std::make_pair(p, c));
        } else {
            it->second.second += c;
            if (it->second.second == 0) m_.erase(it);
        }
    }

    long coeff(const PlacePtr& p) const {
        auto it = m_.find(p->key());
        return it == m_.end() ? 0 : it->second.second;
    }

    Divisor operator+(const Divisor& o) const {
        check(o);
        Divisor r = *this;
        for (const auto& [k, pc] : o.m_) {
            (void)k;
            r.add(pc.first, pc.second);
        }
        return r;
    }
    Divisor operator-() const {
        Divisor r = *this;
        for (auto& [k, pc] : r.m_) {
            (void)k;
            pc.second = -pc.second;
        }
        return r;
    }
    Divisor operator-(const Divisor& o) const { return *this + (-o); }
    Divisor scaled(long s) const {
        Divisor r(curve_);
        if (s == 0) return r;
        r.m_ = m_;
        for (auto& [k, pc] : r.m_) {
            (void)k;
            pc.second *= s;
        }
        return r;
    }

    /// Degree-weighted sum.
    long degree() const {
        long d = 0;
        for (const auto& [k, pc] : m_) {
            (void)k;
            d += pc.second * static_cast<long>(pc.first->degree());
        }
        return d;
    }

    /// Support in canonical place order.
    std::vector<std::pair<PlacePtr, long>> support() const {
        std::vector<std::pair<PlacePtr, long>> out;
        out.reserve(m_.size());
        for (const auto& [k, pc] : m_) {
            (void)k;
            out.push_back(pc);
        }
        return out;  // std::map keeps key order, which is the canonical order
    }

    Divisor positive_part() const {
        Divisor r(curve_);
        for (const auto& [k, pc] : m_) {
            (void)k;
            if (pc.second > 0) r.add(pc.first, pc.second);
        }
        return r;
    }
    Divisor negative_part() const {  // effective: G = positive_part() - negative_part()
        Divisor r(curve_);
        for (const auto& [k, pc] : m_) {
            (void)k;
            if (pc.second < 0) r.add(pc.first, -pc.second);
        }
        return r;
    }
    bool is_effective() const {
        return std::all_of(m_.begin(), m_.end(), [](const auto& kv) { return kv.second.second > 0; });
    }

    bool operator==(const Divisor& o) const {
        if (m_.size() != o.m_.size()) return false;
        auto i = m_.begin();
        auto j = o.m_.begin();
        for (; i != m_.end(); ++i, ++j)
            if (i->first != j->first || i->second.second != j->second.second) return false;
        return true;
    }

    std::string to_string() const {
        if (m_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, pc] : m_) {
            (void)k;
            if (!first) os << " ";
            first = false;
            os << (pc.second >= 0 && !first ? "+" : "") << pc.second << "*[" << pc.first->to_string() << "]";
        }
        return os.str();
    }

   private:
    void check(const Divisor& o) const {
        if (curve_->signature() != o.curve_->signature()) throw std::invalid_argument("divisors live on different curves");
    }
    CurvePtr curve_;
    std::map<std::vector<std::uint64_t>, std::pair<PlacePtr, long>> m_;
};

inline Divisor one_point_divisor(const PlacePtr& p, long m) {
    Divisor d(p->curve());
    d.add(p, m);
    return d;
}

/// The two-point divisor m(Q - R) with deg(Q) = deg(R) + 1.
inline Divisor two_point_divisor(const PlacePtr& Q, const PlacePtr& R, long m) {
    Divisor d(Q->curve());
    d.add(Q, m);
    d.add(R, -m);
    return d;
}

}  // namespace gagc

#endif
