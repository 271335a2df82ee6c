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

#ifndef GAGC_FIELD_HPP
#define GAGC_FIELD_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "common.hpp"

namespace gagc {

/// Exact arithmetic in finite field towers F_p -> F_q -> F_{q^l} -> ...
///
/// Every field is either a prime field or an extension of another field by a
/// monic irreducible modulus. Elements are coefficient vectors over the
/// immediate base (power basis of the level generator). Fields are interned:
/// the factories return pointers that stay valid for the process lifetime,
/// and rebuilding with the same inputs yields the identical object.
class Field {
   public:
    static constexpr std::uint64_t kIndexLimit = 1ULL << 20;  // idx ops available up to here
    static constexpr std::uint64_t kTableLimit = 1024;        // full op tables up to here

    static const Field* prime(unsigned p);
    static const Field* extension(const Field* base, unsigned degree);  // canonical modulus
    static const Field* extension(const Field* base, const std::vector<fidx>& modulus);

    unsigned characteristic() const { return p_; }
    const Field* base() const { return base_; }
    bool is_prime_field() const { return base_ == nullptr; }
    unsigned degree() const { return deg_; }  // over the immediate base (1 for prime fields)
    unsigned degree_over_prime() const { return deg_over_prime_; }
    bool size_fits() const { return size_ != 0; }
    std::uint64_t size() const {
        if (!size_) throw std::overflow_error("field size exceeds 2^62");
        return size_;
    }
    /// Defining polynomial over the base, low-to-high, monic, length degree()+1.
    const std::vector<fidx>& modulus() const { return modulus_; }

    // ---- index arithmetic (elements as integers 0..size-1, mixed-radix over the base) ----
    bool indexable() const { return size_ != 0 && size_ <= kIndexLimit; }
    fidx add(fidx a, fidx b) const;
    fidx sub(fidx a, fidx b) const;
    fidx neg(fidx a) const;
    fidx mul(fidx a, fidx b) const;
    fidx inv(fidx a) const;
    fidx div(fidx a, fidx b) const { return mul(a, inv(b)); }
    fidx pow(fidx a, std::uint64_t e) const;

    // ---- coefficient-vector arithmetic (works for any size) ----
    cvec zero() const { return cvec(deg_, 0); }
    cvec one() const;
    bool v_is_zero(const cvec& a) const;
    bool v_is_one(const cvec& a) const;
    cvec v_add(const cvec& a, const cvec& b) const;
    cvec v_sub(const cvec& a, const cvec& b) const;
    cvec v_neg(const cvec& a) const;
    cvec v_mul(const cvec& a, const cvec& b) const;
    cvec v_inv(const cvec& a) const;
    cvec v_div(const cvec& a, const cvec& b) const { return v_mul(a, v_inv(b)); }
    cvec v_pow(cvec a, std::uint64_t e) const;

    std::uint64_t encode(const cvec& a) const;  // mixed-radix index of an element
    cvec decode(std::uint64_t idx) const;
    cvec from_int(std::uint64_t idx) const { return decode(idx); }
    /// Constant embedding of a base-field element (given by its base index).
    cvec from_base_index(fidx c) const;
    /// Inverse of from_base_index; throws if the element is not in the base image.
    fidx to_base_index(const cvec& a) const;

    /// Multiplicative generator (smallest by encoding); requires indexable().
    fidx primitive_element() const;
    /// Discrete log to base primitive_element(); a != 0; requires indexable().
    std::uint64_t discrete_log(fidx a) const;
    /// Prime factorization of size()-1 (cached).
    const std::vector<std::pair<std::uint64_t, unsigned>>& unit_group_factorization() const;

    /// Serialized description, e.g. "GF(2^4) poly=1,0,0,1,1" (coefficients low-to-high).
    std::string describe() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    explicit Field(unsigned p);
    Field(const Field* base, std::vector<fidx> modulus);

    void build_tables();
    const Field* entry_field() const { return base_ ? base_ : this; }

    unsigned p_ = 0;
    const Field* base_ = nullptr;
    unsigned deg_ = 1;
    unsigned deg_over_prime_ = 1;
    std::uint64_t size_ = 0;  // 0 when it does not fit in 62 bits
    std::vector<fidx> modulus_;

    bool tabled_ = false;
    std::vector<fidx> add_t_, mul_t_, inv_t_;

    mutable std::once_flag dlog_once_;
    mutable fidx gen_ = 0;
    mutable std::vector<std::pair<std::uint64_t, unsigned>> mfact_;

    // polynomial helpers over the base at index level
    using bpoly = std::vector<fidx>;
    static void bp_trim(bpoly& f);
    static bpoly bp_add(const Field* k, const bpoly& a, const bpoly& b);
    static bpoly bp_sub(const Field* k, const bpoly& a, const bpoly& b);
    static bpoly bp_mul(const Field* k, const bpoly& a, const bpoly& b);
    static bpoly bp_rem(const Field* k, bpoly a, const bpoly& m);
    static bpoly bp_gcd(const Field* k, bpoly a, bpoly b);
    static bpoly bp_powmod(const Field* k, bpoly x, std::uint64_t e, const bpoly& m);
    static bpoly bp_inv_mod(const Field* k, const bpoly& a, const bpoly& m);
    static bool bp_is_irreducible(const Field* k, const bpoly& f);
    static std::vector<fidx> canonical_modulus(const Field* base, unsigned degree);

    bpoly v_to_bpoly(const cvec& a) const;
    cvec bpoly_to_v(const bpoly& f) const;

    friend struct FieldIntern;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

inline void factor_u64_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    for (std::uint64_t p = 2; p * p <= n && p < 100000; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
        if (n == 1) return;
        if (is_prime_u64(n)) {
            ++out[n];
            return;
        }
    }
    std::uint64_t d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> m;
    factor_u64_into(n, m);
    return {m.begin(), m.end()};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// interning
// ---------------------------------------------------------------------------

struct FieldIntern {
    std::mutex mu;
    std::map<unsigned, std::unique_ptr<Field>> primes;
    std::map<std::pair<const Field*, std::vector<fidx>>, std::unique_ptr<Field>> exts;
    std::map<std::pair<const Field*, unsigned>, const Field*> canonical;

    static FieldIntern& get() {
        static FieldIntern x;
        return x;
    }
};

inline const Field* Field::prime(unsigned p) {
    if (p < 2 || p >= 256) throw std::invalid_argument("characteristic must be a prime < 256");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("characteristic must be prime");
    auto& in = FieldIntern::get();
    std::lock_guard<std::mutex> lk(in.mu);
    auto it = in.primes.find(p);
    if (it == in.primes.end()) it = in.primes.emplace(p, std::unique_ptr<Field>(new Field(p))).first;
    return it->second.get();
}

inline const Field* Field::extension(const Field* base, const std::vector<fidx>& modulus) {
    if (!base) throw std::invalid_argument("null base field");
    if (modulus.size() < 2) throw std::invalid_argument("extension degree must be positive");
    auto& in = FieldIntern::get();
    std::lock_guard<std::mutex> lk(in.mu);
    auto key = std::make_pair(base, modulus);
    auto it = in.exts.find(key);
    if (it == in.exts.end()) it = in.exts.emplace(std::move(key), std::unique_ptr<Field>(new Field(base, modulus))).first;
    return it->second.get();
}

inline const Field* Field::extension(const Field* base, unsigned degree) {
    if (!base) throw std::invalid_argument("null base field");
    if (degree == 0) throw std::invalid_argument("extension degree must be positive");
    if (degree == 1) return base;
    {
        auto& in = FieldIntern::get();
        std::lock_guard<std::mutex> lk(in.mu);
        auto it = in.canonical.find({base, degree});
        if (it != in.canonical.end()) return it->second;
    }
    std::vector<fidx> mod = canonical_modulus(base, degree);
    const Field* f = extension(base, mod);
    auto& in = FieldIntern::get();
    std::lock_guard<std::mutex> lk(in.mu);
    in.canonical.emplace(std::make_pair(base, degree), f);
    return f;
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

inline Field::Field(unsigned p) : p_(p), deg_(1), deg_over_prime_(1), size_(p) {
    modulus_ = {0, 1};  // formally x - 0 is not meaningful for prime fields; kept monic for uniformity
}

inline Field::Field(const Field* base, std::vector<fidx> modulus) : p_(base->p_), base_(base), modulus_(std::move(modulus)) {
    deg_ = static_cast<unsigned>(modulus_.size()) - 1;
    if (!base->size_fits() || base->size() > 65536) throw std::invalid_argument("base field too large to serve as a tower level");
    deg_over_prime_ = base->deg_over_prime_ * deg_;
    if (deg_over_prime_ > 4096) throw std::invalid_argument("tower degree too large");
    // size, saturating to 0 beyond 2^62
    unsigned __int128 s = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        s *= base->size();
        if (s > (static_cast<unsigned __int128>(1) << 62)) {
            s = 0;
            break;
        }
    }
    size_ = static_cast<std::uint64_t>(s);
    for (fidx c : modulus_)
        if (c >= base->size()) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!bp_is_irreducible(base, modulus_)) throw std::invalid_argument("modulus is not irreducible over the base field");
    if (size_ && size_ <= kTableLimit) build_tables();
}

inline void Field::build_tables() {
    const std::size_t n = static_cast<std::size_t>(size_);
    add_t_.resize(n * n);
    mul_t_.resize(n * n);
    inv_t_.assign(n, 0);
    std::vector<cvec> elems(n);
    for (std::size_t i = 0; i < n; ++i) elems[i] = decode(i);
    tabled_ = false;  // use the generic paths while filling
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            fidx s = static_cast<fidx>(encode(v_add(elems[i], elems[j])));
            fidx m = static_cast<fidx>(encode(v_mul(elems[i], elems[j])));
            add_t_[i * n + j] = add_t_[j * n + i] = s;
            mul_t_[i * n + j] = mul_t_[j * n + i] = m;
            if (m == 1) {
                inv_t_[i] = static_cast<fidx>(j);
                inv_t_[j] = static_cast<fidx>(i);
            }
        }
    }
    tabled_ = true;
}

// ---------------------------------------------------------------------------
// index ops
// ---------------------------------------------------------------------------

inline fidx Field::add(fidx a, fidx b) const {
    if (!base_) return (a + b) % p_;
    if (tabled_) return add_t_[static_cast<std::size_t>(a) * size_ + b];
    if (!indexable()) throw std::invalid_argument("field not indexable");
    return static_cast<fidx>(encode(v_add(decode(a), decode(b))));
}

inline fidx Field::neg(fidx a) const {
    if (!base_) return a ? p_ - a : 0;
    if (p_ == 2) return a;
    if (!indexable()) throw std::invalid_argument("field not indexable");
    return static_cast<fidx>(encode(v_neg(decode(a))));
}

inline fidx Field::sub(fidx a, fidx b) const {
    if (!base_) return (a + p_ - b) % p_;
    if (p_ == 2) return add(a, b);
    return add(a, neg(b));
}

inline fidx Field::mul(fidx a, fidx b) const {
    if (!base_) return (a * b) % p_;
    if (tabled_) return mul_t_[static_cast<std::size_t>(a) * size_ + b];
    if (!indexable()) throw std::invalid_argument("field not indexable");
    return static_cast<fidx>(encode(v_mul(decode(a), decode(b))));
}

inline fidx Field::inv(fidx a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (!base_) return static_cast<fidx>(detail::powmod_u64(a, p_ - 2, p_));
    if (tabled_) return inv_t_[a];
    if (!indexable()) throw std::invalid_argument("field not indexable");
    return static_cast<fidx>(encode(v_inv(decode(a))));
}

inline fidx Field::pow(fidx a, std::uint64_t e) const {
    fidx r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// vector ops
// ---------------------------------------------------------------------------

inline cvec Field::one() const {
    cvec v(deg_, 0);
    v[0] = 1;
    return v;
}

inline bool Field::v_is_zero(const cvec& a) const {
    (void)this;
    return std::all_of(a.begin(), a.end(), [](std::uint16_t c) { return c == 0; });
}

inline bool Field::v_is_one(const cvec& a) const {
    if (a.empty() || a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](std::uint16_t c) { return c == 0; });
}

inline cvec Field::v_add(const cvec& a, const cvec& b) const {
    assert(a.size() == deg_ && b.size() == deg_);
    const Field* e = entry_field();
    cvec r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = static_cast<std::uint16_t>(e->add(a[i], b[i]));
    return r;
}

inline cvec Field::v_neg(const cvec& a) const {
    if (p_ == 2) return a;
    const Field* e = entry_field();
    cvec r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = static_cast<std::uint16_t>(e->neg(a[i]));
    return r;
}

inline cvec Field::v_sub(const cvec& a, const cvec& b) const {
    if (p_ == 2) return v_add(a, b);
    return v_add(a, v_neg(b));
}

inline cvec Field::v_mul(const cvec& a, const cvec& b) const {
    assert(a.size() == deg_ && b.size() == deg_);
    if (!base_) {
        cvec r(1);
        r[0] = static_cast<std::uint16_t>((static_cast<fidx>(a[0]) * b[0]) % p_);
        return r;
    }
    const Field* e = base_;
    // schoolbook product then reduction by the monic modulus
    std::vector<fidx> t(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < deg_; ++j) {
            if (!b[j]) continue;
            t[i + j] = e->add(t[i + j], e->mul(a[i], b[j]));
        }
    }
    for (unsigned i = 2 * deg_ - 2; i >= deg_; --i) {
        fidx c = t[i];
        if (c) {
            t[i] = 0;
            for (unsigned j = 0; j < deg_; ++j)
                if (modulus_[j]) t[i - deg_ + j] = e->sub(t[i - deg_ + j], e->mul(c, modulus_[j]));
        }
        if (i == deg_) break;
    }
    cvec r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = static_cast<std::uint16_t>(t[i]);
    return r;
}

inline cvec Field::v_inv(const cvec& a) const {
    if (v_is_zero(a)) throw std::domain_error("division by zero");
    if (!base_) {
        cvec r(1);
        r[0] = static_cast<std::uint16_t>(inv(a[0]));
        return r;
    }
    return bpoly_to_v(bp_inv_mod(base_, v_to_bpoly(a), modulus_));
}

inline cvec Field::v_pow(cvec a, std::uint64_t e) const {
    cvec r = one();
    while (e) {
        if (e & 1) r = v_mul(r, a);
        a = v_mul(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t Field::encode(const cvec& a) const {
    const std::uint64_t b = base_ ? base_->size() : p_;
    std::uint64_t r = 0;
    for (unsigned i = deg_; i-- > 0;) r = r * b + a[i];
    return r;
}

inline cvec Field::decode(std::uint64_t idx) const {
    const std::uint64_t b = base_ ? base_->size() : p_;
    cvec r(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
        r[i] = static_cast<std::uint16_t>(idx % b);
        idx /= b;
    }
    if (idx) throw std::invalid_argument("element index out of range");
    return r;
}

inline cvec Field::from_base_index(fidx c) const {
    if (!base_) return decode(c);
    cvec r(deg_, 0);
    r[0] = static_cast<std::uint16_t>(c);
    return r;
}

inline fidx Field::to_base_index(const cvec& a) const {
    for (unsigned i = 1; i < deg_; ++i)
        if (a[i]) throw std::domain_error("element does not lie in the base field");
    return a[0];
}

// ---------------------------------------------------------------------------
// base-level polynomial helpers
// ---------------------------------------------------------------------------

inline void Field::bp_trim(bpoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Field::bpoly Field::bp_add(const Field* k, const bpoly& a, const bpoly& b) {
    bpoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        fidx x = i < a.size() ? a[i] : 0;
        fidx y = i < b.size() ? b[i] : 0;
        r[i] = k->add(x, y);
    }
    bp_trim(r);
    return r;
}

inline Field::bpoly Field::bp_sub(const Field* k, const bpoly& a, const bpoly& b) {
    bpoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        fidx x = i < a.size() ? a[i] : 0;
        fidx y = i < b.size() ? b[i] : 0;
        r[i] = k->sub(x, y);
    }
    bp_trim(r);
    return r;
}

inline Field::bpoly Field::bp_mul(const Field* k, const bpoly& a, const bpoly& b) {
    if (a.empty() || b.empty()) return {};
    bpoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] = k->add(r[i + j], k->mul(a[i], b[j]));
    }
    bp_trim(r);
    return r;
}

inline Field::bpoly Field::bp_rem(const Field* k, bpoly a, const bpoly& m) {
    const std::size_t dm = m.size() - 1;
    const fidx lead_inv = k->inv(m.back());
    while (a.size() > dm) {
        fidx c = k->mul(a.back(), lead_inv);
        if (c) {
            const std::size_t off = a.size() - 1 - dm;
            for (std::size_t j = 0; j < dm; ++j)
                if (m[j]) a[off + j] = k->sub(a[off + j], k->mul(c, m[j]));
        }
        a.pop_back();
        bp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline Field::bpoly Field::bp_gcd(const Field* k, bpoly a, bpoly b) {
    bp_trim(a);
    bp_trim(b);
    while (!b.empty()) {
        bpoly r = bp_rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        fidx li = k->inv(a.back());
        for (auto& c : a) c = k->mul(c, li);
    }
    return a;
}

inline Field::bpoly Field::bp_powmod(const Field* k, bpoly x, std::uint64_t e, const bpoly& m) {
    bpoly r = {1};
    x = bp_rem(k, std::move(x), m);
    while (e) {
        if (e & 1) r = bp_rem(k, bp_mul(k, r, x), m);
        x = bp_rem(k, bp_mul(k, x, x), m);
        e >>= 1;
    }
    return r;
}

inline Field::bpoly Field::bp_inv_mod(const Field* k, const bpoly& a, const bpoly& m) {
    // extended Euclid: returns u with u*a = 1 (mod m)
    bpoly r0 = m, r1 = bp_rem(k, a, m);
    bpoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        bpoly q;
        bpoly rem = r0;
        const std::size_t d1 = r1.size() - 1;
        const fidx li = k->inv(r1.back());
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                fidx c = k->mul(rem.back(), li);
                std::size_t off = rem.size() - 1 - d1;
                q[off] = c;
                if (c)
                    for (std::size_t j = 0; j < r1.size(); ++j)
                        if (r1[j]) rem[off + j] = k->sub(rem[off + j], k->mul(c, r1[j]));
                rem.pop_back();
                bp_trim(rem);
                if (rem.empty()) break;
            }
            bp_trim(q);
        }
        bpoly s2 = bp_sub(k, s0, bp_mul(k, q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::domain_error("element not invertible");
    fidx li = k->inv(r0[0]);
    for (auto& c : s0) c = k->mul(c, li);
    bpoly res = bp_rem(k, s0, m);
    return res;
}

inline bool Field::bp_is_irreducible(const Field* k, const bpoly& f) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const std::uint64_t q = k->size();
    bpoly h = {0, 1};  // x
    for (std::size_t i = 1; i <= n; ++i) {
        h = bp_powmod(k, std::move(h), q, f);  // h = x^(q^i) mod f
        if (i <= n / 2) {
            bpoly d = bp_sub(k, h, bpoly{0, 1});
            bpoly g = bp_gcd(k, f, d);
            if (g.size() != 1) return false;
        }
    }
    bpoly d = bp_sub(k, h, bpoly{0, 1});
    return d.empty();
}

inline std::vector<fidx> Field::canonical_modulus(const Field* base, unsigned degree) {
    // Lexicographically smallest monic irreducible, coefficients compared
    // low-degree-first in the base element encoding order. Candidates with
    // c_0 = 0 are divisible by x, so for degree >= 2 the scan starts at
    // c_0 = 1 without changing the result.
    if (!base->size_fits() || base->size() > 65536) throw std::invalid_argument("base field too large to extend");
    const std::uint64_t b = base->size();
    std::vector<fidx> c(degree, 0);
    if (degree >= 2) c[0] = 1;
    for (;;) {
        std::vector<fidx> f(c.begin(), c.end());
        f.push_back(1);
        if (bp_is_irreducible(base, f)) return f;
        // advance the tuple (c_0,...,c_{m-1}) in lex order with c_0 most significant
        unsigned i = degree;
        while (i > 0) {
            --i;
            if (++c[i] < b) break;
            c[i] = 0;
            if (i == 0) throw std::runtime_error("no irreducible polynomial found");
        }
    }
}

inline Field::bpoly Field::v_to_bpoly(const cvec& a) const {
    bpoly f(a.begin(), a.end());
    bp_trim(f);
    return f;
}

inline cvec Field::bpoly_to_v(const bpoly& f) const {
    cvec r(deg_, 0);
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<std::uint16_t>(f[i]);
    return r;
}

// ---------------------------------------------------------------------------
// multiplicative structure
// ---------------------------------------------------------------------------

inline const std::vector<std::pair<std::uint64_t, unsigned>>& Field::unit_group_factorization() const {
    std::call_once(dlog_once_, [this] {
        mfact_ = detail::factor_u64(size() - 1);
        const std::uint64_t m = size() - 1;
        for (fidx g = 1;; ++g) {
            if (g >= size()) throw std::runtime_error("no primitive element found");
            if (g == 0) continue;
            bool ok = true;
            for (const auto& [p, e] : mfact_) {
                (void)e;
                if (pow(g, m / p) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_ = g;
                break;
            }
        }
    });
    return mfact_;
}

inline fidx Field::primitive_element() const {
    unit_group_factorization();
    return gen_;
}

inline std::uint64_t Field::discrete_log(fidx a) const {
    if (a == 0) throw std::domain_error("discrete log of zero");
    const auto& fac = unit_group_factorization();
    const std::uint64_t m = size() - 1;
    // Pohlig-Hellman with baby-step giant-step per prime power
    std::uint64_t result = 0, modulus = 1;
    for (const auto& [p, e] : fac) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        const fidx gp = pow(gen_, m / pe);  // order pe
        const fidx ap = pow(a, m / pe);
        // digits of log_gp(ap) base p
        std::uint64_t x = 0, pk = 1;
        const fidx gamma = pow(gen_, m / p);  // order p
        for (unsigned k = 0; k < e; ++k) {
            fidx t = pow(mul(ap, inv(pow(gp, x))), pe / (pk * p));
            // find d with gamma^d == t by BSGS (p may be large-ish)
            std::uint64_t d = 0;
            if (p < 64) {
                fidx cur = 1;
                while (cur != t) {
                    cur = mul(cur, gamma);
                    if (++d >= p) throw std::runtime_error("discrete log failure");
                }
            } else {
                const std::uint64_t step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(p))));
                std::unordered_map<fidx, std::uint64_t> baby;
                fidx cur = 1;
                for (std::uint64_t j = 0; j < step; ++j) {
                    baby.emplace(cur, j);
                    cur = mul(cur, gamma);
                }
                const fidx giant = inv(pow(gamma, step));
                fidx y = t;
                bool found = false;
                for (std::uint64_t i = 0; i <= p / step + 1; ++i) {
                    auto it = baby.find(y);
                    if (it != baby.end()) {
                        d = i * step + it->second;
                        found = true;
                        break;
                    }
                    y = mul(y, giant);
                }
                if (!found) throw std::runtime_error("discrete log failure");
            }
            x += d * pk;
            pk *= p;
        }
        // CRT accumulate
        while (result % pe != x % pe) result += modulus;
        modulus *= pe;
    }
    return result % m;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

inline std::string Field::describe() const {
    std::ostringstream os;
    if (!base_) {
        os << "GF(" << p_ << ")";
        return os.str();
    }
    os << "GF(" << p_ << "^" << deg_over_prime_ << ")";
    if (base_->is_prime_field()) {
        os << " poly=";
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (i) os << ",";
            os << modulus_[i];
        }
    } else {
        os << " over " << base_->describe();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Element: value-type wrapper
// ---------------------------------------------------------------------------

class Element {
   public:
    Element() = default;
    Element(const Field* f, cvec v) : f_(f), v_(std::move(v)) {
        if (v_.size() != f_->degree()) throw std::invalid_argument("coefficient vector length mismatch");
    }
    static Element zero(const Field* f) { return {f, f->zero()}; }
    static Element one(const Field* f) { return {f, f->one()}; }
    static Element from_int(const Field* f, std::uint64_t code) { return {f, f->decode(code)}; }

    const Field* field() const { return f_; }
    const cvec& coeffs() const { return v_; }
    std::uint64_t code() const { return f_->encode(v_); }
    bool is_zero() const { return f_->v_is_zero(v_); }
    bool is_one() const { return f_->v_is_one(v_); }

    Element operator+(const Element& o) const { return {same(o), f_->v_add(v_, o.v_)}; }
    Element operator-(const Element& o) const { return {same(o), f_->v_sub(v_, o.v_)}; }
    Element operator*(const Element& o) const { return {same(o), f_->v_mul(v_, o.v_)}; }
    Element operator/(const Element& o) const { return {same(o), f_->v_div(v_, o.v_)}; }
    Element operator-() const { return {f_, f_->v_neg(v_)}; }
    Element inverse() const { return {f_, f_->v_inv(v_)}; }
    Element pow(std::uint64_t e) const { return {f_, f_->v_pow(v_, e)}; }

    bool operator==(const Element& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

   private:
    const Field* same(const Element& o) const {
        if (f_ != o.f_) throw std::invalid_argument("field/level mismatch");
        return f_;
    }
    const Field* f_ = nullptr;
    cvec v_;
};

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.code(); }

/// Frobenius relative to the immediate base: beta -> beta^|base|.
inline Element frobenius(const Element& e) {
    const Field* f = e.field();
    if (f->is_prime_field()) return e;
    return e.pow(f->base()->size());
}

/// Coordinates of beta in the power basis of the top-level generator.
inline std::vector<Element> pi_expand(const Element& e) {
    const Field* f = e.field();
    if (f->is_prime_field()) throw std::invalid_argument("pi_expand requires an extension field");
    const Field* b = f->base();
    std::vector<Element> out;
    out.reserve(f->degree());
    for (auto c : e.coeffs()) out.emplace_back(b, b->decode(c));
    return out;
}

inline Element pi_contract(const Field* f, const std::vector<Element>& coords) {
    if (f->is_prime_field()) throw std::invalid_argument("pi_contract requires an extension field");
    if (coords.size() != f->degree()) throw std::invalid_argument("coordinate count mismatch");
    cvec v(f->degree());
    for (unsigned i = 0; i < f->degree(); ++i) {
        if (coords[i].field() != f->base()) throw std::invalid_argument("coordinate field mismatch");
        v[i] = static_cast<std::uint16_t>(coords[i].code());
    }
    return {f, v};
}

/// Tower inclusion of an element of an ancestor level into `target`.
inline Element embed_up(const Element& e, const Field* target) {
    if (e.field() == target) return e;
    if (!target->base()) throw std::invalid_argument("element does not belong to the tower below target");
    Element b = embed_up(e, target->base());
    return {target, target->from_base_index(static_cast<fidx>(b.code()))};
}

/// Inverse of embed_up onto the immediate base; throws if not in the base image.
inline Element project_down(const Element& e) {
    const Field* f = e.field();
    if (f->is_prime_field()) throw std::invalid_argument("prime field has no base");
    fidx c = f->to_base_index(e.coeffs());
    return {f->base(), f->base()->decode(c)};
}

// ---------------------------------------------------------------------------
// towers
// ---------------------------------------------------------------------------

struct FieldTower {
    std::vector<const Field*> levels;  // levels[0] = prime field, levels.back() = top
    const Field* top() const { return levels.back(); }
};

/// Deterministic tower construction: each level uses the canonical
/// (lexicographically smallest) monic irreducible over the level below.
inline FieldTower build_tower(unsigned p, const std::vector<unsigned>& degrees) {
    FieldTower t;
    t.levels.push_back(Field::prime(p));
    for (unsigned d : degrees) {
        if (d == 0) throw std::invalid_argument("zero extension degree");
        t.levels.push_back(Field::extension(t.levels.back(), d));
    }
    return t;
}

}  // namespace gagc

#endif
