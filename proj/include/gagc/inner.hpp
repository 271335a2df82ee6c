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

#ifndef GAGC_INNER_HPP
#define GAGC_INNER_HPP

#include "distance.hpp"

namespace gagc {

/// Inner code [n_j, j, d_j] over F_q used to protect the j symbols of a
/// degree-j place evaluation.
struct InnerCode {
    unsigned n = 0, k = 0, d = 0;
    Mat gen;

    std::vector<fidx> encode(const std::vector<fidx>& msg) const {
        if (msg.size() != k) throw std::invalid_argument("inner message length mismatch");
        return gen.apply(msg);
    }
};

/// MDS inner code [2j-1, j, j] realized as a Reed-Solomon evaluation code at
/// canonically ordered nonzero field points; when the length exceeds q-1 the
/// zero point and then the coefficient-of-infinity column extend it (the
/// doubly extended code is still MDS). The minimum distance is verified
/// exhaustively whenever q^j fits the default word budget.
inline InnerCode make_mds_inner(const Field* fq, unsigned j) {
    if (j == 0) throw std::invalid_argument("inner dimension must be positive");
    const std::uint64_t q = fq->size();
    const unsigned n = 2 * j - 1;
    if (n > q + 1) throw std::invalid_argument("MDS inner code of this length does not exist over the field");
    InnerCode c{n, j, j, Mat(fq, j, n)};
    std::vector<fidx> points;
    for (fidx a = 1; a < q && points.size() < n; ++a) points.push_back(a);
    if (points.size() < n && static_cast<std::uint64_t>(points.size()) == q - 1) points.push_back(0);
    const bool infinity_column = points.size() < n;
    for (unsigned col = 0; col < points.size(); ++col) {
        fidx p = points[col];
        fidx v = 1;
        for (unsigned row = 0; row < j; ++row) {
            c.gen.at(row, col) = v;
            v = fq->mul(v, p);
        }
    }
    if (infinity_column) c.gen.at(j - 1, n - 1) = 1;

    if (c.gen.rank() != j) throw std::logic_error("inner generator matrix is rank deficient");
    std::uint64_t words = 1;
    bool fits = true;
    for (unsigned i = 0; i < j && fits; ++i) {
        words *= q;
        if (words > kDefaultWordBudget) fits = false;
    }
    if (fits) {
        auto rep = min_distance_exhaustive(c.gen, static_cast<long>(j));
        if (rep.value != j) throw std::logic_error("inner code distance is not the designed MDS distance");
    }
    return c;
}

/// Registry of the per-degree inner codes ([1,1,1], [3,2,2], [5,3,3],
/// [7,4,4] over F_16), cached per field.
inline const InnerCode& inner_registry(const Field* fq, unsigned j) {
    static std::mutex mu;
    static std::map<std::pair<const Field*, unsigned>, InnerCode> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({fq, j});
    if (it == cache.end()) it = cache.emplace(std::make_pair(fq, j), make_mds_inner(fq, j)).first;
    return it->second;
}

}  // namespace gagc

#endif
