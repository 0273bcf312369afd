// Copyright 2026 The stabring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabring/quadratic_form.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <deque>
#include <set>

#include "stabring/cyclotomic.hpp"

namespace stabring {

namespace {
Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
}  // namespace

FiniteQuadraticForm FiniteQuadraticForm::create(std::vector<Int> orders, std::vector<Rat> q_diag,
                                                std::vector<std::vector<Rat>> b) {
    if (orders.size() != q_diag.size()) throw DimensionMismatch("quadratic form rank");
    const int n = static_cast<int>(orders.size());
    FiniteQuadraticForm f;
    f.orders_ = std::move(orders);
    for (const Int& m : f.orders_)
        if (m < 1) throw Error("cyclic order must be >= 1");

    if (b.empty()) {
        b.assign(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i) b[i][i] = mod_one(2 * q_diag[i]);
    }
    if (static_cast<int>(b.size()) != n) throw DimensionMismatch("linking matrix rank");
    for (auto& row : b) {
        if (static_cast<int>(row.size()) != n) throw DimensionMismatch("linking matrix rank");
        for (auto& v : row) v = mod_one(v);
    }
    for (int i = 0; i < n; ++i) {
        q_diag[i] = mod_one(q_diag[i]);
        if (b[i][i] != mod_one(2 * q_diag[i])) throw Error("b_ii must equal 2 q_i mod 1");
        for (int j = 0; j < n; ++j) {
            if (b[i][j] != b[j][i]) throw Error("linking matrix must be symmetric");
            // descent to the cyclic quotients
            if (!is_integer(f.orders_[i] * b[i][j])) throw IllDefined("order * b_ij is fractional");
        }
        if (!is_integer(f.orders_[i] * f.orders_[i] * q_diag[i]) ||
            !is_integer(2 * f.orders_[i] * q_diag[i]))
            throw IllDefined("q does not descend to the cyclic quotient");
    }
    f.q_diag_ = std::move(q_diag);
    f.b_ = std::move(b);
    f.order_ = 1;
    f.exponent_ = 1;
    for (const Int& m : f.orders_) {
        f.order_ *= m;
        f.exponent_ = lcm_int(f.exponent_, m);
    }
    return f;
}

FiniteQuadraticForm FiniteQuadraticForm::hyperbolic(const Int& m) {
    std::vector<std::vector<Rat>> b(2, std::vector<Rat>(2, Rat(0)));
    b[0][1] = b[1][0] = Rat(1, m);
    return create({m, m}, {Rat(0), Rat(0)}, std::move(b));
}

Rat FiniteQuadraticForm::q_of(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != rank()) throw DimensionMismatch("q argument length");
    Rat acc(0);
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        acc += Rat(x[i] * x[i]) * q_diag_[i];
        for (int j = i + 1; j < rank(); ++j) acc += Rat(x[i] * x[j]) * b_[i][j];
    }
    return mod_one(acc);
}

Rat FiniteQuadraticForm::b_of(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (static_cast<int>(x.size()) != rank() || static_cast<int>(y.size()) != rank())
        throw DimensionMismatch("b argument length");
    Rat acc(0);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            if (x[i] != 0 && y[j] != 0) acc += Rat(x[i] * y[j]) * b_[i][j];
    return mod_one(acc);
}

FiniteQuadraticForm FiniteQuadraticForm::negate() const {
    std::vector<Rat> q;
    for (const Rat& v : q_diag_) q.push_back(mod_one(-v));
    std::vector<std::vector<Rat>> b(rank(), std::vector<Rat>(rank()));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) b[i][j] = mod_one(-b_[i][j]);
    return create(orders_, std::move(q), std::move(b));
}

bool FiniteQuadraticForm::nondegenerate(const Limits&) const {
    if (rank() == 0) return true;
    const Int& n = exponent_;
    ZMat constraints(rank(), rank());
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i < rank(); ++i) {
            Rat v = Rat(n) * b_[i][j];
            if (!is_integer(v)) throw Error("exponent does not clear the linking matrix");
            Int m = num(v) % n;
            if (m < 0) m += n;
            constraints.at(j, i) = m;
        }
    SmithForm s = smith_normal_form(constraints);
    ZMat basis(rank(), rank());
    for (int j = 0; j < rank(); ++j) {
        Int t = 1;
        if (j < s.rank) t = n / gcd_int(s.d.at(j, j), n);
        for (int i = 0; i < rank(); ++i) basis.at(i, j) = s.v.at(i, j) * t;
    }
    FinSubgroup radical(basis, ZMat::diagonal(orders_));
    return radical.order_in(order_) == 1;
}

void FiniteQuadraticForm::for_each_element(const std::function<void(const std::vector<Int>&)>& fn) const {
    std::vector<Int> x(rank(), Int(0));
    while (true) {
        fn(x);
        int i = 0;
        for (; i < rank(); ++i) {
            x[i] += 1;
            if (x[i] < orders_[i]) break;
            x[i] = 0;
        }
        if (i == rank()) return;
    }
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    std::vector<Int> orders = a.orders_;
    orders.insert(orders.end(), b.orders_.begin(), b.orders_.end());
    std::vector<Rat> q = a.q_diag_;
    q.insert(q.end(), b.q_diag_.begin(), b.q_diag_.end());
    int n = static_cast<int>(orders.size());
    std::vector<std::vector<Rat>> bb(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) bb[i][j] = a.b_[i][j];
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) bb[a.rank() + i][a.rank() + j] = b.b_[i][j];
    return FiniteQuadraticForm::create(std::move(orders), std::move(q), std::move(bb));
}

GaussMilgramResult gauss_milgram(const FiniteQuadraticForm& q, const Limits& limits) {
    if (q.order() > limits.max_enum_group) throw ResourceCap("gauss sum enumeration");
    if (!q.nondegenerate(limits)) throw DegenerateForm("linking form has a nontrivial radical");

    // common cyclotomic order: denominators of q together with 8
    Int big_n = 8;
    for (int i = 0; i < q.rank(); ++i) {
        big_n = boost::multiprecision::lcm(big_n, den(q.q_gen(i)));
        for (int j = 0; j < q.rank(); ++j) big_n = boost::multiprecision::lcm(big_n, den(q.b_gen(i, j)));
    }
    long L = big_n.convert_to<long>();

    Cyclotomic g(L);
    q.for_each_element([&](const std::vector<Int>& x) {
        Rat v = q.q_of(x);
        Rat scaled = v * L;
        if (!is_integer(scaled)) throw Error("gauss sum: denominator escape");
        g.add_root_power(num(scaled).convert_to<long>());
    });

    GaussMilgramResult result;
    Cyclotomic gg = g * g.conj();
    if (gg != Cyclotomic::integer(L, q.order())) throw DegenerateForm("|G|^2 != |D|");
    result.magnitude_ok = true;

    Int root;
    if (is_perfect_square(q.order(), &root)) {
        for (int sigma = 0; sigma < 8; ++sigma) {
            Cyclotomic target = root * Cyclotomic::root_power(L, sigma * (L / 8));
            if (g == target) {
                result.sigma = sigma;
                return result;
            }
        }
        throw Error("gauss sum is not sqrt|D| times an 8th root of unity");
    }

    // |D| not square: sigma mod 4 exactly from G^2 = |D| zeta_8^{2 sigma},
    // then the rigorously bounded numeric sign picks sigma vs sigma + 4.
    Cyclotomic g2 = g * g;
    for (int sigma0 = 0; sigma0 < 4; ++sigma0) {
        Cyclotomic target = q.order() * Cyclotomic::root_power(L, (2 * sigma0 % 8) * (L / 8));
        if (g2 != target) continue;
        Cyclotomic rotated = g * Cyclotomic::root_power(L, ((8 - sigma0) % 8) * (L / 8));
        double re = rotated.real_part();
        double margin = 0.5 * std::sqrt(q.order().convert_to<double>());
        if (std::abs(re) < margin) throw Error("gauss sum sign margin too small");
        result.sigma = re > 0 ? sigma0 : sigma0 + 4;
        return result;
    }
    throw Error("gauss sum is not sqrt|D| times an 8th root of unity");
}

namespace {

// index <-> element in the mixed-radix enumeration
long element_index(const std::vector<Int>& x, const std::vector<Int>& orders) {
    long idx = 0;
    for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i)
        idx = idx * orders[i].convert_to<long>() + x[i].convert_to<long>();
    return idx;
}

std::vector<Int> element_at(long idx, const std::vector<Int>& orders) {
    std::vector<Int> x(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        long m = orders[i].convert_to<long>();
        x[i] = idx % m;
        idx /= m;
    }
    return x;
}

long add_indices(long a, long b, const std::vector<Int>& orders) {
    std::vector<Int> xa = element_at(a, orders), xb = element_at(b, orders);
    for (std::size_t i = 0; i < orders.size(); ++i) xa[i] = (xa[i] + xb[i]) % orders[i];
    return element_index(xa, orders);
}

}  // namespace

std::optional<std::vector<std::vector<Int>>> find_lagrangian(const FiniteQuadraticForm& q,
                                                             const Limits& limits) {
    Int target;
    if (!is_perfect_square(q.order(), &target)) return std::nullopt;
    if (q.order() > limits.max_lagrangian_group) throw ResourceCap("lagrangian search");
    long goal = target.convert_to<long>();
    if (goal == 1) return std::vector<std::vector<Int>>{};

    // isotropic pool: q vanishes on every element of a totally isotropic
    // subgroup, so candidates come only from here
    std::vector<long> pool;
    q.for_each_element([&](const std::vector<Int>& x) {
        if (q.q_of(x) == 0) pool.push_back(element_index(x, q.orders()));
    });

    // BFS over subgroups generated by pool elements, deduplicated by their
    // sorted element sets
    struct Node {
        std::vector<long> elements;  // sorted, closed under addition
        std::vector<long> gens;
    };
    auto closure = [&](const std::vector<long>& base, long extra) -> std::optional<std::vector<long>> {
        std::set<long> s(base.begin(), base.end());
        std::deque<long> work{extra};
        s.insert(extra);
        while (!work.empty()) {
            long a = work.front();
            work.pop_front();
            std::vector<long> snapshot(s.begin(), s.end());
            for (long b : snapshot) {
                long c = add_indices(a, b, q.orders());
                if (s.count(c)) continue;
                if (q.q_of(element_at(c, q.orders())) != 0) return std::nullopt;
                if (static_cast<long>(s.size()) + 1 > goal) return std::nullopt;
                s.insert(c);
                work.push_back(c);
            }
        }
        return std::vector<long>(s.begin(), s.end());
    };

    std::set<std::vector<long>> seen;
    std::deque<Node> frontier;
    frontier.push_back(Node{{0}, {}});
    seen.insert({0});
    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        if (static_cast<long>(node.elements.size()) == goal) {
            std::vector<std::vector<Int>> gens;
            for (long g : node.gens) gens.push_back(element_at(g, q.orders()));
            return gens;
        }
        for (long cand : pool) {
            if (cand == 0) continue;
            if (std::binary_search(node.elements.begin(), node.elements.end(), cand)) continue;
            auto closed = closure(node.elements, cand);
            if (!closed) continue;
            if (static_cast<long>(closed->size()) > goal) continue;
            if (goal % static_cast<long>(closed->size()) != 0) continue;
            if (!seen.insert(*closed).second) continue;
            Node next{std::move(*closed), node.gens};
            next.gens.push_back(cand);
            frontier.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

FiniteQuadraticForm primary_component(const FiniteQuadraticForm& q, const Int& p) {
    // generator m'_i e_i with m_i = p^a m', gcd(p, m') = 1
    std::vector<Int> orders;
    std::vector<Rat> qd;
    std::vector<int> keep;
    std::vector<Int> scale;
    for (int i = 0; i < q.rank(); ++i) {
        Int m = q.orders()[i];
        Int pa = 1;
        while (m % p == 0) {
            pa *= p;
            m /= p;
        }
        if (pa == 1) continue;
        keep.push_back(i);
        scale.push_back(m);
        orders.push_back(pa);
        qd.push_back(mod_one(Rat(m * m) * q.q_gen(i)));
    }
    int n = static_cast<int>(keep.size());
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = mod_one(Rat(scale[i] * scale[j]) * q.b_gen(keep[i], keep[j]));
    return FiniteQuadraticForm::create(std::move(orders), std::move(qd), std::move(b));
}

WittInvariants witt_invariants(const FiniteQuadraticForm& q, const Limits& limits) {
    WittInvariants w;
    w.sigma = gauss_milgram(q, limits).sigma;
    w.group_order = q.order();

    std::vector<Int> primes;
    Int rest = q.order();
    for (Int p = 2; rest > 1; ++p) {
        if (p * p > rest) {
            primes.push_back(rest);
            break;
        }
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) rest /= p;
        }
    }
    for (const Int& p : primes) {
        FiniteQuadraticForm comp = primary_component(q, p);
        if (comp.order() > 1) w.per_prime[p] = {comp.order(), gauss_milgram(comp, limits).sigma};
    }
    return w;
}

WittComparison witt_compare(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                            const Limits& limits) {
    if (witt_invariants(a, limits) != witt_invariants(b, limits))
        return WittComparison::InequivalentInvariantMismatch;
    FiniteQuadraticForm diff = direct_sum(a, b.negate());
    FiniteQuadraticForm probe = diff;
    for (int round = 0; round <= 2; ++round) {
        if (probe.order() <= limits.max_lagrangian_group && find_lagrangian(probe, limits))
            return WittComparison::Equivalent;
        probe = direct_sum(probe, FiniteQuadraticForm::hyperbolic(diff.exponent()));
    }
    return WittComparison::Undecided;
}

EdEntry e_d_table(long d) {
    EdEntry e;
    e.d = d;
    if (d > 0 && ((d % 4) + 4) % 4 == 3) {
        e.group = "W^pt";
        e.expansion =
            "W^pt = (+)_p W^pt_p; W^pt_2 = Z/8 (+) Z/2; W^pt_p = Z/2 (+) Z/2 for p = 1 mod 4; "
            "W^pt_p = Z/4 for p = 3 mod 4";
    } else if (d > 0 && d % 4 == 0) {
        e.group = "Z/2";
    } else {
        e.group = "0";
    }
    return e;
}

}  // namespace stabring
