#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "horomax/groups.hpp"

namespace horomax {

// Deterministic sampling. mt19937_64 output is fixed by the standard, and
// uniform doubles are derived manually (never through std distributions,
// whose streams vary across library implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return eng_(); }
    int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

template <class M>
struct Sampler;

template <>
struct Sampler<DiskModel> {
    static DiskPoint point(Rng& rng, double radius) {
        double d = radius * rng.uniform();
        double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        return DiskPoint(std::polar(std::tanh(d / 2.0), theta));
    }
    static DiskIdeal ideal(Rng& rng) {
        return DiskIdeal(rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    static double scalar(Rng& rng, double lo, double hi) { return rng.uniform(lo, hi); }
};

template <>
struct Sampler<TreeModel> {
    static Word word(Rng& rng, int len) {
        static const char letters[] = {'a', 'b', 'A', 'B'};
        std::string s;
        for (int i = 0; i < len; ++i) {
            char c = letters[rng.below(4)];
            while (!s.empty() && c == inverse_letter(s.back())) c = letters[rng.below(4)];
            s.push_back(c);
        }
        return Word(s);
    }

    static TreePoint point(Rng& rng, double radius) {
        int maxlen = static_cast<int>(radius);
        Word v = word(rng, rng.below(maxlen + 1));
        if (static_cast<double>(v.size()) + 1.0 > radius || rng.below(2) == 0)
            return TreePoint(v);
        static const char letters[] = {'a', 'b', 'A', 'B'};
        char dir = letters[rng.below(4)];
        while (!v.empty() && dir == inverse_letter(v.back())) dir = letters[rng.below(4)];
        int den = 2 + rng.below(7);
        return TreePoint(v, dir, Rational(1 + rng.below(den - 1), den));
    }

    static TreeIdeal ideal(Rng& rng) {
        for (;;) {
            Word head = word(rng, rng.below(4));
            Word cyc = word(rng, 1 + rng.below(3));
            if (cyc.empty()) continue;
            if (cyc.at(0) == inverse_letter(cyc.back())) continue;
            if ((head * cyc).size() != head.size() + cyc.size()) continue;
            return TreeIdeal(head, cyc);
        }
    }

    static Rational scalar(Rng& rng, double lo, double hi) {
        int den = 8;
        int a = static_cast<int>(lo * den), b = static_cast<int>(hi * den);
        return Rational(a + rng.below(b - a + 1), den);
    }
};

template <class M>
typename M::Ideal random_ideal(Rng& rng) {
    return Sampler<M>::ideal(rng);
}

template <class M>
typename M::Ideal random_ideal_distinct(Rng& rng, const typename M::Ideal& other) {
    for (;;) {
        auto xi = Sampler<M>::ideal(rng);
        if (!M::ideal_eq(xi, other)) return xi;
    }
}

template <class M>
typename M::Point random_point(Rng& rng, double radius) {
    return Sampler<M>::point(rng, radius);
}

template <class M>
ProductPoint<M> random_product_point(Rng& rng, double radius) {
    return {Sampler<M>::point(rng, radius), Sampler<M>::point(rng, radius)};
}

template <class M>
ParamGeodesic<M> random_geodesic(Rng& rng) {
    auto plus = Sampler<M>::ideal(rng);
    auto minus = random_ideal_distinct<M>(rng, plus);
    return {M::line(plus, minus), Sampler<M>::scalar(rng, -2.0, 2.0)};
}

// reduced random word of the given length in the group's generators
template <class M>
typename M::Isometry random_group_word(Rng& rng, const GroupPresentation<M>& G, int len) {
    auto w = M::iso_identity();
    int last = -1;
    for (int i = 0; i < len; ++i) {
        int j = rng.below(static_cast<int>(G.gens.size()));
        while (last >= 0 && j == G.inverse_index[static_cast<std::size_t>(last)])
            j = rng.below(static_cast<int>(G.gens.size()));
        w = M::iso_compose(w, G.gens[static_cast<std::size_t>(j)]);
        last = j;
    }
    return w;
}

// prefix products of a reduced random word (an orbit "stream")
template <class M>
std::vector<typename M::Isometry> random_word_stream(Rng& rng, const GroupPresentation<M>& G,
                                                     int len) {
    std::vector<typename M::Isometry> out;
    auto w = M::iso_identity();
    int last = -1;
    for (int i = 0; i < len; ++i) {
        int j = rng.below(static_cast<int>(G.gens.size()));
        while (last >= 0 && j == G.inverse_index[static_cast<std::size_t>(last)])
            j = rng.below(static_cast<int>(G.gens.size()));
        w = M::iso_compose(w, G.gens[static_cast<std::size_t>(j)]);
        last = j;
        out.push_back(w);
    }
    return out;
}

}  // namespace horomax
