#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "horomax/rational.hpp"
#include "horomax/word.hpp"

namespace horomax {

// The 4-valent Cayley tree of F2 = <a, b> with unit edge lengths.
// Points are addresses (reduced vertex word, optional edge direction,
// rational offset); all arithmetic is exact.

class TreePoint {
public:
    TreePoint() = default;

    explicit TreePoint(Word vertex) : vertex_(std::move(vertex)) {}

    TreePoint(Word vertex, char dir, Rational offset)
        : vertex_(std::move(vertex)), dir_(dir), offset_(std::move(offset)) {
        if (offset_ < 0 || offset_ >= 1)
            throw std::invalid_argument("tree point offset must lie in [0,1)");
        if (offset_ == 0) {
            dir_ = '\0';
            return;
        }
        if (!is_group_letter(dir_))
            throw std::invalid_argument("tree point with nonzero offset needs a direction letter");
        if (!vertex_.empty() && vertex_.back() == inverse_letter(dir_))
            throw std::invalid_argument("tree point direction cancels the vertex word");
    }

    const Word& vertex() const { return vertex_; }
    char dir() const { return dir_; }
    const Rational& offset() const { return offset_; }
    bool is_vertex() const { return offset_ == 0; }

    // Path from the root o: the word traversed, and the (possibly
    // fractional) length of the path.
    std::string root_word() const {
        std::string u = vertex_.letters();
        if (offset_ > 0) u.push_back(dir_);
        return u;
    }
    Rational root_length() const { return Rational(vertex_.size()) + offset_; }

    bool operator==(const TreePoint& o) const {
        return vertex_ == o.vertex_ && dir_ == o.dir_ && offset_ == o.offset_;
    }
    bool operator!=(const TreePoint& o) const { return !(*this == o); }

private:
    Word vertex_;
    char dir_ = '\0';
    Rational offset_ = 0;
};

// Boundary point of the tree: an eventually periodic infinite reduced word,
// canonicalized to (shortest head, primitive cycle).
class TreeIdeal {
public:
    TreeIdeal() : cycle_(std::string("a")) {}

    TreeIdeal(Word head, Word cycle) : head_(std::move(head)), cycle_(std::move(cycle)) {
        if (cycle_.empty())
            throw std::invalid_argument("tree ideal point needs a nonempty cycle");
        if (cycle_.at(0) == inverse_letter(cycle_.back()))
            throw std::invalid_argument("tree ideal cycle is not cyclically reduced");
        if ((head_ * cycle_).size() != head_.size() + cycle_.size())
            throw std::invalid_argument("tree ideal head*cycle is not reduced");
        canonicalize();
    }

    const Word& head() const { return head_; }
    const Word& cycle() const { return cycle_; }

    char letter(std::size_t i) const {
        if (i < head_.size()) return head_.at(i);
        return cycle_.at((i - head_.size()) % cycle_.size());
    }

    std::string prefix(std::size_t n) const {
        std::string s;
        s.reserve(n);
        for (std::size_t i = 0; i < n; ++i) s.push_back(letter(i));
        return s;
    }

    bool operator==(const TreeIdeal& o) const {
        return head_ == o.head_ && cycle_ == o.cycle_;
    }
    bool operator!=(const TreeIdeal& o) const { return !(*this == o); }

private:
    void canonicalize() {
        // primitive cycle
        const std::string& c = cycle_.letters();
        for (std::size_t p = 1; p < c.size(); ++p) {
            if (c.size() % p != 0) continue;
            bool periodic = true;
            for (std::size_t i = p; i < c.size() && periodic; ++i)
                periodic = c[i] == c[i - p];
            if (periodic) {
                cycle_ = cycle_.prefix(p);
                break;
            }
        }
        // shortest head: absorb a trailing head letter that matches the
        // cycle's last letter by rotating the cycle
        while (!head_.empty() && head_.back() == cycle_.back()) {
            std::string rot;
            rot.push_back(cycle_.back());
            rot += cycle_.letters().substr(0, cycle_.size() - 1);
            cycle_ = Word(rot);
            head_ = head_.prefix(head_.size() - 1);
        }
    }

    Word head_;
    Word cycle_;
};

// First index at which the root word u leaves the infinite word of xi;
// u.size() if u is a prefix.
inline std::size_t tree_divergence_index(const std::string& u, const TreeIdeal& xi) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != xi.letter(i)) return i;
    return u.size();
}

struct TreeModel {
    using Scalar = Rational;
    using Point = TreePoint;
    using Ideal = TreeIdeal;
    using Isometry = Word;
    using Direction = std::string;  // empirical boundary estimate: a root word

    static constexpr bool exact = true;
    static const char* name() { return "tree"; }
    static double tol_algebraic() { return 0.0; }
    static double tol_limit() { return 0.0; }

    static Point origin() { return TreePoint(); }
    static double to_double(const Scalar& s) { return rational_to_double(s); }

    static bool point_eq(const Point& x, const Point& y) { return x == y; }
    static bool ideal_eq(const Ideal& xi, const Ideal& eta) { return xi == eta; }

    // point at a (possibly fractional) position along a reduced word's path
    static Point point_on_word(const std::string& u, const Rational& pos) {
        if (pos < 0 || pos > Rational(u.size()))
            throw std::invalid_argument("position outside word path");
        BigInt k = rational_floor(pos);
        Rational f = rational_frac(pos);
        auto ki = static_cast<std::size_t>(k);
        if (f == 0) return TreePoint(Word(u.substr(0, ki)));
        return TreePoint(Word(u.substr(0, ki)), u[ki], f);
    }

    static Point point_on_ideal(const Ideal& xi, const Rational& pos) {
        if (pos < 0) throw std::invalid_argument("negative position along a ray");
        BigInt k = rational_floor(pos);
        auto ki = static_cast<std::size_t>(k);
        return point_on_word(xi.prefix(ki + 1), pos);
    }

    static Scalar distance(const Point& x, const Point& y) {
        const std::string ux = x.root_word(), uy = y.root_word();
        Rational lx = x.root_length(), ly = y.root_length();
        Rational overlap = std::min({Rational(first_disagreement(ux, uy)), lx, ly});
        return lx + ly - 2 * overlap;
    }

    // position along the ray o -> xi at which the root path of z leaves it
    static Scalar ray_split(const Point& z, const Ideal& xi) {
        return std::min(Rational(tree_divergence_index(z.root_word(), xi)), z.root_length());
    }

    // exact Busemann value: b^p_xi(x) = d(x, m) - d(p, m) where m is the
    // merge point of the rays from x and p to xi
    static Scalar busemann(const Point& p, const Ideal& xi, const Point& x) {
        Rational mpos = std::max(ray_split(x, xi), ray_split(p, xi));
        Point m = point_on_ideal(xi, mpos);
        return distance(x, m) - distance(p, m);
    }

    struct Segment {
        Point a, b;
        Scalar length;
        std::string ua, ub;
        Scalar la, lb, overlap;

        Point at(const Scalar& t) const {
            if (t < 0 || t > length) throw std::invalid_argument("segment parameter out of range");
            Rational down = la - overlap;
            if (t <= down) return point_on_word(ua, la - t);
            return point_on_word(ub, overlap + (t - down));
        }
    };

    static Segment segment(const Point& x, const Point& y) {
        Segment s;
        s.a = x;
        s.b = y;
        s.ua = x.root_word();
        s.ub = y.root_word();
        s.la = x.root_length();
        s.lb = y.root_length();
        s.overlap = std::min({Rational(first_disagreement(s.ua, s.ub)), s.la, s.lb});
        s.length = s.la + s.lb - 2 * s.overlap;
        return s;
    }

    struct Ray {
        Point origin;
        Ideal target;
        Scalar split;  // position on the target's root path where the ray joins it
        Scalar lo;     // root length of the origin

        Point at(const Scalar& t) const {
            if (t < 0) throw std::invalid_argument("ray parameter must be nonnegative");
            Rational down = lo - split;
            if (t <= down) return point_on_word(origin.root_word(), lo - t);
            return point_on_ideal(target, split + (t - down));
        }

        Scalar distance_to(const Point& x, const Scalar& t) const {
            return TreeModel::distance(at(t), x);
        }
    };

    static Ray ray(const Point& origin, const Ideal& xi) {
        Ray r;
        r.origin = origin;
        r.target = xi;
        r.split = ray_split(origin, xi);
        r.lo = origin.root_length();
        return r;
    }

    struct Line {
        Ideal plus, minus;
        std::size_t split;  // divergence index of the two boundary words
        Point base;         // nearest point of the line to o

        Point at(const Scalar& t) const {
            if (t >= 0) return point_on_ideal(plus, Rational(split) + t);
            return point_on_ideal(minus, Rational(split) - t);
        }

        Scalar distance_to(const Point& x, const Scalar& t) const {
            return TreeModel::distance(at(t), x);
        }
    };

    static Line line(const Ideal& plus, const Ideal& minus) {
        if (plus == minus)
            throw std::invalid_argument("degenerate line: equal ideal endpoints");
        Line l;
        l.plus = plus;
        l.minus = minus;
        // distinct canonical forms must disagree at a bounded finite index
        std::size_t bound = plus.head().size() + minus.head().size() +
                            plus.cycle().size() * minus.cycle().size() +
                            plus.cycle().size() + minus.cycle().size() + 2;
        std::size_t i = 0;
        while (i < bound && plus.letter(i) == minus.letter(i)) ++i;
        if (i == bound) throw std::logic_error("distinct ideals with no disagreement");
        l.split = i;
        l.base = TreePoint(Word(plus.prefix(i)));
        return l;
    }

    static Ideal line_plus(const Line& l) { return l.plus; }
    static Ideal line_minus(const Line& l) { return l.minus; }
    static Point line_base(const Line& l) { return l.base; }

    // Gromov product of two distinct ideal points: distance from the base
    // to the connecting line, evaluated through exact Busemann values.
    static Scalar gromov_ideal_finite(const Ideal& xi, const Ideal& eta, const Point& base) {
        Line l = line(xi, eta);
        return (busemann(l.base, xi, base) + busemann(l.base, eta, base)) / 2;
    }

    // isometries: reduced words acting by left multiplication
    static Isometry iso_identity() { return Word(); }
    static Isometry iso_compose(const Isometry& g, const Isometry& h) { return g * h; }
    static Isometry iso_inverse(const Isometry& g) { return g.inverse(); }
    static bool iso_eq(const Isometry& g, const Isometry& h) { return g == h; }
    static std::string iso_key(const Isometry& g) { return g.letters(); }

    static Point apply(const Isometry& g, const Point& p) {
        Word v2 = g * p.vertex();
        if (p.is_vertex()) return TreePoint(v2);
        Word w2 = v2 * Word(std::string(1, p.dir()));
        if (w2.size() == v2.size() + 1) return TreePoint(v2, p.dir(), p.offset());
        // the translated edge descends toward the root; re-anchor at its
        // lower endpoint
        if (p.offset() == 0) return TreePoint(v2);
        return TreePoint(w2, v2.back(), 1 - p.offset());
    }

    static Ideal apply(const Isometry& g, const Ideal& xi) {
        std::string s = (g * xi.head()).letters();
        std::string cyc = xi.cycle().letters();
        std::size_t rot = 0;
        while (!s.empty() && s.back() == inverse_letter(cyc[rot])) {
            s.pop_back();
            rot = (rot + 1) % cyc.size();
        }
        std::string rcyc = cyc.substr(rot) + cyc.substr(0, rot);
        return TreeIdeal(Word(s), Word(rcyc));
    }

    // visual-distance diagnostics (metrize the boundary topology)
    static double visual_ideal(const Ideal& xi, const Ideal& eta) {
        if (xi == eta) return 0.0;
        Line l = line(xi, eta);
        return std::pow(2.0, -static_cast<double>(l.split));
    }

    static double visual_dir(const Direction& u, const Direction& v) {
        if (u == v) return 0.0;
        return std::pow(2.0, -static_cast<double>(first_disagreement(u, v)));
    }

    static double visual_dir_ideal(const Direction& u, const Ideal& xi) {
        std::size_t k = tree_divergence_index(u, xi);
        if (k == u.size()) return 0.0;  // no disagreement within the word
        return std::pow(2.0, -static_cast<double>(k));
    }

    static Direction direction_of(const Point& p) { return p.root_word(); }
    static Direction ray_direction(const Ray& r, const Scalar& t) {
        return r.at(t).root_word();
    }
    static Direction line_direction(const Line& l, const Scalar& t) {
        return l.at(t).root_word();
    }

    static Scalar ray_ray_distance(const Ray& r1, const Scalar& t1, const Ray& r2,
                                   const Scalar& t2) {
        return distance(r1.at(t1), r2.at(t2));
    }

    static Point pair_midpoint(const Ray& r1, const Scalar& t1, const Ray& r2,
                               const Scalar& t2) {
        Segment s = segment(r1.at(t1), r2.at(t2));
        return s.at(s.length / 2);
    }

    // d(g x, o) and the boundary estimate of g x (tree: always exact)
    static Scalar orbit_distance(const Isometry& g, const Point& x) {
        return distance(apply(g, x), origin());
    }
    static Direction orbit_direction(const Isometry& g, const Point& x) {
        return apply(g, x).root_word();
    }
    static Scalar orbit_distance_to(const Isometry& g, const Point& x, const Point& z) {
        return distance(apply(g, x), z);
    }

    // attracting boundary point of a nontrivial word: g = u c u^-1 with c
    // cyclically reduced gives g^infinity = u c c c ...
    static Ideal attracting_ideal(const Isometry& g) {
        if (g.empty()) throw std::invalid_argument("identity word has no attracting ideal point");
        std::string w = g.letters();
        std::size_t k = 0;
        while (k * 2 + 1 < w.size() && w[k] == inverse_letter(w[w.size() - 1 - k])) ++k;
        std::string u = w.substr(0, k);
        std::string c = w.substr(k, w.size() - 2 * k);
        return TreeIdeal(Word(u), Word(c));
    }
};

// textual address formats for CLI/JSON
inline std::string tree_point_to_string(const TreePoint& p) {
    std::string v = p.vertex().empty() ? "e" : p.vertex().letters();
    if (p.is_vertex()) return v;
    return v + ":" + std::string(1, p.dir()) + ":" + rational_to_string(p.offset());
}

inline TreePoint parse_tree_point(const std::string& s) {
    auto c1 = s.find(':');
    std::string v = s.substr(0, c1);
    if (v == "e") v.clear();
    if (c1 == std::string::npos) return TreePoint(Word(v));
    auto c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos || c2 != c1 + 2)
        throw std::invalid_argument("malformed tree point: '" + s + "'");
    char dir = s[c1 + 1];
    Rational off = parse_rational(s.substr(c2 + 1));
    return TreePoint(Word(v), dir, off);
}

inline std::string tree_ideal_to_string(const TreeIdeal& xi) {
    return xi.head().letters() + ",(" + xi.cycle().letters() + ")";
}

inline TreeIdeal parse_tree_ideal(const std::string& s) {
    auto open = s.find('(');
    auto close = s.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("malformed tree ideal point: '" + s + "'");
    std::string head = s.substr(0, open);
    if (!head.empty() && head.back() == ',') head.pop_back();
    if (head == "e") head.clear();
    std::string cyc = s.substr(open + 1, close - open - 1);
    return TreeIdeal(Word(head), Word(cyc));
}

}  // namespace horomax
