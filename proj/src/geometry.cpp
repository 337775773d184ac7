#include "cubewords/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubewords/detail/simplex_lp.hpp"

namespace cubewords::geometry {

namespace {

// determinant by fraction-free-ish Gaussian elimination over rationals
Rational det(std::vector<std::vector<Rational>> m) {
    int n = static_cast<int>(m.size());
    Rational result = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (int c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }
    return result;
}

int sign(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

}  // namespace

Simplex::Simplex(std::vector<Point> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty()) throw std::invalid_argument("simplex has no vertices");
    d_ = static_cast<int>(verts_.front().size());
    if (d_ < 1) throw std::invalid_argument("simplex dimension must be positive");
    if (static_cast<int>(verts_.size()) != d_ + 1)
        throw std::invalid_argument("a d-simplex needs exactly d+1 vertices");
    for (const Point& p : verts_)
        if (static_cast<int>(p.size()) != d_)
            throw std::invalid_argument("vertex dimension mismatch");
    std::vector<std::vector<Rational>> edges(d_, std::vector<Rational>(d_));
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) edges[i][j] = verts_[i + 1][j] - verts_[0][j];
    if (det(edges) == 0) throw std::invalid_argument("degenerate (flat) simplex");
}

Hyperplane::Hyperplane(std::vector<Integer> normal, Integer offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {}

Hyperplane Hyperplane::through(std::span<const Point> points) {
    int d = static_cast<int>(points.size());
    if (d < 1) throw std::invalid_argument("hyperplane needs d points");
    for (const Point& p : points)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("hyperplane needs d points in R^d");

    // normal via cofactor expansion of the (d-1) x d difference matrix
    std::vector<std::vector<Rational>> diff(d - 1, std::vector<Rational>(d));
    for (int i = 0; i + 1 < d; ++i)
        for (int j = 0; j < d; ++j) diff[i][j] = points[i + 1][j] - points[0][j];
    std::vector<Rational> normal(d);
    for (int j = 0; j < d; ++j) {
        std::vector<std::vector<Rational>> minor(d - 1, std::vector<Rational>(d - 1));
        for (int r = 0; r + 1 < d; ++r) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == j) continue;
                minor[r][cc++] = diff[r][c];
            }
        }
        Rational m = d >= 2 ? det(minor) : Rational(1);
        normal[j] = (j % 2 == 0) ? m : -m;
    }
    bool all_zero = true;
    for (const Rational& v : normal)
        if (v != 0) all_zero = false;
    if (all_zero) throw std::invalid_argument("points do not span a hyperplane");

    Rational offset = 0;
    for (int j = 0; j < d; ++j) offset += normal[j] * points[0][j];

    // scale to coprime integers, first nonzero normal coefficient positive
    Integer lcm_den = 1;
    auto accumulate_den = [&](const Rational& v) {
        Integer den = denominator(v);
        lcm_den = boost::multiprecision::lcm(lcm_den, den);
    };
    for (const Rational& v : normal) accumulate_den(v);
    accumulate_den(offset);

    std::vector<Integer> in(d);
    for (int j = 0; j < d; ++j)
        in[j] = numerator(normal[j]) * (lcm_den / denominator(normal[j]));
    Integer io = numerator(offset) * (lcm_den / denominator(offset));

    Integer g = 0;
    for (const Integer& v : in) g = boost::multiprecision::gcd(g, v);
    g = boost::multiprecision::gcd(g, io);
    if (g != 0) {
        for (Integer& v : in) v /= g;
        io /= g;
    }
    for (const Integer& v : in) {
        if (v == 0) continue;
        if (v < 0) {
            for (Integer& w : in) w = -w;
            io = -io;
        }
        break;
    }
    return Hyperplane(std::move(in), std::move(io));
}

Rational Hyperplane::eval(const Point& p) const {
    if (static_cast<int>(p.size()) != dim())
        throw std::invalid_argument("point dimension mismatch");
    Rational acc = 0;
    for (int j = 0; j < dim(); ++j) acc += Rational(normal_[j]) * p[j];
    return acc - Rational(offset_);
}

std::string Hyperplane::str() const {
    std::string s;
    for (const Integer& v : normal_) {
        if (!s.empty()) s += ' ';
        s += v.str();
    }
    s += " | ";
    s += offset_.str();
    return s;
}

bool Hyperplane::operator<(const Hyperplane& o) const {
    if (normal_ != o.normal_)
        return std::lexicographical_compare(normal_.begin(), normal_.end(),
                                            o.normal_.begin(), o.normal_.end());
    return offset_ < o.offset_;
}

Side side_of(const Hyperplane& h, const Simplex& s) {
    bool pos = false, neg = false;
    for (const Point& v : s.vertices()) {
        int sg = sign(h.eval(v));
        pos |= sg > 0;
        neg |= sg < 0;
    }
    if (pos && neg) return Side::Straddles;
    if (pos) return Side::One;
    if (neg) return Side::Zero;
    return Side::On;  // unreachable for a valid full-dimensional simplex
}

Hyperplane facet_hyperplane(const Simplex& s, int omit) {
    if (omit < 0 || omit > s.dim()) throw std::invalid_argument("vertex index out of range");
    std::vector<Point> pts;
    for (int i = 0; i <= s.dim(); ++i)
        if (i != omit) pts.push_back(s.vertex(i));
    Hyperplane h = Hyperplane::through(pts);
    if (sign(h.eval(s.vertex(omit))) == 0)
        throw std::invalid_argument("degenerate simplex: omitted vertex lies on its facet");
    return h;
}

namespace {

std::vector<Hyperplane> facet_planes(const Simplex& s) {
    std::vector<Hyperplane> out;
    for (int i = 0; i <= s.dim(); ++i) out.push_back(facet_hyperplane(s, i));
    return out;
}

std::vector<Point> facet_on(const Simplex& s, const Hyperplane& h) {
    std::vector<Point> out;
    for (const Point& v : s.vertices())
        if (h.eval(v) == 0) out.push_back(v);
    return out;
}

// Common relative-interior point of conv(P) and conv(Q):
// max eps  s.t.  sum (a_i + eps) p_i = sum (b_j + eps) q_j,
//                sum (a_i + eps) = 1,  sum (b_j + eps) = 1,  a, b, eps >= 0.
std::optional<Point> common_relint_point(const std::vector<Point>& P,
                                         const std::vector<Point>& Q) {
    using detail::LpResult;
    int d = static_cast<int>(P.front().size());
    int np = static_cast<int>(P.size());
    int nq = static_cast<int>(Q.size());
    int vars = np + nq + 1;  // a, b, eps
    std::vector<std::vector<Rational>> A(d + 2, std::vector<Rational>(vars, 0));
    std::vector<Rational> rhs(d + 2, 0), obj(vars, 0);
    for (int row = 0; row < d; ++row) {
        Rational eps_coeff = 0;
        for (int i = 0; i < np; ++i) {
            A[row][i] = P[i][row];
            eps_coeff += P[i][row];
        }
        for (int j = 0; j < nq; ++j) {
            A[row][np + j] = -Q[j][row];
            eps_coeff -= Q[j][row];
        }
        A[row][np + nq] = eps_coeff;
    }
    for (int i = 0; i < np; ++i) A[d][i] = 1;
    A[d][np + nq] = np;
    rhs[d] = 1;
    for (int j = 0; j < nq; ++j) A[d + 1][np + j] = 1;
    A[d + 1][np + nq] = nq;
    rhs[d + 1] = 1;
    obj[np + nq] = 1;

    LpResult lp = detail::solve_lp_equality(std::move(A), std::move(rhs), std::move(obj));
    if (lp.status != LpResult::Status::Optimal || lp.objective <= 0) return std::nullopt;
    Rational eps = lp.x[np + nq];
    Point x(d, Rational(0));
    for (int i = 0; i < np; ++i) {
        Rational lambda = lp.x[i] + eps;
        for (int row = 0; row < d; ++row) x[row] += lambda * P[i][row];
    }
    return x;
}

}  // namespace

NeighbourlyCheck neighbourly_pair(const Simplex& s, const Simplex& t) {
    NeighbourlyCheck out;
    if (s.dim() != t.dim()) throw std::invalid_argument("simplex dimension mismatch");
    std::vector<Hyperplane> fs = facet_planes(s);
    std::vector<Hyperplane> ft = facet_planes(t);
    std::vector<Hyperplane> common;
    for (const Hyperplane& h : fs)
        for (const Hyperplane& g : ft)
            if (h == g) common.push_back(h);
    std::sort(common.begin(), common.end());

    if (common.empty()) {
        out.failure = PairFailure::NoCommonFacetLine;
        return out;
    }
    bool saw_opposite = false;
    for (const Hyperplane& h : common) {
        Side ss = side_of(h, s);
        Side st = side_of(h, t);
        if (ss == st) continue;  // same side; contact impossible across h
        saw_opposite = true;
        std::vector<Point> facet_s = facet_on(s, h);
        std::vector<Point> facet_t = facet_on(t, h);
        if (auto x = common_relint_point(facet_s, facet_t)) {
            out.ok = true;
            out.plane = h;
            out.witness = std::move(*x);
            return out;
        }
    }
    out.failure = saw_opposite ? PairFailure::LowDimContact : PairFailure::SameSide;
    return out;
}

Encoding encode_family(const std::vector<Simplex>& simplices) {
    if (simplices.empty()) throw std::invalid_argument("no simplices to encode");
    int d = simplices.front().dim();
    for (const Simplex& s : simplices)
        if (s.dim() != d) throw std::invalid_argument("mixed simplex dimensions");

    std::vector<std::vector<Hyperplane>> per_simplex;
    per_simplex.reserve(simplices.size());
    std::vector<Hyperplane> all;
    for (const Simplex& s : simplices) {
        per_simplex.push_back(facet_planes(s));
        for (const Hyperplane& h : per_simplex.back()) all.push_back(h);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    Encoding enc{std::move(all), {}, {}};
    int n = static_cast<int>(enc.hyperplanes.size());
    for (std::size_t si = 0; si < simplices.size(); ++si) {
        std::vector<Symbol> cells(n, Symbol::Star);
        for (int i = 0; i < n; ++i) {
            const Hyperplane& h = enc.hyperplanes[i];
            bool is_facet = std::find(per_simplex[si].begin(), per_simplex[si].end(), h) !=
                            per_simplex[si].end();
            if (!is_facet) continue;
            Side side = side_of(h, simplices[si]);
            if (side == Side::Zero)
                cells[i] = Symbol::Zero;
            else if (side == Side::One)
                cells[i] = Symbol::One;
            else
                throw std::logic_error("simplex straddles its own facet hyperplane");
        }
        enc.words.push_back(Word::from_cells(cells));
    }
    enc.family = make_family(enc.words, d + 1);
    return enc;
}

std::string point_str(const Point& p) {
    std::string s;
    for (const Rational& c : p) {
        if (!s.empty()) s += ',';
        s += c.str();
    }
    return s;
}

}  // namespace cubewords::geometry
