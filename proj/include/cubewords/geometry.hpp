#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubewords/family.hpp"
#include "cubewords/word.hpp"

namespace cubewords::geometry {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Point = std::vector<Rational>;  // d exact rational coordinates

// Full-dimensional simplex in R^d: d+1 affinely independent rational vertices.
class Simplex {
public:
    explicit Simplex(std::vector<Point> vertices);

    int dim() const { return d_; }
    int vertex_count() const { return d_ + 1; }
    const Point& vertex(int i) const { return verts_[i]; }
    const std::vector<Point>& vertices() const { return verts_; }

private:
    int d_;
    std::vector<Point> verts_;
};

// Affine hyperplane in canonical form: integer coefficients with gcd 1 and
// the first nonzero normal coefficient positive.  Two hyperplanes are equal
// iff their canonical forms are identical.  Side convention:
//   H^0 = {x : <normal, x> <= offset},   H^1 = {x : <normal, x> >= offset}.
class Hyperplane {
public:
    // the unique hyperplane through d affinely independent points in R^d
    static Hyperplane through(std::span<const Point> points);

    int dim() const { return static_cast<int>(normal_.size()); }
    const std::vector<Integer>& normal() const { return normal_; }
    const Integer& offset() const { return offset_; }

    Rational eval(const Point& p) const;  // <normal, p> - offset
    std::string str() const;

    bool operator==(const Hyperplane& o) const {
        return normal_ == o.normal_ && offset_ == o.offset_;
    }
    bool operator!=(const Hyperplane& o) const { return !(*this == o); }
    bool operator<(const Hyperplane& o) const;  // lexicographic canonical order

private:
    Hyperplane(std::vector<Integer> normal, Integer offset);
    std::vector<Integer> normal_;
    Integer offset_;
};

enum class Side { Zero, One, On, Straddles };

// Position of a simplex relative to a hyperplane, by vertex signs.
Side side_of(const Hyperplane& h, const Simplex& s);

// Canonical hyperplane spanned by the facet opposite vertex `omit`.
Hyperplane facet_hyperplane(const Simplex& s, int omit);

enum class PairFailure { NoCommonFacetLine, SameSide, LowDimContact };

struct NeighbourlyCheck {
    bool ok = false;
    std::optional<Hyperplane> plane;    // separating facet hyperplane
    std::optional<Point> witness;       // common relative-interior point
    std::optional<PairFailure> failure;
};

// Two simplices are neighbourly iff some hyperplane spanned by a facet of
// each has them on opposite closed sides and the two facets meet in a
// (d-1)-dimensional set; the witness point lies in both relative interiors
// (found by an exact rational LP maximizing a common slack).
NeighbourlyCheck neighbourly_pair(const Simplex& s, const Simplex& t);

struct Encoding {
    std::vector<Hyperplane> hyperplanes;  // deduplicated, canonically sorted
    std::vector<Word> words;              // aligned with the input simplices
    WordFamily family;                    // the word set with k = d+1
};

// The word of each simplex over the family's facet hyperplanes: 0/1 where
// the hyperplane is spanned by one of its facets (side per the convention
// above), '*' otherwise.
Encoding encode_family(const std::vector<Simplex>& simplices);

std::string point_str(const Point& p);

}  // namespace cubewords::geometry
