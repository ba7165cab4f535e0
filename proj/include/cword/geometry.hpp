#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cword/christoffel.hpp"
#include "cword/word.hpp"

namespace cword {

/// Unit steps of a lattice path; Z only occurs in 3D paths.
enum class Step : std::uint8_t { X = 0, Y = 1, Z = 2 };

struct LatticePath {
    int dimension = 2;
    std::vector<Step> steps;

    auto operator<=>(const LatticePath&) const = default;
};

/// The pair of equal rational slopes (n/m, n/m) of the target plane
/// z = (n/m)(x + y).
struct PlaneSpec {
    int m = 0;
    int n = 0;
};

/// Read a word as a path: letter 0 -> X, 1 -> Y, 2 -> Z.
LatticePath path_of_word(const Word& w);

/// Read a path back as a word over the alphabet of its dimension.
Word word_of_path(const LatticePath& p);

/// Discrete approximation of the plane z = (n/m)(x + y) from the origin:
/// step Z whenever it does not cross the plane, otherwise X and Y strictly
/// alternating starting with X; stops at the first point after the origin
/// with x = y lying exactly on the plane. All comparisons are integer
/// cross-multiplications.
std::pair<LatticePath, Word> path3d(const PlaneSpec& spec);

/// Orthogonal projection to the plane x = y: X and Y become the horizontal
/// unit step, Z the vertical one; z-coordinates are preserved.
LatticePath project_to_diagonal(const LatticePath& path);

/// The Christoffel path of a slope (2D discrete approximation).
LatticePath path2d(const Slope& s);

struct SvgStyle {
    int scale = 40;
    int margin = 30;
    /// Guide line from the origin with the given (run, rise), 2D only.
    std::optional<std::pair<int, int>> guide;
};

/// Render a path as SVG 1.1; 3D paths use a fixed isometric projection
/// (30-degree axes) with x/y/z steps drawn blue/green/red.
std::string svg_path(const LatticePath& path, const SvgStyle& style = {});

/// Render a class as vertices on an oriented circle with one polygon per
/// letter spanning that letter's positions.
std::string svg_necklace(const CircularWord& cw, const SvgStyle& style = {});

}  // namespace cword
