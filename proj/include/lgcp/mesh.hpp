#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "lgcp/geometry.hpp"

namespace lgcp {

using SpMat = Eigen::SparseMatrix<double>;

// Location of a point inside a triangulation: triangle index plus the three
// barycentric weights with respect to that triangle's vertices. A negative
// triangle index marks "outside the domain".
struct Barycentric {
    int triangle = -1;
    std::array<double, 3> coords{0.0, 0.0, 0.0};

    bool inside() const { return triangle >= 0; }
};

// Sparse row of piecewise-linear basis values at a point: at most three
// nonzeros, summing to one.
struct BasisRow {
    std::array<int, 3> index{-1, -1, -1};
    std::array<double, 3> value{0.0, 0.0, 0.0};
};

struct FemMatrices {
    SpMat mass;                    // consistent P1 mass matrix C
    Eigen::VectorXd lumped_mass;   // row sums of C
    SpMat stiffness;               // P1 stiffness matrix G
};

// Planar triangulation, immutable after construction. Coordinates are
// kilometres in a user-supplied projection; any projection from spherical
// coordinates happens upstream.
class TriMesh {
public:
    TriMesh() = default;

    // Validates and derives adjacency. Throws DataError on duplicate vertices
    // (closer than vertex_tolerance), inverted or degenerate triangles,
    // out-of-range indices, or non-conforming shared edges. Triangles are
    // reoriented counterclockwise.
    static TriMesh from_data(std::vector<Vec2> vertices,
                             std::vector<std::array<int, 3>> triangles,
                             double vertex_tolerance = 1e-9);

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_triangles() const { return static_cast<int>(triangles_.size()); }

    const Vec2& vertex(int i) const { return vertices_[i]; }
    const std::array<int, 3>& triangle(int k) const { return triangles_[k]; }
    const std::vector<Vec2>& vertices() const { return vertices_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

    bool is_boundary_vertex(int i) const { return boundary_vertex_[i] != 0; }
    double triangle_area(int k) const { return areas_[k]; }
    double total_area() const { return total_area_; }
    BBox bbox() const { return bbox_; }

    // Neighbor across the edge opposite local vertex j of triangle k, or -1.
    int neighbor(int k, int j) const { return adjacency_[k][j]; }

    Barycentric locate(const Vec2& p) const;

    // Basis values at p; throws OutsideDomainError when p is not in the domain.
    BasisRow basis(const Vec2& p) const;

    // Minimum interior angle over all triangles, in degrees.
    double min_angle_deg() const;
    double max_edge_length() const;

    void save(const std::string& path) const;
    static TriMesh load(const std::string& path);

private:
    Barycentric barycentric_in_triangle(const Vec2& p, int k) const;
    void build_derived();

    std::vector<Vec2> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<char> boundary_vertex_;
    std::vector<std::array<int, 3>> adjacency_;
    std::vector<double> areas_;
    double total_area_ = 0.0;
    BBox bbox_;

    // uniform grid over the bbox for point location
    int grid_nx_ = 0, grid_ny_ = 0;
    double cell_w_ = 0.0, cell_h_ = 0.0;
    std::vector<std::vector<int>> grid_cells_;
};

struct MeshOptions {
    double min_angle_deg = 21.0;   // Delaunay refinement quality target
    double vertex_tolerance = 1e-9;
    int max_points = 2000000;
};

struct InnerRegion {
    Polygon boundary;
    double max_edge;
};

// Delaunay-refinement triangulation of a simple polygon. All mesh edges are
// at most max_edge long; inside inner_region the finer inner bound applies.
TriMesh build_mesh(const Polygon& domain_boundary, double max_edge,
                   const std::optional<InnerRegion>& inner_region = std::nullopt,
                   const MeshOptions& options = MeshOptions{});

// Standard P1 assembly; throws NumericError naming any triangle whose area is
// below tolerance.
FemMatrices assemble_fem(const TriMesh& mesh, double area_tolerance = 1e-14);

}
