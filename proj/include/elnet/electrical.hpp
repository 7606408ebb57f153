#pragma once

#include <string>
#include <variant>
#include <vector>

#include "elnet/graph.hpp"
#include "elnet/grassmann.hpp"
#include "elnet/orthogonal.hpp"

namespace elnet {

struct Network {
    DiskGraph graph;
    Conductances conductance;  // by edge index
};

// Throws DimensionMismatch or NonPositive.
void validate_network(const Network& n);

// Vertex indices in Laplacian order: b_1..b_n, then interior vertices by id.
std::vector<int> laplacian_order(const DiskGraph& g);

// (Lf)(v) = sum over edges uv of c(e) (f(v) - f(u)), rows and columns in laplacian_order.
Mat laplacian(const Network& n);

// Interior values, in laplacian_order, of the harmonic function with the given boundary values.
// Throws SingularInterior.
std::vector<Rat> harmonic_extension(const Network& n, const std::vector<Rat>& boundary);

// Negated Schur complement of the Laplacian onto the boundary; off-diagonal entries are
// nonnegative. Throws SingularInterior.
Mat response_matrix(const Network& n);

// Empty when L is symmetric with zero row sums, positive off-diagonal entries and -L positive
// semidefinite; otherwise one message per violation.
std::vector<std::string> response_violations(const Mat& l);

// Star-mesh transform on the three moved edges; other edges keep their values.
// Result is indexed by edges of mv.after.
Conductances y_delta_conductances(const Conductances& c, const YDeltaMove& mv);

// Boundary measurement of the Temperley graph as a matrix with exactly those minors.
Mat forward_point(const Network& n);

// The Lagrangian point of a response matrix for n <= 3. Throws UnsupportedN.
Mat lagrangian_from_response(const Mat& l);

using InverseInput = std::variant<Mat /* response matrix */, MatrixPoint>;

// Left twist, B variables, conductances. Throws DimensionMismatch and pipeline errors.
Conductances invert_response(const InverseInput& input, const DiskGraph& g);

}  // namespace elnet
