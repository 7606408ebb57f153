#pragma once

#include <map>
#include <optional>
#include <vector>

#include "elnet/dimer.hpp"
#include "elnet/graph.hpp"
#include "elnet/grassmann.hpp"

namespace elnet {

// Conductances indexed by edge index of a DiskGraph.
using Conductances = std::vector<Rat>;

// Symmetric form on R^{2n}: half the alternating sum of x_i y_{n+i} + x_{n+i} y_i.
Rat q_form(const std::vector<Rat>& x, const std::vector<Rat>& y);
// X^perp is contained in X.
bool is_coisotropic(const Mat& m);
// Sign change on column n+i by (-1)^{i-1}; its own inverse.
Mat change_basis(const Mat& m);

// Sigma_J for J a subset of [n], keyed by mask.
struct CartanVector {
    int n = 0;
    std::map<Mask, Rat> sigma;
    Rat at(Mask j) const;  // 0 if absent
};

// Sigma_{I+jl} Sigma_{I+k} = Sigma_I Sigma_{I+jkl} + Sigma_{I+jk} Sigma_{I+l} + Sigma_{I+kl} Sigma_{I+j}.
bool satisfies_cartan_relations(const CartanVector& s);

// Rescales so the coordinate at {1, n+1, ..., 2n} is 1 and seeds Sigma_0 = Sigma_1 = 1.
// Throws DimensionMismatch, NotOrthogonal, NonPositive.
CartanVector cartan_from_plucker(const PluckerVector& p);

struct SkewPair {
    Mat plus, minus;
};
SkewPair skew_pair_from_cartan(const CartanVector& s);
// The first subset J whose Pfaffian formula fails.
std::optional<Mask> pfaffian_mismatch(const CartanVector& s, const SkewPair& m);
bool pfaffian_check(const CartanVector& s, const SkewPair& m);
// Throws PfaffianMismatch naming J.
void require_pfaffian(const CartanVector& s, const SkewPair& m);

// Rows of both isotropic normal forms, in standard coordinates, reduced to a basis of their
// sum and scaled so that the coordinate at {1, n+1, ..., 2n} is Sigma_0 Sigma_1.
// Throws RankUnexpected.
Mat matrix_from_cartan(const CartanVector& s);
// Normal forms in split coordinates: [M+ | I] and the rotated M- block.
Mat isotropic_plus(const SkewPair& m);
Mat isotropic_minus(const SkewPair& m);

// Positive values on vertices and faces of a disk graph.
struct BVariables {
    std::vector<Rat> vertex;
    std::vector<Rat> face;
};

// B_u = Sigma_{J(u)}. Throws NotWellConnected.
BVariables psi_g(const CartanVector& s, const DiskGraph& g);
// Sigma_J for every label realized on g. Throws NotOrthogonal if equal labels disagree.
CartanVector b_to_cartan(const BVariables& b, const DiskGraph& g);

// c(e) = B_u B_v / (B_f B_g) over the endpoints and the two sides of e.
Conductances q_g(const BVariables& b, const DiskGraph& g);

// A_g = B_v B_f over the two white vertices of each face of the Temperley graph.
std::vector<Rat> i_g_plus(const BVariables& b, const Temperley& t);

// B on y_delta_graph(g, site): the new vertex or face gets the cube recurrence value.
BVariables cube_recurrence_move(const BVariables& b, const YDeltaMove& mv);
BVariables cube_recurrence_move(const BVariables& b, const DiskGraph& g, const YDeltaSite& site);

// Scales the value at u by s * prod_{i in J(u)} t_i / prod_{i not in J(u)} t_i.
BVariables torus_action(const Rat& s, const std::vector<Rat>& t, const BVariables& b, const DiskGraph& g);
CartanVector torus_action(const Rat& s, const std::vector<Rat>& t, const CartanVector& c);

// Labels J(d_1), ..., J(d_2n) of the Temperley boundary: vertex b_i, then the face after it.
std::vector<Mask> boundary_labels(const DiskGraph& g);

// t * right_twist(matrix_from_cartan(s)) with t_i = Sigma_{J(d_{i-1})} / Sigma_{J(d_i)}.
Mat electrical_right_twist(const CartanVector& s, const DiskGraph& g);

// r_i = Delta_{S(f_{n+i}^-)} / Delta_{S(f_{n+i-1}^-)} over the Temperley face labels.
std::vector<Rat> left_twist_ratios(const Mat& x, const DiskGraph& g);
// Scaling t_i = r_i, t_{n+i} = 1.
std::vector<Rat> default_left_scaling(const std::vector<Rat>& r);
// Throws NotIsotropic, NonPositive, NotOrthogonal; a supplied t must satisfy t_i t_{n+i} = r_i.
CartanVector electrical_left_twist(const Mat& x, const DiskGraph& g,
                                   const std::optional<std::vector<Rat>>& t = std::nullopt);

}  // namespace elnet
