#pragma once

// Built-in example complexes. Face tables follow the axis convention of the
// source diagrams: for planar squares index 0 is the vertical direction and
// index 1 the horizontal one; the 3-cube tables are the unique index
// assignment compatible with the cubical identities and the faces of the top
// cell S.

#include "dihom/precubical.hpp"

#include <random>
#include <string>
#include <vector>

namespace dihom {

PrecubicalSet fx_two_holes_antidiag();
PrecubicalSet fx_two_holes_diag();
PrecubicalSet fx_cube3();         // full 3-cube, top cell S
PrecubicalSet fx_empty_cube();    // boundary of the 3-cube
PrecubicalSet fx_matchbox();      // empty cube minus the lower face A
PrecubicalSet fx_empty_square();  // vertices 1,2,3,4; edges 42,43,21,31
PrecubicalSet fx_square();        // filled unit square D2 on 00,01,10,11
PrecubicalSet fx_kronecker();     // two vertices, double edge
PrecubicalSet fx_line(int m);     // directed path with m edges
PrecubicalSet fx_dn(int n);       // full directed n-cube, cells = words over 0,1,*
PrecubicalSet fx_sn(int n);       // boundary of d-(n+1): delete the top cell

// Subcomplex id sets used by the relative and Mayer-Vietoris examples.
std::vector<std::string> red_square_ids();           // face square of the empty cube
std::vector<std::string> mv_diag_x1_ids();           // good cover of two-holes-diag
std::vector<std::string> mv_diag_x2_ids();
std::vector<std::string> mv_antidiag_left_x1_ids();  // not a good cover
std::vector<std::string> mv_antidiag_left_x2_ids();
std::vector<std::string> mv_antidiag_center_x1_ids();  // good cover, not a relative pair
std::vector<std::string> mv_antidiag_center_x2_ids();

// Random face-closed subcomplex of a small grid (product of directed lines);
// even seeds give a planar grid, odd seeds a three dimensional one.
PrecubicalSet random_grid_complex(unsigned seed);

std::vector<std::string> fixture_names();
// Accepts the names above plus the parametric families d-N and s-N.
PrecubicalSet fixture_by_name(const std::string& name);

}  // namespace dihom
