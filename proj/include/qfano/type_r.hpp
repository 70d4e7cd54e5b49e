#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qfano/check.hpp"
#include "qfano/matrix.hpp"
#include "qfano/pfaffian.hpp"
#include "qfano/poly.hpp"

namespace qfano::type_r {

// A locus given by linear conditions imposed on x and, identically, on y.
// Sampled points must satisfy q_open(x, y) != 0.
struct Locus {
  std::string name;
  RatMatrix conditions;  // k x 5
  std::pair<int, int> open_q;
  // Gamma loci only: (r0, r15, r24, r34, r35) = -q_open * r_point.
  std::optional<std::array<Rational, 5>> r_point;
};

struct ScrollCase {
  std::string name;
  // Seven linear constraints written as variable -> image.
  std::vector<std::pair<std::string, std::string>> constraints;
  std::array<std::array<std::string, 3>, 2> matrix;  // entries are z-variable names
};

struct Data {
  // x1..x5, y1..y5 of weight 1 and r0, r15, r24, r34, r35 of weight 2.
  RingPtr ring;
  // Same without r0; ambient of the codimension three midpoint.
  RingPtr bar;
  // xb, yb of weight 1 and the ten rb_ij of weight 2.
  RingPtr gbar;
  // rt15..rt35, xt, yt, w with the two weight rows of the tilde scroll.
  RingPtr tilde;
  // s, rh0, rh15..rh35, xh, yh with the two weight rows of the hat scroll.
  RingPtr hat;
  // t, rh0, rh15..rh35, xh, yh where s = t^2.
  RingPtr hat_t;
  RingPtr zring;   // z1..z5
  RingPtr scroll;  // x, y, z all of weight 1

  std::array<Poly, 10> q;  // q12, q13, ..., q45 in ring
  std::array<Poly, 5> f;
  std::array<Poly, 9> RF;
  std::array<Poly, 4> S, K, L, U;
  Poly DR;

  SkewPolyMatrix5 rf_matrix;  // entries r + q whose Pfaffians give RF1..RF5
  PolyMatrix A1, A2, A3, B1, B2, B3, C1, C2, C3, C4, Mq;

  // Representation data. rep_r acts on (r15, r24, r34, r35); rep_x on x and y.
  std::array<RatMatrix, 4> rep_r;
  std::array<RatMatrix, 5> rep_x;
  RatMatrix sigma5_r;                // on (r15, r24, r34, r35, r0)
  std::array<Poly, 5> sigma5_shift;  // quadratic q-vector added by sigma5
  bool transpose_convention = false;
  std::string convention;
  std::vector<PolyMap> sigma;  // sigma1..sigma5 on ring

  std::array<std::array<Rational, 4>, 5> segre_points;
  Poly S3;                      // in zring
  std::array<Poly, 5> mu_coords;  // (f5, -f4, f3, -f2, f1)

  std::array<std::array<Rational, 5>, 6> p_points;  // (r0, r15, r24, r34, r35)
  std::vector<Locus> gammas;
  std::vector<Locus> deltas;

  std::array<Poly, 5> RFbar;
  std::array<Poly, 2> rvar2rel;
  std::array<Poly, 5> gbar_gens;
  std::array<Poly, 2> gr_rel;
  std::vector<Poly> rtilde;     // 7 generators
  std::vector<Poly> rhat;       // 9 generators
  std::vector<Poly> rhat_t;     // the same with s = t^2
  std::optional<PolyMap> hR;    // bar -> tilde
  std::optional<PolyMap> gR;    // bar -> hat
  std::optional<PolyMap> fR;    // ring -> hat_t
  std::optional<PolyMap> s_to_one;  // hat -> ring
  std::optional<PolyMap> swap_xy;   // bar -> bar, (x, y) -> (y, -x)

  std::array<ScrollCase, 2> scroll_cases;

  const Poly& qij(int i, int j) const;
};

// Built once, validated, then shared read-only.
const Data& data();

// Index of q_ij in Data::q.
std::size_t q_slot(int i, int j);

// Evaluate the images of a map at a point of its source.
std::vector<Rational> apply_to_point(const PolyMap& m, const std::vector<Rational>& point);

// Rank-2 chart matrix of the tilde scroll at r~34 = 1. Throws
// std::domain_error when 1 + r~35 = 0. Point order follows Data::tilde.
SkewRat5 chart_matrix(const std::vector<Rational>& tilde_point);

// A point of the tilde variety over a random base point, by solving the
// equations that are linear in (yt, w) once rt and xt are fixed.
std::optional<std::vector<Rational>> sample_tilde_point(Sampler& rng, bool chart34);

// A point of the key variety with r0 != 0, or nullopt on a degenerate draw.
std::optional<std::vector<Rational>> sample_r0_chart_point(Sampler& rng);

// A random point of the locus: x and y in the common solution space of the
// conditions and linearly independent (q_open != 0 is also required for
// Gamma), r from r_point (Gamma) or zero (Delta).
std::optional<std::vector<Rational>> sample_locus_point(const Locus& locus, Sampler& rng);

// Closed membership in the locus equations (no open condition).
bool on_locus(const Locus& locus, const std::vector<Rational>& point);

std::vector<Check> checks();

}  // namespace qfano::type_r
