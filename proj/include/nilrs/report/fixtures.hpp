#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilrs {

inline constexpr int kFixtureVersion = 1;

/// One printed value, transcribed to the ring's text syntax. Objects:
///   connection, curvature   matrix entries "i,j" plus a "prefactor" record
///                           (the scalar printed in front of the matrix);
///                           a matrix with only a prefactor is printed as zero
///   ricci                   quadratic form in w1..w4
///   scalar                  scalar curvature
///   ricci_operator          entries "i,j" of the printed operator
///   lie_derivative          coordinate entries "i,j" in P1, P1_x, ... where
///                           X = sum P^k X_k
///   pde                     entries "i,j": everything except (L_X g)_ij; an
///                           optional "alpha" record gives the value the
///                           system is printed with (default: symbolic)
///   field                   frame components "1".."4" of X
///   alpha                   the soliton constant
///   claim                   classification words ("shrinking", ...)
/// Two-forms are written "w1^w2". Entries that cannot be parsed as printed
/// (truncated text) are kept verbatim and flagged.
struct Fixture {
  int theorem;
  std::string_view object;
  std::string_view entry;
  std::string_view value;
  bool truncated = false;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = {
      // Diagonal form w1^2 + a1 w2^2 + a2 w3^2 + a3 w4^2.
      {2, "connection", "prefactor", "1/2"},
      {2, "connection", "1,2", "a2*w3"},
      {2, "connection", "1,3", "c*w2"},
      {2, "connection", "2,1", "-a2/a1*w3"},
      {2, "connection", "2,3", "-a2/a1*w1"},
      {2, "connection", "3,1", "-w2"},
      {2, "connection", "3,2", "w1"},
      {2, "curvature", "prefactor", "1/4"},
      {2, "curvature", "1,2", "-3*a2*w1^w2"},
      {2, "curvature", "1,3", "a2^2/a1*w1^w3"},
      {2, "curvature", "2,1", "3*a2/a1*w1^w2"},
      {2, "curvature", "2,3", "a2^2/a1*w2^w3"},
      {2, "curvature", "3,1", "-a2/a1*w1^w3"},
      {2, "curvature", "3,2", "a2*w2^w3"},
      {2, "ricci", "", "-a2/(2*a1)*w1^2 - a2/2*w2^2 + a2^2/(2*a1)*w3^2"},
      {2, "scalar", "", "-a2/(2*a1)"},
      {2, "ricci_operator", "1,1", "-3*a2/(8*a1)"},
      {2, "ricci_operator", "2,2", "-3*a2/8"},
      {2, "ricci_operator", "3,3", "5*a2^2/(8*a1)"},
      {2, "ricci_operator", "4,4", "a2*a3/(8*a1)"},
      {2, "lie_derivative", "1,1", "2*P1_x"},
      {2, "lie_derivative", "1,2", "P1_y + (1 + x^2)*P2_x - x*P3_x"},
      {2, "lie_derivative", "1,3", "P3_x + P1_z - x*P2_x"},
      {2, "lie_derivative", "1,4", "P1_w + P4_x"},
      {2, "lie_derivative", "2,2", "2*x*P1 - 2*x*P3_y + 2*(1 + x^2)*P2_y"},
      {2, "lie_derivative", "2,3", "P3_y + (1 + x^2)*P2_z - x*(P3_z + P2_y) - P1"},
      {2, "lie_derivative", "2,4", "P4_y - x*P3_w + (1 + x^2)*P2_w"},
      {2, "lie_derivative", "3,3", "2*P3_z - 2*x*P2_z"},
      {2, "lie_derivative", "3,4", "P4_z + P3_w - x*P2_w"},
      {2, "lie_derivative", "4,4", "2*P4_w"},
      {2, "pde", "1,1", "-a2/a1 + alpha"},
      {2, "pde", "2,2", "a2^2/a1*x^2 - a2 + a1*alpha + a2*alpha*x^2"},
      {2, "pde", "3,3", "a2^2/a1 + a2*alpha"},
      {2, "pde", "4,4", "a3*alpha"},
      {2, "pde", "2,3", "-a2^2/a1*x - a2*alpha*x"},
      {2, "field", "1", "-a2/a1*x + C2*y + C3"},
      {2, "field", "2", "-(1/a1*(C2*x + a2*y) + C4)"},
      {2, "field", "3", "C2/(2*a1)*(x^2 - a1*y^2) + C3*y + C4*x - a2/a1*(x*y - 2*z) + C5"},
      {2, "field", "4", "a2/a3*y - 3*a2/(2*a1)*w + C1"},
      {2, "alpha", "", "-3*a2/a1"},
      {2, "claim", "g_lambda_plus", "shrinking"},
      {2, "claim", "g_lambda_minus", "expanding"},
      {2, "claim", "g_mu", "expanding"},

      // g0_1
      {3, "connection", "prefactor", "1/2"},
      {3, "connection", "1,2", "w4"},
      {3, "connection", "1,4", "w2"},
      {3, "connection", "2,1", "-w4"},
      {3, "connection", "2,4", "-w1"},
      {3, "connection", "3,1", "-w2"},
      {3, "connection", "3,2", "w1"},
      {3, "curvature", "prefactor", "1/4"},
      {3, "curvature", "1,4", "w1^w4"},
      {3, "curvature", "2,4", "w2^w4"},
      {3, "curvature", "3,1", "-w1^w4"},
      {3, "curvature", "3,2", "-w2^w4"},
      {3, "ricci", "", "1/2*w4^2"},
      {3, "scalar", "", "0"},
      {3, "ricci_operator", "4,4", "1/2"},
      {3, "lie_derivative", "1,1", "2*P1_x"},
      {3, "lie_derivative", "1,2", "P1_y + P2_x - x*P4_x"},
      {3, "lie_derivative", "1,3", "P1_z + P4_x"},
      {3, "lie_derivative", "1,4", "P1_w + P2 + P3_x"},
      {3, "lie_derivative", "2,2", "2*P2_y - 2*x*P4_y"},
      {3, "lie_derivative", "2,3", "P2_z + P4_y - x*P4_z"},
      {3, "lie_derivative", "2,4", "-P1 + P2_w + P3_y - x*P4_w"},
      {3, "lie_derivative", "3,3", "2*P4_z"},
      {3, "lie_derivative", "3,4", "P3_z + P4_w"},
      {3, "lie_derivative", "4,4", "2*P3_w"},
      {3, "pde", "1,1", "alpha"},
      {3, "pde", "2,2", "alpha"},
      {3, "pde", "4,4", "1"},
      {3, "pde", "3,4", "alpha"},
      {3, "field", "1", "C1*y - alpha/2*x + C5*cos(w) + C6*sin(w) + C2"},
      {3, "field", "2", "-(C1*x + alpha/2*y - C5*sin(w) + C6*cos(w) + C3)"},
      {3, "field", "3", "C1/2*(x^2 + y^2) + (C3 + alpha*y/2)*x + C2*y - alpha*z - w/2 + C4"},
      {3, "field", "4", "C7"},
      {3, "alpha", "", "alpha"},

      // g0_2
      {4, "connection", "prefactor", "1/2"},
      {4, "connection", "1,2", "w2"},
      {4, "connection", "3,1", "-w2"},
      {4, "curvature", "prefactor", "1"},
      {4, "ricci", "", "0"},
      {4, "lie_derivative", "1,1", "2*P1_x"},
      {4, "lie_derivative", "1,2", "P2 + P1_y - x*P2_x + P3_x"},
      {4, "lie_derivative", "1,3", "P1_z + P2_x"},
      {4, "lie_derivative", "1,4", "P1_w + P4_x"},
      {4, "lie_derivative", "2,2", "-2*P1 + x*2*P2_y + 2*P3_y"},
      {4, "lie_derivative", "2,3", "P2_y - x*P2_z + P3_z"},
      {4, "lie_derivative", "2,4", "-x*P2_w + P3_w + P4_y"},
      {4, "lie_derivative", "3,3", "2*P2_z"},
      {4, "lie_derivative", "3,4", "P2_w + P4_z"},
      {4, "lie_derivative", "4,4", "2*P4_w"},
      {4, "pde", "1,1", "alpha"},
      {4, "pde", "4,4", "alpha"},
      {4, "pde", "2,3", "alpha"},
      {4, "field", "1", "-alpha/2*x - C1*y*w - C2*w + C5*z + C5/3*y^3 + C6/2*y^2 + C7*y + C8"},
      {4, "field", "2", "C1*w - C5*(y^2/2 + x) - (alpha + 2*C6)/4*y + C9"},
      {4, "field", "3",
       "(C6/2 - 3*alpha/4)*z + (C5/12*y^2 + C6/6*y + C1/2*w - C5/2*x + C7/2)*y^2 + (alpha/4 - C6/2)*x*y"
       " + C8*y + C5*y*z - C2*y*w - (C7 + C9)*x - C3*w + C10"},
      {4, "field", "4", "-alpha/2*w + C1*(x*y - z + y^3/6) + C2*(x + y^2/2) + C3*y + C4"},
      {4, "alpha", "", "alpha"},

      // g0_3
      {5, "connection", "prefactor", "1/2"},
      {5, "connection", "1,2", "w3"},
      {5, "connection", "1,3", "w2"},
      {5, "connection", "3,1", "-w2"},
      {5, "connection", "3,2", "w1"},
      {5, "connection", "4,1", "-w3"},
      {5, "connection", "4,3", "-w1"},
      {5, "curvature", "prefactor", "1/4"},
      {5, "curvature", "1,2", "-3*w1^w2"},
      {5, "curvature", "3,2", "-w2^w3"},
      {5, "curvature", "4,1", "3*w1^w2"},
      {5, "curvature", "4,3", "w2^w3"},
      {5, "ricci", "", "-1/2*w2^2"},
      {5, "scalar", "", "0"},
      {5, "ricci_operator", "2,2", "-1/2"},
      {5, "lie_derivative", "1,1", "2*P1_x"},
      {5, "lie_derivative", "1,2", "P1_y - P2_x - x*P3_x + P4_x"},
      {5, "lie_derivative", "1,3", "P1_z + P2 + P3_x"},
      {5, "lie_derivative", "1,4", "P1_w + P2_x"},
      {5, "lie_derivative", "2,2", "2*x*(P1 - P3_y) + 2*P4_y"},
      {5, "lie_derivative", "2,3", "-P1 + P3_y - x*P3_z + P4_z"},
      {5, "lie_derivative", "2,4", "P2_y - x*P3_w + P4_w"},
      {5, "lie_derivative", "3,3", "2*P3_z"},
      {5, "lie_derivative", "3,4", "P2_z + P3_w"},
      {5, "lie_derivative", "4,4", "2*P2_w"},
      {5, "pde", "1,1", "alpha"},
      {5, "pde", "2,2", "-1"},
      {5, "pde", "3,3", "alpha"},
      {5, "pde", "2,4", "alpha"},
      {5, "field", "1", "-alpha/2*x + C1/2*y^2 + C2*y + C3"},
      {5, "field", "2", "C4"},
      {5, "field", "3", "-alpha/2*z + C1/6*(y^3 - 6*y) + C2/2*y^2 + C3*y - C4*x + C5"},
      {5, "field", "4", "y/2 - alpha*w + C1/2*(2*z - x*y) - C2*x + C6"},
      {5, "alpha", "", "alpha"},

      // g1_lambda
      {7, "connection", "prefactor", "1/2"},
      {7, "connection", "1,2", "(lambda + 1)*w3"},
      {7, "connection", "1,3", "(lambda + 1)*w2"},
      {7, "connection", "3,1", "-(1 + lambda)/lambda*w2"},
      {7, "connection", "3,2", "(lambda - 1)/lambda*w1"},
      {7, "connection", "4,1", "-(1 + lambda)*w3"},
      {7, "connection", "4,3", "(1 - lambda)*w1"},
      {7, "curvature", "prefactor", "1/4"},
      {7, "curvature", "1,2", "-(3*lambda^2 + 2*lambda - 1)/lambda*w1^w2"},
      {7, "curvature", "3,2", "-(1 + lambda)^2/lambda*w2^w3"},
      {7, "curvature", "4,1", "(3*lambda^2 + 2*lambda - 1)/lambda*w1^w2"},
      {7, "curvature", "4,3", "(1 + lambda)^2*w2^w3"},
      {7, "ricci", "", "(1 - lambda^2)/(2*lambda)*w2^2"},
      {7, "scalar", "", "0"},
      {7, "ricci_operator", "2,2", "(1 - lambda^2)/(2*lambda)"},
      {7, "lie_derivative", "1,1", "2*P1_x"},
      {7, "lie_derivative", "1,2", "P1_y - 3/2*x^2*P2_x + x*(P2 + P3_x)*(1 - lambda) + P3 + P4_x"},
      {7, "lie_derivative", "1,3", "P1_z + lambda*P2 - 2*x*P2_x + lambda*P3_x"},
      {7, "lie_derivative", "1,4", "P1_w + P2_x"},
      {7, "lie_derivative", "2,2", "2*(1 + lambda)*x*P1 + x^2*P2_y - 2*lambda*x*P3_y + 2*P4_y"},
      {7, "lie_derivative", "2,3", "-(2 + lambda)*P1 - 2*x*P2_y + lambda*P3_y - lambda*x*P3_z - x^2/2*P2_z - P3_z + P4_z"},
      {7, "lie_derivative", "2,4", "P2_y - x^2/2*P2_w - (1 + lambda)*x*P3_w + P^", true},
      {7, "lie_derivative", "3,3", "2*lambda*P3_z - 2*x*P2_z"},
      {7, "lie_derivative", "3,4", "P2_z + lambda*P3_w"},
      {7, "lie_derivative", "4,4", "2*P2_w"},
      {7, "pde", "1,1", "alpha"},
      {7, "pde", "2,2", "(1 - lambda^2)/lambda"},
      {7, "pde", "3,3", "lambda*alpha"},
      {7, "pde", "2,4", "-a2*alpha*x"},
      {7, "field", "1", "-alpha/2*x"},
      {7, "field", "2", "C1"},
      {7, "field", "3", "-(alpha/2*z + C1*x + C2)"},
      {7, "field", "4", "1/2*(lambda*y + alpha*(z*x - 2*w) + C1*x^2 - 2*C2*x + 2*C3)"},
      {7, "alpha", "", "alpha"},

      // g2_lambda
      {8, "connection", "prefactor", "1/2"},
      {8, "connection", "2,1", "-lambda*w3"},
      {8, "connection", "2,3", "-lambda*w1"},
      {8, "connection", "3,1", "-1/lambda*w1 - w2"},
      {8, "connection", "3,2", "-w2"},
      {8, "connection", "4,2", "lambda*w3"},
      {8, "connection", "4,3", "w1 + lambda*w2"},
      {8, "curvature", "prefactor", "1/4"},
      {8, "curvature", "2,1", "3*lambda*w1^w2"},
      {8, "curvature", "3,1", "-lambda*w1^w3"},
      {8, "curvature", "4,2", "-3*lambda*w1^w2"},
      {8, "curvature", "4,3", "lambda^2*w1^w3"},
      {8, "ricci", "", "-lambda/2*w1^2"},
      {8, "scalar", "", "0"},
      {8, "ricci_operator", "1,1", "-lambda/2"},
      {8, "lie_derivative", "1,1", "2*P4_x + 2*P3"},
      {8, "lie_derivative", "1,2", "P4_y - x*P3_y - x^2/2*P2_y - lambda*x*P3_x + x^2*P1_x - lambda*x*P2 + P2_x + 2*x*P1"},
      {8, "lie_derivative", "1,3", "P4_z - x*P3_z - x^2/2*P2_z + lambda*P3_x - 2*x*P1_x + lambda*P2 - 2*P1"},
      {8, "lie_derivative", "1,4", "P4_w - x*P3_w - x^2/2*P2_w + P1_x"},
      {8, "lie_derivative", "2,2", "-2*lambda*x*P3_y + x^2*P1_y + 2*lambda*x*P1 + 2*P2_y"},
      {8, "lie_derivative", "2,3", "-lambda*x*P3_z + lambda*P3_y - 2*x*P1_y - lambda*P1 + P2_z"},
      {8, "lie_derivative", "2,4", "P1_y + P2_w - lambda*x*P3_w"},
      {8, "lie_derivative", "3,3", "-2*x*P1_z + 2*lambda*P3_z"},
      {8, "lie_derivative", "3,4", "P1_z + lambda*P3_w"},
      {8, "lie_derivative", "4,4", "2*P1_w"},
      {8, "pde", "alpha", "0"},
      {8, "pde", "4,4", "-lambda"},
      {8, "field", "1", "0"},
      {8, "field", "2", "-(C1/2*(x^2 + 2/lambda) + C2*x + C3)"},
      {8, "field", "3", "C1/6*x^3 + C2/2*x^2 + C3*x + C4"},
      {8, "field", "4", "-C1/24*x^4 - C2/2*x^3 - C3/2*x^2 + (lambda/2 - C4)*x + C2*y + C1*z + C5"},
      {8, "alpha", "", "0"},
      {8, "claim", "g2_lambda", "shrinking"},
  };
  return table;
}

inline std::vector<const Fixture*> fixtures_for(int theorem, std::string_view object) {
  std::vector<const Fixture*> out;
  for (const auto& f : fixtures())
    if (f.theorem == theorem && f.object == object) out.push_back(&f);
  return out;
}

inline const Fixture* find_fixture(int theorem, std::string_view object, std::string_view entry) {
  for (const auto& f : fixtures())
    if (f.theorem == theorem && f.object == object && f.entry == entry) return &f;
  return nullptr;
}

}  // namespace nilrs
