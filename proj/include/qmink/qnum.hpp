#pragma once

#include <cmath>

namespace qmink {

// Deformation parameter q > 1 together with lambda = q - 1/q.
class DeformationParams {
 public:
  explicit DeformationParams(double q);

  double q() const { return q_; }
  double lambda() const { return lambda_; }
  double log_q() const { return log_q_; }

  // q^a for real a.
  double pow(double a) const { return std::exp(a * log_q_); }

 private:
  double q_;
  double lambda_;
  double log_q_;
};

// [a] = (q^a - q^-a) / (q - q^-1)
double bracket(double a, const DeformationParams& p);

// {a} = q^a + q^-a
double curly(double a, const DeformationParams& p);

struct SumIdentity {
  double lhs;
  double rhs;
};

// lhs = sum_{l=1..j} [2l+1] / ({l}^2 {l+1}^2)
// rhs = [2j] / ([2] {j}^2 {j+1}^2) * (1 + [2j+2]/[2])
SumIdentity sum_identity(int j, const DeformationParams& p);

}  // namespace qmink
