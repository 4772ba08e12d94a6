#pragma once

// Dense complex matrices sized for two- and three-qubit density operators.
//
// Basis convention: the first tensor factor is the most significant bit, so a
// two-qubit index is 2*alice + rob and a three-mode index is 4*A + 2*I + II.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rindler {

using Complex = std::complex<double>;

namespace tolerance {
inline constexpr double kHermitian = 1e-12;      // DensityMatrix invariant
inline constexpr double kHermitianInput = 1e-10; // eig_hermitian precondition
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsdFloor = -1e-10;      // clamp [-1e-10, 0) to 0
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;
}  // namespace tolerance

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  // Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);

  // Row-major entries; length must be dim*dim and every entry finite.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  bool is_hermitian(double tol) const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);

// Largest elementwise |a - b|. Dimensions must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product: entry (i*b.dim + k, j*b.dim + l) = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// |psi><psi|
ComplexMatrix projector(std::span<const Complex> ket);

// Traces out the least-significant qubit. Input dimension must be even; for
// the three-mode Rindler state (dim 8) this removes region II.
ComplexMatrix partial_trace_last(const ComplexMatrix& state);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

// Cyclic complex Jacobi. Throws ValidationError when the input is not
// Hermitian within 1e-10.
HermitianEigen eig_hermitian(const ComplexMatrix& m);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-1e-10, 0) are clamped to zero; anything lower throws PsdViolation.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

// Singular values (descending) from the Hermitian embedding [[0, A], [A^H, 0]],
// whose spectrum is {+s_i, -s_i}. Accurate to round-off in absolute terms,
// including for zero singular values.
std::vector<double> singular_values(const ComplexMatrix& m);

// Validated 4x4 two-qubit density operator: Hermitian (1e-12), unit trace
// (1e-12) and PSD down to the -1e-10 floor.
class DensityMatrix {
 public:
  // Throws ValidationError / PsdViolation on any invariant failure.
  explicit DensityMatrix(ComplexMatrix mat);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return mat_(row, col); }

  // tr(rho^2)
  double purity() const;

 private:
  ComplexMatrix mat_;
};

}  // namespace rindler
