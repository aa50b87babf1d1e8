#pragma once

#include "webcurv/field.hpp"

#include <vector>

namespace webcurv {

// Dense matrix over a number field, row major.
class Matrix
{
public:
	Matrix() : K_(rationals()), r_(0), c_(0) {}
	Matrix(Field K, int rows, int cols) : K_(K), r_(rows), c_(cols), a_(size_t(rows) * cols, FieldScalar(K)) {}

	Field field() const { return K_; }
	int rows() const { return r_; }
	int cols() const { return c_; }
	FieldScalar &operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
	const FieldScalar &operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

private:
	Field K_;
	int r_, c_;
	std::vector<FieldScalar> a_;
};

FieldScalar determinant(Matrix m);
int rank(Matrix m);
// basis of the right null space
std::vector<std::vector<FieldScalar>> kernel(Matrix m);
// some solution of m z = rhs, or empty optional-like flag
bool solve(Matrix m, std::vector<FieldScalar> rhs, std::vector<FieldScalar> &out);

} // namespace webcurv
