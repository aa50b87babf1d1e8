#include "webcurv/linalg.hpp"

namespace webcurv {

namespace {

// cheap proxy for coefficient size, used to pick pivots
size_t weight(const FieldScalar &s)
{
	size_t w = 0;
	for (auto &c : s.coords())
		w += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
	return w;
}

// row echelon form in place; returns pivot columns
std::vector<int> echelon(Matrix &m, bool reduced, FieldScalar *det = nullptr)
{
	std::vector<int> piv;
	int R = m.rows(), C = m.cols();
	int row = 0;
	if (det)
		*det = FieldScalar(m.field(), 1);
	for (int col = 0; col < C && row < R; col++) {
		int best = -1;
		size_t bw = 0;
		for (int i = row; i < R; i++) {
			if (m(i, col).is_zero())
				continue;
			size_t w = weight(m(i, col));
			if (best < 0 || w < bw) {
				best = i;
				bw = w;
			}
		}
		if (best < 0)
			continue;
		if (best != row) {
			for (int j = 0; j < C; j++)
				std::swap(m(best, j), m(row, j));
			if (det)
				*det = -*det;
		}
		FieldScalar p = m(row, col);
		if (det)
			*det *= p;
		FieldScalar inv = p.inverse();
		for (int j = col; j < C; j++)
			m(row, j) *= inv;
		for (int i = reduced ? 0 : row + 1; i < R; i++) {
			if (i == row || m(i, col).is_zero())
				continue;
			FieldScalar f = m(i, col);
			for (int j = col; j < C; j++)
				if (!m(row, j).is_zero())
					m(i, j) -= f * m(row, j);
		}
		piv.push_back(col);
		row++;
	}
	return piv;
}

} // namespace

FieldScalar determinant(Matrix m)
{
	if (m.rows() != m.cols())
		throw AlgebraError("determinant of non-square matrix");
	FieldScalar det;
	auto piv = echelon(m, false, &det);
	if (int(piv.size()) < m.rows())
		return FieldScalar(m.field());
	return det;
}

int rank(Matrix m) { return int(echelon(m, false).size()); }

std::vector<std::vector<FieldScalar>> kernel(Matrix m)
{
	auto piv = echelon(m, true);
	int C = m.cols();
	std::vector<bool> is_piv(C, false);
	for (int p : piv)
		is_piv[p] = true;
	std::vector<std::vector<FieldScalar>> out;
	for (int f = 0; f < C; f++) {
		if (is_piv[f])
			continue;
		std::vector<FieldScalar> v(C, FieldScalar(m.field()));
		v[f] = FieldScalar(m.field(), 1);
		for (size_t r = 0; r < piv.size(); r++)
			v[piv[r]] = -m(int(r), f);
		out.push_back(std::move(v));
	}
	return out;
}

bool solve(Matrix m, std::vector<FieldScalar> rhs, std::vector<FieldScalar> &out)
{
	int R = m.rows(), C = m.cols();
	Field K = m.field();
	for (auto &r : rhs)
		K = common_field(K, r.field());
	Matrix a(K, R, C + 1);
	for (int i = 0; i < R; i++) {
		for (int j = 0; j < C; j++)
			a(i, j) = m(i, j).in(K);
		a(i, C) = rhs[i].in(K);
	}
	auto piv = echelon(a, true);
	if (!piv.empty() && piv.back() == C)
		return false;
	out.assign(C, FieldScalar(K));
	for (size_t r = 0; r < piv.size(); r++)
		out[piv[r]] = a(int(r), C);
	return true;
}

} // namespace webcurv
