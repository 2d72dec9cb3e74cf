#include "octoforms/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace octoforms {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::size_t Matrix::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Rational& x) { return !x.is_zero(); }));
}

static void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "Matrix +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "Matrix -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("mat_mul: dimension mismatch (" + std::to_string(a.rows_) + "x" +
                                    std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                    std::to_string(b.cols_) + ")");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j).add_product(aik, bkj);
            }
        }
    }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

std::vector<Rational> mat_vec(const Matrix& a, std::span<const Rational> v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) out[i].add_product(a(i, j), v[j]);
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

static void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

bool is_symmetric(const Matrix& a) {
    require_square(a, "is_symmetric");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

bool is_skew(const Matrix& a) {
    require_square(a, "is_skew");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != -a(j, i)) return false;
    }
    return true;
}

Rational trace(const Matrix& a) {
    require_square(a, "trace");
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    const std::size_t n = a.rows();
    for (const Matrix* m : {&a, &b, &c, &d})
        if (m->rows() != n || m->cols() != n) throw std::invalid_argument("block2x2: block shape mismatch");
    Matrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(i, j);
            out(i, j + n) = b(i, j);
            out(i + n, j) = c(i, j);
            out(i + n, j + n) = d(i, j);
        }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

Matrix block_diagonal(const Matrix& a, std::size_t copies) {
    Matrix out(a.rows() * copies, a.cols() * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) out(c * a.rows() + i, c * a.cols() + j) = a(i, j);
    return out;
}

std::size_t rank(const Matrix& a) {
    Matrix m = a;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    Rational prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Rational pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Rational lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Rational v = pivot * m(i, j);
                if (!lead.is_zero()) v -= lead * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

Rational frobenius(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "frobenius");
    Rational s;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (!ea[i].is_zero() && !eb[i].is_zero()) s.add_product(ea[i], eb[i]);
    return s;
}

// ---------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(const Matrix& dense) : cols_(dense.cols()), data_(dense.rows()) {
    for (std::size_t i = 0; i < dense.rows(); ++i)
        for (std::size_t j = 0; j < dense.cols(); ++j)
            if (!dense(i, j).is_zero()) data_[i].emplace_back(j, dense(i, j));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
    return m;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : Rational();
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
    if (c >= cols_) throw std::out_of_range("SparseMatrix::set: column out of range");
    auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (value.is_zero())
            row.erase(it);
        else
            it->second = value;
    } else if (!value.is_zero()) {
        row.insert(it, Entry{c, value});
    }
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [c, v] : data_[i]) m(i, c) = v;
    return m;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// a*x + b*y over sorted sparse rows.
SparseRow combine(const Rational& a, const SparseRow& x, const Rational& b, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, b * y[j].second);
            ++j;
        } else {
            Rational v = a * x[i].second;
            v.add_product(b, y[j].second);
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& rhs) {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) throw std::invalid_argument("SparseMatrix +: shape mismatch");
    for (std::size_t i = 0; i < rows(); ++i) data_[i] = combine(1, data_[i], 1, rhs.data_[i]);
    return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& rhs) {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) throw std::invalid_argument("SparseMatrix -: shape mismatch");
    for (std::size_t i = 0; i < rows(); ++i) data_[i] = combine(1, data_[i], -1, rhs.data_[i]);
    return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& s) {
    if (s.is_zero()) {
        for (auto& r : data_) r.clear();
        return *this;
    }
    for (auto& r : data_)
        for (auto& e : r) e.second *= s;
    return *this;
}

SparseMatrix SparseMatrix::operator-() const {
    SparseMatrix out = *this;
    out *= -1;
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("SparseMatrix *: dimension mismatch");
    SparseMatrix out(a.rows(), b.cols_);
    std::vector<Rational> acc(b.cols_);
    std::vector<std::size_t> touched;
    std::vector<char> seen(b.cols_, 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        touched.clear();
        for (const auto& [k, aik] : a.data_[i])
            for (const auto& [j, bkj] : b.data_[k]) {
                if (!seen[j]) {
                    seen[j] = 1;
                    touched.push_back(j);
                }
                acc[j].add_product(aik, bkj);
            }
        std::sort(touched.begin(), touched.end());
        auto& row = out.data_[i];
        for (std::size_t j : touched) {
            if (!acc[j].is_zero()) row.emplace_back(j, acc[j]);
            acc[j] = Rational();
            seen[j] = 0;
        }
    }
    return out;
}

SparseMatrix transpose(const SparseMatrix& a) {
    SparseMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [c, v] : a.row(i)) t.set(c, i, v);
    return t;
}

std::vector<Rational> mat_vec(const SparseMatrix& a, std::span<const Rational> v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [c, x] : a.row(i)) out[i].add_product(x, v[c]);
    return out;
}

bool is_skew(const SparseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("is_skew: matrix is not square");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [c, v] : a.row(i))
            if (a.at(c, i) != -v) return false;
    return true;
}

bool is_identity(const SparseMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto& r = a.row(i);
        if (r.size() != 1 || r[0].first != i || r[0].second != Rational(1)) return false;
    }
    return true;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix block_diagonal(const SparseMatrix& a, std::size_t copies) {
    SparseMatrix out(a.rows() * copies, a.cols() * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (const auto& [j, v] : a.row(i)) out.set(c * a.rows() + i, c * a.cols() + j, v);
    return out;
}

// ------------------------------------------------------------- SpanBasis

namespace {

// Divides by the content so the row is a primitive integer vector with a
// positive leading entry.
void make_primitive(SparseRow& v) {
    if (v.empty()) return;
    mpz_class lcm_den = 1;
    for (const auto& [c, x] : v) {
        if (!x.is_integer()) {
            mpz_class d = x.denominator();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        }
    }
    if (lcm_den != 1) {
        Rational s{lcm_den};
        for (auto& e : v) e.second *= s;
    }
    Rational g;
    for (const auto& e : v) {
        g = gcd(g, e.second);
        if (g == Rational(1)) break;
    }
    if (v.front().second.sign() < 0) g = -g;
    if (g != Rational(1))
        for (auto& e : v) e.second /= g;
}

const Rational* find_entry(const SparseRow& v, std::size_t col) {
    auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != v.end() && it->first == col) ? &it->second : nullptr;
}

} // namespace

SpanBasis::Row SpanBasis::reduce(Row v) const {
    std::erase_if(v, [](const auto& e) { return e.second.is_zero(); });
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [c, x] : v)
        if (c >= dim_) throw std::out_of_range("SpanBasis: coordinate out of range");
    for (std::size_t k = 0; k < rows_.size() && !v.empty(); ++k) {
        const Rational* hit = find_entry(v, pivots_[k]);
        if (!hit) continue;
        const Rational lead = *hit;
        const Rational& p = rows_[k].front().second;
        v = combine(p, v, -lead, rows_[k]);
        make_primitive(v);
    }
    return v;
}

bool SpanBasis::contains(Row v) const { return reduce(std::move(v)).empty(); }

bool SpanBasis::insert(Row v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    make_primitive(v);
    const std::size_t pivot = v.front().first;
    const Rational& lead = v.front().second;
    for (auto& row : rows_) {
        const Rational* hit = find_entry(row, pivot);
        if (!hit) continue;
        const Rational x = *hit;
        row = combine(lead, row, -x, v);
        make_primitive(row);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

// ------------------------------------------------------- Lie closure

namespace {

SparseRow flatten(const SparseMatrix& m) {
    SparseRow v;
    v.reserve(m.nonzeros());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [c, x] : m.row(i)) v.emplace_back(i * m.cols() + c, x);
    return v;
}

} // namespace

std::size_t lie_closure_dim(std::span<const SparseMatrix> generators, std::size_t max_dim) {
    if (generators.empty()) return 0;
    const std::size_t n = generators.front().rows();
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("lie_closure_dim: generators differ in shape");
        if (!is_skew(g)) throw std::invalid_argument("lie_closure_dim: generator is not skew");
    }
    SpanBasis basis(n * n);
    std::vector<SparseMatrix> elems;
    auto add = [&](SparseMatrix m) {
        if (basis.insert(flatten(m))) {
            elems.push_back(std::move(m));
            if (elems.size() > max_dim)
                throw std::runtime_error("lie_closure_dim: span exceeds safety bound " + std::to_string(max_dim));
        }
    };
    for (const auto& g : generators) add(g);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) add(commutator(elems[i], elems[j]));
    return elems.size();
}

std::size_t lie_closure_dim(std::span<const Matrix> generators, std::size_t max_dim) {
    std::vector<SparseMatrix> sparse;
    sparse.reserve(generators.size());
    for (const auto& g : generators) sparse.emplace_back(g);
    return lie_closure_dim(std::span<const SparseMatrix>(sparse), max_dim);
}

} // namespace octoforms
