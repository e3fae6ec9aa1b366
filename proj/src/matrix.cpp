#include "cendiv/matrix.hpp"
#include "cendiv/errors.hpp"

namespace cendiv {

namespace {

// Over Q, rescale a row to coprime integers: entries times lcm(dens)/gcd(nums).
// Bounds the growth of intermediate values during elimination.
void normalize_row_q(const Field& f, std::vector<FieldElem>& e, int n, int row) {
    if (!f.is_rationals()) return;
    BigInt den_lcm = 1, num_gcd = 0;
    for (int j = 0; j < n; ++j) {
        const Rational& q = std::get<Rational>(e[static_cast<std::size_t>(row) * n + j]);
        if (q == 0) continue;
        den_lcm = lcm(den_lcm, BigInt(q.get_den()));
        num_gcd = gcd(num_gcd, BigInt(q.get_num()));
    }
    if (num_gcd == 0) return;
    Rational scale = make_rational(den_lcm, num_gcd);
    if (scale == 1) return;
    for (int j = 0; j < n; ++j) {
        auto& cell = e[static_cast<std::size_t>(row) * n + j];
        cell = Rational(std::get<Rational>(cell) * scale);
    }
}

} // namespace

MatrixExact::MatrixExact(Field field, int n) : field_(std::move(field)), n_(n) {
    if (n < 1)
        throw precondition_error("matrix dimension must be >= 1");
    e_.assign(static_cast<std::size_t>(n) * n, field_.zero());
}

MatrixExact MatrixExact::identity(const Field& f, int n) {
    MatrixExact m(f, n);
    for (int i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

MatrixExact MatrixExact::from_entries(const Field& f, int n, std::vector<FieldElem> row_major) {
    if (static_cast<std::size_t>(n) * n != row_major.size())
        throw precondition_error("matrix entry count does not match the dimension");
    MatrixExact m(f, n);
    m.e_ = std::move(row_major);
    return m;
}

MatrixExact MatrixExact::companion(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw precondition_error("companion matrix requires a monic polynomial of degree >= 1");
    const Field& fld = f.field();
    int n = f.degree();
    MatrixExact m(fld, n);
    for (int i = 1; i < n; ++i) m.set(i, i - 1, fld.one());
    for (int i = 0; i < n; ++i) m.set(i, n - 1, fld.neg(f.coeff(i)));
    return m;
}

MatrixExact MatrixExact::block_diag(const std::vector<MatrixExact>& blocks) {
    if (blocks.empty())
        throw precondition_error("block_diag of an empty list");
    int n = 0;
    for (const auto& b : blocks) {
        require_same_field(blocks.front().field(), b.field(), "block_diag");
        n += b.dim();
    }
    MatrixExact m(blocks.front().field(), n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j) m.set(off + i, off + j, b.at(i, j));
        off += b.dim();
    }
    return m;
}

MatrixExact MatrixExact::operator*(const MatrixExact& o) const {
    require_same_field(field_, o.field_, "matrix mul");
    if (n_ != o.n_)
        throw precondition_error("matrix dimensions differ");
    MatrixExact r(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const FieldElem& a = at(i, k);
            if (field_.is_zero(a)) continue;
            for (int j = 0; j < n_; ++j) {
                const FieldElem& b = o.at(k, j);
                if (field_.is_zero(b)) continue;
                r.set(i, j, field_.add(r.at(i, j), field_.mul(a, b)));
            }
        }
    return r;
}

MatrixExact MatrixExact::operator+(const MatrixExact& o) const {
    require_same_field(field_, o.field_, "matrix add");
    if (n_ != o.n_)
        throw precondition_error("matrix dimensions differ");
    MatrixExact r(field_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(e_[i], o.e_[i]);
    return r;
}

MatrixExact MatrixExact::operator-(const MatrixExact& o) const {
    require_same_field(field_, o.field_, "matrix sub");
    if (n_ != o.n_)
        throw precondition_error("matrix dimensions differ");
    MatrixExact r(field_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.sub(e_[i], o.e_[i]);
    return r;
}

bool MatrixExact::operator==(const MatrixExact& o) const {
    if (field_ != o.field_ || n_ != o.n_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!field_.eq(e_[i], o.e_[i])) return false;
    return true;
}

MatrixExact MatrixExact::transpose() const {
    MatrixExact r(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.set(j, i, at(i, j));
    return r;
}

MatrixExact MatrixExact::scaled(const FieldElem& c) const {
    MatrixExact r(field_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.mul(e_[i], c);
    return r;
}

bool MatrixExact::is_zero() const {
    for (const auto& c : e_)
        if (!field_.is_zero(c)) return false;
    return true;
}

int MatrixExact::rank() const {
    const Field& f = field_;
    std::vector<FieldElem> a = e_;
    for (int r = 0; r < n_; ++r) normalize_row_q(f, a, n_, r);
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int piv = -1;
        for (int r = rank; r < n_; ++r)
            if (!f.is_zero(a[static_cast<std::size_t>(r) * n_ + col])) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < n_; ++j)
            std::swap(a[static_cast<std::size_t>(piv) * n_ + j],
                      a[static_cast<std::size_t>(rank) * n_ + j]);
        FieldElem inv = f.inv(a[static_cast<std::size_t>(rank) * n_ + col]);
        for (int j = col; j < n_; ++j) {
            auto& cell = a[static_cast<std::size_t>(rank) * n_ + j];
            cell = f.mul(cell, inv);
        }
        for (int r = rank + 1; r < n_; ++r) {
            FieldElem c = a[static_cast<std::size_t>(r) * n_ + col];
            if (f.is_zero(c)) continue;
            for (int j = col; j < n_; ++j) {
                auto& cell = a[static_cast<std::size_t>(r) * n_ + j];
                cell = f.sub(cell, f.mul(c, a[static_cast<std::size_t>(rank) * n_ + j]));
            }
            normalize_row_q(f, a, n_, r);
        }
        ++rank;
    }
    return rank;
}

MatrixExact MatrixExact::inverse() const {
    const Field& f = field_;
    // Gauss-Jordan on [A | I]
    int n = n_;
    std::vector<FieldElem> a = e_;
    MatrixExact inv = identity(f, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!f.is_zero(a[static_cast<std::size_t>(r) * n + col])) { piv = r; break; }
        if (piv < 0)
            throw precondition_error("matrix is singular");
        for (int j = 0; j < n; ++j) {
            std::swap(a[static_cast<std::size_t>(piv) * n + j],
                      a[static_cast<std::size_t>(col) * n + j]);
            FieldElem tmp = inv.at(piv, j);
            inv.set(piv, j, inv.at(col, j));
            inv.set(col, j, std::move(tmp));
        }
        FieldElem pinv = f.inv(a[static_cast<std::size_t>(col) * n + col]);
        for (int j = 0; j < n; ++j) {
            auto& cell = a[static_cast<std::size_t>(col) * n + j];
            cell = f.mul(cell, pinv);
            inv.set(col, j, f.mul(inv.at(col, j), pinv));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            FieldElem c = a[static_cast<std::size_t>(r) * n + col];
            if (f.is_zero(c)) continue;
            for (int j = 0; j < n; ++j) {
                auto& cell = a[static_cast<std::size_t>(r) * n + j];
                cell = f.sub(cell, f.mul(c, a[static_cast<std::size_t>(col) * n + j]));
                inv.set(r, j, f.sub(inv.at(r, j), f.mul(c, inv.at(col, j))));
            }
        }
    }
    return inv;
}

int nullity(const MatrixExact& m) { return m.dim() - m.rank(); }

Poly char_poly(const MatrixExact& m) {
    const Field& f = m.field();
    const int n = m.dim();

    // Hessenberg reduction by similarity
    std::vector<std::vector<FieldElem>> h(n, std::vector<FieldElem>(n, f.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = m.at(i, j);

    for (int col = 0; col + 2 < n; ++col) {
        int piv = -1;
        for (int r = col + 1; r < n; ++r)
            if (!f.is_zero(h[r][col])) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != col + 1) {
            std::swap(h[piv], h[col + 1]);
            for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][col + 1]);
        }
        FieldElem pinv = f.inv(h[col + 1][col]);
        for (int r = col + 2; r < n; ++r) {
            if (f.is_zero(h[r][col])) continue;
            FieldElem u = f.mul(h[r][col], pinv);
            for (int j = 0; j < n; ++j) h[r][j] = f.sub(h[r][j], f.mul(u, h[col + 1][j]));
            // the paired column operation keeps the transform a similarity
            for (int i = 0; i < n; ++i) h[i][col + 1] = f.add(h[i][col + 1], f.mul(u, h[i][r]));
        }
    }

    // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_i h_ik (prod_j h_{j,j-1}) p_{i-1}(x)
    std::vector<Poly> p;
    p.push_back(Poly::one(f));
    const Poly x = Poly::x(f);
    for (int k = 1; k <= n; ++k) {
        Poly pk = (x - Poly::constant(f, h[k - 1][k - 1])) * p[k - 1];
        FieldElem sub_prod = f.one();
        for (int i = k - 1; i >= 1; --i) {
            sub_prod = f.mul(sub_prod, h[i][i - 1]);
            FieldElem c = f.mul(h[i - 1][k - 1], sub_prod);
            if (!f.is_zero(c)) pk = pk - p[i - 1].scaled(c);
        }
        p.push_back(std::move(pk));
    }
    return p[n];
}

MatrixExact eval_poly_at_matrix(const Poly& f, const MatrixExact& m) {
    require_same_field(f.field(), m.field(), "eval_poly_at_matrix");
    const Field& fld = m.field();
    MatrixExact acc(fld, m.dim());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m;
        FieldElem c = f.coeff(i);
        if (!fld.is_zero(c))
            acc = acc + MatrixExact::identity(fld, m.dim()).scaled(c);
    }
    return acc;
}

} // namespace cendiv
