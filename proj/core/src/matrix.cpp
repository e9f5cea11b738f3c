#include "waring/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace waring {

Matrix::Matrix(RingPtr ring, unsigned n) : ring_(std::move(ring)), n_(n), a_(size_t(n) * n, 0) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

Matrix Matrix::identity(RingPtr ring, unsigned n) {
    Matrix m(std::move(ring), n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, m.ring_->one());
    return m;
}

Matrix Matrix::companion(const RingPtr& ring, u64 t, u64 delta) {
    Matrix m(ring, 2);
    m.set(0, 0, t);
    m.set(0, 1, delta);
    m.set(1, 0, ring->neg(ring->one()));
    return m;
}

Matrix Matrix::general_companion(const RingPtr& ring, const std::vector<u64>& first_row) {
    if (first_row.empty()) throw std::invalid_argument("companion row must be nonempty");
    unsigned n = (unsigned)first_row.size();
    Matrix m(ring, n);
    for (unsigned j = 0; j < n; ++j) m.set(0, j, first_row[j]);
    for (unsigned i = 1; i < n; ++i) m.set(i, i - 1, ring->neg(ring->one()));
    return m;
}

Matrix Matrix::add(const Matrix& o) const {
    if (n_ != o.n_ || !ring_->same_ring(*o.ring_)) throw std::invalid_argument("matrix shape/ring mismatch");
    Matrix r(ring_, n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_->add(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    if (n_ != o.n_ || !ring_->same_ring(*o.ring_)) throw std::invalid_argument("matrix shape/ring mismatch");
    Matrix r(ring_, n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_->sub(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (n_ != o.n_ || !ring_->same_ring(*o.ring_)) throw std::invalid_argument("matrix shape/ring mismatch");
    Matrix r(ring_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned k = 0; k < n_; ++k) {
            u64 aik = at(i, k);
            if (aik == 0) continue;
            for (unsigned j = 0; j < n_; ++j)
                r.a_[i * n_ + j] = ring_->add(r.a_[i * n_ + j], ring_->mul(aik, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::pow(u64 k) const {
    Matrix result = identity(ring_, n_);
    Matrix base = *this;
    while (k) {
        if (k & 1) result = result.mul(base);
        k >>= 1;
        if (k) base = base.mul(base);
    }
    return result;
}

u64 Matrix::trace() const {
    u64 t = 0;
    for (unsigned i = 0; i < n_; ++i) t = ring_->add(t, at(i, i));
    return t;
}

u64 Matrix::det() const {
    const Ring& R = *ring_;
    switch (n_) {
        case 1:
            return at(0, 0);
        case 2:
            return R.sub(R.mul(at(0, 0), at(1, 1)), R.mul(at(0, 1), at(1, 0)));
        case 3: {
            u64 a = at(0, 0), b = at(0, 1), c = at(0, 2);
            u64 d = at(1, 0), e = at(1, 1), f = at(1, 2);
            u64 g = at(2, 0), h = at(2, 1), i = at(2, 2);
            u64 s = R.mul(a, R.sub(R.mul(e, i), R.mul(f, h)));
            s = R.sub(s, R.mul(b, R.sub(R.mul(d, i), R.mul(f, g))));
            s = R.add(s, R.mul(c, R.sub(R.mul(d, h), R.mul(e, g))));
            return s;
        }
        default:
            throw std::domain_error("determinant implemented for n <= 3 only");
    }
}

Matrix Matrix::embed(unsigned n) const {
    if (n < n_) throw std::invalid_argument("embedding must not shrink the matrix");
    Matrix r(ring_, n);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) r.set(i, j, at(i, j));
    return r;
}

Matrix Matrix::parse(const RingPtr& ring, std::string_view text) {
    auto split = [](std::string_view s, char sep) {
        std::vector<std::string> out;
        std::string cur;
        int depth = 0;
        for (char c : s) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == sep && depth == 0) {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(cur);
        return out;
    };
    auto rows = split(text, ';');
    if (rows.size() < 2) throw std::invalid_argument("matrix text must be 'n; row; row; ...'");
    unsigned n = (unsigned)std::stoul(rows[0]);
    if (rows.size() != size_t(n) + 1) throw std::invalid_argument("matrix text has wrong row count");
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i) {
        auto cells = split(rows[i + 1], ',');
        if (cells.size() != n) throw std::invalid_argument("matrix row has wrong entry count");
        for (unsigned j = 0; j < n; ++j) m.set(i, j, ring->parse_element(cells[j]));
    }
    return m;
}

std::string Matrix::to_text() const {
    std::ostringstream os;
    os << n_;
    for (unsigned i = 0; i < n_; ++i) {
        os << "; ";
        for (unsigned j = 0; j < n_; ++j) {
            if (j) os << ",";
            os << ring_->to_string(at(i, j));
        }
    }
    return os.str();
}

}  // namespace waring
