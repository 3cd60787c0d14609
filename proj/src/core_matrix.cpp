#include "motivic/core_matrix.hpp"

#include <json.hpp>
#include <sstream>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

const char* basis_name(Basis b) {
    static constexpr const char* names[kCoreDim] = {"T1", "Tm1", "Tp", "Tm",
                                                    "TB", "S2",  "Sm2", "S2Sm2"};
    return names[int(b)];
}

const std::array<Basis, kCoreDim>& all_basis() {
    static const std::array<Basis, kCoreDim> all = {
        Basis::T1, Basis::Tm1, Basis::Tp, Basis::Tm,
        Basis::TB, Basis::S2,  Basis::Sm2, Basis::S2Sm2};
    return all;
}

CoreVector CoreVector::unit(Basis b) {
    CoreVector v;
    v[b] = Scalar(1);
    return v;
}

CoreVector operator*(const Scalar& s, const CoreVector& v) {
    CoreVector r;
    for (int i = 0; i < kCoreDim; ++i) r.at(i) = s * v.at(i);
    return r;
}

CoreMatrix CoreMatrix::identity() {
    CoreMatrix m;
    for (int i = 0; i < kCoreDim; ++i) m.at(i, i) = Scalar(1);
    return m;
}

CoreVector operator*(const CoreMatrix& m, const CoreVector& v) {
    CoreVector r;
    for (int i = 0; i < kCoreDim; ++i) {
        Scalar acc;
        for (int k = 0; k < kCoreDim; ++k) {
            if (m.at(i, k).is_zero() || v.at(k).is_zero()) continue;
            acc += m.at(i, k) * v.at(k);
        }
        r.at(i) = acc;
    }
    return r;
}

CoreMatrix operator*(const CoreMatrix& a, const CoreMatrix& b) {
    CoreMatrix r;
    for (int i = 0; i < kCoreDim; ++i)
        for (int j = 0; j < kCoreDim; ++j) {
            Scalar acc;
            for (int k = 0; k < kCoreDim; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc += a.at(i, k) * b.at(k, j);
            }
            r.at(i, j) = acc;
        }
    return r;
}

CoreMatrix operator*(const Scalar& s, const CoreMatrix& m) {
    CoreMatrix r;
    for (int i = 0; i < kCoreDim; ++i)
        for (int j = 0; j < kCoreDim; ++j) r.at(i, j) = s * m.at(i, j);
    return r;
}

CoreMatrix CoreMatrix::pow(unsigned n) const {
    CoreMatrix acc = identity(), base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

CoreMatrix CoreMatrix::inverse() const {
    CoreMatrix a = *this, inv = identity();
    for (int col = 0; col < kCoreDim; ++col) {
        int piv = -1;
        for (int r = col; r < kCoreDim; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw math_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < kCoreDim; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar d = a.at(col, col).inverse();
        for (int j = 0; j < kCoreDim; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int r = 0; r < kCoreDim; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (int j = 0; j < kCoreDim; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool CoreMatrix::commutes_with(const CoreMatrix& o) const {
    return (*this) * o == o * (*this);
}

std::string CoreMatrix::render(Format f, const std::string& name) const {
    switch (f) {
        case Format::Text: {
            std::ostringstream os;
            if (!name.empty()) os << name << " =\n";
            // column widths for alignment
            std::array<size_t, kCoreDim> w{};
            std::array<std::array<std::string, kCoreDim>, kCoreDim> cells;
            for (int i = 0; i < kCoreDim; ++i)
                for (int j = 0; j < kCoreDim; ++j) {
                    cells[i][j] = at(i, j).render(Format::Text);
                    w[j] = std::max(w[j], cells[i][j].size());
                }
            for (int i = 0; i < kCoreDim; ++i) {
                os << "[ ";
                for (int j = 0; j < kCoreDim; ++j) {
                    os << std::string(w[j] - cells[i][j].size(), ' ') << cells[i][j];
                    os << (j + 1 < kCoreDim ? "  " : " ");
                }
                os << "]\n";
            }
            return os.str();
        }
        case Format::Latex: {
            std::ostringstream os;
            if (!name.empty()) os << name << " = ";
            os << "\\begin{pmatrix}\n";
            for (int i = 0; i < kCoreDim; ++i) {
                for (int j = 0; j < kCoreDim; ++j) {
                    os << at(i, j).render(Format::Latex);
                    if (j + 1 < kCoreDim) os << " & ";
                }
                os << (i + 1 < kCoreDim ? " \\\\\n" : "\n");
            }
            os << "\\end{pmatrix}";
            return os.str();
        }
        case Format::Json: {
            nlohmann::ordered_json j;
            if (!name.empty()) j["op"] = name;
            auto basis = nlohmann::ordered_json::array();
            for (Basis b : all_basis()) basis.push_back(basis_name(b));
            j["basis"] = basis;
            auto rows = nlohmann::ordered_json::array();
            for (int i = 0; i < kCoreDim; ++i) {
                auto row = nlohmann::ordered_json::array();
                for (int jj = 0; jj < kCoreDim; ++jj)
                    row.push_back(nlohmann::ordered_json::parse(at(i, jj).render(Format::Json)));
                rows.push_back(row);
            }
            j["entries"] = rows;
            return j.dump();
        }
    }
    return {};
}

}  // namespace motivic
