#pragma once

// Partitions, semistandard tableaux and the type-A signature rule.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xtal {

/// Partition lambda_1 >= lambda_2 >= ... >= lambda_k >= 1.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            if (parts_[r] < 1) throw std::invalid_argument("shape parts must be positive");
            if (r > 0 && parts_[r] > parts_[r - 1])
                throw std::invalid_argument("shape parts must be weakly decreasing");
        }
    }
    Shape(std::initializer_list<int> parts) : Shape(std::vector<int>(parts)) {}

    /// rho = (r, r-1, ..., 1).
    static Shape staircase(int r) {
        std::vector<int> p;
        for (int k = r; k >= 1; --k) p.push_back(k);
        return Shape(p);
    }

    int rows() const { return static_cast<int>(parts_.size()); }
    int row_length(int r) const { return parts_.at(r); }
    int cells() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    /// Number of rows of length > c.
    int column_height(int c) const {
        int h = 0;
        while (h < rows() && parts_[h] > c) ++h;
        return h;
    }
    int columns() const { return parts_.empty() ? 0 : parts_[0]; }
    const std::vector<int>& parts() const { return parts_; }

    /// lambda padded with zeros to length n.
    std::vector<int> padded(int n) const {
        std::vector<int> p(parts_);
        p.resize(std::max<std::size_t>(p.size(), static_cast<std::size_t>(n)), 0);
        return p;
    }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Shape& s) {
    std::string out;
    for (int r = 0; r < s.rows(); ++r) {
        if (r) out += ',';
        out += std::to_string(s.row_length(r));
    }
    return out;
}

/// Address of a box: 0-based row and column.
struct CellRef {
    int row = 0;
    int col = 0;
    friend bool operator==(const CellRef&, const CellRef&) = default;
};

/// Semistandard filling, stored row-major.
class Tableau {
public:
    Tableau() = default;

    Tableau(Shape shape, std::vector<std::uint8_t> cells) : shape_(std::move(shape)), cells_(std::move(cells)) {
        if (static_cast<int>(cells_.size()) != shape_.cells())
            throw std::invalid_argument("cell count does not match shape");
        offsets_.resize(shape_.rows() + 1, 0);
        for (int r = 0; r < shape_.rows(); ++r) offsets_[r + 1] = offsets_[r] + shape_.row_length(r);
    }

    static Tableau from_rows(const std::vector<std::vector<int>>& rows) {
        std::vector<int> parts;
        std::vector<std::uint8_t> cells;
        for (const auto& row : rows) {
            parts.push_back(static_cast<int>(row.size()));
            for (int x : row) {
                if (x < 1 || x > 255) throw std::invalid_argument("tableau entry out of range");
                cells.push_back(static_cast<std::uint8_t>(x));
            }
        }
        Tableau t(Shape(parts), std::move(cells));
        if (!t.is_semistandard()) throw std::invalid_argument("filling is not semistandard");
        return t;
    }

    const Shape& shape() const { return shape_; }
    int at(int row, int col) const { return cells_[offsets_[row] + col]; }
    int at(CellRef c) const { return at(c.row, c.col); }
    void set(CellRef c, int value) { cells_[offsets_[c.row] + c.col] = static_cast<std::uint8_t>(value); }
    const std::vector<std::uint8_t>& cells() const { return cells_; }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(shape_.rows());
        for (int r = 0; r < shape_.rows(); ++r)
            for (int c = 0; c < shape_.row_length(r); ++c) out[r].push_back(at(r, c));
        return out;
    }

    int max_entry() const {
        int m = 0;
        for (auto x : cells_) m = std::max<int>(m, x);
        return m;
    }

    bool is_semistandard() const {
        for (int r = 0; r < shape_.rows(); ++r)
            for (int c = 0; c < shape_.row_length(r); ++c) {
                if (at(r, c) < 1) return false;
                if (c > 0 && at(r, c - 1) > at(r, c)) return false;
                if (r > 0 && at(r - 1, c) >= at(r, c)) return false;
            }
        return true;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.shape_ == b.shape_ && a.cells_ == b.cells_;
    }

private:
    Shape shape_;
    std::vector<std::uint8_t> cells_;
    std::vector<int> offsets_;
};

/// Reduced i-signature +^x -^y with the cell behind every surviving symbol,
/// in reading order.
struct Signature {
    std::vector<CellRef> plus;
    std::vector<CellRef> minus;

    int x() const { return static_cast<int>(plus.size()); }
    int y() const { return static_cast<int>(minus.size()); }
    std::string word() const { return std::string(plus.size(), '+') + std::string(minus.size(), '-'); }
};

/// Reading order: columns left to right, each column bottom to top. Letter i
/// reads as +, letter i+1 as -, and adjacent "-+" pairs cancel.
inline Signature i_signature(const Tableau& t, int i) {
    Signature sig;
    const Shape& sh = t.shape();
    for (int c = 0; c < sh.columns(); ++c) {
        for (int r = sh.column_height(c) - 1; r >= 0; --r) {
            const int v = t.at(r, c);
            if (v == i + 1) {
                sig.minus.push_back({r, c});
            } else if (v == i) {
                if (!sig.minus.empty())
                    sig.minus.pop_back();  // cancels with the nearest unmatched -
                else
                    sig.plus.push_back({r, c});
            }
        }
    }
    return sig;
}

/// f_i: the letter i behind the rightmost surviving + becomes i+1.
inline std::optional<Tableau> apply_f(const Tableau& t, int i) {
    auto sig = i_signature(t, i);
    if (sig.plus.empty()) return std::nullopt;
    Tableau out = t;
    out.set(sig.plus.back(), i + 1);
    return out;
}

/// e_i: the letter i+1 behind the leftmost surviving - becomes i.
inline std::optional<Tableau> apply_e(const Tableau& t, int i) {
    auto sig = i_signature(t, i);
    if (sig.minus.empty()) return std::nullopt;
    Tableau out = t;
    out.set(sig.minus.front(), i);
    return out;
}

/// Content vector (c_1, ..., c_n).
struct Weight {
    std::vector<int> content;
    friend bool operator==(const Weight&, const Weight&) = default;
};

inline Weight weight(const Tableau& t, int n) {
    Weight w{std::vector<int>(n, 0)};
    for (auto x : t.cells()) {
        if (x > n) throw std::invalid_argument("tableau entry exceeds alphabet size");
        ++w.content[x - 1];
    }
    return w;
}

/// Row j filled with the letter j.
inline Tableau highest(const Shape& shape, int n) {
    if (shape.rows() > n) throw std::invalid_argument("shape has more rows than the alphabet size");
    std::vector<std::uint8_t> cells;
    for (int r = 0; r < shape.rows(); ++r) cells.insert(cells.end(), shape.row_length(r), static_cast<std::uint8_t>(r + 1));
    return Tableau(shape, std::move(cells));
}

/// Type A_{n-1} Cartan matrix entry a_ij.
inline int cartan(int i, int j) {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
}

struct CartanMatrix {
    int rank = 0;  // n - 1
    int operator()(int i, int j) const {
        if (i < 1 || j < 1 || i > rank || j > rank) throw std::out_of_range("Cartan index out of range");
        return cartan(i, j);
    }
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, char sep) {
    std::vector<int> out;
    if (text.empty()) throw std::invalid_argument("empty list");
    std::size_t start = 0;
    while (true) {
        auto end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty() || tok.size() > 6) throw std::invalid_argument("bad integer in list");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad integer in list: '" + std::string(tok) + "'");
            v = v * 10 + (c - '0');
        }
        out.push_back(v);
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace detail

/// "4,3" -> (4,3).
inline Shape parse_shape(std::string_view text) { return Shape(detail::parse_int_list(text, ',')); }

/// "1,1,1,2/2,3,4": rows joined by '/', entries by ','.
inline Tableau parse_tableau(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::size_t start = 0;
    while (true) {
        auto end = text.find('/', start);
        if (end == std::string_view::npos) end = text.size();
        rows.push_back(detail::parse_int_list(text.substr(start, end - start), ','));
        if (end == text.size()) break;
        start = end + 1;
    }
    return Tableau::from_rows(rows);
}

inline std::string to_string(const Tableau& t) {
    std::string out;
    for (int r = 0; r < t.shape().rows(); ++r) {
        if (r) out += '/';
        for (int c = 0; c < t.shape().row_length(r); ++c) {
            if (c) out += ',';
            out += std::to_string(t.at(r, c));
        }
    }
    return out;
}

}  // namespace xtal

template <>
struct std::hash<xtal::Tableau> {
    std::size_t operator()(const xtal::Tableau& t) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : t.cells()) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};
