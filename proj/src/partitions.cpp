#include "jtsnf/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jtsnf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text == "-" || text.empty()) return Partition();
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition syntax: '" + text + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("bad partition syntax: '" + text + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("bad partition syntax: '" + text + "'");
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape: inner not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
    return out;
}

std::string SkewShape::str() const { return outer_.str() + "/" + inner_.str(); }

std::vector<int> DiagonalHook::contents() const {
    std::vector<int> out;
    out.reserve(cells.size());
    for (const auto& c : cells) out.push_back(c.content());
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    int cols = lambda.part(1);
    out.reserve(static_cast<size_t>(cols));
    for (int j = 1; j <= cols; ++j) {
        int count = 0;
        for (int i = 1; i <= lambda.length(); ++i)
            if (lambda.part(i) >= j) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

int rank(const Partition& lambda) {
    int r = 0;
    while (lambda.part(r + 1) >= r + 1) ++r;
    return r;
}

DiagonalHook diagonal_hook(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("hook index must be >= 1");
    DiagonalHook hook;
    hook.index = k;
    if (lambda.part(k) < k) return hook;  // below the Durfee square: empty
    int leg = conjugate(lambda).part(k);
    for (int i = leg; i > k; --i) hook.cells.push_back({i, k});  // contents k-i < 0, ascending
    for (int j = k; j <= lambda.part(k); ++j) hook.cells.push_back({k, j});
    return hook;
}

Partition hook_union(const Partition& lambda, int t, int k) {
    if (t < lambda.length()) throw std::invalid_argument("t below length");
    if (k < 1 || k > t) throw std::invalid_argument("hook count out of range");
    int offset = t - k;
    std::vector<int> parts;
    for (int i = offset + 1; i <= lambda.length(); ++i) {
        int p = lambda.part(i) - offset;
        if (p <= 0) break;
        parts.push_back(p);
    }
    return Partition(std::move(parts));
}

BigInt ssyt_count(const SkewShape& shape, int max_entry) {
    if (max_entry < 0) throw std::invalid_argument("entry bound must be >= 0");
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    int rows = outer.length();
    int cols = outer.part(1);
    if (shape.size() == 0) return 1;
    if (max_entry == 0) return 0;

    // visit cells column by column, top to bottom within a column
    std::vector<Cell> order;
    for (int j = 1; j <= cols; ++j)
        for (int i = 1; i <= rows; ++i)
            if (j > inner.part(i) && j <= outer.part(i)) order.push_back({i, j});

    std::vector<std::vector<int>> fill(static_cast<size_t>(rows) + 1,
                                       std::vector<int>(static_cast<size_t>(cols) + 1, 0));
    BigInt total = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            total += 1;
            return;
        }
        auto [i, j] = order[idx];
        int lo = 1;
        if (j - 1 >= 1 && j - 1 > inner.part(i) && fill[i][j - 1] > 0)
            lo = std::max(lo, fill[i][j - 1]);  // weak increase along the row
        if (i - 1 >= 1 && j > inner.part(i - 1) && j <= outer.part(i - 1))
            lo = std::max(lo, fill[i - 1][j] + 1);  // strict increase down the column
        for (int v = lo; v <= max_entry; ++v) {
            fill[i][j] = v;
            rec(idx + 1);
        }
        fill[i][j] = 0;
    };
    rec(0);
    return total;
}

long lr_coefficient(const Partition& rho, const Partition& sigma, const Partition& tau) {
    if (!rho.contains(sigma)) return 0;
    if (rho.weight() != sigma.weight() + tau.weight()) return 0;
    if (rho == sigma) return tau.empty() ? 1 : 0;

    // reverse reading word order: rows top to bottom, right to left within a row
    std::vector<Cell> order;
    for (int i = 1; i <= rho.length(); ++i)
        for (int j = rho.part(i); j > sigma.part(i); --j) order.push_back({i, j});

    int m = tau.length();
    int rows = rho.length();
    int cols = rho.part(1);
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows) + 1,
                                       std::vector<int>(static_cast<size_t>(cols) + 1, 0));
    std::vector<int> used(static_cast<size_t>(m) + 2, 0);
    long total = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            total += 1;  // content bounds plus full size force used == tau exactly
            return;
        }
        auto [i, j] = order[idx];
        for (int v = 1; v <= m; ++v) {
            if (used[v] + 1 > tau.part(v)) continue;            // content cap
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;   // lattice prefix
            if (j + 1 <= rho.part(i) && v > fill[i][j + 1]) continue;  // row weak
            if (i > 1 && j > sigma.part(i - 1) && j <= rho.part(i - 1) && v <= fill[i - 1][j])
                continue;  // column strict
            fill[i][j] = v;
            ++used[v];
            rec(idx + 1);
            --used[v];
        }
        fill[i][j] = 0;
    };
    rec(0);
    return total;
}

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    if (m < 0) return out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int m = 1; m <= max_weight; ++m) {
        auto pm = partitions_of(m);
        out.insert(out.end(), pm.begin(), pm.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        out.emplace_back(Partition(cur));
        if (row > outer.length()) return;
        int cap = std::min(maxpart, outer.part(row));
        for (int p = cap; p >= 1; --p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(1, outer.part(1) == 0 ? 0 : outer.part(1));
    return out;
}

}  // namespace jtsnf
