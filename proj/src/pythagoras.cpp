// SPDX-License-Identifier: MIT
#include "cubmcf/pythagoras.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "cubmcf/enumerate.hpp"

namespace cubmcf {

SquareSet squares_below(const Order& o, const AlgInt& gamma) {
    if (gamma.is_zero() || !o.totally_positive(gamma))
        throw Error(Errc::NotTotallyPositive, gamma.str() + " is not totally positive");
    std::array<Rat, 3> lo, hi;
    for (int i = 0; i < 3; ++i) {
        hi[i] = sqrt_upper(o.embed(gamma, i).hi);
        lo[i] = -hi[i];
    }
    std::vector<std::pair<AlgInt, AlgInt>> found;  // (square, root)
    enumerate_box(o, lo, hi, [&](const AlgInt& w) {
        if (w.is_zero()) return true;
        int lead = w[0] != 0 ? sgn(w[0]) : w[1] != 0 ? sgn(w[1]) : sgn(w[2]);
        if (lead < 0) return true;
        AlgInt sq = o.sqr(w);
        if (o.totally_le(sq, gamma)) found.emplace_back(sq, w);
        return true;
    });
    std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
        Int tx = o.trace(x.first), ty = o.trace(y.first);
        if (tx != ty) return tx > ty;
        return x.first < y.first;
    });
    SquareSet out{gamma, {}, {}};
    for (auto& [sq, w] : found) {
        out.squares.push_back(sq);
        out.roots.push_back(w);
    }
    return out;
}

bool verify_representation(const Order& o, const AlgInt& gamma, const std::vector<AlgInt>& parts) {
    AlgInt sum(0);
    for (const auto& w : parts) sum += o.sqr(w);
    return sum == gamma;
}

namespace {

class SquareSearch {
public:
    SquareSearch(const Order& o, const SquareSet& set) : o_(o), sq_(set.squares) {
        for (const auto& s : sq_) tr_.push_back(o.trace(s));
    }

    /// Decomposition of rem into at most `depth` squares with indices >= start.
    bool find(const AlgInt& rem, std::size_t start, int depth, std::vector<AlgInt>& path) {
        if (rem.is_zero()) return true;
        if (depth == 0 || start >= sq_.size()) return false;
        // squares are sorted by descending trace
        if (Int(depth) * tr_[start] < o_.trace(rem)) return false;
        auto key = std::make_tuple(rem, start, depth);
        if (failed_.count(key)) return false;
        for (std::size_t i = start; i < sq_.size(); ++i) {
            if (!o_.totally_le(sq_[i], rem)) continue;
            path.push_back(sq_[i]);
            if (find(rem - sq_[i], i, depth - 1, path)) return true;
            path.pop_back();
        }
        failed_.insert(key);
        return false;
    }

    void all_exact(const AlgInt& rem, std::size_t start, int depth, std::vector<AlgInt>& path,
                   std::vector<std::vector<AlgInt>>& out) {
        if (depth == 0) {
            if (rem.is_zero()) out.push_back(path);
            return;
        }
        if (rem.is_zero()) return;
        for (std::size_t i = start; i < sq_.size(); ++i) {
            if (!o_.totally_le(sq_[i], rem)) continue;
            path.push_back(sq_[i]);
            all_exact(rem - sq_[i], i, depth - 1, path, out);
            path.pop_back();
        }
    }

    Int min_trace() const { return tr_.empty() ? Int(1) : tr_.back(); }

private:
    const Order& o_;
    const std::vector<AlgInt>& sq_;
    std::vector<Int> tr_;
    std::set<std::tuple<AlgInt, std::size_t, int>> failed_;
};

}  // namespace

MinSquaresResult min_squares(const Order& o, const SquareSet& set, int cap) {
    SquareSearch search(o, set);
    MinSquaresResult res;
    for (int d = 1; d <= cap; ++d) {
        std::vector<AlgInt> path;
        if (search.find(set.target, 0, d, path)) {
            res.outcome = SquaresOutcome::Found;
            res.count = d;
            res.decomposition = std::move(path);
            return res;
        }
    }
    // every square has trace >= the smallest one, which bounds the length
    Int limit = o.trace(set.target) / search.min_trace();
    std::vector<AlgInt> path;
    bool any = search.find(set.target, 0, static_cast<int>(limit.get_si()), path);
    res.outcome = any ? SquaresOutcome::MoreThanCap : SquaresOutcome::NoRepresentation;
    return res;
}

std::vector<std::vector<AlgInt>> decompositions_of_length(const Order& o, const SquareSet& set, int count) {
    SquareSearch search(o, set);
    std::vector<std::vector<AlgInt>> out;
    std::vector<AlgInt> path;
    search.all_exact(set.target, 0, count, path, out);
    return out;
}

int pythagoras_lower_bound(const Order& o, const AlgInt& gamma, const std::vector<AlgInt>& witness, int cap) {
    if (!verify_representation(o, gamma, witness))
        throw Error(Errc::DecompositionNotFound, "witness squares do not sum to " + gamma.str());
    auto res = min_squares(o, gamma, cap);
    if (res.outcome != SquaresOutcome::Found)
        throw Error(Errc::DecompositionNotFound, "no decomposition within the cap");
    return res.count;
}

}  // namespace cubmcf
