#pragma once

#include <utility>
#include <vector>

#include "oct/rational.hpp"
#include "oct/vertex_set.hpp"

namespace oct {

// Per-vertex exact rational weights. Immutable after construction; shared
// freely across solver calls.
class Weights {
public:
    Weights() = default;
    explicit Weights(std::vector<Rational> values) : values_(std::move(values)) {}

    static Weights unit(int n) { return Weights(std::vector<Rational>(n, Rational(1))); }

    int size() const { return static_cast<int>(values_.size()); }
    const Rational& operator[](int v) const { return values_[v]; }

    Rational sum(const VertexSet& s) const {
        Rational total;
        s.for_each([&](int v) { total += values_[v]; });
        return total;
    }

    bool all_positive() const {
        for (const Rational& w : values_)
            if (!w.is_positive()) return false;
        return true;
    }

    VertexSet positive_support() const {
        VertexSet s(size());
        for (int v = 0; v < size(); ++v)
            if (values_[v].is_positive()) s.set(v);
        return s;
    }

    // Weights for an induced subgraph: new id i carries the weight of
    // new_to_old[i].
    Weights restricted(const std::vector<int>& new_to_old) const {
        std::vector<Rational> out;
        out.reserve(new_to_old.size());
        for (int old_id : new_to_old) out.push_back(values_[old_id]);
        return Weights(std::move(out));
    }

private:
    std::vector<Rational> values_;
};

}  // namespace oct
