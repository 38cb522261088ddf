#include "rankwl/cutrank.hpp"

#include <stdexcept>

namespace rankwl {

BitMatrix cut_matrix(const Graph& g, const VertexSet& x) {
    for (int v : x)
        if (v >= g.size()) throw std::invalid_argument("cut_matrix: member out of range");
    VertexSet rest = x.complement(g.size());
    BitMatrix m(x.size(), rest.size());
    for (int r = 0; r < x.size(); ++r)
        for (int c = 0; c < rest.size(); ++c)
            if (g.adjacent(x[r], rest[c])) m.set(r, c, true);
    return m;
}

int cut_rank(const Graph& g, const VertexSet& x) {
    return rank_f2(cut_matrix(g, x));
}

} // namespace rankwl
