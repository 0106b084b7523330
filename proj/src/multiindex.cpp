#include "wicksos/multiindex.hpp"

namespace wicksos {

namespace {

void rec(std::size_t pos, unsigned left, MultiIndex& cur,
         std::vector<MultiIndex>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    // descending exponent on the leading coordinate gives lex-descending order
    for (int e = static_cast<int>(left); e >= 0; --e) {
        cur[pos] = static_cast<std::uint32_t>(e);
        rec(pos + 1, left - e, cur, out);
    }
}

}  // namespace

std::vector<MultiIndex> multiindices(std::size_t len, unsigned total) {
    std::vector<MultiIndex> out;
    MultiIndex cur(len, 0);
    rec(0, total, cur, out);
    return out;
}

}  // namespace wicksos
