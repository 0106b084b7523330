#include "wicksos/average.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>
#include <map>

#include "wicksos/linalg.hpp"

namespace wicksos {

GaussRat omega_k(const Poly& f) {
    if (f.is_zero()) return GaussRat();
    unsigned k = f.top_level();
    if (f.grade(k, k) != f)
        throw std::invalid_argument("omega_k: input not homogeneous of bidegree (k,k)");
    Rat scale = factorial((unsigned)f.n()) / factorial(k + (unsigned)f.n());
    GaussRat acc;
    for (const auto& [key, c] : f.terms()) {
        if (key.K != key.L) continue;
        acc += c * GaussRat(mi_factorial(key.K) * scale);
    }
    return acc;
}

GaussRat omega_hbar_mu(const Poly& f, const Rat& hbar, const Rat& mu) {
    if (!f.is_invariant()) throw std::invalid_argument("omega_hbar_mu: f not invariant");
    if (!(hbar > Rat(0))) throw std::invalid_argument("omega_hbar_mu: hbar must be > 0");
    GaussRat acc;
    Rat x = mu / hbar;
    for (unsigned k = 0; k <= f.top_level(); ++k) {
        Poly fk = f.level(k);
        if (fk.is_zero()) continue;
        acc += GaussRat(pow(hbar, k) * falling(x, k)) * omega_k(fk);
    }
    return acc;
}

Poly average(const Poly& f) {
    if (!f.is_invariant()) throw std::invalid_argument("average: f not invariant");
    Poly acc(f.n());
    for (unsigned k = 0; k <= f.top_level(); ++k) {
        Poly fk = f.level(k);
        if (fk.is_zero()) continue;
        acc += omega_k(fk) * momentum_power(f.n(), k);
    }
    return acc;
}

namespace {

using GVec = std::vector<GaussRat>;

struct GInt {
    mpz_class a, b;  // a + b i
    bool is_zero() const { return a == 0 && b == 0; }
    GInt times_i() const { return GInt{-b, a}; }
    GInt neg() const { return GInt{-a, -b}; }
    GInt conj() const { return GInt{a, -b}; }
    mpz_class norm() const { return a * a + b * b; }
    friend GInt operator*(const GInt& x, const GInt& y) {
        return GInt{x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend GInt operator-(const GInt& x, const GInt& y) { return GInt{x.a - y.a, x.b - y.b}; }
    friend bool operator==(const GInt& x, const GInt& y) { return x.a == y.a && x.b == y.b; }
};

/// Rounded Gaussian division for the Euclidean algorithm.
GInt gdiv_round(const GInt& x, const GInt& y) {
    mpz_class n = y.norm();
    mpz_class re = x.a * y.a + x.b * y.b;
    mpz_class im = x.b * y.a - x.a * y.b;
    auto round_div = [&](const mpz_class& p) {
        mpz_class q, r2 = 2 * p + n;  // floor((p + n/2)/n) without rationals
        mpz_fdiv_q(q.get_mpz_t(), r2.get_mpz_t(), mpz_class(2 * n).get_mpz_t());
        return q;
    };
    return GInt{round_div(re), round_div(im)};
}

GInt ggcd(GInt x, GInt y) {
    while (!y.is_zero()) {
        GInt q = gdiv_round(x, y);
        GInt r = x - q * y;
        x = y;
        y = r;
    }
    return x;
}

/// Unit-normalize: the representative among {e, -e, ie, -ie} with
/// re > 0 and im >= 0.
GInt canon_unit(const GInt& e) {
    GInt c = e;
    for (int k = 0; k < 4; ++k) {
        if (c.a > 0 && c.b >= 0) return c;
        c = c.times_i();
    }
    throw std::logic_error("canon_unit: zero entry");
}

using ZVec = std::vector<GInt>;

ZVec canon_projective(ZVec v) {
    GInt g{0, 0};
    for (const auto& e : v)
        if (!e.is_zero()) g = g.is_zero() ? e : ggcd(g, e);
    // divide by content (exact)
    mpz_class gn = g.norm();
    for (auto& e : v) {
        GInt t = e * g.conj();
        mpz_class qa = t.a / gn, qb = t.b / gn;
        e = GInt{qa, qb};
    }
    // rotate by the unit fixing the first nonzero entry
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        GInt target = canon_unit(e);
        // find unit u with u*e == target
        GInt u{1, 0};
        GInt c = e;
        while (!(c == target)) {
            c = c.times_i();
            u = u.times_i();
        }
        for (auto& x : v) x = u * x;
        break;
    }
    return v;
}

bool zvec_less(const ZVec& x, const ZVec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].a != y[i].a) return x[i].a < y[i].a;
        if (x[i].b != y[i].b) return x[i].b < y[i].b;
    }
    return false;
}

GVec to_gvec(const ZVec& v) {
    GVec out;
    out.reserve(v.size());
    for (const auto& e : v) out.emplace_back(Rat(e.a), Rat(e.b));
    return out;
}

GaussRat dot_conj(const GVec& v, const GVec& w) {
    GaussRat s;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i].conj() * w[i];
    return s;
}

long vec_norm(const GVec& v) {
    Rat s(0);
    for (const auto& e : v) s += e.norm2();
    return (long)s.num().get_si();
}

/// (v.z) as a linear form.
Poly lin_form(int n, const GVec& v) {
    Poly p(n);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) p += v[j] * Poly::variable(n, j);
    return p;
}

/// (v.z conj(v).zb)^a, cached per call site by the caller.
Poly row_power(int n, const GVec& v, unsigned a) {
    Poly f = lin_form(n, v);
    return (f * f.conj()).pow_ptwise(a);
}

Rat design_target_scale(int n, unsigned a, unsigned b) {
    return factorial(a) * factorial(b) * factorial((unsigned)n) /
           factorial(a + b + (unsigned)n);
}

/// Shared exact system: columns are atoms (single rows use w = v, b = 0
/// only). Rows are the real and imaginary parts of every monomial
/// coefficient equation for each (a, b) condition.
struct MomentSystem {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;

    void add_condition(int n, const std::vector<Poly>& atom_polys, unsigned a, unsigned b) {
        unsigned s = a + b;
        Poly target = design_target_scale(n, a, b) * momentum_power(n, s);
        // collect all monomial keys appearing anywhere
        std::map<TermKey, std::size_t, TermOrder> keys;
        auto note = [&keys](const Poly& p) {
            for (const auto& [key, c] : p.terms())
                if (!keys.count(key)) keys.emplace(key, keys.size());
        };
        for (const auto& p : atom_polys) note(p);
        note(target);
        std::size_t base = rows.size();
        rows.resize(base + 2 * keys.size(),
                    std::vector<Rat>(atom_polys.size(), Rat(0)));
        rhs.resize(base + 2 * keys.size(), Rat(0));
        for (const auto& [key, idx] : keys) {
            GaussRat t = target.coeff(key.K, key.L);
            rhs[base + 2 * idx] = t.re();
            rhs[base + 2 * idx + 1] = t.im();
        }
        for (std::size_t j = 0; j < atom_polys.size(); ++j) {
            for (const auto& [key, c] : atom_polys[j].terms()) {
                std::size_t idx = keys.at(key);
                rows[base + 2 * idx][j] = c.re();
                rows[base + 2 * idx + 1][j] = c.im();
            }
        }
    }

    void dedupe() {
        std::map<std::pair<std::vector<std::string>, std::string>, bool> seen;
        std::vector<std::vector<Rat>> nr;
        std::vector<Rat> nb;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            bool allzero = true;
            std::vector<std::string> sig;
            sig.reserve(rows[i].size());
            for (const auto& v : rows[i]) {
                if (!v.is_zero()) allzero = false;
                sig.push_back(v.str());
            }
            if (allzero && rhs[i].is_zero()) continue;
            auto key = std::make_pair(std::move(sig), rhs[i].str());
            if (seen.emplace(std::move(key), true).second) {
                nr.push_back(std::move(rows[i]));
                nb.push_back(std::move(rhs[i]));
            }
        }
        rows = std::move(nr);
        rhs = std::move(nb);
    }
};

const std::vector<long>& bound_ladder(long cap) {
    static thread_local std::vector<long> ladder;
    ladder.clear();
    for (long b : {2L, 3L, 5L, 10L})
        if (b < cap) ladder.push_back(b);
    ladder.push_back(cap);
    return ladder;
}

}  // namespace

std::vector<std::pair<GVec, long>> gaussian_vector_pool(int n, long bound) {
    std::size_t len = (std::size_t)n + 1;
    std::vector<GInt> gs;
    long r = 0;
    while ((r + 1) * (r + 1) <= bound) ++r;
    for (long a = -r; a <= r; ++a) {
        for (long b = -r; b <= r; ++b) {
            if (a * a + b * b <= bound) gs.push_back(GInt{a, b});
        }
    }
    std::vector<ZVec> out_raw;
    ZVec cur(len, GInt{0, 0});
    std::function<void(std::size_t, mpz_class)> rec = [&](std::size_t pos, mpz_class left) {
        if (pos == len) {
            bool nonzero = false;
            for (const auto& e : cur)
                if (!e.is_zero()) nonzero = true;
            if (nonzero) out_raw.push_back(cur);
            return;
        }
        for (const auto& g : gs) {
            if (g.norm() > left) continue;
            cur[pos] = g;
            rec(pos + 1, left - g.norm());
        }
        cur[pos] = GInt{0, 0};
    };
    rec(0, bound);

    std::map<std::vector<std::pair<std::string, std::string>>, std::pair<ZVec, mpz_class>> seen;
    for (auto& v : out_raw) {
        ZVec c = canon_projective(v);
        mpz_class norm(0);
        for (const auto& e : c) norm += e.norm();
        std::vector<std::pair<std::string, std::string>> key;
        for (const auto& e : c) key.emplace_back(e.a.get_str(), e.b.get_str());
        auto it = seen.find(key);
        if (it == seen.end() || it->second.second > norm) seen[key] = {c, norm};
    }
    std::vector<std::pair<ZVec, mpz_class>> items;
    for (auto& [k, v] : seen) items.push_back(v);
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return zvec_less(x.first, y.first);
    });
    std::vector<std::pair<GVec, long>> out;
    out.reserve(items.size());
    for (auto& [v, norm] : items) out.emplace_back(to_gvec(v), (long)norm.get_si());
    return out;
}

bool design_verify(const Design& d) {
    Rat total(0);
    for (const auto& atom : d.atoms) {
        if (!(atom.lambda > Rat(0))) return false;
        Rat norm(0);
        for (const auto& e : atom.v) {
            if (!e.re().is_integer() || !e.im().is_integer()) return false;
            norm += e.norm2();
        }
        if (norm != Rat(atom.norm) || atom.norm <= 0) return false;
        total += atom.lambda;
    }
    if (total != Rat(1)) return false;
    for (unsigned s = 1; s <= d.m; ++s) {
        Poly acc(d.n);
        for (const auto& atom : d.atoms) {
            Rat w = atom.lambda / pow(Rat(atom.norm), s);
            acc += GaussRat(w) * row_power(d.n, atom.v, s);
        }
        if (acc != design_target_scale(d.n, s, 0) * momentum_power(d.n, s)) return false;
    }
    return true;
}

bool pair_design_verify(const PairDesign& d) {
    Rat total(0);
    for (const auto& atom : d.atoms) {
        if (!(atom.lambda > Rat(0))) return false;
        if (!dot_conj(atom.v, atom.w).is_zero()) return false;
        if (vec_norm(atom.v) != atom.norm_v || vec_norm(atom.w) != atom.norm_w) return false;
        total += atom.lambda;
    }
    if (total != Rat(1)) return false;
    for (unsigned a = 0; a <= d.k; ++a) {
        Poly acc(d.n);
        for (const auto& atom : d.atoms) {
            Rat w = atom.lambda / (pow(Rat(atom.norm_v), a) * pow(Rat(atom.norm_w), d.k));
            acc += GaussRat(w) * (row_power(d.n, atom.v, a) * row_power(d.n, atom.w, d.k));
        }
        if (acc != design_target_scale(d.n, a, d.k) * momentum_power(d.n, a + d.k))
            return false;
    }
    return true;
}

Design design_find(int n, unsigned m, long norm_bound) {
    if (n < 1) throw std::invalid_argument("design_find: n must be >= 1");
    static std::map<std::tuple<int, unsigned, long>, Design> cache;
    static std::mutex cache_mu;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find({n, m, norm_bound});
        if (it != cache.end()) return it->second;
    }
    for (long bound : bound_ladder(norm_bound)) {
        auto pool = gaussian_vector_pool(n, bound);
        if (pool.empty()) continue;
        std::vector<std::vector<Poly>> powers(pool.size());
        MomentSystem sys;
        for (unsigned s = 0; s <= m; ++s) {
            std::vector<Poly> cols;
            cols.reserve(pool.size());
            for (std::size_t j = 0; j < pool.size(); ++j) {
                Rat w = Rat(1) / pow(Rat(pool[j].second), s);
                cols.push_back(GaussRat(w) * row_power(n, pool[j].first, s));
            }
            sys.add_condition(n, cols, s, 0);
        }
        sys.dedupe();
        auto sol = solve_nonnegative(sys.rows, sys.rhs);
        if (!sol) continue;
        Design d;
        d.n = n;
        d.m = m;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if ((*sol)[j].is_zero()) continue;
            d.atoms.push_back(DesignAtom{(*sol)[j], pool[j].first, pool[j].second});
        }
        if (!design_verify(d))
            throw std::logic_error("design_find: solver produced an invalid design");
        {
            std::lock_guard<std::mutex> lock(cache_mu);
            cache.emplace(std::make_tuple(n, m, norm_bound), d);
        }
        return d;
    }
    throw DesignNotFound("design not found at norm bound " + std::to_string(norm_bound) +
                         " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

PairDesign pair_design_find(int n, unsigned k, long norm_bound) {
    if (n < 1) throw std::invalid_argument("pair_design_find: n must be >= 1");
    static std::map<std::tuple<int, unsigned, long>, PairDesign> cache;
    static std::mutex cache_mu;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find({n, k, norm_bound});
        if (it != cache.end()) return it->second;
    }
    for (long bound : bound_ladder(norm_bound)) {
        auto pool = gaussian_vector_pool(n, bound);
        std::vector<PairAtom> atoms;
        if (n == 1) {
            // the orthogonal partner is canonical in two coordinates
            for (const auto& [v, norm] : pool) {
                PairAtom at;
                at.v = v;
                at.w = GVec{-v[1].conj(), v[0].conj()};
                at.norm_v = at.norm_w = norm;
                atoms.push_back(std::move(at));
            }
        } else {
            for (const auto& [v, nv] : pool) {
                for (const auto& [w, nw] : pool) {
                    if (!dot_conj(v, w).is_zero()) continue;
                    PairAtom at;
                    at.v = v;
                    at.w = w;
                    at.norm_v = nv;
                    at.norm_w = nw;
                    atoms.push_back(std::move(at));
                }
            }
        }
        if (atoms.empty()) continue;
        // cache the fixed second-row factor per atom
        std::vector<Poly> wpow;
        wpow.reserve(atoms.size());
        for (const auto& at : atoms) wpow.push_back(row_power(n, at.w, k));
        MomentSystem sys;
        for (unsigned a = 0; a <= k; ++a) {
            std::vector<Poly> cols;
            cols.reserve(atoms.size());
            for (std::size_t j = 0; j < atoms.size(); ++j) {
                const auto& at = atoms[j];
                Rat w = Rat(1) / (pow(Rat(at.norm_v), a) * pow(Rat(at.norm_w), k));
                cols.push_back(GaussRat(w) * (row_power(n, at.v, a) * wpow[j]));
            }
            sys.add_condition(n, cols, a, k);
        }
        {
            // normalization sum lambda = 1
            std::vector<Poly> ones;
            ones.reserve(atoms.size());
            for (std::size_t j = 0; j < atoms.size(); ++j)
                ones.push_back(Poly::constant(n, GaussRat(1)));
            sys.add_condition(n, ones, 0, 0);
        }
        sys.dedupe();
        auto sol = solve_nonnegative(sys.rows, sys.rhs);
        if (!sol) continue;
        PairDesign d;
        d.n = n;
        d.k = k;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            if ((*sol)[j].is_zero()) continue;
            PairAtom at = atoms[j];
            at.lambda = (*sol)[j];
            d.atoms.push_back(std::move(at));
        }
        if (!pair_design_verify(d))
            throw std::logic_error("pair_design_find: solver produced an invalid design");
        {
            std::lock_guard<std::mutex> lock(cache_mu);
            cache.emplace(std::make_tuple(n, k, norm_bound), d);
        }
        return d;
    }
    throw DesignNotFound("pair design not found at norm bound " + std::to_string(norm_bound) +
                         " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

}  // namespace wicksos
