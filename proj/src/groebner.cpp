#include "abelcy/groebner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>

namespace abelcy {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, bool require_homogeneous)
    : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (!same_ring(g.ring(), ring_)) throw RingMismatch();
        if (g.is_zero()) continue;
        if (require_homogeneous && !g.is_homogeneous())
            throw NotHomogeneous("ideal generators must be homogeneous");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
    std::vector<Polynomial> all = gens_;
    all.insert(all.end(), more.begin(), more.end());
    return Ideal(ring_, std::move(all));
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, uint64_t provenance)
    : ring_(std::move(ring)), basis_(std::move(basis)), provenance_(provenance) {}

bool GroebnerBasis::is_unit_ideal() const {
    return basis_.size() == 1 && basis_[0].nterms() == 1 && basis_[0].leading_monomial().is_one();
}

uint64_t ideal_provenance_hash(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    uint64_t h = 14695981039346656037ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
        h ^= h >> 29;
    };
    mix(ring->field().is_prime_field() ? ring->field().modulus() : 0);
    mix((uint64_t)ring->nvars());
    mix((uint64_t)ring->order().kind);
    mix((uint64_t)ring->order().split);
    for (const auto& n : ring->names())
        for (char c : n) mix((uint64_t)(unsigned char)c);
    for (const auto& g : gens) mix(g.hash());
    return h;
}

// ------------------------------------------------------------------ engine

namespace {

template <class Ops>
struct Engine {
    using C = typename Ops::C;
    struct P {
        Monomial lm;
        std::vector<Monomial> m;
        std::vector<C> c;  // monic: c[0] == 1
        uint16_t deg = 0;
    };

    const Ring& R;
    Ops ops;
    std::vector<P> basis;
    // divisor search buckets by lm degree
    std::map<uint16_t, std::vector<size_t>> by_deg;

    explicit Engine(const Ring& ring, Ops o) : R(ring), ops(o) {}

    static P to_internal(const Polynomial& f, Ops ops) {
        P p;
        p.m = PolyAccess::mono(f);
        p.c = coeffs_of<Ops>(PolyAccess::coeff(const_cast<Polynomial&>(f)));
        if (!p.m.empty()) {
            p.lm = p.m[0];
            p.deg = p.m[0].deg;
        }
        // make monic
        if (!p.m.empty()) {
            C inv = ops.inv(p.c[0]);
            for (auto& v : p.c) v = ops.mul(v, inv);
        }
        return p;
    }

    Polynomial to_poly(const P& p, const RingPtr& ring) const {
        CoeffVec cv = make_coeffs(ring->field());
        coeffs_of<Ops>(cv) = p.c;
        return PolyAccess::make(ring, p.m, std::move(cv));
    }

    // full normal form of (wm, wc) against basis; result in (om, oc)
    void reduce_full(std::vector<Monomial>& wm, std::vector<C>& wc, std::vector<Monomial>& om,
                     std::vector<C>& oc) const {
        om.clear();
        oc.clear();
        std::vector<Monomial> tm;
        std::vector<C> tc;
        size_t head = 0;  // work is (wm, wc) from index head
        while (head < wm.size()) {
            const Monomial& t = wm[head];
            const P* red = find_reducer(t);
            if (!red) {
                om.push_back(t);
                oc.push_back(wc[head]);
                ++head;
                continue;
            }
            Monomial q = red->lm.div_into(t);
            C factor = ops.neg(wc[head]);
            // work := work + factor * q * red   (head term cancels)
            tm.clear();
            tc.clear();
            tm.reserve(wm.size() - head + red->m.size());
            tc.reserve(tm.capacity());
            size_t i = head + 1, j = 1;  // both leading terms cancel
            while (i < wm.size() || j < red->m.size()) {
                if (j == red->m.size()) {
                    tm.push_back(wm[i]);
                    tc.push_back(std::move(wc[i]));
                    ++i;
                    continue;
                }
                Monomial mj = red->m[j] * q;
                if (i == wm.size()) {
                    C v = ops.mul(factor, red->c[j]);
                    if (!ops.is_zero(v)) {
                        tm.push_back(mj);
                        tc.push_back(std::move(v));
                    }
                    ++j;
                    continue;
                }
                int cpr = R.cmp(wm[i], mj);
                if (cpr > 0) {
                    tm.push_back(wm[i]);
                    tc.push_back(std::move(wc[i]));
                    ++i;
                } else if (cpr < 0) {
                    C v = ops.mul(factor, red->c[j]);
                    if (!ops.is_zero(v)) {
                        tm.push_back(mj);
                        tc.push_back(std::move(v));
                    }
                    ++j;
                } else {
                    C v = ops.add(wc[i], ops.mul(factor, red->c[j]));
                    if (!ops.is_zero(v)) {
                        tm.push_back(wm[i]);
                        tc.push_back(std::move(v));
                    }
                    ++i;
                    ++j;
                }
            }
            wm.swap(tm);
            wc.swap(tc);
            head = 0;
        }
    }

    const P* find_reducer(const Monomial& t) const {
        for (const auto& [deg, idxs] : by_deg) {
            if (deg > t.deg) break;
            for (size_t k : idxs) {
                if (!basis[k].m.empty() && basis[k].lm.divides(t)) return &basis[k];
            }
        }
        return nullptr;
    }

    struct Pair {
        Monomial lcm;
        uint32_t i, j;
        uint64_t tick;
    };
    // pairs bucketed by lcm degree; pop scans only the lowest bucket
    struct PairStore {
        std::map<uint16_t, std::vector<Pair>> buckets;
        size_t count = 0;
        bool empty() const { return count == 0; }
        void push(Pair p) {
            buckets[p.lcm.deg].push_back(std::move(p));
            ++count;
        }
    };
    uint64_t tick = 0;

    Pair pop_min(PairStore& store) const {
        auto it = store.buckets.begin();
        while (it->second.empty()) it = store.buckets.erase(it);
        auto& vec = it->second;
        size_t best = 0;
        for (size_t k = 1; k < vec.size(); ++k) {
            int c = R.cmp(vec[k].lcm, vec[best].lcm);
            if (c < 0 || (c == 0 && vec[k].tick < vec[best].tick)) best = k;
        }
        Pair pr = vec[best];
        vec[best] = vec.back();
        vec.pop_back();
        --store.count;
        return pr;
    }

    void gm_update(size_t t, PairStore& store) {
        // Gebauer-Moller: prune old pairs, then build the new ones against t
        const Monomial& lt = basis[t].lm;
        for (auto& [deg, vec] : store.buckets) {
            size_t w = 0;
            for (size_t r = 0; r < vec.size(); ++r) {
                const Monomial& l = vec[r].lcm;
                bool drop = false;
                if (lt.divides(l)) {
                    Monomial lit = basis[vec[r].i].lm.lcm(lt);
                    Monomial ljt = basis[vec[r].j].lm.lcm(lt);
                    if (lit != l && ljt != l) drop = true;  // chain criterion
                }
                if (!drop) vec[w++] = std::move(vec[r]);
            }
            store.count -= vec.size() - w;
            vec.resize(w);
        }
        // candidate pairs (i, t)
        struct Cand {
            Monomial lcm;
            uint32_t i;
            bool coprime;
            bool drop = false;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (size_t i = 0; i < t; ++i) {
            if (basis[i].m.empty()) continue;
            cands.push_back({basis[i].lm.lcm(lt), (uint32_t)i, basis[i].lm.coprime(lt), false});
        }
        // strict divisibility: keep only minimal lcms
        for (size_t a = 0; a < cands.size(); ++a) {
            for (size_t b = 0; b < cands.size(); ++b) {
                if (a == b) continue;
                if (cands[b].lcm.divides(cands[a].lcm) && cands[b].lcm != cands[a].lcm) {
                    cands[a].drop = true;
                    break;
                }
            }
        }
        // equal-lcm classes: one coprime member kills the class, else keep one
        for (size_t a = 0; a < cands.size(); ++a) {
            if (cands[a].drop) continue;
            bool coprime_in_class = cands[a].coprime;
            for (size_t b = a + 1; b < cands.size(); ++b) {
                if (cands[b].drop || cands[b].lcm != cands[a].lcm) continue;
                coprime_in_class |= cands[b].coprime;
                cands[b].drop = true;
            }
            if (coprime_in_class) cands[a].drop = true;
        }
        for (auto& cnd : cands) {
            if (cnd.drop) continue;
            store.push(Pair{cnd.lcm, cnd.i, (uint32_t)t, tick++});
        }
    }

    void add_to_buckets(size_t idx) { by_deg[basis[idx].deg].push_back(idx); }

    // returns reduced GB polynomials
    std::vector<Polynomial> run(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                const Budget& budget) {
        PairStore store;
        // seed basis with interreduced inputs, smallest degree first
        std::vector<P> inputs;
        inputs.reserve(gens.size());
        for (const auto& g : gens) inputs.push_back(to_internal(g, ops));
        std::stable_sort(inputs.begin(), inputs.end(),
                         [&](const P& a, const P& b) { return R.cmp(a.lm, b.lm) < 0; });
        std::vector<Monomial> om;
        std::vector<C> oc;
        for (auto& p : inputs) {
            std::vector<Monomial> wm = std::move(p.m);
            std::vector<C> wc = std::move(p.c);
            reduce_full(wm, wc, om, oc);
            if (om.empty()) continue;
            P q;
            q.m = om;
            q.c = oc;
            q.lm = om[0];
            q.deg = om[0].deg;
            C inv = ops.inv(q.c[0]);
            for (auto& v : q.c) v = ops.mul(v, inv);
            basis.push_back(std::move(q));
            size_t idx = basis.size() - 1;
            gm_update(idx, store);
            add_to_buckets(idx);
        }
        // main loop
        size_t processed = 0;
        while (!store.empty()) {
            Pair pr = pop_min(store);
            if (budget.max_degree > 0 && pr.lcm.deg > budget.max_degree)
                throw ResourceBudgetExceeded("degree cap " + std::to_string(budget.max_degree) +
                                             " exceeded");
            if (++processed > budget.max_pairs)
                throw ResourceBudgetExceeded("pair budget " + std::to_string(budget.max_pairs) +
                                             " exceeded");
            const P& f = basis[pr.i];
            const P& g = basis[pr.j];
            // S-polynomial: (lcm/lm_f)*f - (lcm/lm_g)*g, both monic
            Monomial qf = f.lm.div_into(pr.lcm);
            Monomial qg = g.lm.div_into(pr.lcm);
            std::vector<Monomial> wm;
            std::vector<C> wc;
            wm.reserve(f.m.size() + g.m.size());
            wc.reserve(wm.capacity());
            {
                size_t i = 1, j = 1;
                while (i < f.m.size() || j < g.m.size()) {
                    if (i == f.m.size()) {
                        wm.push_back(g.m[j] * qg);
                        wc.push_back(ops.neg(g.c[j]));
                        ++j;
                        continue;
                    }
                    if (j == g.m.size()) {
                        wm.push_back(f.m[i] * qf);
                        wc.push_back(f.c[i]);
                        ++i;
                        continue;
                    }
                    Monomial mi = f.m[i] * qf;
                    Monomial mj = g.m[j] * qg;
                    int cpr = R.cmp(mi, mj);
                    if (cpr > 0) {
                        wm.push_back(mi);
                        wc.push_back(f.c[i]);
                        ++i;
                    } else if (cpr < 0) {
                        wm.push_back(mj);
                        wc.push_back(ops.neg(g.c[j]));
                        ++j;
                    } else {
                        C v = ops.sub(f.c[i], g.c[j]);
                        if (!ops.is_zero(v)) {
                            wm.push_back(mi);
                            wc.push_back(std::move(v));
                        }
                        ++i;
                        ++j;
                    }
                }
            }
            reduce_full(wm, wc, om, oc);
            if (om.empty()) continue;
            P q;
            q.m = om;
            q.c = oc;
            q.lm = om[0];
            q.deg = om[0].deg;
            C inv = ops.inv(q.c[0]);
            for (auto& v : q.c) v = ops.mul(v, inv);
            basis.push_back(std::move(q));
            if (basis.size() > budget.max_basis)
                throw ResourceBudgetExceeded("basis size budget exceeded");
            size_t idx = basis.size() - 1;
            gm_update(idx, store);
            add_to_buckets(idx);
        }
        return interreduce(ring);
    }

    std::vector<Polynomial> interreduce(const RingPtr& ring) {
        // drop elements whose lm is divisible by another lm
        std::vector<size_t> keep;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].m.empty()) continue;
            bool redundant = false;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j || basis[j].m.empty()) continue;
                if (basis[j].lm.divides(basis[i].lm) &&
                    !(basis[j].lm == basis[i].lm && j > i)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) keep.push_back(i);
        }
        // tail-reduce each survivor against the others
        std::vector<P> minimal;
        minimal.reserve(keep.size());
        for (size_t k : keep) minimal.push_back(basis[k]);
        basis = minimal;
        by_deg.clear();
        for (size_t i = 0; i < basis.size(); ++i) add_to_buckets(i);
        std::vector<Polynomial> out;
        std::vector<Monomial> om;
        std::vector<C> oc;
        for (size_t i = 0; i < basis.size(); ++i) {
            // remove self from buckets during own reduction
            P self = std::move(basis[i]);
            basis[i].m.clear();
            std::vector<Monomial> wm = self.m;
            std::vector<C> wc = self.c;
            reduce_full(wm, wc, om, oc);
            self.m = om;
            self.c = oc;
            if (!om.empty()) {
                self.lm = om[0];
                self.deg = om[0].deg;
                C inv = ops.inv(self.c[0]);
                for (auto& v : self.c) v = ops.mul(v, inv);
            }
            basis[i] = std::move(self);
        }
        // basis elements with empty support were fully redundant
        std::vector<P> final_basis;
        for (auto& p : basis)
            if (!p.m.empty()) final_basis.push_back(std::move(p));
        std::sort(final_basis.begin(), final_basis.end(),
                  [&](const P& a, const P& b) { return R.cmp(a.lm, b.lm) < 0; });
        for (const auto& p : final_basis) out.push_back(to_poly(p, ring));
        return out;
    }
};

template <class Ops>
Polynomial normal_form_typed(const Polynomial& f, const GroebnerBasis& G, Ops ops) {
    Engine<Ops> eng(*G.ring(), ops);
    for (const auto& g : G.basis()) {
        eng.basis.push_back(Engine<Ops>::to_internal(g, ops));
        eng.add_to_buckets(eng.basis.size() - 1);
    }
    auto p = Engine<Ops>::to_internal(f, ops);
    // undo the monic normalization of the input
    if (!f.is_zero()) {
        auto lc = ops.from_scalar(f.leading_coeff());
        for (auto& v : p.c) v = ops.mul(v, lc);
    }
    std::vector<Monomial> om;
    std::vector<typename Ops::C> oc;
    eng.reduce_full(p.m, p.c, om, oc);
    CoeffVec cv = make_coeffs(G.ring()->field());
    coeffs_of<Ops>(cv) = oc;
    return PolyAccess::make(G.ring(), om, std::move(cv));
}

}  // namespace

GroebnerBasis buchberger_raw(RingPtr ring, std::vector<Polynomial> gens, const Budget& budget) {
    uint64_t h = ideal_provenance_hash(ring, gens);
    auto basis = with_ops(ring->field(), [&](auto ops) {
        Engine<decltype(ops)> eng(*ring, ops);
        return eng.run(ring, gens, budget);
    });
    return GroebnerBasis(std::move(ring), std::move(basis), h);
}

GroebnerBasis buchberger(const Ideal& I, const Budget& budget) {
    return buchberger_raw(I.ring(), I.gens(), budget);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!same_ring(f.ring(), G.ring())) throw RingMismatch();
    return with_ops(G.ring()->field(),
                    [&](auto ops) { return normal_form_typed(f, G, ops); });
}

bool member(const Polynomial& f, const GroebnerBasis& G) { return normal_form(f, G).is_zero(); }

bool spoly_audit(const GroebnerBasis& G, size_t sample, uint64_t seed) {
    const auto& B = G.basis();
    std::vector<std::pair<size_t, size_t>> idx;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j) idx.emplace_back(i, j);
    if (sample && idx.size() > sample) {
        std::mt19937_64 rng(seed);
        for (size_t k = 0; k < sample; ++k)
            std::swap(idx[k], idx[k + rng() % (idx.size() - k)]);
        idx.resize(sample);
    }
    for (auto [i, j] : idx) {
        const auto& f = B[i];
        const auto& g = B[j];
        Monomial l = f.leading_monomial().lcm(g.leading_monomial());
        const Field& F = G.ring()->field();
        Polynomial s =
            f.mul_monomial(f.leading_monomial().div_into(l), F.inv(f.leading_coeff())) -
            g.mul_monomial(g.leading_monomial().div_into(l), F.inv(g.leading_coeff()));
        if (!normal_form(s, G).is_zero()) return false;
    }
    return true;
}

// ----------------------------------------------------------------- caching

namespace fs = std::filesystem;

static std::string order_tag(const Order& o) {
    switch (o.kind) {
        case OrderKind::grevlex:
            return "grevlex";
        case OrderKind::lex:
            return "lex";
        case OrderKind::block_elim:
            return "block" + std::to_string(o.split);
    }
    return "?";
}

std::optional<GroebnerBasis> GBCache::load(const RingPtr& ring,
                                           const std::vector<Polynomial>& gens) const {
    uint64_t h = ideal_provenance_hash(ring, gens);
    fs::path file = fs::path(dir_) / (std::to_string(h) + ".gb");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string line;
    std::vector<Polynomial> basis;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        basis.push_back(Polynomial::parse(line, ring));
    }
    if (basis.empty()) return std::nullopt;
    GroebnerBasis G(ring, std::move(basis), h);
    if (!spoly_audit(G, 1, h)) return std::nullopt;  // verify one random S-pair
    return G;
}

void GBCache::store(const Ideal& I, const GroebnerBasis& G) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    fs::path file = fs::path(dir_) / (std::to_string(G.provenance_hash()) + ".gb");
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write cache file " + tmp.string());
        out << "# ring: " << (I.ring()->field().is_prime_field()
                                  ? "F" + std::to_string(I.ring()->field().modulus())
                                  : std::string("Q"));
        out << " nvars=" << I.ring()->nvars() << " order=" << order_tag(I.ring()->order()) << "\n";
        out << "# gens:\n";
        for (const auto& g : I.gens()) out << "# " << g.format() << "\n";
        for (const auto& b : G.basis()) out << b.format() << "\n";
    }
    fs::rename(tmp, file);  // atomic publish
}

std::vector<std::string> GBCache::list() const {
    std::vector<std::string> out;
    std::error_code ec;
    for (auto& entry : fs::directory_iterator(dir_, ec))
        if (entry.path().extension() == ".gb") out.push_back(entry.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

void GBCache::clear() const {
    std::error_code ec;
    for (auto& entry : fs::directory_iterator(dir_, ec))
        if (entry.path().extension() == ".gb") fs::remove(entry.path(), ec);
}

GroebnerBasis buchberger_cached(const Ideal& I, const Budget& budget, const GBCache* cache) {
    if (cache) {
        if (auto hit = cache->load(I.ring(), I.gens())) return *hit;
    }
    GroebnerBasis G = buchberger(I, budget);
    if (cache) cache->store(I, G);
    return G;
}

}  // namespace abelcy
