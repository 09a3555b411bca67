#include "coxfs/klcells.hpp"

#include "coxfs/errors.hpp"
#include "coxfs/invmod.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

namespace coxfs {

namespace {

void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(IntPoly& acc, const IntPoly& p, int shift, long long factor)
{
    if (p.empty() || factor == 0) return;
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
    for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += factor * p[i];
}

} // namespace

// ---------------------------------------------------------------- KL polynomials

KLTable KLTable::compute(const CoxeterGroup& g, std::size_t max_order)
{
    if (g.size() > max_order)
        throw OrderBoundExceeded("KL table for " + g.type().name() + " needs |W| = " + std::to_string(g.size()) +
                                 " > " + std::to_string(max_order));
    KLTable kl;
    kl.g_ = &g;
    const std::size_t n = kl.n_ = g.size();
    kl.below_.assign(n * n, false);
    kl.p_.assign(n * n, IntPoly{});
    kl.mu_below_.assign(n, {});

    // subwords of a reduced word of w = subwords of its prefix v, with or without the last letter
    kl.below_[0] = true;
    for (ElementId w = 1; w < n; ++w) {
        int s = g.word(w).back();
        ElementId v = g.rmul(w, s);
        for (ElementId y = 0; y < n; ++y)
            if (kl.below_[v * n + y]) {
                kl.below_[w * n + y] = true;
                kl.below_[w * n + g.rmul(y, s)] = true;
            }
    }

    kl.p_[0] = {1};
    for (ElementId w = 1; w < n; ++w) {
        const unsigned ld = g.left_descents(w);
        const int s = __builtin_ctz(ld);
        const ElementId v = g.lmul(s, w);
        std::vector<std::pair<ElementId, long long>> terms;
        for (auto [z, m] : kl.mu_below_[v])
            if (g.left_descents(z) >> s & 1u) terms.emplace_back(z, m);
        for (ElementId x = 0; x < n; ++x) {
            if (!kl.below_[w * n + x]) continue;
            IntPoly& out = kl.p_[w * n + x];
            if (x == w) {
                out = {1};
                continue;
            }
            const int c = (g.left_descents(x) >> s) & 1;
            add_shifted(out, kl.p(g.lmul(s, x), v), 1 - c, 1);
            add_shifted(out, kl.p(x, v), c, 1);
            for (auto [z, m] : terms)
                if (kl.below_[z * n + x]) add_shifted(out, kl.p(x, z), (g.length(w) - g.length(z)) / 2, -m);
            trim(out);
        }
        for (ElementId y = 0; y < w; ++y) {
            int d = g.length(w) - g.length(y);
            if (d % 2 == 0 || !kl.below_[w * n + y]) continue;
            const IntPoly& p = kl.p(y, w);
            std::size_t h = static_cast<std::size_t>((d - 1) / 2);
            if (h < p.size() && p[h] != 0) kl.mu_below_[w].emplace_back(y, p[h]);
        }
    }
    return kl;
}

long long KLTable::mu(ElementId y, ElementId w) const
{
    for (const auto& [z, m] : mu_below_[w])
        if (z == y) return m;
    return 0;
}

bool KLTable::sanity(std::string* witness) const
{
    const auto& g = *g_;
    auto fail = [&](ElementId y, ElementId w, const char* what) {
        if (witness) *witness = std::string(what) + " at P(" + g.word_string(y) + "," + g.word_string(w) + ")";
        return false;
    };
    for (ElementId w = 0; w < n_; ++w)
        for (ElementId y = 0; y < n_; ++y) {
            const IntPoly& q = p(y, w);
            if (y == w) {
                if (q != IntPoly{1}) return fail(y, w, "P_{w,w} != 1");
                continue;
            }
            if (!bruhat_leq(y, w)) {
                if (!q.empty()) return fail(y, w, "nonzero outside the Bruhat interval");
                continue;
            }
            if (q.empty() || q[0] != 1) return fail(y, w, "constant term is not 1");
            int bound = (g.length(w) - g.length(y) - 1) / 2;
            if (static_cast<int>(q.size()) - 1 > bound) return fail(y, w, "degree bound violated");
            for (long long c : q)
                if (c < 0) return fail(y, w, "negative coefficient");
        }
    return true;
}

// ---------------------------------------------------------------- cells

std::vector<std::vector<ElementId>> left_cells(const KLTable& kl)
{
    const auto& g = kl.group();
    const std::size_t n = kl.size();
    std::vector<std::vector<ElementId>> out(n), in(n);
    auto link = [&](ElementId a, ElementId b) {
        // a -> b when some s is a left descent of a but not of b
        if (g.left_descents(a) & ~g.left_descents(b)) {
            out[a].push_back(b);
            in[b].push_back(a);
        }
    };
    for (ElementId w = 0; w < n; ++w)
        for (auto [y, m] : kl.mu_below(w)) {
            link(y, w);
            link(w, y);
        }

    // Kosaraju: finishing order on `out`, then components on `in`
    std::vector<ElementId> order;
    std::vector<char> seen(n, 0);
    for (ElementId r = 0; r < n; ++r) {
        if (seen[r]) continue;
        std::vector<std::pair<ElementId, std::size_t>> stack{{r, 0}};
        seen[r] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < out[v].size()) {
                ElementId nx = out[v][i++];
                if (!seen[nx]) {
                    seen[nx] = 1;
                    stack.emplace_back(nx, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<int> comp(n, -1);
    std::vector<std::vector<ElementId>> cells;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] >= 0) continue;
        int c = static_cast<int>(cells.size());
        cells.emplace_back();
        std::vector<ElementId> stack{*it};
        comp[*it] = c;
        while (!stack.empty()) {
            ElementId v = stack.back();
            stack.pop_back();
            cells[c].push_back(v);
            for (ElementId u : in[v])
                if (comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
    }
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<IntMatrix> cell_matrices(const KLTable& kl, const std::vector<ElementId>& cell)
{
    const auto& g = kl.group();
    const std::size_t k = cell.size();
    std::vector<IntMatrix> mats;
    for (int s = 0; s < g.rank(); ++s) {
        IntMatrix a(k, std::vector<long long>(k, 0));
        for (std::size_t j = 0; j < k; ++j) {
            ElementId w = cell[j];
            if (g.left_descents(w) >> s & 1u) {
                a[j][j] = -1;
                continue;
            }
            a[j][j] = 1;
            for (std::size_t i = 0; i < k; ++i)
                if (g.left_descents(cell[i]) >> s & 1u) a[i][j] += kl.mu_sym(cell[i], w);
        }
        mats.push_back(std::move(a));
    }
    return mats;
}

namespace {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t k = a.size();
    IntMatrix c(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntMatrix mat_id(std::size_t k)
{
    IntMatrix c(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) c[i][i] = 1;
    return c;
}

} // namespace

bool cell_relations_hold(const CoxeterGroup& g, const std::vector<IntMatrix>& mats)
{
    if (mats.empty()) return true;
    const std::size_t k = mats[0].size();
    const IntMatrix id = mat_id(k);
    for (int s = 0; s < g.rank(); ++s) {
        if (mat_mul(mats[s], mats[s]) != id) return false;
        for (int t = s + 1; t < g.rank(); ++t) {
            IntMatrix st = mat_mul(mats[s], mats[t]), acc = id;
            for (int i = 0; i < g.coxeter_m(s, t); ++i) acc = mat_mul(acc, st);
            if (acc != id) return false;
        }
    }
    return true;
}

ClassFunction cell_character(const KLTable& kl, const std::vector<ElementId>& cell)
{
    const auto& g = kl.group();
    auto mats = cell_matrices(kl, cell);
    if (!cell_relations_hold(g, mats)) throw CheckFailed("cell representation of " + g.word_string(cell.front()) + " fails the relations");
    ClassFunction chi;
    for (int c = 0; c < g.num_classes(); ++c) {
        IntMatrix acc = mat_id(cell.size());
        for (int s : g.word(g.class_rep(c))) acc = mat_mul(acc, mats[s]);
        long long tr = 0;
        for (std::size_t i = 0; i < cell.size(); ++i) tr += acc[i][i];
        chi.push_back(Cyclo(static_cast<long>(tr)));
    }
    return chi;
}

namespace {

std::vector<ElementId> right_times(const CoxeterGroup& g, const std::vector<ElementId>& set, ElementId x)
{
    std::vector<ElementId> out;
    for (ElementId w : set) out.push_back(g.multiply(w, x));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementId> star(const CoxeterGroup& g, const std::vector<ElementId>& set)
{
    std::vector<ElementId> out;
    for (ElementId w : set) out.push_back(g.multiply(g.longest(), w));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementId> r_set(const CoxeterGroup& g, const std::string& j)
{
    unsigned mask = 0;
    for (char ch : j) mask |= 1u << (ch - 'a');
    std::vector<ElementId> out;
    for (ElementId w = 0; w < g.size(); ++w)
        if (g.right_descents(w) == mask) out.push_back(w);
    return out;
}

std::vector<ElementId> set_and(const std::vector<ElementId>& a, const std::vector<ElementId>& b)
{
    std::vector<ElementId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<ElementId> set_minus(const std::vector<ElementId>& a, const std::vector<std::vector<ElementId>>& bs)
{
    std::vector<ElementId> out = a;
    for (const auto& b : bs) {
        std::vector<ElementId> next;
        std::set_difference(out.begin(), out.end(), b.begin(), b.end(), std::back_inserter(next));
        out = std::move(next);
    }
    return out;
}

} // namespace

std::vector<std::pair<std::string, std::vector<ElementId>>> h3_named_sets(const CoxeterGroup& g)
{
    if (g.type() != CoxeterType::H3()) throw InvalidInput("named cells are defined for H3 only");
    auto w = [&](const char* word) { return g.from_word_string(word); };
    std::vector<std::vector<ElementId>> I(5), J(6), K(4);
    I[1] = set_and(r_set(g, "bc"), right_times(g, r_set(g, "a"), w("aba")));
    I[2] = right_times(g, I[1], w("a"));
    I[3] = right_times(g, I[2], w("b"));
    I[4] = right_times(g, I[3], w("a"));
    J[1] = set_and(r_set(g, "ac"), right_times(g, r_set(g, "c"), w("cbab")));
    J[2] = right_times(g, J[1], w("b"));
    J[3] = right_times(g, J[2], w("a"));
    J[4] = right_times(g, J[3], w("b"));
    J[5] = right_times(g, J[4], w("c"));
    K[1] = set_minus(r_set(g, "a"), {I[4], J[3]});
    K[2] = set_minus(r_set(g, "b"), {I[3], star(g, J[1]), J[2], J[4]});
    K[3] = set_minus(r_set(g, "c"), {J[5]});

    std::vector<std::pair<std::string, std::vector<ElementId>>> out;
    for (int i = 1; i <= 4; ++i) out.emplace_back("I" + std::to_string(i), I[i]);
    for (int i = 1; i <= 5; ++i) out.emplace_back("J" + std::to_string(i), J[i]);
    for (int i = 1; i <= 5; ++i) out.emplace_back("J" + std::to_string(i) + "*", star(g, J[i]));
    for (int i = 1; i <= 3; ++i) out.emplace_back("K" + std::to_string(i), K[i]);
    for (int i = 1; i <= 3; ++i) out.emplace_back("K" + std::to_string(i) + "*", star(g, K[i]));
    out.emplace_back("L", std::vector<ElementId>{g.identity()});
    out.emplace_back("L*", std::vector<ElementId>{g.longest()});
    return out;
}

std::vector<CellData> compute_cells(const KLTable& kl, const CharacterTable& t)
{
    const auto& g = kl.group();
    std::vector<CellData> out;
    int k = 0;
    for (auto& cell : left_cells(kl)) {
        CellData c;
        c.name = "G" + std::to_string(++k);
        c.elements = std::move(cell);
        c.character = cell_character(kl, c.elements);
        c.mult = decompose(g, c.character, t);
        out.push_back(std::move(c));
    }
    if (g.type().family == Family::I2) {
        ElementId r = g.from_word({0}), s = g.from_word({1});
        for (auto& c : out) {
            const auto& e = c.elements;
            if (e.front() == g.identity()) c.name = "X";
            else if (std::binary_search(e.begin(), e.end(), g.longest()) && e.size() == 1) c.name = "X*";
            else if (std::binary_search(e.begin(), e.end(), s)) c.name = "Y";
            else if (std::binary_search(e.begin(), e.end(), r)) c.name = "Y*";
        }
    } else if (g.type() == CoxeterType::H3()) {
        for (auto& [name, set] : h3_named_sets(g))
            for (auto& c : out)
                if (c.elements == set) c.name = name;
    }
    return out;
}

bool cell_census_check(const CoxeterGroup& g, const std::vector<CellData>& cells, std::string* witness)
{
    auto fail = [&](const std::string& s) {
        if (witness) *witness = s;
        return false;
    };
    std::vector<int> cell_of(g.size(), -1);
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (ElementId w : cells[c].elements) {
            if (cell_of[w] >= 0) return fail("cells overlap at " + g.word_string(w));
            cell_of[w] = static_cast<int>(c);
        }
    if (std::count(cell_of.begin(), cell_of.end(), -1)) return fail("cells do not cover W");

    ClassFunction sum(g.num_classes(), Cyclo(0));
    for (const auto& c : cells)
        for (int k = 0; k < g.num_classes(); ++k) sum[k] += c.character[k];
    if (sum != regular_character(g)) return fail("cell characters do not add up to the regular character");

    const auto& one = cells[cell_of[g.identity()]];
    if (one.elements.size() != 1 || one.character != trivial_character(g)) return fail("{1} is not a cell with trivial character");

    auto sgn = sign_character(g);
    for (const auto& c : cells) {
        ClassFunction twisted;
        for (int k = 0; k < g.num_classes(); ++k) twisted.push_back(c.character[k] * sgn[k]);
        for (bool left : {true, false}) {
            std::vector<ElementId> img;
            for (ElementId w : c.elements) img.push_back(left ? g.multiply(g.longest(), w) : g.multiply(w, g.longest()));
            std::sort(img.begin(), img.end());
            const auto& target = cells[cell_of[img.front()]];
            if (target.elements != img) return fail("w0 image of " + c.name + " is not a cell");
            if (target.character != twisted) return fail("w0 image of " + c.name + " does not carry chi * sgn");
        }
    }
    return true;
}

KottwitzReport kottwitz_check(const CoxeterGroup& g, const std::vector<CellData>& cells)
{
    KottwitzReport rep;
    std::vector<ClassFunction> chis;
    std::vector<int> classes;
    for (const auto& [label, sigma] : named_involutions(g)) {
        rep.sigma_labels.push_back(label);
        chis.push_back(class_character(g, sigma));
        classes.push_back(g.class_of(sigma));
    }
    for (const auto& c : cells) {
        std::vector<long> inner, count;
        for (std::size_t k = 0; k < chis.size(); ++k) {
            Cyclo ip = inner_product(g, chis[k], c.character);
            if (!ip.is_integer()) throw CheckFailed("inner product is not an integer");
            inner.push_back(ip.to_rational().to_long());
            count.push_back(static_cast<long>(std::count_if(c.elements.begin(), c.elements.end(),
                                                            [&](ElementId w) { return g.class_of(w) == classes[k]; })));
            if (inner.back() != count.back() && rep.ok) {
                rep.ok = false;
                rep.witness = c.name + ", " + rep.sigma_labels[k] + ": <chi_W,sigma, chi_Gamma> = " + std::to_string(inner.back()) +
                              " but |Sigma cap Gamma| = " + std::to_string(count.back());
            }
        }
        rep.inner.push_back(std::move(inner));
        rep.count.push_back(std::move(count));
    }
    return rep;
}

bool weak_kottwitz_check(const CoxeterGroup& g, const std::vector<CellData>& cells, std::string* witness)
{
    InvolutionModule m(g, Rational(0));
    ClassFunction chi_w = module_character(m);
    for (const auto& c : cells) {
        Cyclo ip = inner_product(g, chi_w, c.character);
        long inv = static_cast<long>(std::count_if(c.elements.begin(), c.elements.end(), [&](ElementId w) { return g.is_involution(w); }));
        if (ip != Cyclo(inv)) {
            if (witness) *witness = c.name + ": <chi_W, chi_Gamma> = " + ip.str() + ", involutions = " + std::to_string(inv);
            return false;
        }
    }
    return true;
}

bool cell_pair_check(const CoxeterGroup& g, const std::vector<CellData>& cells, std::string* witness)
{
    std::vector<std::vector<ElementId>> inverses;
    for (const auto& c : cells) {
        std::vector<ElementId> inv;
        for (ElementId w : c.elements) inv.push_back(g.inverse(w));
        std::sort(inv.begin(), inv.end());
        inverses.push_back(std::move(inv));
    }
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a; b < cells.size(); ++b) {
            std::vector<ElementId> both;
            std::set_intersection(cells[a].elements.begin(), cells[a].elements.end(), inverses[b].begin(), inverses[b].end(),
                                  std::back_inserter(both));
            Cyclo ip = inner_product(g, cells[a].character, cells[b].character);
            if (ip != Cyclo(static_cast<long>(both.size()))) {
                if (witness) *witness = cells[a].name + " x " + cells[b].name + ": inner product " + ip.str() +
                                        ", |Gamma cap Gamma'^-1| = " + std::to_string(both.size());
                return false;
            }
            if (a == b) {
                bool free = std::all_of(cells[a].mult.begin(), cells[a].mult.end(), [](long m) { return m <= 1; });
                bool invols = std::all_of(both.begin(), both.end(), [&](ElementId w) { return g.is_involution(w); });
                if (free != invols) {
                    if (witness) *witness = cells[a].name + ": multiplicity-free criterion fails";
                    return false;
                }
            }
        }
    return true;
}

bool verify_p3(const UchSet& u, const CycloMatrix& m, const std::vector<CellData>& cells, std::string* witness)
{
    const std::size_t n = u.size();
    for (const auto& c : cells) {
        std::vector<Cyclo> v(n);
        for (std::size_t a = 0; a < n; ++a)
            if (u.members[a].irr >= 0) v[a] = Cyclo(c.mult.at(u.members[a].irr));
        for (std::size_t a = 0; a < n; ++a) {
            Cyclo s;
            for (std::size_t b = 0; b < n; ++b)
                if (!v[b].is_zero() && !m(a, b).is_zero()) s += m(a, b) * v[b];
            if (s != v[a]) {
                if (witness) *witness = c.name + ": (M v)(" + u.members[a].label + ") = " + s.str() + ", v = " + v[a].str();
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- H4 cell table

std::vector<H4CellRow> load_h4_cell_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
        std::vector<H4CellRow> rows;
        for (const auto& r : j.at("cells")) {
            H4CellRow row;
            row.name = r.at("name").get<std::string>();
            row.count = r.at("count").get<int>();
            row.size = r.at("size").get<int>();
            row.character = r.at("character").get<std::map<std::string, long>>();
            row.involutions = r.at("involutions").get<std::map<std::string, long>>();
            rows.push_back(std::move(row));
        }
        return rows;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

bool verify_h4_cell_table(const CoxeterGroup& g, const CharacterTable& t, const std::vector<H4CellRow>& rows, std::string* witness)
{
    auto fail = [&](const std::string& s) {
        if (witness) *witness = s;
        return false;
    };
    auto named = named_involutions(g);
    std::vector<std::vector<long>> sigma_mult;
    for (const auto& [label, sigma] : named) sigma_mult.push_back(decompose(g, class_character(g, sigma), t));

    long total = 0;
    std::vector<long> regular(t.size(), 0);
    std::vector<long> per_class(named.size(), 0);
    for (const auto& r : rows) {
        std::vector<long> mult(t.size(), 0);
        long deg = 0;
        for (const auto& [label, m] : r.character) {
            int i = t.index(label);
            mult[i] += m;
            deg += m * t.degree(i);
        }
        if (deg != r.size) return fail(r.name + ": size " + std::to_string(r.size) + " but the character has degree " + std::to_string(deg));
        total += static_cast<long>(r.count) * r.size;
        for (std::size_t i = 0; i < t.size(); ++i) regular[i] += r.count * mult[i];
        for (std::size_t k = 0; k < named.size(); ++k) {
            auto it = r.involutions.find(named[k].first);
            long cnt = it == r.involutions.end() ? 0 : it->second;
            long ip = 0;
            for (std::size_t i = 0; i < t.size(); ++i) ip += mult[i] * sigma_mult[k][i];
            if (ip != cnt)
                return fail(r.name + ", " + named[k].first + ": table has " + std::to_string(cnt) + ", inner product is " + std::to_string(ip));
            per_class[k] += r.count * cnt;
        }
    }
    if (total != static_cast<long>(g.size())) return fail("cell sizes add up to " + std::to_string(total));
    for (std::size_t i = 0; i < t.size(); ++i)
        if (regular[i] != t.degree(static_cast<int>(i))) return fail("cells do not decompose the regular character at " + t.labels[i]);
    for (std::size_t k = 0; k < named.size(); ++k) {
        long size = static_cast<long>(g.class_size(g.class_of(named[k].second)));
        if (per_class[k] != size) return fail("involution counts for " + named[k].first + " add up to " + std::to_string(per_class[k]));
    }
    return true;
}

} // namespace coxfs
