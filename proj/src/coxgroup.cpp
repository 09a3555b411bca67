#include "coxfs/coxgroup.hpp"

#include "coxfs/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace coxfs {

namespace {

int parse_positive(std::string_view s, const std::string& whole)
{
    if (s.empty()) throw InvalidInput("missing parameter in Coxeter type '" + whole + "'");
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidInput("malformed Coxeter type '" + whole + "'");
        v = v * 10 + (c - '0');
        if (v > 1000000) throw InvalidInput("parameter too large in '" + whole + "'");
    }
    return v;
}

std::string key_of(const Perm& p)
{
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint16_t));
}

Perm compose(const Perm& a, const Perm& b)
{
    // (a o b)(i) = a(b(i))
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

long perm_order(const Perm& p)
{
    std::vector<char> seen(p.size(), 0);
    long ord = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

Perm swap_perm(std::size_t size, std::size_t a, std::size_t b)
{
    Perm p(size);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[a], p[b]);
    return p;
}

template <class F>
std::string coord_key(const std::vector<F>& v)
{
    std::string k;
    for (const auto& x : v) k += scalar_str(x) + ";";
    return k;
}

/// Closure of the simple roots under the simple reflections. c[i][j] = 2B(a_i, a_j).
template <class F>
std::vector<std::vector<F>> root_closure(const std::vector<std::vector<F>>& c, std::vector<Perm>& gens)
{
    std::size_t r = c.size();
    std::vector<std::vector<F>> roots;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<F> v(r, F(0));
        v[i] = F(1);
        index[coord_key(v)] = roots.size();
        roots.push_back(v);
    }
    std::vector<std::vector<std::size_t>> img(r);
    for (std::size_t k = 0; k < roots.size(); ++k) {
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<F> v = roots[k];
            F pairing(0);
            for (std::size_t j = 0; j < r; ++j) pairing += c[i][j] * v[j];
            v[i] -= pairing;
            std::string key = coord_key(v);
            auto it = index.find(key);
            std::size_t id;
            if (it == index.end()) {
                id = roots.size();
                index[key] = id;
                roots.push_back(v);
                if (roots.size() > 5000) throw InvalidInput("root system is infinite or too large");
            } else {
                id = it->second;
            }
            img[i].push_back(id);
        }
    }
    gens.assign(r, Perm(roots.size()));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < roots.size(); ++k) gens[i][k] = static_cast<std::uint16_t>(img[i][k]);
    return roots;
}

} // namespace

std::size_t default_max_order()
{
    if (const char* env = std::getenv("COXFS_MAX_ORDER")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 20000;
}

CoxeterType CoxeterType::parse(std::string_view text, std::optional<int> m)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    std::string whole(text);
    CoxeterType t;
    auto check = [&](bool ok) {
        if (!ok) throw InvalidInput("unsupported Coxeter type '" + whole + "'");
    };
    if (s.rfind("I2", 0) == 0) {
        t.family = Family::I2;
        std::string rest = s.substr(2);
        if (rest.empty()) {
            if (!m) throw InvalidInput("I2 needs a parameter m (e.g. I2(7) or --m 7)");
            t.n = *m;
        } else if (rest.front() == '(' && rest.back() == ')') {
            t.n = parse_positive(std::string_view(rest).substr(1, rest.size() - 2), whole);
        } else if (rest.front() == '_') {
            t.n = parse_positive(std::string_view(rest).substr(1), whole);
        } else {
            t.n = parse_positive(rest, whole);
        }
        check(t.n >= 3);
        return t;
    }
    std::string head, tail;
    std::size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) head += s[i++];
    if (i < s.size() && s[i] == '_') ++i;
    tail = s.substr(i);
    int n = parse_positive(tail, whole);
    if (head == "A") {
        t = A(n);
        check(n >= 1);
    } else if (head == "BC" || head == "B" || head == "C") {
        t = BC(n);
        check(n >= 1);
    } else if (head == "D") {
        t = D(n);
        check(n >= 2);
    } else if (head == "H") {
        check(n == 3 || n == 4);
        t = n == 3 ? H3() : H4();
    } else {
        check(false);
    }
    return t;
}

std::string CoxeterType::name() const
{
    switch (family) {
    case Family::A: return "A" + std::to_string(n);
    case Family::BC: return "BC" + std::to_string(n);
    case Family::D: return "D" + std::to_string(n);
    case Family::I2: return "I2(" + std::to_string(n) + ")";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    }
    return "?";
}

int CoxeterType::rank() const
{
    switch (family) {
    case Family::I2: return 2;
    case Family::H3: return 3;
    case Family::H4: return 4;
    default: return n;
    }
}

std::vector<int> CoxeterType::degrees() const
{
    std::vector<int> d;
    switch (family) {
    case Family::A:
        for (int i = 2; i <= n + 1; ++i) d.push_back(i);
        break;
    case Family::BC:
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
    case Family::D:
        for (int i = 1; i < n; ++i) d.push_back(2 * i);
        d.push_back(n);
        std::sort(d.begin(), d.end());
        break;
    case Family::I2: d = {2, n}; break;
    case Family::H3: d = {2, 6, 10}; break;
    case Family::H4: d = {2, 12, 20, 30}; break;
    }
    return d;
}

CoxeterGroup CoxeterGroup::build(const CoxeterType& type, std::size_t max_order)
{
    CoxeterGroup g;
    g.type_ = type;
    g.rank_ = type.rank();
    int n = type.n;
    std::vector<Perm> gens;
    switch (type.family) {
    case Family::A:
        for (int i = 0; i < n; ++i) {
            gens.push_back(swap_perm(n + 1, i, i + 1));
            g.gen_names_.push_back("s" + std::to_string(i + 1));
        }
        break;
    case Family::BC:
    case Family::D: {
        // point p < n is +e_p, point n + p is -e_p
        auto signed_swap = [n](int a, int b, bool negate) {
            Perm p(2 * n);
            std::iota(p.begin(), p.end(), 0);
            if (negate) {
                p[a] = n + b;
                p[b] = n + a;
                p[n + a] = b;
                p[n + b] = a;
            } else {
                std::swap(p[a], p[b]);
                std::swap(p[n + a], p[n + b]);
            }
            return p;
        };
        for (int i = 0; i + 1 < n; ++i) {
            gens.push_back(signed_swap(i, i + 1, false));
            g.gen_names_.push_back("s" + std::to_string(i + 1));
        }
        if (type.family == Family::BC) {
            Perm t(2 * n);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[n - 1], t[2 * n - 1]);
            gens.push_back(t);
            g.gen_names_.push_back("t");
        } else {
            gens.push_back(signed_swap(n - 2, n - 1, true));
            g.gen_names_.push_back("t'");
        }
        break;
    }
    case Family::I2: {
        Cyclo c = -two_cos(2 * n, 1);
        std::vector<std::vector<Cyclo>> cm = {{Cyclo(2), c}, {c, Cyclo(2)}};
        g.roots_ = root_closure(cm, gens);
        g.gen_names_ = {"r", "s"};
        break;
    }
    case Family::H3:
    case Family::H4: {
        int r = type.rank();
        GoldenRational phi = GoldenRational::phi();
        std::vector<std::vector<GoldenRational>> cm(r, std::vector<GoldenRational>(r, GoldenRational(0)));
        for (int i = 0; i < r; ++i) cm[i][i] = GoldenRational(2);
        cm[0][1] = cm[1][0] = -phi;
        for (int i = 1; i + 1 < r; ++i) cm[i][i + 1] = cm[i + 1][i] = GoldenRational(-1);
        g.golden_roots_ = root_closure(cm, gens);
        const char* names[] = {"a", "b", "c", "d"};
        for (int i = 0; i < r; ++i) g.gen_names_.push_back(names[i]);
        break;
    }
    }
    g.cox_.assign(g.rank_, std::vector<int>(g.rank_, 1));
    for (int s = 0; s < g.rank_; ++s)
        for (int t = 0; t < g.rank_; ++t)
            g.cox_[s][t] = static_cast<int>(perm_order(compose(gens[s], gens[t])));
    g.enumerate(gens, max_order);
    g.compute_classes();
    return g;
}

void CoxeterGroup::enumerate(const std::vector<Perm>& gens, std::size_t max_order)
{
    Perm id(gens[0].size());
    std::iota(id.begin(), id.end(), 0);
    pts_.push_back(id);
    index_[key_of(id)] = 0;
    length_.push_back(0);
    word_.push_back({});
    std::size_t layer_begin = 0, layer_end = 1;
    int depth = 0;
    while (layer_begin < layer_end) {
        for (std::size_t w = layer_begin; w < layer_end; ++w) {
            for (int s = 0; s < rank_; ++s) {
                Perm p = compose(pts_[w], gens[s]);
                std::string k = key_of(p);
                auto it = index_.find(k);
                ElementId id;
                if (it == index_.end()) {
                    id = static_cast<ElementId>(pts_.size());
                    if (pts_.size() + 1 > max_order)
                        throw OrderBoundExceeded(type_.name() + " has more than " + std::to_string(max_order) +
                                                 " elements (raise COXFS_MAX_ORDER to allow it)");
                    index_.emplace(std::move(k), id);
                    pts_.push_back(std::move(p));
                    length_.push_back(depth + 1);
                    auto wd = word_[w];
                    wd.push_back(s);
                    word_.push_back(std::move(wd));
                } else {
                    id = it->second;
                }
                rmul_.push_back(id);
            }
        }
        layer_begin = layer_end;
        layer_end = pts_.size();
        ++depth;
    }
    std::size_t n = pts_.size();
    lmul_.assign(n * rank_, 0);
    inv_.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
        for (int s = 0; s < rank_; ++s) lmul_[w * rank_ + s] = static_cast<ElementId>(find(compose(gens[s], pts_[w])));
        Perm q(pts_[w].size());
        for (std::size_t i = 0; i < q.size(); ++i) q[pts_[w][i]] = static_cast<std::uint16_t>(i);
        inv_[w] = static_cast<ElementId>(find(q));
    }
}

std::size_t CoxeterGroup::find(const Perm& p) const
{
    auto it = index_.find(key_of(p));
    if (it == index_.end()) throw std::logic_error("element not found in group table");
    return it->second;
}

void CoxeterGroup::compute_classes()
{
    std::size_t n = size();
    class_.assign(n, -1);
    for (std::size_t w = 0; w < n; ++w) {
        if (class_[w] >= 0) continue;
        int c = static_cast<int>(class_reps_.size());
        class_reps_.push_back(static_cast<ElementId>(w));
        std::vector<ElementId> elems{static_cast<ElementId>(w)};
        class_[w] = c;
        for (std::size_t k = 0; k < elems.size(); ++k) {
            for (int s = 0; s < rank_; ++s) {
                ElementId v = lmul(s, rmul(elems[k], s));
                if (class_[v] < 0) {
                    class_[v] = c;
                    elems.push_back(v);
                }
            }
        }
        std::sort(elems.begin(), elems.end());
        class_elems_.push_back(std::move(elems));
    }
}

std::string CoxeterGroup::generator_name(int s) const { return gen_names_.at(s); }

int CoxeterGroup::num_reflections() const
{
    int r = 0;
    for (int d : degrees()) r += d - 1;
    return r;
}

std::string CoxeterGroup::word_string(ElementId w) const
{
    if (word_[w].empty()) return "1";
    bool single = std::all_of(gen_names_.begin(), gen_names_.end(), [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (int s : word_[w]) {
        if (!single && !out.empty()) out += " ";
        out += gen_names_[s];
    }
    return out;
}

ElementId CoxeterGroup::multiply(ElementId a, ElementId b) const
{
    for (int s : word_[b]) a = rmul(a, s);
    return a;
}

ElementId CoxeterGroup::power(ElementId w, long k) const
{
    if (k < 0) return power(inverse(w), -k);
    ElementId r = identity();
    ElementId base = w;
    while (k > 0) {
        if (k & 1) r = multiply(r, base);
        k >>= 1;
        if (k) base = multiply(base, base);
    }
    return r;
}

int CoxeterGroup::order(ElementId w) const { return static_cast<int>(perm_order(pts_[w])); }

ElementId CoxeterGroup::from_word(const std::vector<int>& word) const
{
    ElementId w = identity();
    for (int s : word) {
        if (s < 0 || s >= rank_) throw InvalidInput("generator index out of range");
        w = rmul(w, s);
    }
    return w;
}

ElementId CoxeterGroup::from_word_string(std::string_view text) const
{
    // grammar: seq := item*, item := name | '(' seq ')' ['^' int]
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "1" || s == "e") return identity();
    std::vector<int> order_idx(rank_);
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(),
              [&](int a, int b) { return gen_names_[a].size() > gen_names_[b].size(); });
    std::size_t pos = 0;
    std::function<ElementId()> seq = [&]() -> ElementId {
        ElementId w = identity();
        while (pos < s.size() && s[pos] != ')') {
            ElementId item;
            if (s[pos] == '(') {
                ++pos;
                item = seq();
                if (pos >= s.size() || s[pos] != ')') throw InvalidInput("unbalanced parentheses in word '" + std::string(text) + "'");
                ++pos;
            } else {
                int found = -1;
                for (int g : order_idx)
                    if (s.compare(pos, gen_names_[g].size(), gen_names_[g]) == 0) {
                        found = g;
                        break;
                    }
                if (found < 0) throw InvalidInput("unknown generator in word '" + std::string(text) + "'");
                pos += gen_names_[found].size();
                item = rmul(identity(), found);
            }
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (start == pos) throw InvalidInput("missing exponent in word '" + std::string(text) + "'");
                item = power(item, std::stol(s.substr(start, pos - start)));
            }
            w = multiply(w, item);
        }
        return w;
    };
    ElementId w = seq();
    if (pos != s.size()) throw InvalidInput("unbalanced parentheses in word '" + std::string(text) + "'");
    return w;
}

std::optional<ElementId> CoxeterGroup::from_points(const Perm& p) const
{
    auto it = index_.find(key_of(p));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

unsigned CoxeterGroup::right_descents(ElementId w) const
{
    unsigned d = 0;
    for (int s = 0; s < rank_; ++s)
        if (length_[rmul(w, s)] < length_[w]) d |= 1u << s;
    return d;
}

unsigned CoxeterGroup::left_descents(ElementId w) const
{
    unsigned d = 0;
    for (int s = 0; s < rank_; ++s)
        if (length_[lmul(s, w)] < length_[w]) d |= 1u << s;
    return d;
}

std::vector<ElementId> CoxeterGroup::reflections() const
{
    std::vector<ElementId> r;
    for (int s = 0; s < rank_; ++s) {
        int c = class_of(rmul(identity(), s));
        for (ElementId w : class_elems_[c]) r.push_back(w);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::vector<ElementId> CoxeterGroup::involutions() const
{
    std::vector<ElementId> r;
    for (ElementId w = 0; w < size(); ++w)
        if (inv_[w] == w) r.push_back(w);
    return r;
}

int CoxeterGroup::generator_parity(ElementId w, int s) const
{
    int c = 0;
    for (int t : word_[w])
        if (t == s) ++c;
    return c & 1;
}

Element CoxeterGroup::element(ElementId w) const
{
    const Perm& p = pts_[w];
    int n = type_.n;
    switch (type_.family) {
    case Family::A: return std::vector<int>(p.begin(), p.end());
    case Family::BC:
    case Family::D: {
        SignedPerm sp;
        for (int i = 0; i < n; ++i) sp.image.push_back(p[i] < n ? p[i] + 1 : -(p[i] - n + 1));
        return sp;
    }
    case Family::I2: {
        const auto& wd = word_[w];
        long len = static_cast<long>(wd.size());
        DihedralElem d;
        d.reflection = len % 2 == 1;
        bool starts_r = len == 0 || wd[0] == 0;
        if (!d.reflection)
            d.rotation = starts_r ? len / 2 : -len / 2;
        else
            d.rotation = starts_r ? (len - 1) / 2 : -(len + 1) / 2;
        d.rotation = ((d.rotation % n) + n) % n;
        return d;
    }
    case Family::H3:
    case Family::H4: {
        int r = rank_;
        Matrix<GoldenRational> m(r, r);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) m(i, j) = golden_roots_[p[j]][i];
        return m;
    }
    }
    return {};
}

Matrix<Cyclo> CoxeterGroup::geometric_matrix(ElementId w) const
{
    const Perm& p = pts_[w];
    int n = type_.n;
    switch (type_.family) {
    case Family::A: {
        // basis a_i = e_i - e_{i+1}
        Matrix<Cyclo> m(n, n);
        for (int j = 0; j < n; ++j) {
            int a = p[j], b = p[j + 1];
            int lo = std::min(a, b), hi = std::max(a, b);
            Cyclo sign(a < b ? 1 : -1);
            for (int i = lo; i < hi; ++i) m(i, j) = sign;
        }
        return m;
    }
    case Family::BC:
    case Family::D: {
        Matrix<Cyclo> m(n, n);
        for (int j = 0; j < n; ++j) {
            if (p[j] < n)
                m(p[j], j) = Cyclo(1);
            else
                m(p[j] - n, j) = Cyclo(-1);
        }
        return m;
    }
    case Family::I2: {
        Matrix<Cyclo> m(2, 2);
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 2; ++i) m(i, j) = roots_[p[j]][i];
        return m;
    }
    case Family::H3:
    case Family::H4: {
        auto gm = std::get<Matrix<GoldenRational>>(element(w));
        return gm.map([](const GoldenRational& x) { return x.to_cyclo(); });
    }
    }
    return {};
}

namespace {

struct CycleData {
    int length;
    bool negative;
};

std::vector<CycleData> signed_cycles(const Perm& p, int n)
{
    std::vector<CycleData> out;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        bool neg = false;
        int j = i;
        do {
            seen[j] = 1;
            ++len;
            int img = p[j];
            if (img >= n) {
                neg = !neg;
                img -= n;
            }
            j = img;
        } while (j != i);
        out.push_back({len, neg});
    }
    return out;
}

} // namespace

std::vector<std::pair<int, bool>> CoxeterGroup::signed_cycle_type(ElementId w) const
{
    if (!type_.classical()) throw std::logic_error("signed_cycle_type: classical types only");
    int pts = type_.family == Family::A ? type_.n + 1 : type_.n;
    std::vector<std::pair<int, bool>> out;
    for (const auto& cy : signed_cycles(pts_[w], pts)) out.push_back({cy.length, cy.negative});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    return out;
}

int CoxeterGroup::neg_eigen_dim(ElementId w) const
{
    const Perm& p = pts_[w];
    int n = type_.n;
    switch (type_.family) {
    case Family::A: {
        int c = 0;
        for (const auto& cy : signed_cycles(p, n + 1))
            if (cy.length % 2 == 0) ++c;
        return c;
    }
    case Family::BC:
    case Family::D: {
        int c = 0;
        for (const auto& cy : signed_cycles(p, n))
            if ((!cy.negative && cy.length % 2 == 0) || (cy.negative && cy.length % 2 == 1)) ++c;
        return c;
    }
    case Family::H3:
    case Family::H4: {
        auto gm = std::get<Matrix<GoldenRational>>(element(w));
        return rank_ - static_cast<int>(coxfs::rank(gm + Matrix<GoldenRational>::identity(rank_)));
    }
    case Family::I2: {
        auto m = geometric_matrix(w);
        return 2 - static_cast<int>(coxfs::rank(m + Matrix<Cyclo>::identity(2)));
    }
    }
    return 0;
}

CycloPoly CoxeterGroup::det_one_minus_xw(ElementId w) const
{
    const Perm& p = pts_[w];
    int n = type_.n;
    auto binom = [](int len, bool negative) {
        std::vector<Cyclo> c(len + 1, Cyclo(0));
        c[0] = Cyclo(1);
        c[len] = Cyclo(negative ? 1 : -1);
        return CycloPoly(std::move(c));
    };
    switch (type_.family) {
    case Family::A: {
        CycloPoly d(Cyclo(1));
        for (const auto& cy : signed_cycles(p, n + 1)) d *= binom(cy.length, false);
        return exact_div(d, binom(1, false));
    }
    case Family::BC:
    case Family::D: {
        CycloPoly d(Cyclo(1));
        for (const auto& cy : signed_cycles(p, n)) d *= binom(cy.length, cy.negative);
        return d;
    }
    case Family::H3:
    case Family::H4: {
        auto gm = std::get<Matrix<GoldenRational>>(element(w));
        return det_one_minus_x(gm).map([](const GoldenRational& x) { return x.to_cyclo(); });
    }
    case Family::I2: return det_one_minus_x(geometric_matrix(w));
    }
    return {};
}

} // namespace coxfs
