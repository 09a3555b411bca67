#include "coxfs/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace coxfs {

std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Bipartition> bipartitions(int n)
{
    std::vector<Bipartition> out;
    for (int a = n; a >= 0; --a)
        for (const auto& alpha : partitions(a))
            for (const auto& beta : partitions(n - a)) out.push_back({alpha, beta});
    return out;
}

int size(const Partition& p)
{
    int s = 0;
    for (int x : p) s += x;
    return s;
}

int part(const Partition& p, int i)
{
    return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

Partition transpose(const Partition& p)
{
    Partition t;
    int cols = p.empty() ? 0 : p[0];
    for (int j = 1; j <= cols; ++j) {
        int c = 0;
        for (int x : p)
            if (x >= j) ++c;
        t.push_back(c);
    }
    return t;
}

Partition intersect(const Partition& a, const Partition& b)
{
    Partition r;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) r.push_back(std::min(a[i], b[i]));
    return r;
}

bool contained(const Partition& alpha, const Partition& beta)
{
    if (alpha.size() > beta.size()) return false;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > beta[i]) return false;
    return true;
}

int odd_columns(const Partition& p)
{
    int c = 0;
    for (int x : transpose(p))
        if (x % 2) ++c;
    return c;
}

std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::string to_string(const Bipartition& b) { return "(" + to_string(b.alpha) + "," + to_string(b.beta) + ")"; }

int d_stat(const Partition& alpha, const Partition& beta)
{
    Partition at = transpose(alpha);
    int bound = static_cast<int>(std::max({alpha.size(), beta.size(), at.size()})) + 2;
    int bound_j = std::max(part(alpha, 1), part(beta, 1)) + 2;
    int c = 0;
    for (int i = 1; i <= bound; ++i)
        for (int j = 1; j <= bound_j; ++j)
            if (i == part(at, j) && j == part(beta, i)) ++c;
    return c;
}

int d_stat_rows(const Partition& alpha, const Partition& beta)
{
    int c = 0;
    int rows = static_cast<int>(std::max(alpha.size(), beta.size()));
    for (int i = 1; i <= rows; ++i) {
        int b = part(beta, i);
        if (part(alpha, i + 1) < b && b <= part(alpha, i)) ++c;
    }
    return c;
}

int skew_components(const Partition& alpha, const Partition& beta)
{
    if (!contained(alpha, beta)) throw std::invalid_argument("skew_components: alpha not contained in beta");
    int rows = static_cast<int>(beta.size());
    // cells (i,j), 1-based, with part(alpha,i) < j <= beta_i
    std::vector<std::vector<int>> seen(rows + 2);
    for (int i = 1; i <= rows; ++i) seen[i].assign(beta[i - 1] + 2, 0);
    auto in_skew = [&](int i, int j) { return i >= 1 && i <= rows && j > part(alpha, i) && j <= beta[i - 1]; };
    int comps = 0;
    for (int i = 1; i <= rows; ++i)
        for (int j = part(alpha, i) + 1; j <= beta[i - 1]; ++j) {
            if (seen[i][j]) continue;
            ++comps;
            std::vector<std::pair<int, int>> stack{{i, j}};
            seen[i][j] = 1;
            while (!stack.empty()) {
                auto [a, b] = stack.back();
                stack.pop_back();
                const int da[] = {1, -1, 0, 0}, db[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    int x = a + da[k], y = b + db[k];
                    if (in_skew(x, y) && !seen[x][y]) {
                        seen[x][y] = 1;
                        stack.push_back({x, y});
                    }
                }
            }
        }
    return comps;
}

int f_stat(const Partition& alpha, const Partition& beta)
{
    int c = 0;
    int rows = static_cast<int>(std::max(alpha.size(), beta.size()));
    for (int i = 1; i <= rows; ++i)
        if (part(alpha, i) != part(beta, i)) ++c;
    return c;
}

bool skew_has_2x2(const Partition& alpha, const Partition& beta)
{
    auto in_skew = [&](int i, int j) { return j > part(alpha, i) && j <= part(beta, i); };
    for (int i = 1; i < static_cast<int>(beta.size()); ++i)
        for (int j = 1; j < part(beta, i); ++j)
            if (in_skew(i, j) && in_skew(i, j + 1) && in_skew(i + 1, j) && in_skew(i + 1, j + 1)) return true;
    return false;
}

bool special_bc(const Partition& alpha, const Partition& beta)
{
    int rows = static_cast<int>(std::max(alpha.size(), beta.size())) + 1;
    for (int i = 1; i <= rows; ++i)
        if (part(beta, i) > part(alpha, i) + 1) return false;
    Partition at = transpose(alpha), bt = transpose(beta);
    int cols = static_cast<int>(std::max(at.size(), bt.size())) + 1;
    for (int i = 1; i <= cols; ++i)
        if (part(at, i) > part(bt, i) + 1) return false;
    return true;
}

namespace {

bool interleaved(const std::vector<int>& first, const std::vector<int>& second)
{
    // first_1 <= second_1 <= first_2 <= second_2 <= ...
    std::vector<int> seq;
    for (std::size_t i = 0; i < std::max(first.size(), second.size()); ++i) {
        if (i < first.size()) seq.push_back(first[i]);
        if (i < second.size()) seq.push_back(second[i]);
    }
    return std::is_sorted(seq.begin(), seq.end());
}

int symbol_size(const Partition& alpha, const Partition& beta)
{
    return static_cast<int>(std::max(alpha.size(), beta.size())) + 1;
}

} // namespace

bool special_bc_symbol(const Partition& alpha, const Partition& beta)
{
    Symbol s = symbol_bc(alpha, beta, symbol_size(alpha, beta));
    return interleaved(s.top, s.bottom);
}

bool special_d(const Partition& alpha, const Partition& beta)
{
    if (alpha == beta) return true;
    if (contained(alpha, beta)) return !skew_has_2x2(alpha, beta);
    if (contained(beta, alpha)) return !skew_has_2x2(beta, alpha);
    return false;
}

bool special_d_symbol(const Partition& alpha, const Partition& beta)
{
    Symbol s = symbol_d(alpha, beta, symbol_size(alpha, beta));
    return interleaved(s.top, s.bottom) || interleaved(s.bottom, s.top);
}

bool special_d_rows(const Partition& alpha, const Partition& beta)
{
    if (alpha == beta) return true;
    auto check = [](const Partition& a, const Partition& b) {
        int rows = static_cast<int>(std::max(a.size(), b.size())) + 1;
        for (int i = 1; i <= rows; ++i)
            if (part(a, i) > part(b, i) || part(b, i + 1) > part(a, i) + 1) return false;
        return true;
    };
    return check(alpha, beta) || check(beta, alpha);
}

Symbol symbol_bc(const Partition& alpha, const Partition& beta, int m)
{
    if (static_cast<int>(alpha.size()) > m + 1 || static_cast<int>(beta.size()) > m)
        throw std::invalid_argument("symbol_bc: m too small");
    Symbol s;
    for (int i = 1; i <= m + 1; ++i) s.top.push_back(part(alpha, m + 1 - (i - 1)) + (i - 1));
    for (int i = 1; i <= m; ++i) s.bottom.push_back(part(beta, m - (i - 1)) + (i - 1));
    return s;
}

Symbol symbol_d(const Partition& alpha, const Partition& beta, int m)
{
    if (static_cast<int>(alpha.size()) > m || static_cast<int>(beta.size()) > m)
        throw std::invalid_argument("symbol_d: m too small");
    Symbol s;
    for (int i = 1; i <= m; ++i) {
        s.top.push_back(part(alpha, m - (i - 1)) + (i - 1));
        s.bottom.push_back(part(beta, m - (i - 1)) + (i - 1));
    }
    return s;
}

std::vector<int> symbol_entries(const Symbol& s)
{
    std::vector<int> e = s.top;
    e.insert(e.end(), s.bottom.begin(), s.bottom.end());
    std::sort(e.begin(), e.end());
    return e;
}

int symbol_singles(const Symbol& s)
{
    std::map<int, int> count;
    for (int x : s.top) ++count[x];
    for (int x : s.bottom) ++count[x];
    int c = 0;
    for (auto& [x, k] : count)
        if (k == 1) ++c;
    return c;
}

int symbol_bottom_only(const Symbol& s)
{
    int c = 0;
    for (int x : s.bottom)
        if (std::find(s.top.begin(), s.top.end(), x) == s.top.end()) ++c;
    return c;
}

int family_gamma_rank(SymbolKind kind, int singles)
{
    if (kind == SymbolKind::BC) return (singles - 1) / 2;
    return singles == 0 ? 0 : singles / 2 - 1;
}

long family_irr_count(SymbolKind kind, int singles)
{
    if (kind == SymbolKind::BC) return binomial(singles, singles / 2).get_si();
    // unordered pairs; a degenerate symbol gives two characters, each its own family
    return singles == 0 ? 1 : binomial(singles, singles / 2).get_si() / 2;
}

namespace {

long sigma(int k)
{
    long s = 0;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += d;
    return s;
}

} // namespace

std::vector<BigInt> mgamma_sn_euler(int max)
{
    // b_n = (1/n) sum_{k=1}^n c_k b_{n-k}, c_k = sum_{d|k} d sigma(d)
    std::vector<BigInt> b(max + 1);
    b[0] = 1;
    std::vector<BigInt> c(max + 1);
    for (int k = 1; k <= max; ++k)
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) c[k] += BigInt(d) * sigma(d);
    for (int n = 1; n <= max; ++n) {
        BigInt s = 0;
        for (int k = 1; k <= n; ++k) s += c[k] * b[n - k];
        b[n] = s / n;
    }
    return b;
}

BigInt mgamma_sn_labeled(int n)
{
    // a labeled partition is a multiset of labeled parts (k, d, i) with d | k, 1 <= i <= d
    struct Label {
        int k, d, i;
    };
    std::vector<Label> labels;
    for (int k = 1; k <= n; ++k)
        for (int d = 1; d <= k; ++d)
            if (k % d == 0)
                for (int i = 1; i <= d; ++i) labels.push_back({k, d, i});
    BigInt count = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int rest) {
        if (rest == 0) {
            ++count;
            return;
        }
        for (std::size_t l = from; l < labels.size(); ++l)
            if (labels[l].k <= rest) rec(l, rest - labels[l].k);
    };
    rec(0, n);
    return count;
}

} // namespace coxfs
