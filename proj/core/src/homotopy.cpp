#include "sstk/homotopy.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace sstk {

ChainComplex normalized_chains(const SimplicialSet& X) {
    auto flags = X.nondegenerate_flags();
    ChainComplex C;
    C.top = X.trunc_dim;
    C.ranks.resize(static_cast<size_t>(C.top) + 1);
    C.basis.resize(static_cast<size_t>(C.top) + 1);
    std::vector<std::vector<int>> dense(static_cast<size_t>(C.top) + 1);
    for (int n = 0; n <= C.top; ++n) {
        dense[static_cast<size_t>(n)].assign(static_cast<size_t>(X.size(n)), -1);
        for (int s = 0; s < X.size(n); ++s)
            if (flags[static_cast<size_t>(n)][static_cast<size_t>(s)]) {
                dense[static_cast<size_t>(n)][static_cast<size_t>(s)] =
                    static_cast<int>(C.basis[static_cast<size_t>(n)].size());
                C.basis[static_cast<size_t>(n)].push_back(s);
            }
        C.ranks[static_cast<size_t>(n)] = static_cast<int>(C.basis[static_cast<size_t>(n)].size());
    }
    C.boundaries.resize(static_cast<size_t>(C.top) + 1);
    for (int n = 1; n <= C.top; ++n) {
        Matrix M(static_cast<size_t>(C.ranks[static_cast<size_t>(n) - 1]),
                 std::vector<Int>(static_cast<size_t>(C.ranks[static_cast<size_t>(n)]), 0));
        for (int col = 0; col < C.ranks[static_cast<size_t>(n)]; ++col) {
            int s = C.basis[static_cast<size_t>(n)][static_cast<size_t>(col)];
            for (int i = 0; i <= n; ++i) {
                int f = X.face(n, s, i);
                int row = dense[static_cast<size_t>(n) - 1][static_cast<size_t>(f)];
                if (row < 0) continue;  // degenerate face contributes nothing
                M[static_cast<size_t>(row)][static_cast<size_t>(col)] += (i % 2 == 0) ? 1 : -1;
            }
        }
        C.boundaries[static_cast<size_t>(n)] = std::move(M);
    }
    return C;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    size_t r = A.size();
    size_t mid = B.size();
    size_t c = mid ? B[0].size() : 0;
    Matrix R(r, std::vector<Int>(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < mid; ++k) {
            if (A[i][k] == 0) continue;
            for (size_t j = 0; j < c; ++j) R[i][j] += A[i][k] * B[k][j];
        }
    return R;
}

void check_boundary_squares_to_zero(const ChainComplex& C) {
    for (int n = 2; n <= C.top; ++n) {
        Matrix P = matmul(C.boundaries[static_cast<size_t>(n) - 1],
                          C.boundaries[static_cast<size_t>(n)]);
        for (const auto& row : P)
            for (const auto& v : row)
                if (v != 0)
                    throw integrity_error("chain complex: boundary does not square to zero");
    }
}

namespace {

Matrix identity_matrix(size_t n) {
    Matrix I(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SmithResult smith_normal_form(const Matrix& A) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    SmithResult R;
    R.D = A;
    R.U = identity_matrix(rows);
    R.V = identity_matrix(cols);
    Matrix& D = R.D;
    Matrix& U = R.U;
    Matrix& V = R.V;

    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (auto& row : D) std::swap(row[a], row[b]);
        for (auto& row : V) std::swap(row[a], row[b]);
    };
    auto add_row = [&](size_t dst, size_t src, const Int& q) {  // row_dst += q*row_src
        for (size_t j = 0; j < cols; ++j) D[dst][j] += q * D[src][j];
        for (size_t j = 0; j < rows; ++j) U[dst][j] += q * U[src][j];
    };
    auto add_col = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < rows; ++i) D[i][dst] += q * D[i][src];
        for (size_t i = 0; i < cols; ++i) V[i][dst] += q * V[i][src];
    };
    auto negate_row = [&](size_t r) {
        for (auto& v : D[r]) v = -v;
        for (auto& v : U[r]) v = -v;
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: minimal absolute nonzero in the remaining block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (D[i][j] != 0 &&
                    (!found || abs_int(D[i][j]) < abs_int(D[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (D[i][t] == 0) continue;
            Int q = D[i][t] / D[t][t];
            if (q != 0) add_row(i, t, -q);
            if (D[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (D[t][j] == 0) continue;
            Int q = D[t][j] / D[t][t];
            if (q != 0) add_col(j, t, -q);
            if (D[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; pick a smaller pivot again

        // divisibility: D[t][t] must divide the rest of the block
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols && divides; ++j)
                if (D[i][j] % D[t][t] != 0) {
                    add_row(t, i, 1);  // fold the offending row in and redo
                    divides = false;
                }
        if (!divides) continue;
        if (D[t][t] < 0) negate_row(t);
        ++t;
    }
    R.rank = static_cast<int>(t);
    for (size_t i = 0; i < t; ++i) R.diag.push_back(D[i][i]);
    return R;
}

std::vector<AbelianGroup> homology(const ChainComplex& C, int max_deg) {
    if (max_deg < 0 || max_deg >= C.top)
        throw input_error("homology: max_deg needs the boundary one degree above; "
                          "insufficient truncation");
    std::vector<SmithResult> snf(static_cast<size_t>(max_deg) + 2);
    for (int n = 1; n <= max_deg + 1; ++n)
        snf[static_cast<size_t>(n)] = smith_normal_form(C.boundaries[static_cast<size_t>(n)]);
    std::vector<AbelianGroup> out;
    for (int k = 0; k <= max_deg; ++k) {
        AbelianGroup G;
        int rank_in = (k >= 1) ? snf[static_cast<size_t>(k)].rank : 0;
        int rank_out = snf[static_cast<size_t>(k) + 1].rank;
        G.betti = C.ranks[static_cast<size_t>(k)] - rank_in - rank_out;
        for (const Int& d : snf[static_cast<size_t>(k) + 1].diag)
            if (d > 1) G.torsion.push_back(d);
        out.push_back(std::move(G));
    }
    return out;
}

bool is_connected(const SimplicialSet& X) {
    int V = X.size(0);
    if (V == 0) return false;
    std::vector<int> parent(static_cast<size_t>(V));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    if (X.trunc_dim >= 1)
        for (int e = 0; e < X.size(1); ++e)
            parent[static_cast<size_t>(find(X.face(1, e, 0)))] = find(X.face(1, e, 1));
    int root = find(0);
    for (int v = 1; v < V; ++v)
        if (find(v) != root) return false;
    return true;
}

GroupPresentation pi1_presentation(const SimplicialSet& X, int basepoint) {
    if (X.trunc_dim < 2)
        throw input_error("pi1_presentation: needs 2-simplices within the truncation");
    if (basepoint < 0 || basepoint >= X.size(0))
        throw input_error("pi1_presentation: basepoint out of range");
    if (!is_connected(X)) throw input_error("pi1_presentation: space is not connected");

    auto flags = X.nondegenerate_flags();
    int V = X.size(0);
    // BFS spanning tree over nondegenerate edges
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(V));  // (other, edge)
    std::vector<int> nondeg_edges;
    for (int e = 0; e < X.size(1); ++e) {
        if (!flags[1][static_cast<size_t>(e)]) continue;
        nondeg_edges.push_back(e);
        int tgt = X.face(1, e, 0), src = X.face(1, e, 1);
        adj[static_cast<size_t>(src)].push_back({tgt, e});
        adj[static_cast<size_t>(tgt)].push_back({src, e});
    }
    std::vector<char> seen(static_cast<size_t>(V), 0);
    std::vector<char> in_tree(static_cast<size_t>(X.size(1)), 0);
    std::deque<int> bfs{basepoint};
    seen[static_cast<size_t>(basepoint)] = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (auto [w, e] : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                in_tree[static_cast<size_t>(e)] = 1;
                bfs.push_back(w);
            }
    }
    GroupPresentation P;
    std::vector<int> gen_of_edge(static_cast<size_t>(X.size(1)), 0);
    for (int e : nondeg_edges)
        if (!in_tree[static_cast<size_t>(e)]) {
            gen_of_edge[static_cast<size_t>(e)] = ++P.num_generators;  // 1-based
            P.generator_edges.push_back(e);
        }
    auto letter = [&](int e) { return gen_of_edge[static_cast<size_t>(e)]; };  // 0 if trivial
    for (int T = 0; T < X.size(2); ++T) {
        if (!flags[2][static_cast<size_t>(T)]) continue;
        std::vector<int> w;
        if (int l = letter(X.face(2, T, 2)); l) w.push_back(l);
        if (int l = letter(X.face(2, T, 0)); l) w.push_back(l);
        if (int l = letter(X.face(2, T, 1)); l) w.push_back(-l);
        P.relators.push_back(std::move(w));
    }
    return P;
}

// --- group triviality ----------------------------------------------------------

namespace {

std::vector<int> free_reduce(const std::vector<int>& w) {
    std::vector<int> out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

std::vector<int> cyclic_reduce(std::vector<int> w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(w);
    }
    return w;
}

struct Simplified {
    int generators = 0;
    std::vector<std::vector<int>> relators;
    bool used_idempotent_rule = false;
};

// Free/cyclic reduction, the dedicated idempotent rule x*x = x => x = 1,
// and elimination of generators forced trivial by length-1 relators.
Simplified tietze_simplify(const GroupPresentation& P) {
    Simplified S;
    S.generators = P.num_generators;
    S.relators = P.relators;
    std::vector<char> dead(static_cast<size_t>(P.num_generators) + 1, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> next;
        for (auto& r : S.relators) {
            std::vector<int> w;
            for (int l : r)
                if (!dead[static_cast<size_t>(std::abs(l))]) w.push_back(l);
            // dedicated idempotent detection on the raw word: x x x^{-1}
            if (w.size() == 3 && w[0] == w[1] && w[2] == -w[0]) {
                S.used_idempotent_rule = true;
                w = {w[0]};
            }
            w = cyclic_reduce(w);
            if (w.empty()) continue;
            if (w.size() == 1) {
                if (!dead[static_cast<size_t>(std::abs(w[0]))]) {
                    dead[static_cast<size_t>(std::abs(w[0]))] = 1;
                    changed = true;
                }
                continue;
            }
            next.push_back(std::move(w));
        }
        S.relators = std::move(next);
    }
    int live = 0;
    std::vector<int> rename(static_cast<size_t>(P.num_generators) + 1, 0);
    for (int g = 1; g <= P.num_generators; ++g)
        if (!dead[static_cast<size_t>(g)]) rename[static_cast<size_t>(g)] = ++live;
    for (auto& r : S.relators)
        for (int& l : r) l = (l > 0 ? 1 : -1) * rename[static_cast<size_t>(std::abs(l))];
    S.generators = live;
    return S;
}

// Coset enumeration over the trivial subgroup; returns the group order if the
// table closes within the budget, 0 otherwise.
long long todd_coxeter(int generators, const std::vector<std::vector<int>>& relators,
                       int budget) {
    if (generators == 0) return 1;
    int cols = 2 * generators;  // column 2g = generator g+1, 2g+1 = its inverse
    auto col_of = [&](int letter) {
        int g = std::abs(letter) - 1;
        return 2 * g + (letter > 0 ? 0 : 1);
    };
    auto inv_col = [&](int c) { return c ^ 1; };
    std::vector<std::vector<int>> table;
    std::vector<int> rep;  // union-find over cosets
    auto new_coset = [&]() {
        table.emplace_back(static_cast<size_t>(cols), -1);
        rep.push_back(static_cast<int>(rep.size()));
        return static_cast<int>(rep.size()) - 1;
    };
    std::function<int(int)> find = [&](int a) {
        while (rep[static_cast<size_t>(a)] != a) {
            rep[static_cast<size_t>(a)] = rep[static_cast<size_t>(rep[static_cast<size_t>(a)])];
            a = rep[static_cast<size_t>(a)];
        }
        return a;
    };
    std::deque<std::pair<int, int>> coincidences;
    auto merge = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) coincidences.push_back({a, b});
    };
    auto set_entry = [&](int c, int col, int d) {
        c = find(c);
        d = find(d);
        int& slot = table[static_cast<size_t>(c)][static_cast<size_t>(col)];
        if (slot == -1) slot = d;
        else merge(slot, d);
        int& back = table[static_cast<size_t>(d)][static_cast<size_t>(inv_col(col))];
        if (back == -1) back = c;
        else merge(back, c);
    };
    auto process_coincidences = [&]() {
        while (!coincidences.empty()) {
            auto [a, b] = coincidences.front();
            coincidences.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            rep[static_cast<size_t>(b)] = a;
            for (int col = 0; col < cols; ++col) {
                int d = table[static_cast<size_t>(b)][static_cast<size_t>(col)];
                if (d != -1) set_entry(a, col, d);
            }
        }
    };
    new_coset();
    bool progress = true;
    while (progress) {
        progress = false;
        // scan all relators at all live cosets, filling gaps with new cosets
        for (int c = 0; c < static_cast<int>(table.size()); ++c) {
            if (find(c) != c) continue;
            for (const auto& r : relators) {
                int cur = c;
                for (size_t p = 0; p < r.size(); ++p) {
                    cur = find(cur);
                    int col = col_of(r[p]);
                    int nxt = table[static_cast<size_t>(cur)][static_cast<size_t>(col)];
                    if (nxt == -1) {
                        if (static_cast<int>(table.size()) >= budget) return 0;
                        if (p + 1 == r.size()) {
                            set_entry(cur, col, c);  // close the cycle
                        } else {
                            int fresh = new_coset();
                            set_entry(cur, col, fresh);
                        }
                        progress = true;
                        process_coincidences();
                        nxt = table[static_cast<size_t>(find(cur))][static_cast<size_t>(col)];
                        if (nxt == -1) break;  // re-scan later
                    } else if (p + 1 == r.size()) {
                        merge(nxt, c);
                        process_coincidences();
                    }
                    cur = nxt;
                }
            }
        }
        // every live coset needs every generator defined
        for (int c = 0; c < static_cast<int>(table.size()); ++c) {
            if (find(c) != c) continue;
            for (int col = 0; col < cols; ++col)
                if (table[static_cast<size_t>(c)][static_cast<size_t>(col)] == -1) {
                    if (static_cast<int>(table.size()) >= budget) return 0;
                    int fresh = new_coset();
                    set_entry(c, col, fresh);
                    process_coincidences();
                    progress = true;
                }
        }
    }
    long long live = 0;
    for (int c = 0; c < static_cast<int>(table.size()); ++c)
        if (find(c) == c) ++live;
    return live;
}

}  // namespace

TrivialityResult is_trivial_group(const GroupPresentation& P, int budget) {
    Simplified S = tietze_simplify(P);
    if (S.generators == 0) {
        return {Triviality::trivial, S.used_idempotent_rule
                                         ? "tietze simplification with idempotent rule"
                                         : "tietze simplification"};
    }
    // abelianization: coker of the exponent matrix
    Matrix E(static_cast<size_t>(S.generators),
             std::vector<Int>(std::max<size_t>(S.relators.size(), 1), 0));
    for (size_t j = 0; j < S.relators.size(); ++j)
        for (int l : S.relators[j])
            E[static_cast<size_t>(std::abs(l)) - 1][j] += (l > 0) ? 1 : -1;
    SmithResult snf = smith_normal_form(E);
    bool ab_trivial = (snf.rank == S.generators);
    for (const Int& d : snf.diag)
        if (abs_int(d) != 1) ab_trivial = false;
    if (!ab_trivial) return {Triviality::nontrivial, "abelianization is nontrivial"};
    long long order = todd_coxeter(S.generators, S.relators, budget);
    if (order == 1) return {Triviality::trivial, "coset enumeration closed at index 1"};
    if (order > 1)
        return {Triviality::nontrivial,
                "coset enumeration closed at order " + std::to_string(order)};
    return {Triviality::unknown, "coset enumeration budget exhausted"};
}

ContractibilityReport contractibility_probe(const SimplicialSet& X, int max_deg, int budget) {
    ContractibilityReport rep;
    rep.max_deg = max_deg;
    rep.connected = is_connected(X);
    ChainComplex C = normalized_chains(X);
    rep.groups = homology(C, max_deg);
    rep.reduced_homology_trivial = rep.connected;
    if (rep.groups[0].betti != 1 || !rep.groups[0].torsion.empty())
        rep.reduced_homology_trivial = false;
    for (int k = 1; k <= max_deg; ++k)
        if (!rep.groups[static_cast<size_t>(k)].trivial()) rep.reduced_homology_trivial = false;
    if (rep.connected && X.trunc_dim >= 2) {
        rep.pi1 = is_trivial_group(pi1_presentation(X, 0), budget).verdict;
    } else {
        rep.pi1 = Triviality::unknown;
    }
    rep.pass = rep.connected && rep.reduced_homology_trivial && rep.pi1 == Triviality::trivial;
    if (rep.pass) {
        rep.verdict = "contractible up to degree " + std::to_string(max_deg) +
                      " (necessary conditions only)";
    } else {
        rep.verdict = "not certified up to degree " + std::to_string(max_deg);
        if (!rep.connected) rep.verdict += "; not connected";
        if (!rep.reduced_homology_trivial) rep.verdict += "; reduced homology nonzero";
        if (rep.pi1 == Triviality::nontrivial) rep.verdict += "; pi1 nontrivial";
        if (rep.pi1 == Triviality::unknown) rep.verdict += "; pi1 undecided";
    }
    return rep;
}

}  // namespace sstk
