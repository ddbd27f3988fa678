#include "knotlineage/link_diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <set>
#include <utility>

#include "knotlineage/errors.hpp"

namespace knotlineage {

namespace {

constexpr std::array<int, 4> kThrough{2, 3, 0, 1};  // straight-through slot pairing

// Connected pieces of the underlying 4-valent map, by crossing.
std::pair<std::vector<int>, int> map_components(const LinkDiagram& d) {
    int n = d.crossings();
    std::vector<int> comp(n, -1);
    int k = 0;
    for (int c0 = 0; c0 < n; ++c0) {
        if (comp[c0] >= 0) continue;
        std::vector<int> stack{c0};
        comp[c0] = k;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int p = 0; p < 4; ++p) {
                int c2 = d.mate[4 * c + p] >> 2;
                if (comp[c2] < 0) {
                    comp[c2] = k;
                    stack.push_back(c2);
                }
            }
        }
        ++k;
    }
    return {std::move(comp), k};
}

}  // namespace

int LinkDiagram::writhe() const {
    int w = 0;
    for (int c = 0; c < crossings(); ++c) w += sign(c);
    return w;
}

int LinkDiagram::components() const {
    int nd = 4 * crossings();
    std::vector<char> seen(nd, 0);
    int k = free_loops;
    for (int32_t d0 = 0; d0 < nd; ++d0) {
        if (seen[d0] || !is_in(d0)) continue;
        ++k;
        int32_t a = d0;
        do {
            seen[a] = 1;
            a = mate[next_out(a)];
        } while (a != d0);
    }
    return k;
}

void validate(const LinkDiagram& d) {
    int n = d.crossings();
    if (static_cast<int>(d.mate.size()) != 4 * n ||
        static_cast<int>(d.over_in.size()) != n)
        throw RealizabilityError("diagram: dart table size mismatch");
    if (d.free_loops < 0)
        throw RealizabilityError("diagram: negative loop count");
    for (int c = 0; c < n; ++c) {
        int u = d.under_in[c], o = d.over_in[c];
        if (u > 3 || o > 3 || ((u ^ o) & 1) == 0)
            throw RealizabilityError("diagram: strands must enter on adjacent slots");
    }
    for (int32_t x = 0; x < 4 * n; ++x) {
        int32_t m = d.mate[x];
        if (m < 0 || m >= 4 * n || m == x || d.mate[m] != x)
            throw RealizabilityError("diagram: edge pairing is not an involution");
        if (d.is_in(x) == d.is_in(m))
            throw RealizabilityError("diagram: edge with two heads or two tails");
    }
    if (n > 0) {
        // one sphere per connected piece of the map
        int k = map_components(d).second;
        if (face_count(d.mate) != n + 2 * k)
            throw RealizabilityError("diagram: not realizable on the sphere");
    }
}

LinkDiagram link_from(const Diagram& dg) {
    const Shadow& s = dg.shadow;
    validate(s);
    LinkDiagram L;
    if (s.n == 0) {
        L.free_loops = 1;
        return L;
    }
    L.mate = s.mate;
    L.under_in.assign(s.n, 0);
    L.over_in.assign(s.n, 0);
    Traversal t = trace(s, s.mate[0]);
    std::vector<char> incoming(4 * s.n, 0);
    for (int32_t a : t.in_darts) incoming[a] = 1;
    for (int c = 0; c < s.n; ++c) {
        int even_in = incoming[4 * c] ? 0 : 2;      // in-slot of strand {0,2}
        int odd_in = incoming[4 * c + 1] ? 1 : 3;   // in-slot of strand {1,3}
        bool even_over = ((dg.bits >> c) & 1) == 0;
        L.over_in[c] = static_cast<uint8_t>(even_over ? even_in : odd_in);
        L.under_in[c] = static_cast<uint8_t>(even_over ? odd_in : even_in);
    }
    return L;
}

Diagram diagram_from(const LinkDiagram& d) {
    int n = d.crossings();
    if (n == 0) {
        if (d.free_loops != 1) throw Error("diagram_from: not a single closed curve");
        return Diagram{Shadow{}, 0};
    }
    if (d.free_loops != 0 || d.components() != 1)
        throw Error("diagram_from: not a single closed curve");
    int32_t start = 0;
    while (!d.is_in(start)) ++start;
    std::vector<int> label(n, -1), first_slot(n, -1);
    std::vector<int> word;
    std::vector<uint8_t> wordbits(n, 0);
    uint32_t bits = 0;
    int next = 0;
    int32_t a = start;
    do {
        int c = a >> 2, p = a & 3;
        if (label[c] < 0) {
            label[c] = next++;
            first_slot[c] = p;
            if (p != d.over_in[c]) bits |= 1u << label[c];
        } else {
            wordbits[label[c]] = ((p - first_slot[c]) & 3) == 3;
        }
        word.push_back(label[c]);
        a = d.mate[d.next_out(a)];
    } while (a != start);
    return Diagram{shadow_from_word(word, wordbits), bits};
}

LinkDiagram link_from_pd(const std::string& pd) {
    std::vector<std::array<long, 4>> tup;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < pd.size() && std::isspace(static_cast<unsigned char>(pd[i]))) ++i;
    };
    skip_ws();
    while (i < pd.size()) {
        if (pd[i] != 'X') throw ParseError("pd: expected X[a,b,c,d] blocks");
        ++i;
        skip_ws();
        if (i >= pd.size() || pd[i] != '[') throw ParseError("pd: expected '[' after X");
        ++i;
        std::array<long, 4> e{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            size_t j = i;
            long v = 0;
            while (j < pd.size() && std::isdigit(static_cast<unsigned char>(pd[j]))) {
                v = v * 10 + (pd[j] - '0');
                ++j;
            }
            if (j == i || v > 1'000'000) throw ParseError("pd: expected an edge number");
            e[k] = v;
            i = j;
            skip_ws();
            char want = k < 3 ? ',' : ']';
            if (i >= pd.size() || pd[i] != want)
                throw ParseError(std::string("pd: expected '") + want + "'");
            ++i;
        }
        tup.push_back(e);
        skip_ws();
    }
    int n = static_cast<int>(tup.size());
    if (n == 0) throw ParseError("pd: empty code");
    long m = 2L * n;
    LinkDiagram L;
    L.under_in.assign(n, 0);
    L.over_in.assign(n, 0);
    for (int c = 0; c < n; ++c) {
        if (tup[c][2] != tup[c][0] % m + 1)
            throw ParseError("pd: under-strand edges must be consecutive");
        if (tup[c][3] == tup[c][1] % m + 1)
            L.over_in[c] = 1;
        else if (tup[c][1] == tup[c][3] % m + 1)
            L.over_in[c] = 3;
        else
            throw ParseError("pd: over-strand edges must be consecutive");
    }
    std::vector<int32_t> head(m + 1, -1), tail(m + 1, -1);
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            long e = tup[c][p];
            if (e < 1 || e > m) throw ParseError("pd: edge number out of range");
            bool incoming = p == 0 || p == L.over_in[c];
            int32_t& slot = incoming ? head[e] : tail[e];
            if (slot != -1) throw ParseError("pd: an edge repeats in the same direction");
            slot = 4 * c + p;
        }
    L.mate.assign(4 * n, -1);
    for (long e = 1; e <= m; ++e) {
        if (head[e] < 0 || tail[e] < 0)
            throw ParseError("pd: every edge must occur exactly twice");
        L.mate[head[e]] = tail[e];
        L.mate[tail[e]] = head[e];
    }
    validate(L);
    if (L.components() != 1)
        throw RealizabilityError("pd: expected a single closed curve");
    return L;
}

std::string pd_code(const LinkDiagram& d) {
    int n = d.crossings();
    if (n == 0 || d.free_loops != 0 || d.components() != 1)
        throw Error("pd code requires a single closed curve with a crossing");
    std::vector<long> num(4 * n, 0);
    int32_t a = d.under_in[0];
    for (long e = 1; e <= 2L * n; ++e) {
        num[a] = e;
        num[d.mate[a]] = e;
        a = d.mate[d.next_out(a)];
    }
    std::string out;
    for (int c = 0; c < n; ++c) {
        int u = d.under_in[c];
        out += "X[";
        for (int k = 0; k < 4; ++k) {
            if (k) out += ',';
            out += std::to_string(num[4 * c + ((u + k) & 3)]);
        }
        out += ']';
    }
    return out;
}

LinkDiagram link_from_braid(const std::vector<int>& word, int strands) {
    if (strands < 1) throw ParseError("braid: need at least one strand");
    int n = static_cast<int>(word.size());
    LinkDiagram L;
    L.mate.assign(4 * n, -1);
    std::vector<int32_t> dangling(strands, -1), first_in(strands, -1);
    auto consume = [&](int pos, int32_t in_dart) {
        if (dangling[pos] >= 0) {
            L.mate[dangling[pos]] = in_dart;
            L.mate[in_dart] = dangling[pos];
        } else {
            first_in[pos] = in_dart;
        }
    };
    for (int c = 0; c < n; ++c) {
        int letter = word[c];
        int i = letter < 0 ? -letter : letter;
        if (letter == 0 || i >= strands) throw ParseError("braid: letter out of range");
        // the crossing square, counterclockwise: 0 = SE, 1 = NE, 2 = NW, 3 = SW
        consume(i - 1, 4 * c + 3);
        consume(i, 4 * c + 0);
        dangling[i - 1] = 4 * c + 2;
        dangling[i] = 4 * c + 1;
        L.under_in.push_back(letter > 0 ? 0 : 3);
        L.over_in.push_back(letter > 0 ? 3 : 0);
    }
    for (int j = 0; j < strands; ++j) {
        if (first_in[j] < 0) {
            ++L.free_loops;  // strand untouched by the word
            continue;
        }
        L.mate[dangling[j]] = first_in[j];
        L.mate[first_in[j]] = dangling[j];
    }
    return L;
}

LinkDiagram mirror(const LinkDiagram& d) {
    LinkDiagram m = d;
    m.under_in.swap(m.over_in);
    return m;
}

LinkDiagram connect_sum(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.crossings() == 0 || b.crossings() == 0) {
        const LinkDiagram& big = a.crossings() ? a : b;
        const LinkDiagram& small = a.crossings() ? b : a;
        if (small.free_loops < 1) throw Error("connect sum with an empty diagram");
        LinkDiagram out = big;
        out.free_loops += small.free_loops - 1;
        return out;
    }
    auto first_in = [](const LinkDiagram& d) {
        int32_t x = 0;
        while (!d.is_in(x)) ++x;
        return x;
    };
    LinkDiagram out = a;
    int32_t off = 4 * a.crossings();
    out.mate.reserve(off + b.mate.size());
    for (int32_t x : b.mate) out.mate.push_back(x + off);
    out.under_in.insert(out.under_in.end(), b.under_in.begin(), b.under_in.end());
    out.over_in.insert(out.over_in.end(), b.over_in.begin(), b.over_in.end());
    out.free_loops += b.free_loops;
    int32_t xa = a.next_out(first_in(a)), ya = a.mate[xa];
    int32_t xb = b.next_out(first_in(b)), yb = b.mate[xb];
    out.mate[xa] = yb + off;
    out.mate[yb + off] = xa;
    out.mate[xb + off] = ya;
    out.mate[ya] = xb + off;
    return out;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int c) {
    if (c < 0 || c >= d.crossings()) throw Error("crossing index out of range");
    LinkDiagram out = d;
    std::swap(out.under_in[c], out.over_in[c]);
    return out;
}

namespace {

// Removes crossing c, reconnecting its four dart stubs according to `pr`
// (a fixed-point-free pairing of the slots); strands that close up entirely
// inside the crossing become free loops.
LinkDiagram excise(const LinkDiagram& d, int c, const std::array<int, 4>& pr) {
    int n = d.crossings();
    LinkDiagram out;
    out.free_loops = d.free_loops;
    out.under_in.reserve(n - 1);
    out.over_in.reserve(n - 1);
    for (int j = 0; j < n; ++j)
        if (j != c) {
            out.under_in.push_back(d.under_in[j]);
            out.over_in.push_back(d.over_in[j]);
        }
    out.mate.assign(4 * (n - 1), -1);
    auto in_c = [c](int32_t x) { return (x >> 2) == c; };
    auto renum = [c](int32_t x) {
        int cr = x >> 2;
        return 4 * (cr < c ? cr : cr - 1) + (x & 3);
    };
    std::array<char, 4> used{};
    for (int32_t x = 0; x < 4 * n; ++x) {
        if (in_c(x) || !in_c(d.mate[x])) continue;
        if (out.mate[renum(x)] != -1) continue;  // partner handled this chain
        int32_t y = d.mate[x];
        while (in_c(y)) {
            used[y & 3] = 1;
            int32_t z = 4 * c + pr[y & 3];
            used[z & 3] = 1;
            y = d.mate[z];
        }
        out.mate[renum(x)] = renum(y);
        out.mate[renum(y)] = renum(x);
    }
    for (int p = 0; p < 4; ++p) {
        if (used[p]) continue;  // a strand closed inside the crossing
        int32_t y = 4 * c + p;
        do {
            used[y & 3] = 1;
            int32_t z = 4 * c + pr[y & 3];
            used[z & 3] = 1;
            y = d.mate[z];
        } while (y != 4 * c + p);
        ++out.free_loops;
    }
    for (int32_t x = 0; x < 4 * n; ++x)
        if (!in_c(x) && !in_c(d.mate[x]) && out.mate[renum(x)] == -1)
            out.mate[renum(x)] = renum(d.mate[x]);
    return out;
}

}  // namespace

bool is_alternating(const LinkDiagram& d) {
    for (int32_t x = 0; x < 4 * d.crossings(); ++x)
        if (d.on_over_strand(x) == d.on_over_strand(d.mate[x])) return false;
    return true;
}

bool visibly_composite(const LinkDiagram& d) {
    int n = d.crossings();
    if (n < 2 || d.free_loops != 0 || d.components() != 1) return false;
    std::vector<int> seq;
    seq.reserve(2 * n);
    int32_t start = d.under_in[0], a = start;
    do {
        seq.push_back(a >> 2);
        a = d.mate[d.next_out(a)];
    } while (a != start);
    // A window is a summand when every crossing inside appears twice.
    std::vector<int> count(n, 0);
    for (int i = 0; i < 2 * n; ++i) {
        std::fill(count.begin(), count.end(), 0);
        int open = 0;
        for (int len = 1; len <= 2 * n - 2; ++len) {
            int c = seq[(i + len - 1) % (2 * n)];
            open += ++count[c] == 1 ? 1 : -1;
            if (open == 0) return true;
        }
    }
    return false;
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int c) {
    if (c < 0 || c >= d.crossings()) throw Error("crossing index out of range");
    int u = d.under_in[c], o = d.over_in[c];
    std::array<int, 4> pr{};
    pr[u] = o ^ 2;
    pr[o ^ 2] = u;
    pr[o] = u ^ 2;
    pr[u ^ 2] = o;
    return excise(d, c, pr);
}

int find_kink(const LinkDiagram& d) {
    for (int32_t x = 0; x < 4 * d.crossings(); ++x) {
        int32_t m = d.mate[x];
        if ((m >> 2) == (x >> 2) && ((x + 1) & 3) == (m & 3)) return x >> 2;
    }
    return -1;
}

LinkDiagram undo_kink(const LinkDiagram& d, int c) {
    if (c < 0 || c >= d.crossings()) throw Error("crossing index out of range");
    bool curled = false;
    for (int32_t x = 4 * c; x < 4 * c + 4; ++x) {
        int32_t m = d.mate[x];
        curled |= (m >> 2) == c && ((x + 1) & 3) == (m & 3);
    }
    if (!curled) throw Error("crossing carries no curl");
    return excise(d, c, kThrough);
}

Bigon find_pass_bigon(const LinkDiagram& d) {
    for (int32_t f = 0; f < 4 * d.crossings(); ++f) {
        int32_t g = dart_cw(d.mate[f]);
        if (dart_cw(d.mate[g]) != f) continue;
        int cf = f >> 2, cg = g >> 2;
        if (cf == cg) continue;
        bool over1 = d.on_over_strand(f) && d.on_over_strand(d.mate[f]);
        bool over2 = d.on_over_strand(g) && d.on_over_strand(d.mate[g]);
        if (over1 || over2) return {cf, cg};
    }
    return {};
}

LinkDiagram undo_bigon(const LinkDiagram& d, Bigon b) {
    bool found = false;
    for (int32_t f = 4 * b.cf; b.cf >= 0 && f < 4 * b.cf + 4 && !found; ++f) {
        int32_t g = dart_cw(d.mate[f]);
        if ((g >> 2) != b.cg || dart_cw(d.mate[g]) != f) continue;
        bool over1 = d.on_over_strand(f) && d.on_over_strand(d.mate[f]);
        bool over2 = d.on_over_strand(g) && d.on_over_strand(d.mate[g]);
        found = over1 || over2;
    }
    if (!found) throw Error("crossings do not bound a passing bigon");
    LinkDiagram out = excise(d, std::max(b.cf, b.cg), kThrough);
    return excise(out, std::min(b.cf, b.cg), kThrough);
}

std::vector<int32_t> r3_sides(const LinkDiagram& d) {
    std::vector<int32_t> sides;
    for (int32_t f1 = 0; f1 < 4 * d.crossings(); ++f1) {
        int32_t f2 = dart_cw(d.mate[f1]);
        int32_t f3 = dart_cw(d.mate[f2]);
        if (dart_cw(d.mate[f3]) != f1) continue;
        int c1 = f1 >> 2, c2 = f2 >> 2, c3 = f3 >> 2;
        if (c1 == c2 || c1 == c3 || c2 == c3) continue;
        if (d.on_over_strand(f1) == d.on_over_strand(d.mate[f1])) sides.push_back(f1);
    }
    return sides;
}

// The sliding strand runs stub -> c1 -> c2 -> stub before the move and
// stub -> c2 -> c1 -> stub after; likewise the other two strands swap the
// order of their triangle crossing and the opposite crossing c3.  Each
// crossing keeps its rotation, sign, and over/under data, so the whole move
// is a re-mating: three fresh internal edges on the far side of c3, and the
// six outside edges transferred to the slots vacated by the old internal
// ones.  `moved` rewrites an outside edge's endpoint when that endpoint is
// itself one of the six transfer slots (a bigon hugging the triangle).
LinkDiagram r3_move(const LinkDiagram& d, int32_t f1) {
    if (f1 < 0 || f1 >= 4 * d.crossings()) throw Error("dart out of range");
    int32_t f2 = dart_cw(d.mate[f1]);
    int32_t f3 = dart_cw(d.mate[f2]);
    if (dart_cw(d.mate[f3]) != f1) throw Error("dart does not border a triangular face");
    int c1 = f1 >> 2, c2 = f2 >> 2, c3 = f3 >> 2;
    if (c1 == c2 || c1 == c3 || c2 == c3) throw Error("triangular face revisits a crossing");
    if (d.on_over_strand(f1) != d.on_over_strand(d.mate[f1]))
        throw Error("side of the triangle is not extreme");
    std::array<int32_t, 6> at{dart_through(f1), dart_through(dart_ccw(f2)),
                              dart_through(dart_ccw(f1)), dart_through(f3),
                              dart_through(f2), dart_through(dart_ccw(f3))};
    std::array<int32_t, 6> to{dart_ccw(f2), f1, f3, dart_ccw(f1), dart_ccw(f3), f2};
    auto moved = [&](int32_t x) {
        for (int i = 0; i < 6; ++i)
            if (at[i] == x) return to[i];
        return x;
    };
    LinkDiagram out = d;
    for (int i = 0; i < 6; ++i) {
        int32_t nx = to[i], ny = moved(d.mate[at[i]]);
        out.mate[nx] = ny;
        out.mate[ny] = nx;
    }
    for (auto [x, y] : {std::pair{at[0], at[1]}, {at[2], at[3]}, {at[4], at[5]}}) {
        out.mate[x] = y;
        out.mate[y] = x;
    }
    return out;
}

LinkDiagram reduce(const LinkDiagram& d) {
    LinkDiagram cur = d;
    for (;;) {
        if (int k = find_kink(cur); k >= 0) {
            cur = excise(cur, k, kThrough);
            continue;
        }
        Bigon b = find_pass_bigon(cur);
        if (b.cf >= 0) {
            cur = excise(cur, std::max(b.cf, b.cg), kThrough);
            cur = excise(cur, std::min(b.cf, b.cg), kThrough);
            continue;
        }
        return cur;
    }
}

LinkDiagram simplify_link(const LinkDiagram& d, long budget) {
    LinkDiagram best = reduce(d);
    if (best.crossings() == 0) return best;
    std::set<std::vector<uint8_t>> seen{link_code(best)};
    std::deque<LinkDiagram> frontier{best};
    long states = 1;
    while (!frontier.empty()) {
        LinkDiagram cur = std::move(frontier.front());
        frontier.pop_front();
        for (int32_t f : r3_sides(cur)) {
            LinkDiagram nxt = reduce(r3_move(cur, f));
            if (nxt.crossings() < best.crossings()) {
                best = nxt;
                if (best.crossings() == 0) return best;
            }
            if (states < budget && seen.insert(link_code(nxt)).second) {
                ++states;
                frontier.push_back(std::move(nxt));
            }
        }
    }
    return best;
}

namespace {

// Minimal walk code of one connected map piece: tokens label*4 + class with
// class 0 = under-in and class 1/3 = over-in by chirality, labels assigned in
// discovery order, 0xFF between curve components.  After the free choice of
// the opening dart everything is determined by walk-intrinsic data, so the
// minimum over openings is a complete isomorphism invariant.
std::vector<uint8_t> code_connected(const LinkDiagram& d) {
    int n = d.crossings();
    auto cls_of = [&d](int32_t x) {
        int c = x >> 2;
        return (x & 3) == d.under_in[c] ? 0 : (d.over_in[c] - d.under_in[c]) & 3;
    };
    std::vector<uint8_t> best;
    std::vector<int> label(n);
    std::vector<char> done(4 * n);
    for (int32_t s = 0; s < 4 * n; ++s) {
        if (!d.is_in(s)) continue;
        std::vector<uint8_t> code;
        code.reserve(2 * n + 2);
        std::fill(label.begin(), label.end(), -1);
        std::fill(done.begin(), done.end(), 0);
        int next = 0;
        int32_t start = s;
        for (;;) {
            int32_t a = start;
            do {
                done[a] = 1;
                int c = a >> 2;
                if (label[c] < 0) label[c] = next++;
                code.push_back(static_cast<uint8_t>(label[c] * 4 + cls_of(a)));
                a = d.mate[d.next_out(a)];
            } while (a != start);
            // next curve: the pending in-dart least by (label, class)
            start = -1;
            int bl = n, bc = 4;
            for (int32_t x = 0; x < 4 * n; ++x) {
                if (done[x] || !d.is_in(x) || label[x >> 2] < 0) continue;
                int l = label[x >> 2], cl = cls_of(x);
                if (l < bl || (l == bl && cl < bc)) {
                    bl = l;
                    bc = cl;
                    start = x;
                }
            }
            if (start < 0) break;
            code.push_back(0xFF);
        }
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

}  // namespace

std::vector<uint8_t> link_code(const LinkDiagram& d) {
    int n = d.crossings();
    std::vector<uint8_t> out{static_cast<uint8_t>(n),
                             static_cast<uint8_t>(d.free_loops)};
    if (n == 0) return out;
    auto [comp, k] = map_components(d);
    if (k == 1) {
        auto c = code_connected(d);
        out.insert(out.end(), c.begin(), c.end());
        return out;
    }
    std::vector<std::vector<uint8_t>> parts;
    for (int pc = 0; pc < k; ++pc) {
        LinkDiagram sub;
        std::vector<int> newidx(n, -1);
        for (int c = 0; c < n; ++c)
            if (comp[c] == pc) {
                newidx[c] = sub.crossings();
                sub.under_in.push_back(d.under_in[c]);
                sub.over_in.push_back(d.over_in[c]);
            }
        sub.mate.assign(4 * sub.crossings(), -1);
        for (int c = 0; c < n; ++c)
            if (comp[c] == pc)
                for (int p = 0; p < 4; ++p) {
                    int32_t y = d.mate[4 * c + p];
                    sub.mate[4 * newidx[c] + p] = 4 * newidx[y >> 2] + (y & 3);
                }
        parts.push_back(code_connected(sub));
    }
    std::sort(parts.begin(), parts.end());
    for (auto& p : parts) {
        out.push_back(0xFE);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

namespace {

// First crossing whose first encounter along the walk is on the under
// strand, or -1 when the diagram is descending (hence an unlink).  The walk
// is by dart order, which switch_crossing provably does not disturb.
int first_ascent(const LinkDiagram& d) {
    int n = d.crossings();
    std::vector<char> met(n, 0), done(4 * n, 0);
    for (int32_t s = 0; s < 4 * n; ++s) {
        if (done[s] || !d.is_in(s)) continue;
        int32_t a = s;
        do {
            done[a] = 1;
            int c = a >> 2;
            if (!met[c]) {
                met[c] = 1;
                if ((a & 3) == d.under_in[c]) return c;
            }
            a = d.mate[d.next_out(a)];
        } while (a != s);
    }
    return -1;
}

}  // namespace

size_t SkeinEngine::VecHash::operator()(const std::vector<uint8_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t b : v) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

SkeinPolynomial SkeinEngine::eval(LinkDiagram d) {
    if (++nodes_ > budget_) throw LimitError("skein node budget exhausted");
    d = reduce(d);
    if (d.crossings() == 0) {
        if (d.free_loops == 0) throw Error("empty diagram has no polynomial");
        return SkeinPolynomial::delta().pow(d.free_loops - 1);
    }
    auto key = link_code(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SkeinPolynomial p;
    int c = first_ascent(d);
    if (c < 0) {
        p = SkeinPolynomial::delta().pow(d.components() - 1);
    } else {
        SkeinPolynomial ps = eval(switch_crossing(d, c));
        SkeinPolynomial p0 = eval(smooth_crossing(d, c));
        if (d.sign(c) > 0)
            p = SkeinPolynomial::term(1, 2, 0) * ps + SkeinPolynomial::term(1, 1, 1) * p0;
        else
            p = SkeinPolynomial::term(1, -2, 0) * ps - SkeinPolynomial::term(1, -1, 1) * p0;
    }
    memo_.emplace(std::move(key), p);
    return p;
}

SkeinPolynomial SkeinEngine::homfly(const LinkDiagram& d) { return eval(d); }

SkeinPolynomial homfly(const LinkDiagram& d, long budget) {
    SkeinEngine engine(budget);
    return engine.homfly(d);
}

}  // namespace knotlineage
