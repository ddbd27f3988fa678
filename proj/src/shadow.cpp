#include "knotlineage/shadow.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "knotlineage/errors.hpp"

namespace knotlineage {

Traversal trace(const Shadow& s, int32_t start_dart) {
    Traversal t;
    int steps = 2 * s.n;
    t.out_darts.reserve(steps);
    t.in_darts.reserve(steps);
    int32_t d = start_dart;
    for (int i = 0; i < steps; ++i) {
        t.out_darts.push_back(d);
        int32_t a = s.mate[d];
        t.in_darts.push_back(a);
        d = dart_through(a);
    }
    return t;
}

int face_count(const std::vector<int32_t>& mate) {
    if (mate.empty()) return 2;
    int nd = static_cast<int>(mate.size());
    std::vector<char> seen(nd, 0);
    int faces = 0;
    for (int32_t d0 = 0; d0 < nd; ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int32_t d = d0;
        do {
            seen[d] = 1;
            d = dart_cw(mate[d]);
        } while (d != d0);
    }
    return faces;
}

int face_count(const Shadow& s) { return face_count(s.mate); }

void validate(const Shadow& s) {
    if (s.n < 0 || static_cast<int>(s.mate.size()) != 4 * s.n)
        throw RealizabilityError("shadow: dart table size mismatch");
    if (s.n == 0) return;
    int nd = 4 * s.n;
    for (int32_t d = 0; d < nd; ++d) {
        int32_t m = s.mate[d];
        if (m < 0 || m >= nd || m == d || s.mate[m] != d)
            throw RealizabilityError("shadow: mate is not a fixed-point-free involution");
    }
    std::vector<int> in_count(s.n, 0);
    std::vector<int32_t> first_in(s.n, -1);
    std::vector<char> used(nd, 0);
    int32_t d = 0;
    for (int i = 0; i < 2 * s.n; ++i) {
        if (used[d])
            throw RealizabilityError("shadow: more than one closed curve");
        used[d] = 1;
        int32_t a = s.mate[d];
        int c = a >> 2;
        if (first_in[c] < 0)
            first_in[c] = a;
        else if (((first_in[c] ^ a) & 1) == 0)
            throw RealizabilityError("shadow: curve meets a crossing twice on one strand");
        ++in_count[c];
        d = dart_through(a);
    }
    if (d != 0)
        throw RealizabilityError("shadow: curve does not close");
    for (int c = 0; c < s.n; ++c)
        if (in_count[c] != 2)
            throw RealizabilityError("shadow: not a single closed curve");
    if (face_count(s) != s.n + 2)
        throw RealizabilityError("shadow: not realizable on the sphere");
}

Shadow shadow_from_word(const std::vector<int>& word, const std::vector<uint8_t>& bits) {
    int n = static_cast<int>(bits.size());
    if (static_cast<int>(word.size()) != 2 * n)
        throw ParseError("shadow word: length is not twice the crossing count");
    std::vector<int> first(n, -1), second(n, -1);
    for (int t = 0; t < 2 * n; ++t) {
        int c = word[t];
        if (c < 0 || c >= n) throw ParseError("shadow word: label out of range");
        if (first[c] < 0)
            first[c] = t;
        else if (second[c] < 0)
            second[c] = t;
        else
            throw ParseError("shadow word: label occurs more than twice");
    }
    for (int c = 0; c < n; ++c)
        if (second[c] < 0) throw ParseError("shadow word: label occurs once");

    std::vector<int32_t> in_dart(2 * n), out_dart(2 * n);
    for (int c = 0; c < n; ++c) {
        int32_t fi = 4 * c;
        int32_t si = 4 * c + (bits[c] ? 3 : 1);
        in_dart[first[c]] = fi;
        out_dart[first[c]] = dart_through(fi);
        in_dart[second[c]] = si;
        out_dart[second[c]] = dart_through(si);
    }
    Shadow s{n, std::vector<int32_t>(4 * n, -1)};
    for (int t = 0; t < 2 * n; ++t) {
        int32_t a = out_dart[t], b = in_dart[(t + 1) % (2 * n)];
        s.mate[a] = b;
        s.mate[b] = a;
    }
    return s;
}

Shadow reflect(const Shadow& s) {
    auto rho = [](int32_t d) { return (d & ~3) | ((4 - (d & 3)) & 3); };
    Shadow r{s.n, std::vector<int32_t>(4 * s.n)};
    for (int32_t d = 0; d < 4 * s.n; ++d) r.mate[rho(d)] = rho(s.mate[d]);
    return r;
}

namespace {

// One traversal's view of the shadow: [n, word..., bits...].  The word part
// does not depend on the rotation system, so reflection only flips the bits.
std::vector<uint8_t> code_from(const Shadow& s, int32_t start, bool refl) {
    int n = s.n;
    std::vector<uint8_t> code;
    code.reserve(1 + 3 * n);
    code.push_back(static_cast<uint8_t>(n));
    std::vector<int8_t> label(n, -1);
    std::vector<int32_t> first_in(n, -1);
    std::vector<uint8_t> bits(n, 0);
    int next = 0;
    int32_t d = start;
    for (int t = 0; t < 2 * n; ++t) {
        int32_t a = s.mate[d];
        int c = a >> 2;
        if (label[c] < 0) {
            label[c] = static_cast<int8_t>(next++);
            first_in[c] = a;
        } else {
            int diff = ((a & 3) - (first_in[c] & 3)) & 3;
            if (refl) diff ^= 2;
            bits[label[c]] = (diff == 1) ? 0 : 1;
        }
        code.push_back(static_cast<uint8_t>(label[c]));
        d = dart_through(a);
    }
    code.insert(code.end(), bits.begin(), bits.end());
    return code;
}

}  // namespace

std::vector<uint8_t> canonical_code(const Shadow& s) {
    if (s.n == 0) return {0};
    std::vector<uint8_t> best;
    for (int32_t d = 0; d < 4 * s.n; ++d)
        for (int r = 0; r < 2; ++r) {
            auto c = code_from(s, d, r != 0);
            if (best.empty() || c < best) best = std::move(c);
        }
    return best;
}

Shadow shadow_from_code(const std::vector<uint8_t>& code) {
    if (code.empty()) throw ParseError("shadow code: empty");
    int n = code[0];
    if (static_cast<int>(code.size()) != 1 + 3 * n)
        throw ParseError("shadow code: size mismatch");
    std::vector<int> word(code.begin() + 1, code.begin() + 1 + 2 * n);
    std::vector<uint8_t> bits(code.begin() + 1 + 2 * n, code.end());
    Shadow s = shadow_from_word(word, bits);
    validate(s);
    return s;
}

uint64_t code_digest(const std::vector<uint8_t>& code) {
    uint64_t h = 14695981039346656037ull;
    for (uint8_t b : code) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

CanonicalShadow canonicalize(const Shadow& s) {
    CanonicalShadow cs;
    cs.code = canonical_code(s);
    cs.shadow = cs.code.size() == 1 ? Shadow{} : shadow_from_code(cs.code);
    cs.hash = code_digest(cs.code);
    return cs;
}

std::string serialize(const CanonicalShadow& cs) {
    const Shadow& s = cs.shadow;
    if (s.n == 0) return "0 ; ;";
    // Canonical position: crossing labels are first-visit order and the
    // traversal arriving at dart 0 first realizes the code.
    // trace(s, mate[0]) arrives at dart 0 first, so in_darts[k] is visit k's
    // in-dart; the step-0 edge is edge 2n (the one closing into visit 0) and
    // step i >= 1 runs along edge i into visit i.
    Traversal t = trace(s, s.mate[0]);
    int m = 2 * s.n;
    std::vector<int> edge_of(4 * s.n, 0);
    for (int i = 0; i < m; ++i) {
        int e = (i == 0) ? m : i;
        edge_of[t.out_darts[i]] = e;
        edge_of[t.in_darts[i]] = e;
    }
    std::ostringstream os;
    os << s.n << " ;";
    for (int k = 0; k < m; ++k)
        os << ' ' << ((t.in_darts[k] >> 2) + 1);
    os << " ;";
    for (int c = 0; c < s.n; ++c) {
        os << " (";
        for (int k = 0; k < 4; ++k) {
            if (k) os << ' ';
            os << edge_of[4 * c + k];
        }
        os << ')';
    }
    return os.str();
}

Shadow parse_shadow(const std::string& line) {
    auto p1 = line.find(';');
    auto p2 = line.find(';', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw ParseError("shadow line: expected two ';' separators");
    std::istringstream hs(line.substr(0, p1));
    int n = -1;
    if (!(hs >> n) || n < 0 || n > 200)
        throw ParseError("shadow line: bad crossing count");
    std::istringstream ws(line.substr(p1 + 1, p2 - p1 - 1));
    std::vector<int> word;
    for (int v; ws >> v;) word.push_back(v - 1);
    if (static_cast<int>(word.size()) != 2 * n)
        throw ParseError("shadow line: word length mismatch");
    if (n == 0) return Shadow{};

    // tuples, one per crossing label in order
    std::vector<std::array<int, 4>> tuples;
    std::string rest = line.substr(p2 + 1);
    size_t pos = 0;
    while (true) {
        size_t open = rest.find('(', pos);
        if (open == std::string::npos) break;
        size_t close = rest.find(')', open);
        if (close == std::string::npos) throw ParseError("shadow line: unclosed tuple");
        std::istringstream ts(rest.substr(open + 1, close - open - 1));
        std::array<int, 4> e{};
        for (int k = 0; k < 4; ++k)
            if (!(ts >> e[k])) throw ParseError("shadow line: tuple needs four edges");
        tuples.push_back(e);
        pos = close + 1;
    }
    if (static_cast<int>(tuples.size()) != n)
        throw ParseError("shadow line: tuple count mismatch");

    std::vector<int> first(n, -1), second(n, -1);
    for (int t = 0; t < 2 * n; ++t) {
        int c = word[t];
        if (c < 0 || c >= n) throw ParseError("shadow line: label out of range");
        if (first[c] < 0)
            first[c] = t;
        else if (second[c] < 0)
            second[c] = t;
        else
            throw ParseError("shadow line: label occurs more than twice");
    }
    int m = 2 * n;
    auto in_edge = [m](int t) { return t == 0 ? m : t; };
    auto out_edge = [](int t) { return t + 1; };

    // Match each tuple against the traversal to recover the rotation bit.
    std::vector<uint8_t> bits(n, 0);
    for (int c = 0; c < n; ++c) {
        if (second[c] < 0) throw ParseError("shadow line: label occurs once");
        const auto& e = tuples[c];
        int p = first[c], q = second[c];
        bool found = false;
        for (int r = 0; r < 4 && !found; ++r) {
            if (e[r] != in_edge(p) || e[(r + 2) & 3] != out_edge(p)) continue;
            if (e[(r + 1) & 3] == in_edge(q) && e[(r + 3) & 3] == out_edge(q)) {
                bits[c] = 0;
                found = true;
            } else if (e[(r + 1) & 3] == out_edge(q) && e[(r + 3) & 3] == in_edge(q)) {
                bits[c] = 1;
                found = true;
            }
        }
        if (!found)
            throw ParseError("shadow line: tuple does not match the traversal");
    }

    // Relabel to first-visit order for the constructor.
    std::vector<int> relabel(n, -1), word0(2 * n);
    std::vector<uint8_t> bits0(n);
    int next = 0;
    for (int t = 0; t < 2 * n; ++t) {
        int c = word[t];
        if (relabel[c] < 0) relabel[c] = next++;
        word0[t] = relabel[c];
    }
    for (int c = 0; c < n; ++c) bits0[relabel[c]] = bits[c];
    Shadow s = shadow_from_word(word0, bits0);
    validate(s);
    return s;
}

Shadow connect_sum(const Shadow& s1, const Shadow& s2) {
    if (s1.n == 0) return s2;
    if (s2.n == 0) return s1;
    // Traversal position 0 arrives at dart 0 and leaves through dart 2, so
    // the edge after position 0 is {2, mate[2]} in both operands.
    int32_t x_out = 2, y_in = s1.mate[2];
    int32_t u_out = 2, v_in = s2.mate[2];
    int off = 4 * s1.n;
    Shadow s{s1.n + s2.n, std::vector<int32_t>(4 * (s1.n + s2.n))};
    for (int32_t d = 0; d < 4 * s1.n; ++d) s.mate[d] = s1.mate[d];
    for (int32_t d = 0; d < 4 * s2.n; ++d) s.mate[off + d] = s2.mate[d] + off;
    s.mate[x_out] = v_in + off;
    s.mate[v_in + off] = x_out;
    s.mate[u_out + off] = y_in;
    s.mate[y_in] = u_out + off;
    return s;
}

Diagram alternating_diagram(const Shadow& s) {
    Diagram d{s, 0};
    if (s.n == 0) return d;
    // Traversal parity alternates over/under; a crossing's two visits sit at
    // opposite parities on the sphere, so "over at even positions" is always
    // consistent.  The visit entering through slot 0 or 2 carries bit 0.
    Traversal t = trace(s);
    for (int k = 0; k < 2 * s.n; ++k) {
        int32_t in = t.in_darts[k];
        if ((in & 1) == 0 && (k & 1) == 1) d.bits |= 1u << (in >> 2);
    }
    return d;
}

bool shadow_reduced(const Shadow& s) {
    std::vector<int32_t> face(4 * s.n, -1);
    int fid = 0;
    for (int32_t d = 0; d < 4 * s.n; ++d) {
        if (face[d] >= 0) continue;
        for (int32_t x = d; face[x] < 0; x = dart_cw(s.mate[x])) face[x] = fid;
        ++fid;
    }
    for (int c = 0; c < s.n; ++c)
        if (face[4 * c] == face[4 * c + 2] ||
            face[4 * c + 1] == face[4 * c + 3])
            return false;
    return true;
}

}  // namespace knotlineage
