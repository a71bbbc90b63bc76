#include "hspoly/uniqueness.hpp"

#include <algorithm>
#include <map>

namespace hspoly {

namespace {

/* Union-find over root indices carrying exact lattice offsets:
 * value(i) = value(root(i)) + off(i) * h. */
struct OffsetUnionFind {
    std::vector<int> parent;
    std::vector<Int> off;

    explicit OffsetUnionFind(size_t n) : parent(n), off(n, Int(0)) {
        for (size_t i = 0; i < n; ++i)
            parent[i] = static_cast<int>(i);
    }

    int find(int i) {
        if (parent[static_cast<size_t>(i)] == i)
            return i;
        const int r = find(parent[static_cast<size_t>(i)]);
        off[static_cast<size_t>(i)] += off[static_cast<size_t>(parent[static_cast<size_t>(i)])];
        parent[static_cast<size_t>(i)] = r;
        return r;
    }

    // assert value(j) = value(i) + k h
    void unite(int i, int j, const Int& k) {
        const int ri = find(i), rj = find(j);
        const Int oi = off[static_cast<size_t>(i)], oj = off[static_cast<size_t>(j)];
        if (ri == rj) {
            if (oj != oi + k)
                throw error("lattice_classes: inconsistent offsets");
            return;
        }
        parent[static_cast<size_t>(rj)] = ri;
        off[static_cast<size_t>(rj)] = oi + k - oj;
    }
};

bool is_root_of(const Poly& gcd_poly, const Root& r) {
    if (r.exact())
        return sign_at(gcd_poly, r.value()) == 0;
    // gcd divides the squarefree isolated polynomial, so the endpoints
    // are never roots of it and a sign change decides membership exactly
    return sign_at(gcd_poly, r.lo) * sign_at(gcd_poly, r.hi) < 0;
}

bool intervals_touch(const Rational& alo, const Rational& ahi, const Rational& blo, const Rational& bhi) {
    return !(ahi < blo || bhi < alo);
}

/* Index of the root of q_list equal to x + s; x + s is known to be a
 * root of the isolated polynomial behind q_list. */
size_t find_partner(std::vector<Root>& q_list, Root& x, const Rational& s) {
    for (int bits = 64; bits <= 4096; bits *= 2) {
        std::vector<size_t> hits;
        for (size_t i = 0; i < q_list.size(); ++i)
            if (intervals_touch(x.lo + s, x.hi + s, q_list[i].lo, q_list[i].hi))
                hits.push_back(i);
        if (hits.size() == 1)
            return hits[0];
        refine_root(x, bits);
        for (size_t i : hits)
            refine_root(q_list[i], bits);
    }
    throw error("lattice_classes: could not attribute a shifted root");
}

struct Analysis {
    Rational kappa;
    RootList ra, rb;  // roots of monic(g - h r) and monic(g)
    struct Node {
        Root root;
        RootSource source;
        int cls = -1;
        Int offset;  // relative to class anchor
        size_t index_in_list;
    };
    std::vector<Node> nodes;               // a-roots then b-roots
    std::vector<LatticeClass> classes;     // every class, ascending anchors
    std::vector<std::vector<int>> by_cls;  // node indices per class
};

Analysis analyze(const DifferenceEquation& eq) {
    Analysis an;
    const Poly A = eq.g - eq.h * eq.r;
    if (A.is_zero())
        throw hypothesis_error("uniqueness: g - h r is identically zero");
    an.kappa = A.lc() / eq.g.lc();
    const Poly Am = monic(A);
    const Poly Bm = monic(eq.g);
    an.ra = real_roots(Am);
    an.rb = real_roots(Bm);
    if (!an.ra.all_real() || !an.ra.all_simple())
        throw hypothesis_error("uniqueness: g - h r must have only real simple roots");
    if (!an.rb.all_real() || !an.rb.all_simple())
        throw hypothesis_error("uniqueness: g must have only real simple roots");

    std::vector<Root> a_roots = an.ra.roots;
    std::vector<Root> b_roots = an.rb.roots;
    const size_t na = a_roots.size(), nb = b_roots.size();
    OffsetUnionFind uf(na + nb);

    // finite offset range: no two roots are farther apart than the span
    Rational lo_min(0), hi_max(0);
    bool have = false;
    for (const auto* list : {&a_roots, &b_roots})
        for (const Root& r : *list) {
            if (!have) {
                lo_min = r.lo;
                hi_max = r.hi;
                have = true;
            } else {
                lo_min = std::min(lo_min, r.lo);
                hi_max = std::max(hi_max, r.hi);
            }
        }
    const Int K = have ? ceil_int((hi_max - lo_min) / eq.h) : Int(0);

    struct ListRef {
        const Poly* poly;
        std::vector<Root>* roots;
        size_t base;
    };
    ListRef la{&Am, &a_roots, 0}, lb{&Bm, &b_roots, na};

    for (const auto& [p, q] : {std::pair{la, la}, {la, lb}, {lb, la}, {lb, lb}}) {
        const bool same = p.poly == q.poly;
        for (Int k = same ? 1 : 0; k <= K; ++k) {
            const Rational s = Rational(k) * eq.h;
            const Poly shifted = shift(*q.poly, s);  // roots: {q-root - s}
            const Poly g = poly_gcd(*p.poly, shifted);
            if (g.degree() < 1)
                continue;
            for (size_t i = 0; i < p.roots->size(); ++i) {
                if (!is_root_of(g, (*p.roots)[i]))
                    continue;
                const size_t j = find_partner(*q.roots, (*p.roots)[i], s);
                uf.unite(static_cast<int>(p.base + i), static_cast<int>(q.base + j), k);
            }
        }
    }

    // assemble classes
    an.nodes.resize(na + nb);
    for (size_t i = 0; i < na + nb; ++i) {
        Analysis::Node& n = an.nodes[i];
        n.root = i < na ? a_roots[i] : b_roots[i - na];
        n.source = i < na ? RootSource::G_MINUS_HR : RootSource::G;
        n.index_in_list = i < na ? i : i - na;
    }
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < na + nb; ++i)
        groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

    std::vector<std::pair<Rational, LatticeClass>> ordered;
    for (auto& [rep, members] : groups) {
        Int min_off = uf.off[static_cast<size_t>(members.front())];
        for (int i : members)
            min_off = std::min(min_off, uf.off[static_cast<size_t>(i)]);
        std::sort(members.begin(), members.end(), [&](int x, int y) {
            if (uf.off[static_cast<size_t>(x)] != uf.off[static_cast<size_t>(y)])
                return uf.off[static_cast<size_t>(x)] < uf.off[static_cast<size_t>(y)];
            return an.nodes[static_cast<size_t>(x)].source == RootSource::G_MINUS_HR &&
                   an.nodes[static_cast<size_t>(y)].source == RootSource::G;
        });
        LatticeClass cls;
        std::vector<int> idx;
        for (int i : members) {
            Analysis::Node& n = an.nodes[static_cast<size_t>(i)];
            n.offset = uf.off[static_cast<size_t>(i)] - min_off;
            cls.members.push_back({n.root, n.source, n.offset});
            idx.push_back(i);
        }
        cls.anchor = cls.members.front().root;
        ordered.emplace_back(cls.anchor.mid(), std::move(cls));
        an.by_cls.push_back(std::move(idx));
    }
    // deterministic order: ascending anchor
    std::vector<size_t> perm(ordered.size());
    for (size_t i = 0; i < perm.size(); ++i)
        perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](size_t x, size_t y) { return ordered[x].first < ordered[y].first; });
    std::vector<std::vector<int>> by_cls_sorted;
    for (size_t pi : perm) {
        for (int i : an.by_cls[pi])
            an.nodes[static_cast<size_t>(i)].cls = static_cast<int>(an.classes.size());
        an.classes.push_back(std::move(ordered[pi].second));
        by_cls_sorted.push_back(std::move(an.by_cls[pi]));
    }
    an.by_cls = std::move(by_cls_sorted);
    return an;
}

UniquenessCertificate base_certificate(const Analysis& an) {
    UniquenessCertificate c;
    c.kappa = an.kappa;
    c.roots_g = an.rb;
    c.roots_g_minus_hr = an.ra;
    for (const LatticeClass& cls : an.classes)
        if (cls.members.size() >= 2)
            c.collisions.push_back(cls);
    return c;
}

LatticeClass witness_slice(const Analysis& an, int cls, const Int& from_offset, bool upward) {
    LatticeClass w;
    Int min_off;
    bool first = true;
    for (const LatticeMember& m : an.classes[static_cast<size_t>(cls)].members) {
        const bool keep = upward ? m.offset >= from_offset : m.offset <= from_offset;
        if (!keep)
            continue;
        if (first || m.offset < min_off)
            min_off = m.offset;
        first = false;
    }
    for (const LatticeMember& m : an.classes[static_cast<size_t>(cls)].members) {
        const bool keep = upward ? m.offset >= from_offset : m.offset <= from_offset;
        if (keep)
            w.members.push_back({m.root, m.source, m.offset - min_off});
    }
    w.anchor = w.members.front().root;
    return w;
}

/* Scan order: ascending witness-root value, matching the a_0 < a_1 < ...
 * convention for which root gets reported. */
std::vector<int> nodes_sorted_by_value(const Analysis& an, RootSource src) {
    std::vector<int> idx;
    for (size_t i = 0; i < an.nodes.size(); ++i)
        if (an.nodes[i].source == src)
            idx.push_back(static_cast<int>(i));
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        return an.nodes[static_cast<size_t>(x)].root.mid() < an.nodes[static_cast<size_t>(y)].root.mid();
    });
    return idx;
}

UniquenessCertificate run_t1(const Analysis& an) {
    UniquenessCertificate c = base_certificate(an);
    for (int i : nodes_sorted_by_value(an, RootSource::G_MINUS_HR)) {
        const auto& node = an.nodes[static_cast<size_t>(i)];
        bool blocked = false;
        for (int j : an.by_cls[static_cast<size_t>(node.cls)]) {
            const auto& other = an.nodes[static_cast<size_t>(j)];
            if (other.source == RootSource::G && other.offset >= node.offset)
                blocked = true;
        }
        if (!blocked) {
            c.verdict = Verdict::T1;
            c.witness = witness_slice(an, node.cls, node.offset, /*upward=*/true);
            c.witness_direction = LatticeDirection::UP;
            return c;
        }
    }
    return c;
}

UniquenessCertificate run_t1_remark(const Analysis& an) {
    UniquenessCertificate c = base_certificate(an);
    for (int i : nodes_sorted_by_value(an, RootSource::G)) {
        const auto& node = an.nodes[static_cast<size_t>(i)];
        bool blocked = false;
        for (int j : an.by_cls[static_cast<size_t>(node.cls)]) {
            const auto& other = an.nodes[static_cast<size_t>(j)];
            if (other.source == RootSource::G_MINUS_HR && other.offset <= node.offset)
                blocked = true;
        }
        if (!blocked) {
            c.verdict = Verdict::T1_REMARK;
            c.witness = witness_slice(an, node.cls, node.offset, /*upward=*/false);
            c.witness_direction = LatticeDirection::DOWN;
            return c;
        }
    }
    return c;
}

UniquenessCertificate run_t2(const Analysis& an) {
    UniquenessCertificate c = base_certificate(an);
    for (int i : nodes_sorted_by_value(an, RootSource::G_MINUS_HR)) {
        const auto& node = an.nodes[static_cast<size_t>(i)];
        int count_a = 0, count_b = 0;
        for (int j : an.by_cls[static_cast<size_t>(node.cls)]) {
            const auto& other = an.nodes[static_cast<size_t>(j)];
            if (other.offset >= node.offset)
                (other.source == RootSource::G_MINUS_HR ? count_a : count_b)++;
        }
        if (count_a > count_b) {
            c.verdict = Verdict::T2;
            c.witness = witness_slice(an, node.cls, node.offset, /*upward=*/true);
            c.witness_direction = LatticeDirection::UP;
            return c;
        }
    }
    return c;
}

}  // namespace

std::vector<LatticeClass> lattice_classes(const DifferenceEquation& eq) {
    return analyze(eq).classes;
}

UniquenessCertificate check_t1(const DifferenceEquation& eq) {
    return run_t1(analyze(eq));
}

UniquenessCertificate check_t1_remark(const DifferenceEquation& eq) {
    return run_t1_remark(analyze(eq));
}

UniquenessCertificate check_t2(const DifferenceEquation& eq) {
    return run_t2(analyze(eq));
}

UniquenessCertificate certify(const DifferenceEquation& eq) {
    const Analysis an = analyze(eq);
    UniquenessCertificate c = run_t1(an);
    if (c.verdict != Verdict::INCONCLUSIVE)
        return c;
    c = run_t1_remark(an);
    if (c.verdict != Verdict::INCONCLUSIVE)
        return c;
    return run_t2(an);
}

}  // namespace hspoly
