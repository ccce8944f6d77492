#include "ckd3/conjugacy.hpp"

#include <algorithm>

namespace ckd3 {

RolePermutation RolePermutation::from_images(std::array<int, 3> images) {
    std::array<char, 3> seen = {0, 0, 0};
    for (int v : images) {
        if (v < 0 || v > 2) throw std::invalid_argument("role image out of range");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (!(seen[0] && seen[1] && seen[2]))
        throw std::invalid_argument("role images are not a permutation");
    RolePermutation p;
    p.to_ = images;
    return p;
}

const std::array<RolePermutation, 6>& RolePermutation::all() {
    static const std::array<RolePermutation, 6> k = {
        RolePermutation::from_images({0, 1, 2}),  // id
        RolePermutation::from_images({1, 0, 2}),  // (RS)
        RolePermutation::from_images({2, 1, 0}),  // (RC)
        RolePermutation::from_images({0, 2, 1}),  // (SC)
        RolePermutation::from_images({1, 2, 0}),  // (RSC)
        RolePermutation::from_images({2, 0, 1}),  // (RCS)
    };
    return k;
}

RolePermutation RolePermutation::compose(const RolePermutation& first) const {
    std::array<int, 3> images{};
    for (int i = 0; i < 3; ++i)
        images[i] = to_[static_cast<std::size_t>(first.to_[i])];
    RolePermutation p;
    p.to_ = images;
    return p;
}

RolePermutation RolePermutation::inverse() const {
    std::array<int, 3> images{};
    for (int i = 0; i < 3; ++i) images[static_cast<std::size_t>(to_[i])] = i;
    RolePermutation p;
    p.to_ = images;
    return p;
}

std::string_view RolePermutation::name() const {
    const auto& ks = all();
    static constexpr std::array<std::string_view, 6> names = {"id",  "rs",  "rc",
                                                              "sc",  "rsc", "rcs"};
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (ks[i] == *this) return names[i];
    return "custom";
}

TripleSystem apply_role(const RolePermutation& t, const TripleSystem& sys) {
    std::vector<Triple> mapped;
    mapped.reserve(sys.all.size());
    for (Triple x : sys.all) mapped.push_back(t.apply(x));
    return make_triple_system(sys.base, std::move(mapped));
}

std::vector<TripleSystem> six_conjugates(const TripleSystem& sys) {
    // Every conjugate is a table again only for latin sources.
    CheckTable source = table_from_triples(sys);
    StructuralProfile p = structural_profile(source);
    if (!p.rows_are_permutations || !p.columns_are_permutations)
        throw std::invalid_argument("source is not a latin square");

    std::vector<TripleSystem> out;
    out.reserve(6);
    for (const RolePermutation& t : RolePermutation::all()) out.push_back(apply_role(t, sys));
    return out;
}

std::vector<CheckTable> six_conjugate_tables(const CheckTable& t) {
    std::vector<CheckTable> out;
    out.reserve(6);
    int k = 0;
    for (TripleSystem& sys : six_conjugates(to_triples(t)))
        out.push_back(table_from_triples(sys, t.name() + "_t" + std::to_string(k++)));
    return out;
}

std::vector<Triple> pairwise_common(const TripleSystem& a, const TripleSystem& b) {
    if (a.base != b.base) throw std::invalid_argument("triple systems have different bases");
    std::vector<Triple> out;
    std::set_intersection(a.all.begin(), a.all.end(), b.all.begin(), b.all.end(),
                          std::back_inserter(out));
    return out;
}

Relabeling Relabeling::identity(int base) {
    std::vector<int> images(static_cast<std::size_t>(base));
    for (int i = 0; i < base; ++i) images[static_cast<std::size_t>(i)] = i;
    return from_images(std::move(images));
}

Relabeling Relabeling::from_images(std::vector<int> images) {
    const int base = static_cast<int>(images.size());
    if (base < kMinBase || base > kMaxBase)
        throw std::invalid_argument("relabeling must cover the whole alphabet");
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= base) throw std::invalid_argument("relabeling image out of range");
        if (seen[static_cast<std::size_t>(v)]++)
            throw std::invalid_argument("relabeling is not a permutation");
    }
    // p = p01 ∘ p29 form: the {0,1} block maps onto itself.
    if ((images[0] != 0 && images[0] != 1) || (images[1] != 0 && images[1] != 1))
        throw std::invalid_argument("relabeling must map {0,1} onto {0,1}");
    return Relabeling(std::move(images));
}

Relabeling sample_relabeling(int base, std::mt19937_64& rng) {
    std::vector<int> images(static_cast<std::size_t>(base));
    const bool swap01 = (rng() & 1u) != 0;
    images[0] = swap01 ? 1 : 0;
    images[1] = swap01 ? 0 : 1;
    for (int i = 2; i < base; ++i) images[static_cast<std::size_t>(i)] = i;
    // Fisher-Yates over the 2..base-1 block, explicit so the sequence does
    // not depend on the standard library's shuffle implementation.
    for (int i = base - 1; i > 2; --i) {
        int j = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(i - 1));
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
    }
    return Relabeling::from_images(std::move(images));
}

CheckTable relabel(const CheckTable& t, const Relabeling& p) {
    if (p.base() != t.base())
        throw std::invalid_argument("relabeling base does not match the table");
    const int n = t.base();
    std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            cells[static_cast<std::size_t>(p(r)) * n + p(c)] = p(t.cell(r, c));
    return CheckTable(n, std::move(cells), t.name());
}

}  // namespace ckd3
