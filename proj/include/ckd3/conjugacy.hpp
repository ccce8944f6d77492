#pragma once

#include <array>
#include <random>
#include <string_view>

#include "ckd3/triples.hpp"

namespace ckd3 {

/// Permutation of the three coordinate roles R(ow), S(ymbol), C(olumn).
/// Acting on a triple moves the digit held by role i to role images[i]; the
/// symbol coordinate stays written in the middle position.
class RolePermutation {
public:
    RolePermutation() = default;  // identity

    /// images[i] = destination role of role i (roles indexed R=0, S=1, C=2).
    static RolePermutation from_images(std::array<int, 3> images);

    /// Fixed enumeration: identity, (RS), (RC), (SC), (RSC), (RCS).
    static const std::array<RolePermutation, 6>& all();

    Triple apply(Triple t) const {
        std::array<int, 3> in = {t.r, t.s, t.c};
        std::array<int, 3> out{};
        for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(to_[i])] = in[i];
        return {out[0], out[1], out[2]};
    }

    /// this ∘ first (apply `first`, then this).
    RolePermutation compose(const RolePermutation& first) const;
    RolePermutation inverse() const;

    std::array<int, 3> images() const { return to_; }
    std::string_view name() const;  // "id", "rs", "rc", "sc", "rsc", "rcs"

    friend bool operator==(const RolePermutation&, const RolePermutation&) = default;

private:
    std::array<int, 3> to_ = {0, 1, 2};
};

/// Permute every triple's coordinates and re-partition into N and D.
TripleSystem apply_role(const RolePermutation&, const TripleSystem&);

/// One system per element of S3 in RolePermutation::all() order (identity
/// first). Requires the source to come from a latin-square table so every
/// conjugate is again a table; throws std::invalid_argument otherwise.
std::vector<TripleSystem> six_conjugates(const TripleSystem&);

/// six_conjugates rendered back to tables, named <name>_t0 .. <name>_t5.
std::vector<CheckTable> six_conjugate_tables(const CheckTable&);

/// Exact intersection L_A ∩ L_B; throws std::invalid_argument on base mismatch.
std::vector<Triple> pairwise_common(const TripleSystem&, const TripleSystem&);

/// Digit relabeling p = p01 ∘ p29: maps {0,1} onto {0,1} and {2..base-1}
/// onto itself. The restriction exists because the phonetic patterns mention
/// the literal digits 0 and 1.
class Relabeling {
public:
    static Relabeling identity(int base);

    /// images[d] = p(d); throws std::invalid_argument unless admissible.
    static Relabeling from_images(std::vector<int> images);

    int base() const { return static_cast<int>(images_.size()); }
    int operator()(int digit) const { return images_[static_cast<std::size_t>(digit)]; }
    const std::vector<int>& images() const { return images_; }

private:
    explicit Relabeling(std::vector<int> images) : images_(std::move(images)) {}
    std::vector<int> images_;
};

/// Uniformly random admissible relabeling (both blocks shuffled).
Relabeling sample_relabeling(int base, std::mt19937_64& rng);

/// New table whose triple set is {(p(r), p(s), p(c))}; equivalently
/// cell'(p(r), p(c)) = p(cell(r, c)).
CheckTable relabel(const CheckTable&, const Relabeling&);

}  // namespace ckd3
