#pragma once

#include "conewb/cone.hpp"
#include "conewb/linalg.hpp"

#include <compare>
#include <string>
#include <vector>

namespace conewb {

/// Finitely generated group of lattice automorphisms: integral matrices of
/// determinant +/-1 acting on column vectors.
class GroupSpec {
public:
    /// Throws InvalidInput for non-integral or non-unimodular generators and
    /// DimensionError for shape mismatches. Missing names default to g0, g1...
    static GroupSpec make(std::size_t dim, std::vector<RatMatrix> generators, std::vector<std::string> names = {});
    static GroupSpec trivial(std::size_t dim);

    /// Trivial group on the zero space.
    GroupSpec() = default;

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return generators_.size(); }
    [[nodiscard]] const std::vector<RatMatrix>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<RatMatrix>& inverses() const { return inverses_; }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    /// Matrix of generator `index` raised to `exponent` (+1 or -1).
    [[nodiscard]] const RatMatrix& letter_matrix(std::size_t index, int exponent) const;

private:
    std::size_t dim_ = 0;
    std::vector<RatMatrix> generators_;
    std::vector<RatMatrix> inverses_;
    std::vector<std::string> names_;
};

struct Letter {
    std::size_t generator = 0;
    int exponent = 1; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    /// Direct letters sort before inverse letters of the same generator.
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.generator <=> b.generator; c != 0) {
            return c;
        }
        return (a.exponent < 0) <=> (b.exponent < 0);
    }
};

/// Group element as a freely reduced word with its cached matrix product.
class Word {
public:
    static Word identity(std::size_t dim);
    static Word from_letters(const GroupSpec& g, std::vector<Letter> letters);
    static Word generator(const GroupSpec& g, std::size_t index, int exponent = 1);

    [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
    [[nodiscard]] const RatMatrix& matrix() const { return matrix_; }
    [[nodiscard]] std::size_t length() const { return letters_.size(); }
    [[nodiscard]] bool is_empty() const { return letters_.empty(); }

    /// Product in the group: matrix(a * b) = matrix(a) matrix(b).
    [[nodiscard]] Word times(const GroupSpec& g, const Word& other) const;
    [[nodiscard]] Word inverse(const GroupSpec& g) const;

    /// Canonical order: shorter first, then lexicographic on letters.
    friend std::strong_ordering canonical_compare(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
    RatMatrix matrix_;
};

/// Letters grouped into powers: "M^-3", "r s^-1", "id" for the empty word.
std::string format_word(const GroupSpec& g, const Word& w);

/// Inverse of format_word. Throws InvalidInput on unknown names.
Word parse_word(const GroupSpec& g, const std::string& text);

struct OrbitReport {
    std::size_t depth = 0;
    /// Distinct matrices, each represented by its canonically least word,
    /// sorted canonically; elements[0] is the identity.
    std::vector<Word> elements;
    /// Whether words of length depth + 1 would produce new elements.
    bool truncated = false;
};

/// Breadth-first enumeration of group elements of word length <= depth,
/// deduplicated by exact matrix equality.
OrbitReport word_bfs(const GroupSpec& g, std::size_t depth);

/// PolyCone: the images of a generating set lie in the cone and so do the
/// preimages. QuadCone: gamma^T Q gamma = Q and <gamma h, h>_Q > 0.
bool preserves_cone(const RatMatrix& gamma, const ConeRef& c);
bool preserves_cone(const Word& gamma, const ConeRef& c);

/// Action on V* under the standard pairing: <x, A y> = <gamma x, y>, so A is
/// the transpose.
RatMatrix dual_action(const Word& gamma);

struct StabilizerReport {
    std::vector<Word> words; // non-identity elements fixing the point
    std::size_t verified_depth = 0;
    bool truncated = false;
};

/// All non-identity elements of word length <= depth with gamma x = x.
/// An empty list is evidence of a trivial stabilizer only up to that depth.
StabilizerReport stabilizer_search(const GroupSpec& g, std::span<const Rational> x, std::size_t depth);

} // namespace conewb
