#include "conewb/group.hpp"

#include "conewb/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace conewb {

GroupSpec GroupSpec::make(std::size_t dim, std::vector<RatMatrix> generators, std::vector<std::string> names) {
    if (!names.empty() && names.size() != generators.size()) {
        throw InvalidInput("GroupSpec: " + std::to_string(names.size()) + " names for " +
                           std::to_string(generators.size()) + " generators");
    }
    GroupSpec g;
    g.dim_ = dim;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& m = generators[i];
        if (m.rows() != dim || m.cols() != dim) {
            throw DimensionError("GroupSpec: generator " + std::to_string(i) + " is not " + std::to_string(dim) +
                                 "x" + std::to_string(dim));
        }
        if (!m.is_integral()) {
            throw InvalidInput("GroupSpec: generator " + std::to_string(i) + " has non-integer entries");
        }
        const Rational det = determinant(m);
        if (det != Rational(1) && det != Rational(-1)) {
            throw InvalidInput("GroupSpec: generator " + std::to_string(i) + " has determinant " + det.str() +
                               ", expected +/-1");
        }
        g.inverses_.push_back(*inverse(m));
    }
    g.generators_ = std::move(generators);
    if (names.empty()) {
        for (std::size_t i = 0; i < g.generators_.size(); ++i) {
            names.push_back("g" + std::to_string(i));
        }
    }
    for (const auto& n : names) {
        if (n.empty() || n.find_first_of(" ^*") != std::string::npos) {
            throw InvalidInput("GroupSpec: generator name '" + n + "' is empty or contains ' ', '^' or '*'");
        }
    }
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
        throw InvalidInput("GroupSpec: duplicate generator names");
    }
    g.names_ = std::move(names);
    return g;
}

GroupSpec GroupSpec::trivial(std::size_t dim) { return make(dim, {}, {}); }

const RatMatrix& GroupSpec::letter_matrix(std::size_t index, int exponent) const {
    return exponent > 0 ? generators_.at(index) : inverses_.at(index);
}

Word Word::identity(std::size_t dim) {
    Word w;
    w.matrix_ = RatMatrix::identity(dim);
    return w;
}

Word Word::from_letters(const GroupSpec& g, std::vector<Letter> letters) {
    Word w = identity(g.dim());
    for (const auto& l : letters) {
        if (l.generator >= g.size() || (l.exponent != 1 && l.exponent != -1)) {
            throw InvalidInput("Word: invalid letter");
        }
        if (!w.letters_.empty() && w.letters_.back().generator == l.generator &&
            w.letters_.back().exponent == -l.exponent) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
        w.matrix_ = w.matrix_ * g.letter_matrix(l.generator, l.exponent);
    }
    return w;
}

Word Word::generator(const GroupSpec& g, std::size_t index, int exponent) {
    return from_letters(g, {Letter{index, exponent}});
}

Word Word::times(const GroupSpec& g, const Word& other) const {
    std::vector<Letter> letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return from_letters(g, std::move(letters));
}

Word Word::inverse(const GroupSpec& g) const {
    std::vector<Letter> letters;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        letters.push_back(Letter{it->generator, -it->exponent});
    }
    return from_letters(g, std::move(letters));
}

std::strong_ordering canonical_compare(const Word& a, const Word& b) {
    if (auto c = a.length() <=> b.length(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
}

std::string format_word(const GroupSpec& g, const Word& w) {
    if (w.is_empty()) {
        return "id";
    }
    std::ostringstream os;
    const auto& ls = w.letters();
    std::size_t i = 0;
    bool first = true;
    while (i < ls.size()) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) {
            ++j;
        }
        const long power = static_cast<long>(j - i) * ls[i].exponent;
        if (!first) {
            os << ' ';
        }
        os << g.names().at(ls[i].generator);
        if (power != 1) {
            os << '^' << power;
        }
        first = false;
        i = j;
    }
    return os.str();
}

Word parse_word(const GroupSpec& g, const std::string& text) {
    std::istringstream is(text);
    std::string token;
    std::vector<Letter> letters;
    while (is >> token) {
        if (token == "id") {
            continue;
        }
        const auto caret = token.find('^');
        const std::string name = token.substr(0, caret);
        long power = 1;
        if (caret != std::string::npos) {
            try {
                std::size_t used = 0;
                power = std::stol(token.substr(caret + 1), &used);
                if (used != token.size() - caret - 1) {
                    throw std::invalid_argument("trailing");
                }
            } catch (const std::exception&) {
                throw InvalidInput("parse_word: bad exponent in '" + token + "'");
            }
        }
        const auto it = std::find(g.names().begin(), g.names().end(), name);
        if (it == g.names().end()) {
            throw InvalidInput("parse_word: unknown generator '" + name + "'");
        }
        const auto index = static_cast<std::size_t>(it - g.names().begin());
        for (long k = 0; k < std::labs(power); ++k) {
            letters.push_back(Letter{index, power > 0 ? 1 : -1});
        }
    }
    return Word::from_letters(g, std::move(letters));
}

OrbitReport word_bfs(const GroupSpec& g, std::size_t depth) {
    OrbitReport report;
    report.depth = depth;
    std::map<RatMatrix, std::size_t> seen;
    report.elements.push_back(Word::identity(g.dim()));
    seen.emplace(report.elements.back().matrix(), 0);

    std::vector<Letter> alphabet;
    for (std::size_t i = 0; i < g.size(); ++i) {
        alphabet.push_back(Letter{i, 1});
        alphabet.push_back(Letter{i, -1});
    }

    std::vector<std::size_t> frontier{0};
    for (std::size_t level = 1; level <= depth + 1 && !frontier.empty(); ++level) {
        // Frontier words are in canonical order, and extending each by the
        // alphabet in order visits candidates of this length canonically.
        std::vector<std::size_t> next;
        for (auto idx : frontier) {
            for (const auto& l : alphabet) {
                const Word& base = report.elements[idx];
                if (!base.is_empty() && base.letters().back().generator == l.generator &&
                    base.letters().back().exponent == -l.exponent) {
                    continue;
                }
                RatMatrix m = base.matrix() * g.letter_matrix(l.generator, l.exponent);
                if (seen.contains(m)) {
                    continue;
                }
                if (level == depth + 1) {
                    report.truncated = true;
                    return report;
                }
                std::vector<Letter> letters = base.letters();
                letters.push_back(l);
                Word w = Word::from_letters(g, std::move(letters));
                seen.emplace(std::move(m), report.elements.size());
                next.push_back(report.elements.size());
                report.elements.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return report;
}

bool preserves_cone(const RatMatrix& gamma, const ConeRef& c) {
    const std::size_t dim = cone_dim(c);
    if (gamma.rows() != dim || gamma.cols() != dim) {
        throw DimensionError("preserves_cone: matrix shape does not match the cone");
    }
    if (const auto* p = std::get_if<PolyCone>(&c)) {
        const auto inv = inverse(gamma);
        if (!inv) {
            return false;
        }
        for (const auto& v : p->spanning_set()) {
            if (!p->contains(gamma * v) || !p->contains(*inv * v)) {
                return false;
            }
        }
        return true;
    }
    const auto& q = std::get<QuadCone>(c);
    if (gamma.transpose() * q.form() * gamma != q.form()) {
        return false;
    }
    return q.pairing(gamma * q.selector(), q.selector()).sign() > 0;
}

bool preserves_cone(const Word& gamma, const ConeRef& c) { return preserves_cone(gamma.matrix(), c); }

RatMatrix dual_action(const Word& gamma) { return gamma.matrix().transpose(); }

StabilizerReport stabilizer_search(const GroupSpec& g, std::span<const Rational> x, std::size_t depth) {
    if (x.size() != g.dim()) {
        throw DimensionError("stabilizer_search: point dimension does not match the group");
    }
    const auto orbit = word_bfs(g, depth);
    StabilizerReport report;
    report.verified_depth = depth;
    report.truncated = orbit.truncated;
    const RatVector point(x.begin(), x.end());
    for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
        if (orbit.elements[i].matrix() * point == point) {
            report.words.push_back(orbit.elements[i]);
        }
    }
    return report;
}

} // namespace conewb
