#pragma once

// Graded algebras T(V)/(R) with R given by homogeneous relation subspaces.

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdeform/algebra/words.hpp"
#include "gdeform/exact/parse.hpp"
#include "gdeform/symmetry/representation.hpp"

namespace gdeform {

class Presentation {
public:
    Presentation() = default;
    Presentation(Representation v, std::vector<std::string> names, std::size_t cutoff = 5)
        : v_(std::move(v)), names_(std::move(names)), cutoff_(cutoff)
    {
        if (names_.size() != v_.dim())
            throw ValidationError("presentation has " + std::to_string(names_.size()) + " generator names for a " +
                                  std::to_string(v_.dim()) + "-dimensional space");
    }

    const Representation& space() const { return v_; }
    std::size_t dim() const { return v_.dim(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t cutoff() const { return cutoff_; }
    void set_cutoff(std::size_t k) { cutoff_ = k; }

    /// Add a relation of the given degree; dependent vectors are dropped.
    /// Returns whether the relation space grew.
    bool add_relation(std::size_t degree, const CVec& r)
    {
        if (degree < 2) throw ValidationError("relations must have degree >= 2");
        const std::size_t width = ipow(dim(), degree);
        if (r.size() != width)
            throw ValidationError("relation of degree " + std::to_string(degree) + " needs " + std::to_string(width) +
                                  " coefficients, got " + std::to_string(r.size()));
        auto it = spans_.find(degree);
        if (it == spans_.end()) it = spans_.emplace(degree, RowSpace<CycScalar>(width)).first;
        if (!it->second.insert(r)) return false;
        relations_[degree].push_back(r);
        return true;
    }

    /// Add a relation written as a noncommutative polynomial in the generator
    /// names, e.g. "x*y - y*x" or "(1 + w)*x*x - 2*y*z".
    bool add_relation(const std::string& text, int conductor = 1)
    {
        auto [deg, vec] = parse_relation(text, conductor);
        return add_relation(deg, vec);
    }

    std::vector<std::size_t> relation_degrees() const
    {
        std::vector<std::size_t> out;
        for (const auto& [d, r] : relations_) out.push_back(d);
        return out;
    }
    const std::vector<CVec>& relations(std::size_t degree) const
    {
        static const std::vector<CVec> none;
        auto it = relations_.find(degree);
        return it == relations_.end() ? none : it->second;
    }
    std::size_t num_relations() const
    {
        std::size_t n = 0;
        for (const auto& [d, r] : relations_) n += r.size();
        return n;
    }
    bool is_quadratic() const
    {
        for (const auto& [d, r] : relations_)
            if (d != 2 && !r.empty()) return false;
        return true;
    }

    /// Parse a homogeneous noncommutative polynomial into (degree, coefficients).
    std::pair<std::size_t, CVec> parse_relation(const std::string& text, int conductor = 1) const;

    /// Render a relation vector as text using the generator names.
    std::string format_relation(std::size_t degree, const CVec& r) const
    {
        std::string out;
        for (std::size_t idx = 0; idx < r.size(); ++idx) {
            if (r[idx].is_zero()) continue;
            std::string word;
            for (std::size_t a : word_of(idx, dim(), degree)) word += (word.empty() ? "" : "*") + names_[a];
            CycScalar c = r[idx];
            bool neg = c.is_rational() && sgn(c.rational_part()) < 0;
            if (neg) c = -c;
            std::string coef = c.is_one() ? "" : (c.is_rational() ? c.to_string() : "(" + c.to_string() + ")") + "*";
            if (out.empty()) out = (neg ? "-" : "") + coef + word;
            else out += (neg ? " - " : " + ") + coef + word;
        }
        return out.empty() ? "0" : out;
    }

    /// New generators w_k = sum_j q(k, j) x_j.  The group action and all
    /// relations are rewritten in the new basis.
    Presentation change_of_generators(const CMatrix& q, std::vector<std::string> new_names) const
    {
        if (v_.is_weight()) throw ValidationError("change of generators is only supported for matrix representations");
        CMatrix b = q.transpose();
        CMatrix binv = inverse(b);
        std::vector<CMatrix> images;
        for (const auto& g : v_.generator_images()) images.push_back(binv * g * b);
        Representation nv = Representation::from_matrices(v_.group(), std::move(images), dim(), v_.label(), false);
        Presentation p(std::move(nv), std::move(new_names), cutoff_);
        for (const auto& [deg, rels] : relations_)
            for (const auto& r : rels) p.add_relation(deg, apply_tensor_power(binv, r, deg));
        return p;
    }

    /// Same algebra with a different group action on V (e.g. a subgroup, or the
    /// representation rewritten on other generators of the same group).
    Presentation with_space(Representation v) const
    {
        Presentation p = *this;
        if (v.dim() != dim()) throw ValidationError("with_space: dimension mismatch");
        p.v_ = std::move(v);
        return p;
    }

private:
    Representation v_;
    std::vector<std::string> names_;
    std::size_t cutoff_ = 5;
    std::map<std::size_t, std::vector<CVec>> relations_;
    std::map<std::size_t, RowSpace<CycScalar>> spans_;
};

namespace detail {

class RelationParser {
public:
    RelationParser(const std::string& s, const std::vector<std::string>& names, int conductor)
        : s_(s), names_(names), m_(conductor)
    {
    }

    // Sum of terms; each term is a product of scalar factors and generators.
    std::map<std::vector<std::size_t>, CycScalar> parse()
    {
        std::map<std::vector<std::size_t>, CycScalar> out;
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            CycScalar sign(1);
            if (eat('+')) {
            } else if (eat('-')) {
                sign = CycScalar(-1);
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coef, word] = term();
            out[word] += sign * coef;
            skip();
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw SchemaError("cannot parse relation '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::pair<CycScalar, std::vector<std::size_t>> term()
    {
        CycScalar coef(1);
        std::vector<std::size_t> word;
        for (;;) {
            factor(coef, word);
            if (!eat('*')) break;
        }
        return {coef, word};
    }
    void factor(CycScalar& coef, std::vector<std::size_t>& word)
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            int depth = 0;
            std::size_t start = pos_;
            do {
                if (s_[pos_] == '(') ++depth;
                if (s_[pos_] == ')') --depth;
                ++pos_;
            } while (pos_ < s_.size() && depth > 0);
            if (depth != 0) fail("unbalanced parentheses");
            coef *= parse_scalar(s_.substr(start, pos_ - start), m_);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
            coef *= parse_scalar(s_.substr(start, pos_ - start), m_);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            long power = 1;
            if (eat('^')) {
                skip();
                std::size_t ps = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (ps == pos_) fail("expected exponent");
                power = std::stol(s_.substr(ps, pos_ - ps));
            }
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == id) {
                    for (long k = 0; k < power; ++k) word.push_back(i);
                    return;
                }
            if (id == "w" || id == "z") {
                coef *= CycScalar::zeta(m_).pow(power);
                return;
            }
            fail("unknown generator '" + id + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string s_;
    const std::vector<std::string>& names_;
    int m_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline std::pair<std::size_t, CVec> Presentation::parse_relation(const std::string& text, int conductor) const
{
    auto terms = detail::RelationParser(text, names_, conductor).parse();
    std::optional<std::size_t> degree;
    for (const auto& [word, c] : terms) {
        if (c.is_zero()) continue;
        if (degree && *degree != word.size()) throw SchemaError("relation '" + text + "' is not homogeneous");
        degree = word.size();
    }
    if (!degree) throw SchemaError("relation '" + text + "' is zero");
    CVec v(tensor_dim_checked(dim(), *degree));
    for (const auto& [word, c] : terms)
        if (word.size() == *degree) v[word_index(word, dim())] += c;
    return {*degree, v};
}

struct StabilityCertificate {
    bool stable = true;
    std::size_t generator = 0;  // index into action_generators()
    std::size_t degree = 0;
    std::size_t relation = 0;   // index into relations(degree)
    std::string message;
};

/// Every action generator maps every relation into the relation span.
inline StabilityCertificate is_g_stable(const Presentation& p)
{
    StabilityCertificate cert;
    auto gens = p.space().action_generators();
    for (std::size_t deg : p.relation_degrees()) {
        const auto& rels = p.relations(deg);
        auto span = span_of(rels, ipow(p.dim(), deg));
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::size_t i = 0; i < rels.size(); ++i)
                if (!span.contains(apply_tensor_power(gens[g], rels[i], deg))) {
                    cert.stable = false;
                    cert.generator = g;
                    cert.degree = deg;
                    cert.relation = i;
                    cert.message = "generator " + std::to_string(g) + " moves relation '" +
                                   p.format_relation(deg, rels[i]) + "' out of the relation space";
                    return cert;
                }
    }
    return cert;
}

}  // namespace gdeform
